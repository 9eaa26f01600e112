#include "gerbe/dual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "gerbe/clifford.hpp"

namespace gerbe {

const char* triviality_name(Triviality t) {
  switch (t) {
    case Triviality::trivial: return "trivial";
    case Triviality::nontrivial: return "nontrivial";
    case Triviality::unknown: return "unknown";
  }
  return "unknown";
}

Cocycle Cocycle::checked(FiniteGroup base, int modulus, std::vector<std::vector<int>> values) {
  const int k = base.order();
  if (modulus < 1) fail(errc::invalid_input, "cocycle modulus must be positive");
  if (static_cast<int>(values.size()) != k) {
    fail(errc::invalid_input, "cocycle table must be |Q'| x |Q'|");
  }
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != k) {
      fail(errc::invalid_input, "cocycle table must be |Q'| x |Q'|");
    }
    for (int v : row) {
      if (v < 0 || v >= modulus) fail(errc::invalid_input, "cocycle value out of range mod m");
    }
  }
  for (int a = 0; a < k; ++a) {
    if (values[0][a] != 0 || values[a][0] != 0) {
      fail(errc::invalid_input, "cocycle is not normalized at the identity");
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        const int lhs = values[a][b] + values[base.mul(a, b)][c];
        const int rhs = values[a][base.mul(b, c)] + values[b][c];
        if ((lhs - rhs) % modulus != 0) {
          fail(errc::invalid_input, "cocycle identity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return Cocycle{std::move(base), modulus, std::move(values)};
}

bool Cocycle::is_zero() const {
  for (const auto& row : values)
    for (int v : row)
      if (v != 0) return false;
  return true;
}

namespace {

// rho twisted by an automorphism of the underlying group
Irrep twist_by(const Irrep& rho, const std::vector<int>& aut) {
  Irrep out;
  out.group = rho.group;
  out.dim = rho.dim;
  out.mats.resize(rho.mats.size());
  out.character.resize(rho.character.size());
  for (size_t g = 0; g < rho.mats.size(); ++g) {
    out.mats[g] = rho.mats[aut[g]];
    out.character[g] = rho.character[aut[g]];
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> q_action_on_ghat(const Extension& ext, const IrrepSet& ghat) {
  if (!ghat.group->same_table(ext.g())) {
    fail(errc::group_mismatch, "irrep set was not computed for the kernel of the extension");
  }
  const FiniteGroup& q_group = ext.q();
  const int nq = q_group.order();
  const int k = static_cast<int>(ghat.irreps.size());

  std::vector<std::vector<int>> perms(nq, std::vector<int>(k, -1));
  for (int q = 0; q < nq; ++q) {
    const std::vector<int> aut = conj_action(ext, q_group.inv(q));
    for (int i = 0; i < k; ++i) {
      const Irrep twisted = twist_by(ghat.irreps[i], aut);
      for (int j = 0; j < k; ++j) {
        if (ghat.irreps[j].dim == twisted.dim && are_equivalent(ghat.irreps[j], twisted)) {
          perms[q][i] = j;
          break;
        }
      }
      if (perms[q][i] < 0) {
        fail(errc::action_broken, "twist of irrep " + std::to_string(i) + " by q = " +
                                      std::to_string(q) + " matches no member of Ghat");
      }
    }
  }

  // left-action law: perm(q1 q2) = perm(q1) o perm(q2)
  for (int q1 = 0; q1 < nq; ++q1) {
    for (int q2 = 0; q2 < nq; ++q2) {
      const auto& p12 = perms[q_group.mul(q1, q2)];
      for (int i = 0; i < k; ++i) {
        if (p12[i] != perms[q1][perms[q2][i]]) {
          fail(errc::action_broken, "Q-action on Ghat violates the action law");
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    if (perms[0][i] != i) fail(errc::action_broken, "identity of Q acts nontrivially");
  }
  return perms;
}

std::vector<OrbitStab> orbits_and_stabilizers(const std::vector<std::vector<int>>& action,
                                              const FiniteGroup& q) {
  const int nq = q.order();
  const int k = action.empty() ? 0 : static_cast<int>(action[0].size());
  std::vector<char> seen(k, 0);
  std::vector<OrbitStab> out;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    std::set<int> orbit;
    std::vector<int> stab;
    for (int qe = 0; qe < nq; ++qe) {
      orbit.insert(action[qe][i]);
      if (action[qe][i] == i) stab.push_back(qe);
    }
    OrbitStab os;
    os.rep_index = i;  // scan order makes this the minimal index
    os.orbit.assign(orbit.begin(), orbit.end());
    os.stabilizer = std::move(stab);
    for (int j : os.orbit) seen[j] = 1;
    if (os.orbit.size() * os.stabilizer.size() != static_cast<size_t>(nq)) {
      fail(errc::action_broken, "orbit-stabilizer identity fails on orbit of " +
                                    std::to_string(i));
    }
    out.push_back(std::move(os));
  }
  return out;
}

namespace {

FiniteGroup subgroup_from_elements(const FiniteGroup& q, const std::vector<int>& elements) {
  const int k = static_cast<int>(elements.size());
  std::vector<int> pos(q.order(), -1);
  for (int i = 0; i < k; ++i) pos[elements[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int p = pos[q.mul(elements[a], elements[b])];
      if (p < 0) fail(errc::action_broken, "stabilizer is not closed under multiplication");
      table[a][b] = p;
    }
  }
  return trusted_group(std::move(table), "stab");
}

Matrix det_normalized(Matrix u) {
  const int d = static_cast<int>(u.rows());
  const cxd det = u.determinant();
  const double theta = std::arg(det);  // in (-pi, pi]
  const cxd root = std::polar(1.0, theta / d);
  return u / root;
}

}  // namespace

std::vector<Matrix> compute_intertwiners(const Extension& ext, const IrrepSet& ghat,
                                         const OrbitStab& os, std::uint64_t seed, double tol) {
  const Irrep& rho = ghat.irreps[os.rep_index];
  const int k = static_cast<int>(os.stabilizer.size());

  std::vector<Matrix> out(k);
  for (int i = 0; i < k; ++i) {
    const int q = os.stabilizer[i];
    if (q == 0) {
      out[i] = Matrix::Identity(rho.dim, rho.dim);
      continue;
    }
    // target representation g -> rho(s(q) g s(q)^{-1})
    const Irrep target = twist_by(rho, conj_action(ext, q));
    auto s = intertwiner(rho, target, derive_seed(seed, 0xD0 + q), tol);
    if (!s) {
      fail(errc::action_broken,
           "stabilizer element q = " + std::to_string(q) + " does not fix the orbit rep");
    }
    out[i] = det_normalized(std::move(*s));
  }
  return out;
}

CocycleResult compute_cocycle(const Extension& ext, const IrrepSet& ghat, const OrbitStab& os,
                              const std::vector<Matrix>& intertwiners, double tol) {
  const Irrep& rho = ghat.irreps[os.rep_index];
  const FiniteGroup& q_group = ext.q();
  const int d = rho.dim;
  const int k = static_cast<int>(os.stabilizer.size());

  FiniteGroup stab_group = subgroup_from_elements(q_group, os.stabilizer);
  std::vector<int> pos(q_group.order(), -1);
  for (int i = 0; i < k; ++i) pos[os.stabilizer[i]] = i;

  // raw unimodular defect scalars
  std::vector<std::vector<cxd>> raw(k, std::vector<cxd>(k));
  double defect_residual = 0;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int qa = os.stabilizer[a];
      const int qb = os.stabilizer[b];
      const int qab = q_group.mul(qa, qb);
      const int ab = pos[qab];
      // section defect s(qa) s(qb) s(qa qb)^{-1}, pulled back to G
      const FiniteGroup& h = ext.h();
      const int defect_h =
          h.mul(h.mul(ext.section[qa], ext.section[qb]), h.inv(ext.section[qab]));
      const int defect_g = ext.incl_inverse[defect_h];
      if (defect_g < 0) fail(errc::not_exact, "section defect escaped the kernel");

      const Matrix dmat = intertwiners[a] * intertwiners[b] * intertwiners[ab].inverse() *
                          rho.mats[defect_g].inverse();
      const cxd lambda = dmat.trace() / static_cast<double>(d);
      const double dev = (dmat - lambda * Matrix::Identity(d, d)).norm();
      defect_residual = std::max(defect_residual, dev);
      if (dev > tol) {
        fail(errc::not_scalar, "composition defect at (" + std::to_string(qa) + "," +
                                   std::to_string(qb) + ") deviates from a scalar by " +
                                   std::to_string(dev));
      }
      raw[a][b] = lambda / std::abs(lambda);
    }
  }

  // snap to the smallest root-of-unity order that makes the identity exact
  const long long max_m =
      static_cast<long long>(d) * stab_group.order() * ext.g().order();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int m = 1; m <= max_m; ++m) {
    std::vector<std::vector<int>> snapped(k, std::vector<int>(k));
    double worst = 0;
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = 0; b < k && ok; ++b) {
        const double angle = std::arg(raw[a][b]);
        int idx = static_cast<int>(std::llround(angle * m / two_pi));
        idx %= m;
        if (idx < 0) idx += m;
        const cxd root = std::polar(1.0, two_pi * idx / m);
        const double dist = std::abs(raw[a][b] - root);
        if (dist >= kSnapTol) {
          ok = false;
          break;
        }
        worst = std::max(worst, dist);
        snapped[a][b] = idx;
      }
    }
    if (!ok) continue;
    if (snapped[0] != std::vector<int>(k, 0)) continue;
    bool normalized = true;
    for (int a = 0; a < k; ++a) {
      if (snapped[a][0] != 0) normalized = false;
    }
    if (!normalized) continue;
    bool identity_ok = true;
    for (int a = 0; a < k && identity_ok; ++a)
      for (int b = 0; b < k && identity_ok; ++b)
        for (int c = 0; c < k; ++c) {
          const int lhs = snapped[a][b] + snapped[stab_group.mul(a, b)][c];
          const int rhs = snapped[a][stab_group.mul(b, c)] + snapped[b][c];
          if ((lhs - rhs) % m != 0) {
            identity_ok = false;
            break;
          }
        }
    if (!identity_ok) continue;

    CocycleResult res{Cocycle::checked(std::move(stab_group), m, std::move(snapped)),
                      defect_residual, worst};
    return res;
  }
  fail(errc::snap_failure, "no root-of-unity order up to " + std::to_string(max_m) +
                               " makes the cocycle identity exact");
}

Triviality cocycle_triviality(const Cocycle& c, std::uint64_t seed) {
  const FiniteGroup& q = c.base;
  const int k = q.order();
  const int m = c.modulus;
  if (c.is_zero()) return Triviality::trivial;

  // exhaustive search over 1-cochains lambda: Q' -> mu_m with lambda(e) = 1
  double space = std::pow(static_cast<double>(m), k - 1);
  if (space <= 1e6) {
    std::vector<int> lambda(k, 0);
    while (true) {
      bool match = true;
      for (int a = 0; a < k && match; ++a) {
        for (int b = 0; b < k; ++b) {
          const int delta = lambda[a] + lambda[b] - lambda[q.mul(a, b)];
          if (((c.values[a][b] - delta) % m + m) % m != 0) {
            match = false;
            break;
          }
        }
      }
      if (match) return Triviality::trivial;
      int i = 1;
      while (i < k && ++lambda[i] == m) lambda[i++] = 0;
      if (i == k) break;
    }
  }

  // coboundary search failed (or was skipped): compare twisted and plain counts
  const TwistedIrrepData data = twisted_irreps(c, seed);
  const int plain = static_cast<int>(conjugacy_classes(q).size());
  return data.count == plain ? Triviality::trivial : Triviality::nontrivial;
}

DualSpace compute_dual(const Extension& ext, std::uint64_t seed, double tol) {
  IrrepSet ghat = compute_irreps(ext.kernel, derive_seed(seed, 0x6A7), tol);
  auto action = q_action_on_ghat(ext, ghat);
  std::vector<DualOrbit> orbits;
  for (const OrbitStab& os : orbits_and_stabilizers(action, ext.q())) {
    DualOrbit orbit;
    orbit.rep_index = os.rep_index;
    orbit.orbit = os.orbit;
    orbit.stabilizer = os.stabilizer;
    orbit.intertwiners =
        compute_intertwiners(ext, ghat, os, derive_seed(seed, os.rep_index), tol);
    CocycleResult res = compute_cocycle(ext, ghat, os, orbit.intertwiners, tol);
    orbit.stab_group = res.cocycle.base;
    orbit.cocycle = std::move(res.cocycle);
    orbit.defect_residual = res.defect_residual;
    orbit.snap_distance = res.snap_distance;
    orbits.push_back(std::move(orbit));
  }
  return DualSpace{ext, std::move(ghat), std::move(action), std::move(orbits)};
}

}  // namespace gerbe
