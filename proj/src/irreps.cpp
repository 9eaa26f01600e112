#include "gerbe/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gerbe {

namespace {

constexpr double kClusterGap = 1e-7;    // eigenvalue gap that separates blocks
constexpr double kIrredCharTol = 1e-6;  // |char norm^2 - 1| below this => irreducible
constexpr int kMaxSplitAttempts = 64;

Matrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = cxd(dist(rng), dist(rng));
  return 0.5 * (x + x.adjoint().eval());
}

std::vector<cxd> character_of(const std::vector<Matrix>& mats) {
  std::vector<cxd> chi(mats.size());
  for (size_t i = 0; i < mats.size(); ++i) chi[i] = mats[i].trace();
  return chi;
}

double char_norm_sq(const std::vector<cxd>& chi) {
  double s = 0;
  for (const cxd& v : chi) s += std::norm(v);
  return s / static_cast<double>(chi.size());
}

// Recursively split a unitary representation into irreducible blocks using
// eigenspaces of A = (1/n) sum_g U(g) X U(g)^*, which commutes with the
// representation for any X.
void split_rep(const FiniteGroup& g, std::vector<Matrix> mats, std::mt19937_64& rng,
               std::vector<std::vector<Matrix>>& out, int depth) {
  const int d = static_cast<int>(mats[0].rows());
  if (std::abs(char_norm_sq(character_of(mats)) - 1.0) <= kIrredCharTol) {
    out.push_back(std::move(mats));
    return;
  }
  if (depth > 64) fail(errc::numerical_failure, "splitting recursion exceeded depth limit");

  const int n = g.order();
  for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
    const Matrix x = random_hermitian(d, rng);
    Matrix a = Matrix::Zero(d, d);
    for (int e = 0; e < n; ++e) a += mats[e] * x * mats[e].adjoint();
    a = (a + a.adjoint().eval()) / (2.0 * n);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) continue;
    const auto& vals = solver.eigenvalues();
    // cluster eigenvalues separated by more than the gap threshold
    std::vector<int> cluster_start{0};
    for (int i = 1; i < d; ++i) {
      if (vals(i) - vals(i - 1) > kClusterGap) cluster_start.push_back(i);
    }
    if (cluster_start.size() < 2) continue;  // operator looked scalar; redraw X

    cluster_start.push_back(d);
    for (size_t c = 0; c + 1 < cluster_start.size(); ++c) {
      const int lo = cluster_start[c];
      const int width = cluster_start[c + 1] - lo;
      const Matrix basis = solver.eigenvectors().middleCols(lo, width);
      std::vector<Matrix> sub(n);
      for (int e = 0; e < n; ++e) sub[e] = basis.adjoint() * mats[e] * basis;
      split_rep(g, std::move(sub), rng, out, depth + 1);
    }
    return;
  }
  fail(errc::numerical_failure, "could not split a reducible block after " +
                                    std::to_string(kMaxSplitAttempts) + " attempts");
}

// Top-level split of the regular representation R(g) e_h = e_{gh}, done with
// index arithmetic instead of materialized n x n matrices.
std::vector<std::vector<Matrix>> split_regular(const FiniteGroup& g, std::mt19937_64& rng) {
  const int n = g.order();
  std::vector<std::vector<Matrix>> blocks;
  if (n == 1) {
    blocks.push_back({Matrix::Identity(1, 1)});
    return blocks;
  }

  const Matrix x = random_hermitian(n, rng);
  Matrix a = Matrix::Zero(n, n);
  // (R(e) X R(e)^*)[p][q] = X[e^-1 p][e^-1 q]
  for (int e = 0; e < n; ++e) {
    const int einv = g.inv(e);
    for (int p = 0; p < n; ++p) {
      const int ep = g.mul(einv, p);
      for (int q = 0; q < n; ++q) a(p, q) += x(ep, g.mul(einv, q));
    }
  }
  a = (a + a.adjoint().eval()) / (2.0 * n);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) fail(errc::numerical_failure, "eigensolver failed");
  const auto& vals = solver.eigenvalues();

  std::vector<int> cluster_start{0};
  for (int i = 1; i < n; ++i) {
    if (vals(i) - vals(i - 1) > kClusterGap) cluster_start.push_back(i);
  }
  cluster_start.push_back(n);

  for (size_t c = 0; c + 1 < cluster_start.size(); ++c) {
    const int lo = cluster_start[c];
    const int width = cluster_start[c + 1] - lo;
    const Matrix basis = solver.eigenvectors().middleCols(lo, width);
    std::vector<Matrix> sub(n);
    for (int e = 0; e < n; ++e) {
      // (R(e) basis) row p = basis row e^-1 p
      Matrix permuted(n, width);
      const int einv = g.inv(e);
      for (int p = 0; p < n; ++p) permuted.row(p) = basis.row(g.mul(einv, p));
      sub[e] = basis.adjoint() * permuted;
    }
    split_rep(g, std::move(sub), rng, blocks, 0);
  }
  return blocks;
}

long long round_key(double v) { return std::llround(v * 1e6); }

// lexicographic key over (dim, re chi(0), im chi(0), re chi(1), ...)
std::vector<long long> sort_key(const Irrep& irrep) {
  std::vector<long long> key;
  key.reserve(1 + 2 * irrep.character.size());
  key.push_back(irrep.dim);
  for (const cxd& v : irrep.character) {
    key.push_back(round_key(v.real()));
    key.push_back(round_key(v.imag()));
  }
  return key;
}

IrrepSet assemble(GroupPtr g, std::vector<std::vector<Matrix>> blocks, double tol) {
  const FiniteGroup& grp = *g;
  const int n = grp.order();

  std::vector<Irrep> found;
  for (auto& mats : blocks) {
    Irrep irrep;
    irrep.group = g;
    irrep.dim = static_cast<int>(mats[0].rows());
    irrep.character = character_of(mats);
    irrep.mats = std::move(mats);
    bool duplicate = false;
    for (const Irrep& kept : found) {
      if (kept.dim == irrep.dim && are_equivalent(kept, irrep)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back(std::move(irrep));
  }

  std::sort(found.begin(), found.end(),
            [](const Irrep& a, const Irrep& b) { return sort_key(a) < sort_key(b); });

  IrrepSet set;
  set.group = std::move(g);
  set.irreps = std::move(found);

  // ---- invariant verification ----
  int sum_sq = 0;
  for (const Irrep& r : set.irreps) sum_sq += r.dim * r.dim;
  const auto classes = conjugacy_classes(grp);
  if (sum_sq != n || set.irreps.size() != classes.size()) {
    fail(errc::numerical_failure,
         "irrep decomposition incomplete: sum d^2 = " + std::to_string(sum_sq) + " over " +
             std::to_string(set.irreps.size()) + " irreps for group of order " +
             std::to_string(n) + " with " + std::to_string(classes.size()) + " classes");
  }

  IrrepDiagnostics diag;
  for (const Irrep& r : set.irreps) {
    if ((r.mats[0] - Matrix::Identity(r.dim, r.dim)).norm() > tol) {
      fail(errc::numerical_failure, "identity element does not map to identity matrix");
    }
    diag.hom_residual = std::max(diag.hom_residual, rep_hom_residual(grp, r.mats));
    diag.unitary_residual = std::max(diag.unitary_residual, rep_unitary_residual(r.mats));
    if (std::abs(char_norm_sq(r.character) - 1.0) > kIrredCharTol) {
      fail(errc::numerical_failure, "block passed as irreducible but character norm is off");
    }
    for (const auto& cls : classes) {
      for (int e : cls) {
        diag.class_residual =
            std::max(diag.class_residual, std::abs(r.character[e] - r.character[cls[0]]));
      }
    }
  }
  for (size_t i = 0; i < set.irreps.size(); ++i) {
    for (size_t j = i + 1; j < set.irreps.size(); ++j) {
      const cxd ip =
          character_inner_product(set.irreps[i].character, set.irreps[j].character);
      diag.ortho_residual = std::max(diag.ortho_residual, std::abs(ip));
    }
  }
  if (diag.hom_residual > tol || diag.unitary_residual > tol || diag.ortho_residual > tol ||
      diag.class_residual > tol) {
    fail(errc::numerical_failure, "irrep residuals exceed tolerance");
  }
  set.diag = diag;
  return set;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int IrrepSet::sum_dim_sq() const {
  int s = 0;
  for (const Irrep& r : irreps) s += r.dim * r.dim;
  return s;
}

cxd character_inner_product(const std::vector<cxd>& a, const std::vector<cxd>& b) {
  cxd s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s / static_cast<double>(a.size());
}

double rep_hom_residual(const FiniteGroup& g, const std::vector<Matrix>& mats) {
  double worst = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      worst = std::max(worst, (mats[g.mul(a, b)] - mats[a] * mats[b]).norm());
  return worst;
}

double rep_unitary_residual(const std::vector<Matrix>& mats) {
  double worst = 0;
  for (const Matrix& m : mats) {
    const int d = static_cast<int>(m.rows());
    worst = std::max(worst, (m * m.adjoint() - Matrix::Identity(d, d)).norm());
  }
  return worst;
}

IrrepSet compute_irreps(GroupPtr g, std::uint64_t seed, double tol) {
  if (g->order() > kDefaultOrderBound) {
    fail(errc::order_bound_exceeded, "group order " + std::to_string(g->order()) +
                                         " exceeds bound " + std::to_string(kDefaultOrderBound));
  }
  // a couple of deterministic restarts before giving up
  for (int attempt = 0;; ++attempt) {
    try {
      std::mt19937_64 rng(derive_seed(seed, 0xA11CE + attempt));
      return assemble(g, split_regular(*g, rng), tol);
    } catch (const error& e) {
      if (e.code() != errc::numerical_failure || attempt >= 2) throw;
    }
  }
}

bool are_equivalent(const Irrep& a, const Irrep& b) {
  if (!a.group || !b.group || !a.group->same_table(*b.group)) {
    fail(errc::group_mismatch, "representations live on different groups");
  }
  return std::abs(character_inner_product(a.character, b.character) - cxd(1, 0)) < 0.5;
}

std::optional<Matrix> intertwiner(const Irrep& rho, const Irrep& sigma, std::uint64_t seed,
                                  double tol) {
  if (rho.dim != sigma.dim) return std::nullopt;
  if (!are_equivalent(rho, sigma)) return std::nullopt;

  const FiniteGroup& g = *rho.group;
  const int n = g.order();
  const int d = rho.dim;

  std::mt19937_64 rng(derive_seed(seed, 0x177));
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Matrix x(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) x(i, j) = cxd(dist(rng), dist(rng));

    Matrix s = Matrix::Zero(d, d);
    for (int e = 0; e < n; ++e) s += sigma.mats[e] * x * rho.mats[e].adjoint();
    s /= static_cast<double>(n);

    // S^* S is scalar by Schur; the scalar is the squared scale of S
    const double scale_sq = (s.adjoint() * s).trace().real() / d;
    if (scale_sq < 1e-8) continue;  // unlucky draw landed near the kernel
    Matrix u = s / std::sqrt(scale_sq);

    double residual = (u * u.adjoint() - Matrix::Identity(d, d)).norm();
    for (int e = 0; e < n; ++e) {
      residual = std::max(residual, (u * rho.mats[e] - sigma.mats[e] * u).norm());
    }
    if (residual <= tol) return u;
  }
  fail(errc::numerical_failure, "averaged intertwiner stayed numerically singular");
}

}  // namespace gerbe
