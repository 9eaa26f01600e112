#include "gerbe/gw.hpp"

#include <algorithm>
#include <set>

namespace gerbe {

namespace {

// q^(2g-2) as an exact rational, valid for genus 0 as well
Rational genus_power(const Rational& base, int genus) {
  const int e = 2 * genus - 2;
  if (e >= 0) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
  }
  Rational out = 1;
  for (int i = 0; i < -e; ++i) out /= base;
  return out;
}

}  // namespace

Rational gw_point(const IrrepSet& irr, int genus) {
  if (genus < 0) fail(errc::invalid_input, "genus must be non-negative");
  const int n = irr.group->order();
  Rational total = 0;
  for (const Irrep& r : irr.irreps) total += genus_power(Rational(n, r.dim), genus);
  return total;
}

Rational gw_point_twisted(const TwistedIrrepData& twisted, int genus) {
  if (genus < 0) fail(errc::invalid_input, "genus must be non-negative");
  Rational total = 0;
  for (int d : twisted.dims) total += genus_power(Rational(twisted.base_order, d), genus);
  return total;
}

BigInt hom_count_oracle(const FiniteGroup& h, int genus, std::uint64_t budget) {
  if (genus < 0) fail(errc::invalid_input, "genus must be non-negative");
  const int n = h.order();

  BigInt tuple_space = 1;
  for (int i = 0; i < 2 * genus; ++i) tuple_space *= n;
  if (tuple_space > budget) {
    fail(errc::budget_exceeded, "|H|^(2g) = " + tuple_space.str() + " exceeds budget " +
                                    std::to_string(budget));
  }
  if (genus == 0) return 1;  // the empty tuple

  // commutator of each pair, and the set of elements reachable as products
  // of k commutators, used to prune dead prefixes
  std::vector<std::vector<int>> comm(n, std::vector<int>(n));
  std::set<int> comm_set;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      comm[a][b] = h.mul(h.mul(h.mul(a, b), h.inv(a)), h.inv(b));
      comm_set.insert(comm[a][b]);
    }
  }
  std::vector<std::vector<char>> reachable(genus + 1, std::vector<char>(n, 0));
  reachable[0][0] = 1;
  for (int k = 1; k <= genus; ++k) {
    for (int x = 0; x < n; ++x) {
      if (!reachable[k - 1][x]) continue;
      for (int c : comm_set) reachable[k][h.mul(x, c)] = 1;
    }
  }

  BigInt count = 0;
  // depth-first over commutator pairs; prefix is the product so far
  auto visit = [&](auto&& self, int level, int prefix) -> void {
    if (level == genus) {
      if (prefix == 0) ++count;
      return;
    }
    const auto& can_finish = reachable[genus - level - 1];
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int next = h.mul(prefix, comm[a][b]);
        if (can_finish[h.inv(next)]) self(self, level + 1, next);
      }
    }
  };
  visit(visit, 0, 0);
  return count;
}

DualityReport duality_check(const DualSpace& dual, const IrrepSet& irr_h, int genus_min,
                            int genus_max, std::uint64_t seed) {
  if (genus_min < 0 || genus_min > genus_max) {
    fail(errc::invalid_input, "invalid genus range");
  }
  if (!irr_h.group->same_table(dual.ext.h())) {
    fail(errc::group_mismatch, "Irr(H) was not computed for the extension's total group");
  }

  DualityReport report;
  std::vector<TwistedIrrepData> twisted;
  for (const DualOrbit& orbit : dual.orbits) {
    twisted.push_back(
        twisted_irreps(orbit.cocycle, derive_seed(seed, 0x9000 + orbit.rep_index)));
    DualityReport::OrbitTerm term;
    term.rep_index = orbit.rep_index;
    term.orbit_size = static_cast<int>(orbit.orbit.size());
    term.rep_dim = dual.ghat.irreps[orbit.rep_index].dim;
    term.stab_order = static_cast<int>(orbit.stabilizer.size());
    term.twisted_dims = twisted.back().dims;
    report.orbit_terms.push_back(std::move(term));
  }

  const int kernel_order = dual.ext.g().order();
  for (int g = genus_min; g <= genus_max; ++g) {
    DualityRow row;
    row.genus = g;
    row.lhs = gw_point(irr_h, g);
    row.factor = genus_power(Rational(kernel_order), g);
    row.rhs = 0;
    for (size_t i = 0; i < dual.orbits.size(); ++i) {
      const int rep_dim = dual.ghat.irreps[dual.orbits[i].rep_index].dim;
      // per-orbit weight dim(rho)^(2-2g); identically 1 for abelian G
      row.rhs += genus_power(Rational(1, rep_dim), g) * gw_point_twisted(twisted[i], g);
    }
    row.pass = row.lhs == row.factor * row.rhs;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gerbe
