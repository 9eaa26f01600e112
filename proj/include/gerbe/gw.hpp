#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gerbe/clifford.hpp"
#include "gerbe/dual.hpp"

namespace gerbe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// Point-target genus-g invariant of BG by the Frobenius-Mednykh character
// sum: sum over Irr(G) of (|G| / dim V)^(2g-2). Exact rational.
Rational gw_point(const IrrepSet& irr, int genus);

// Twisted variant: the sum runs over the c-twisted irreducibles of Q'.
Rational gw_point_twisted(const TwistedIrrepData& twisted, int genus);

// Number of 2g-tuples (a_1, b_1, ..., a_g, b_g) with prod [a_i, b_i] = e,
// counted by depth-first enumeration with reachability pruning. Exact and
// independent of the character machinery; the Frobenius-Mednykh identity
//   count = |H| * gw_point(H, g)
// is what the tests verify, not an assumption of the implementation.
BigInt hom_count_oracle(const FiniteGroup& h, int genus,
                        std::uint64_t budget = kDefaultOracleBudget);

struct DualityRow {
  int genus;
  Rational lhs;     // gw_point(H, g)
  Rational rhs;     // sum over orbits of dim(rho)^(2-2g) * gw_point_twisted
  Rational factor;  // |G|^(2g-2)
  bool pass;        // lhs == factor * rhs
};

struct DualityReport {
  struct OrbitTerm {
    int rep_index;
    int orbit_size;
    int rep_dim;
    int stab_order;
    std::vector<int> twisted_dims;
  };

  std::vector<DualityRow> rows;
  std::vector<OrbitTerm> orbit_terms;
  bool all_pass = true;
};

// Checks gw_point(H, g) = |G|^(2g-2) * sum_o dim(rho_o)^(2-2g) *
// gw_point_twisted(Q_o, c_o, g) exactly, per genus. The per-orbit
// dim(rho_o) weight reduces to 1 whenever G is abelian.
DualityReport duality_check(const DualSpace& dual, const IrrepSet& irr_h, int genus_min,
                            int genus_max, std::uint64_t seed);

}  // namespace gerbe
