#pragma once

#include <cstdint>
#include <vector>

#include "gerbe/dual.hpp"

namespace gerbe {

// Linearizes a cocycle c on Q' as the group of pairs (k, q), k in Z/m, with
//   (k, q) (k', q') = (k + k' + c(q,q') mod m, q q'),
// indexed as k * |Q'| + q so that the identity (0, e) has index 0.
FiniteGroup central_extension(const Cocycle& c);

// Dimensions of the c-twisted irreducibles of c.base: the irreps of the
// central extension on which the central generator (1, e) acts as
// exp(2 pi i / m) times the identity.
struct TwistedIrrepData {
  int base_order = 1;
  std::vector<int> dims;  // sorted ascending
  int count = 0;
};

TwistedIrrepData twisted_irreps(const Cocycle& c, std::uint64_t seed, double tol = kMatrixTol);

// Decategorified duality bookkeeping: Irr(H) against orbit-by-orbit twisted
// irrep data of the dual. Checks both the count and the dimension multiset
//   dim W  <->  |orbit| * dim(rho) * (twisted dim).
struct CliffordReport {
  struct OrbitLine {
    int rep_index;
    int orbit_size;
    int rep_dim;
    std::vector<int> twisted_dims;
  };

  std::vector<int> h_dims;     // sorted dims of Irr(H)
  std::vector<int> dual_dims;  // sorted multiset assembled from the orbits
  std::vector<OrbitLine> orbit_lines;
  bool count_match = false;
  bool dims_match = false;

  bool pass() const { return count_match && dims_match; }
};

CliffordReport clifford_count_check(const DualSpace& dual, const IrrepSet& irr_h,
                                    std::uint64_t seed);

}  // namespace gerbe
