#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gerbe/group.hpp"

namespace gerbe {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Residual tolerance for all matrix checks. Counting identities
// (sum of squared dims, class counts) are exact integer assertions.
inline constexpr double kMatrixTol = 1e-9;

// One irreducible unitary representation: an explicit matrix per element.
struct Irrep {
  GroupPtr group;
  int dim = 0;
  std::vector<Matrix> mats;
  std::vector<cxd> character;
};

struct IrrepDiagnostics {
  double hom_residual = 0;      // max ||U(ab) - U(a)U(b)||_F
  double unitary_residual = 0;  // max ||U(a)U(a)* - I||_F
  double ortho_residual = 0;    // max off-diagonal character inner product
  double class_residual = 0;    // max character deviation within a class
};

// The complete dual of a group: all irreducibles up to equivalence,
// sorted by (dim, lexicographically rounded character) so indices are
// reproducible across seeds.
struct IrrepSet {
  GroupPtr group;
  std::vector<Irrep> irreps;
  IrrepDiagnostics diag;

  int sum_dim_sq() const;
};

// Splits the regular representation by eigenspaces of random symmetrized
// Hermitian operators, recursing until each block has character norm 1,
// then deduplicates by character. Deterministic for fixed (G, seed).
IrrepSet compute_irreps(GroupPtr g, std::uint64_t seed, double tol = kMatrixTol);

// Character inner product rounds to 1 (threshold 0.5).
bool are_equivalent(const Irrep& a, const Irrep& b);

// Unitary S with S rho(g) = sigma(g) S for all g, built by averaging a
// random matrix; nullopt when the representations are inequivalent.
std::optional<Matrix> intertwiner(const Irrep& rho, const Irrep& sigma, std::uint64_t seed,
                                  double tol = kMatrixTol);

// ---- shared numeric helpers ----

cxd character_inner_product(const std::vector<cxd>& a, const std::vector<cxd>& b);
double rep_hom_residual(const FiniteGroup& g, const std::vector<Matrix>& mats);
double rep_unitary_residual(const std::vector<Matrix>& mats);

// splitmix64; used to derive independent substreams from one user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace gerbe
