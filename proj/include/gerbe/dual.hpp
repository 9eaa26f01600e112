#pragma once

#include <cstdint>
#include <vector>

#include "gerbe/group.hpp"
#include "gerbe/irreps.hpp"

namespace gerbe {

inline constexpr double kSnapTol = 1e-6;

// Normalized 2-cocycle on a finite group with values in the m-th roots of
// unity, stored as integer exponents mod m. The cocycle identity
//   c(a,b) + c(ab,c) = c(a,bc) + c(b,c)   (mod m)
// is verified exactly at construction.
struct Cocycle {
  FiniteGroup base;  // reindexed stabilizer subgroup, identity 0
  int modulus = 1;
  std::vector<std::vector<int>> values;

  static Cocycle checked(FiniteGroup base, int modulus, std::vector<std::vector<int>> values);
  bool is_zero() const;
};

// Q-orbit of one irreducible class [rho] of G together with the projective
// data living over it: the stabilizer, the twist intertwiners T_q, and the
// scalar defect cocycle of their composition.
struct DualOrbit {
  int rep_index = 0;              // minimal Ghat index in the orbit
  std::vector<int> orbit;         // sorted Ghat indices
  std::vector<int> stabilizer;    // sorted Q element indices
  FiniteGroup stab_group;         // stabilizer as its own group; element i = stabilizer[i]
  std::vector<Matrix> intertwiners;  // per stabilizer position, det = 1, [0] = I
  Cocycle cocycle;
  double defect_residual = 0;  // worst ||D(q,q') - lambda I||
  double snap_distance = 0;    // worst |lambda - snapped root of unity|
};

struct DualSpace {
  Extension ext;
  IrrepSet ghat;
  std::vector<std::vector<int>> action;  // one permutation of Ghat indices per q
  std::vector<DualOrbit> orbits;
};

// perm[q][i] = index of the class of g -> Ghat[i](conj_action(ext, q^-1)(g)).
// Verified to be a left action.
std::vector<std::vector<int>> q_action_on_ghat(const Extension& ext, const IrrepSet& ghat);

struct OrbitStab {
  int rep_index;
  std::vector<int> orbit;
  std::vector<int> stabilizer;
};

std::vector<OrbitStab> orbits_and_stabilizers(const std::vector<std::vector<int>>& action,
                                              const FiniteGroup& q);

// For each q in the stabilizer of [rho], a unitary T_q with
//   T_q rho(g) = rho(s(q) g s(q)^{-1}) T_q,
// scaled to determinant 1 via the principal d-th root. T_e = I.
// Implementing conjugation by s(q) itself (rather than by s(q^{-1})) makes
// operator composition line up with stabilizer multiplication, which is what
// gives the defect scalars an exact cocycle identity below.
std::vector<Matrix> compute_intertwiners(const Extension& ext, const IrrepSet& ghat,
                                         const OrbitStab& os, std::uint64_t seed,
                                         double tol = kMatrixTol);

struct CocycleResult {
  Cocycle cocycle;
  double defect_residual;
  double snap_distance;
};

// Scalar defect of intertwiner composition:
//   T_q T_q' = c(q,q') rho(g_{q,q'}) T_{qq'},   g_{q,q'} = s(q) s(q') s(qq')^{-1},
// evaluated as D = T_q T_q' T_{qq'}^{-1} rho(g_{q,q'})^{-1} which must be
// within tol of a unimodular scalar. Scalars are snapped to the minimal
// root-of-unity order that satisfies the cocycle identity exactly.
CocycleResult compute_cocycle(const Extension& ext, const IrrepSet& ghat, const OrbitStab& os,
                              const std::vector<Matrix>& intertwiners, double tol = kMatrixTol);

enum class Triviality { trivial, nontrivial, unknown };
const char* triviality_name(Triviality t);

// Brute-force coboundary search over mu_m-valued 1-cochains when the search
// space is small enough; otherwise decided by comparing the twisted irrep
// count with |Irr(base)|.
Triviality cocycle_triviality(const Cocycle& c, std::uint64_t seed = 0);

DualSpace compute_dual(const Extension& ext, std::uint64_t seed, double tol = kMatrixTol);

}  // namespace gerbe
