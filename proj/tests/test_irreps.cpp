#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gerbe/irreps.hpp"
#include "gerbe/library.hpp"

using namespace gerbe;

namespace {

GroupPtr shared(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

std::vector<int> dims_of(const IrrepSet& set) {
  std::vector<int> dims;
  for (const Irrep& r : set.irreps) dims.push_back(r.dim);
  return dims;
}

// every irrep of a appears exactly once in b, matched by character
bool equivalent_as_multisets(const IrrepSet& a, const IrrepSet& b) {
  if (a.irreps.size() != b.irreps.size()) return false;
  std::vector<char> used(b.irreps.size(), 0);
  for (const Irrep& ra : a.irreps) {
    bool matched = false;
    for (size_t j = 0; j < b.irreps.size(); ++j) {
      if (used[j] || ra.dim != b.irreps[j].dim) continue;
      if (are_equivalent(ra, b.irreps[j])) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trivial group has one 1-dimensional irrep") {
  const IrrepSet set = compute_irreps(shared(cyclic_group(1)), 0);
  REQUIRE(set.irreps.size() == 1);
  CHECK(set.irreps[0].dim == 1);
  CHECK(std::abs(set.irreps[0].character[0] - cxd(1, 0)) < 1e-12);
}

TEST_CASE("irrep dimension profiles of the curated groups") {
  // forced by sum d_i^2 = |G| with the known class counts
  CHECK(dims_of(compute_irreps(shared(group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}})),
                               0)) == std::vector<int>{1, 1, 2});
  CHECK(dims_of(compute_irreps(find_bundled("q8")->ext.total, 0)) ==
        std::vector<int>{1, 1, 1, 1, 2});
  CHECK(dims_of(compute_irreps(find_bundled("d4")->ext.total, 0)) ==
        std::vector<int>{1, 1, 1, 1, 2});
  CHECK(dims_of(compute_irreps(find_bundled("s4")->ext.total, 0)) ==
        std::vector<int>{1, 1, 2, 3, 3});
  CHECK(dims_of(compute_irreps(shared(cyclic_group(4)), 0)) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("irrep sets satisfy the exact counting identities") {
  for (const LibraryEntry& e : bundled_library()) {
    for (const GroupPtr& g : {e.ext.kernel, e.ext.total, e.ext.quotient}) {
      const IrrepSet set = compute_irreps(g, 0);
      CHECK(set.sum_dim_sq() == g->order());
      CHECK(set.irreps.size() == conjugacy_classes(*g).size());
      CHECK(set.diag.hom_residual <= kMatrixTol);
      CHECK(set.diag.unitary_residual <= kMatrixTol);
      CHECK(set.diag.ortho_residual <= kMatrixTol);
      CHECK(set.diag.class_residual <= kMatrixTol);
      for (const Irrep& r : set.irreps) {
        CHECK((r.mats[0] - Matrix::Identity(r.dim, r.dim)).norm() <= kMatrixTol);
      }
    }
  }
}

TEST_CASE("compute_irreps is deterministic for a fixed seed") {
  const GroupPtr s4 = find_bundled("s4")->ext.total;
  const IrrepSet a = compute_irreps(s4, 7);
  const IrrepSet b = compute_irreps(s4, 7);
  REQUIRE(a.irreps.size() == b.irreps.size());
  for (size_t i = 0; i < a.irreps.size(); ++i) {
    for (int e = 0; e < s4->order(); ++e) {
      CHECK((a.irreps[i].mats[e] - b.irreps[i].mats[e]).norm() == 0.0);
    }
  }
}

TEST_CASE("irrep sets from different seeds are equivalent as multisets") {
  for (const auto* name : {"q8", "s4", "split-s3xz2"}) {
    const GroupPtr h = find_bundled(name)->ext.total;
    const IrrepSet s0 = compute_irreps(h, 0);
    const IrrepSet s1 = compute_irreps(h, 1);
    const IrrepSet s2 = compute_irreps(h, 2);
    CHECK(equivalent_as_multisets(s0, s1));
    CHECK(equivalent_as_multisets(s1, s2));
    CHECK(dims_of(s0) == dims_of(s1));
    CHECK(dims_of(s1) == dims_of(s2));
  }
}

TEST_CASE("are_equivalent") {
  const IrrepSet s3 =
      compute_irreps(shared(group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}})), 0);
  REQUIRE(s3.irreps.size() == 3);
  const Irrep& triv_or_sign_a = s3.irreps[0];
  const Irrep& triv_or_sign_b = s3.irreps[1];
  const Irrep& two_dim = s3.irreps[2];

  SUBCASE("an irrep is equivalent to itself") {
    for (const Irrep& r : s3.irreps) CHECK(are_equivalent(r, r));
  }
  SUBCASE("the two 1-dim irreps of S3 are inequivalent") {
    CHECK_FALSE(are_equivalent(triv_or_sign_a, triv_or_sign_b));
  }
  SUBCASE("conjugating by a fixed unitary preserves the class") {
    // conjugate the 2-dim irrep by the image of a transposition
    int t = -1;
    const FiniteGroup& g = *s3.group;
    for (int x = 1; x < g.order(); ++x) {
      if (g.element_order(x) == 2) {
        t = x;
        break;
      }
    }
    REQUIRE(t > 0);
    Irrep conj = two_dim;
    for (int e = 0; e < g.order(); ++e) {
      conj.mats[e] = two_dim.mats[t] * two_dim.mats[e] * two_dim.mats[t].adjoint();
      conj.character[e] = conj.mats[e].trace();
    }
    CHECK(are_equivalent(two_dim, conj));

    SUBCASE("and an intertwiner exists with small residual") {
      const auto s = intertwiner(two_dim, conj, 0);
      REQUIRE(s.has_value());
      double residual = 0;
      for (int e = 0; e < g.order(); ++e) {
        residual = std::max(residual,
                            ((*s) * two_dim.mats[e] - conj.mats[e] * (*s)).norm());
      }
      CHECK(residual < 1e-9);
    }
  }
  SUBCASE("group mismatch is an error") {
    const IrrepSet z2 = compute_irreps(shared(cyclic_group(2)), 0);
    CHECK_THROWS_AS((void)are_equivalent(z2.irreps[0], s3.irreps[0]), error);
  }
}

TEST_CASE("intertwiner") {
  const IrrepSet s3 =
      compute_irreps(shared(group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}})), 0);
  const Irrep& two_dim = s3.irreps[2];

  SUBCASE("self-intertwiner is a unimodular scalar (Schur)") {
    const auto s = intertwiner(two_dim, two_dim, 3);
    REQUIRE(s.has_value());
    const cxd lambda = s->trace() / 2.0;
    CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-9);
    CHECK((*s - lambda * Matrix::Identity(2, 2)).norm() < 1e-9);
  }
  SUBCASE("inequivalent irreps have no intertwiner") {
    CHECK_FALSE(intertwiner(s3.irreps[0], s3.irreps[1], 0).has_value());
    CHECK_FALSE(intertwiner(s3.irreps[0], s3.irreps[2], 0).has_value());  // dim mismatch
  }
}

TEST_CASE("characters are constant on conjugacy classes") {
  const GroupPtr s4 = find_bundled("s4")->ext.total;
  const IrrepSet set = compute_irreps(s4, 0);
  for (const auto& cls : conjugacy_classes(*s4)) {
    for (const Irrep& r : set.irreps) {
      for (int e : cls) CHECK(std::abs(r.character[e] - r.character[cls[0]]) < 1e-9);
    }
  }
}
