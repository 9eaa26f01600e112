#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gerbe/group.hpp"
#include "gerbe/library.hpp"

using namespace gerbe;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a gerbe::error");
  return errc::invalid_input;
}

// Independent oracle: the composition table of explicitly listed
// permutations of {0,1,2}, identity first, (p*q)(x) = p(q(x)).
std::vector<std::vector<int>> s3_composition_table() {
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> prod(3);
      for (int x = 0; x < 3; ++x) prod[x] = perms[a][perms[b][x]];
      table[a][b] = index_of(prod);
    }
  return table;
}

}  // namespace

TEST_CASE("validate accepts the trivial group") {
  const FiniteGroup g = FiniteGroup::validate({{0}}, "1");
  CHECK(g.order() == 1);
  CHECK(g.inv(0) == 0);
}

TEST_CASE("validate accepts S3 built from explicit permutation composition") {
  const FiniteGroup g = FiniteGroup::validate(s3_composition_table(), "S3");
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("validate rejects a repeated row entry") {
  CHECK(code_of([] { FiniteGroup::validate({{0, 1}, {1, 1}}); }) == errc::not_latin_square);
}

TEST_CASE("validate rejects a shifted identity") {
  CHECK(code_of([] { FiniteGroup::validate({{1, 0}, {0, 1}}); }) ==
        errc::no_identity_at_zero);
}

TEST_CASE("validate rejects a non-associative Latin square") {
  // order-5 loop: rows and columns are permutations but (1*1)*2 != 1*(1*2)
  const std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                              {1, 0, 3, 4, 2},
                                              {2, 3, 4, 0, 1},
                                              {3, 4, 1, 2, 0},
                                              {4, 2, 0, 1, 3}};
  CHECK(code_of([&] { FiniteGroup::validate(loop); }) == errc::non_associative);
}

TEST_CASE("permutation closure generates S3") {
  const FiniteGroup g = group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(g.order() == 6);
}

TEST_CASE("permutation closure of a double transposition has order 2") {
  const FiniteGroup g = group_from_permutations(4, {{1, 0, 3, 2}});
  CHECK(g.order() == 2);
}

TEST_CASE("permutation closure with no generators is trivial") {
  const FiniteGroup g = group_from_permutations(2, {});
  CHECK(g.order() == 1);
}

TEST_CASE("permutation closure respects the order bound") {
  CHECK(code_of([] { group_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 20); }) ==
        errc::order_bound_exceeded);
}

TEST_CASE("conjugacy classes") {
  SUBCASE("trivial group") {
    const auto classes = conjugacy_classes(cyclic_group(1));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0] == std::vector<int>{0});
  }
  SUBCASE("S3 has classes of sizes 1, 3, 2") {
    const auto classes = conjugacy_classes(FiniteGroup::validate(s3_composition_table()));
    std::vector<size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});
    CHECK(classes[0] == std::vector<int>{0});
  }
  SUBCASE("Q8 has classes of sizes 1, 1, 2, 2, 2") {
    const FiniteGroup& q8 = find_bundled("q8")->ext.h();
    const auto classes = conjugacy_classes(q8);
    std::vector<size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 2, 2, 2});
  }
  SUBCASE("classes partition the group") {
    for (const auto* name : {"s3", "s4", "q8", "d4"}) {
      const FiniteGroup& h = find_bundled(name)->ext.h();
      const auto classes = conjugacy_classes(h);
      std::set<int> all;
      size_t total = 0;
      for (const auto& c : classes) {
        all.insert(c.begin(), c.end());
        total += c.size();
      }
      CHECK(total == static_cast<size_t>(h.order()));
      CHECK(all.size() == static_cast<size_t>(h.order()));
    }
  }
}

TEST_CASE("inverse table is an involution") {
  for (const auto* name : {"q8", "s4", "split-s3xz2"}) {
    const FiniteGroup& h = find_bundled(name)->ext.h();
    for (int a = 0; a < h.order(); ++a) {
      CHECK(h.inv(h.inv(a)) == a);
      CHECK(h.mul(a, h.inv(a)) == 0);
      CHECK(h.mul(h.inv(a), a) == 0);
    }
  }
}

TEST_CASE("build_extension Z2 -> Z4 -> Z2") {
  auto g = std::make_shared<const FiniteGroup>(cyclic_group(2));
  auto h = std::make_shared<const FiniteGroup>(cyclic_group(4));
  auto q = std::make_shared<const FiniteGroup>(cyclic_group(2));
  const Extension ext = build_extension(g, h, q, {0, 2}, {0, 1, 0, 1});
  CHECK(ext.section == std::vector<int>{0, 1});
  CHECK(ext.incl_inverse[2] == 1);
  CHECK(ext.incl_inverse[1] == -1);
}

TEST_CASE("build_extension rejects bad maps") {
  auto g = std::make_shared<const FiniteGroup>(cyclic_group(2));
  auto h = std::make_shared<const FiniteGroup>(cyclic_group(4));
  auto q = std::make_shared<const FiniteGroup>(cyclic_group(2));
  // iota(1) = 1 is not a homomorphism Z2 -> Z4
  CHECK(code_of([&] { build_extension(g, h, q, {0, 1}, {0, 1, 0, 1}); }) ==
        errc::invalid_input);
  CHECK(code_of([&] { build_extension(g, h, q, {0, 2}, {0, 0, 0, 0}); }) ==
        errc::not_surjective);
}

TEST_CASE("build_extension NotExact witness") {
  // into V4 = Z2 x Z2: iota embeds the second factor but pi reads off the
  // second coordinate too, so ker(pi) is the first factor, not im(iota)
  auto g = std::make_shared<const FiniteGroup>(cyclic_group(2));
  auto v4 = std::make_shared<const FiniteGroup>(
      direct_product(cyclic_group(2), cyclic_group(2), "V4"));
  auto q = std::make_shared<const FiniteGroup>(cyclic_group(2));
  CHECK(code_of([&] { build_extension(g, v4, q, {0, 1}, {0, 1, 0, 1}); }) == errc::not_exact);
}

TEST_CASE("build_extension order mismatch") {
  auto g = std::make_shared<const FiniteGroup>(cyclic_group(2));
  auto h = std::make_shared<const FiniteGroup>(cyclic_group(4));
  auto q = std::make_shared<const FiniteGroup>(cyclic_group(4));
  CHECK(code_of([&] { build_extension(g, h, q, {0, 2}, {0, 1, 2, 3}); }) ==
        errc::order_mismatch);
}

TEST_CASE("extension construction is deterministic") {
  const Extension& a = find_bundled("q8")->ext;
  const Extension b = build_extension(a.kernel, a.total, a.quotient, a.incl.map(), a.proj.map());
  CHECK(a.section == b.section);
  CHECK(a.incl_inverse == b.incl_inverse);
}

TEST_CASE("conj_action basics") {
  SUBCASE("identity of Q acts as the identity") {
    for (const LibraryEntry& e : bundled_library()) {
      const auto perm = conj_action(e.ext, 0);
      for (int i = 0; i < e.ext.g().order(); ++i) CHECK(perm[i] == i);
    }
  }
  SUBCASE("S3 extension: the flip inverts Z3") {
    const Extension& ext = find_bundled("s3")->ext;
    const auto perm = conj_action(ext, 1);
    CHECK(perm == std::vector<int>{0, 2, 1});
  }
  SUBCASE("central kernel: all actions trivial") {
    const Extension& ext = find_bundled("q8")->ext;
    for (int q = 0; q < ext.q().order(); ++q) {
      CHECK(conj_action(ext, q) == std::vector<int>{0, 1});
    }
  }
}

TEST_CASE("conj_action respects products up to inner automorphisms") {
  for (const auto* name : {"s3", "s4", "q8", "split-s3xz2"}) {
    const Extension& ext = find_bundled(name)->ext;
    const auto inner = inner_automorphisms(ext.g());
    const std::set<std::vector<int>> inner_set(inner.begin(), inner.end());
    const int nq = ext.q().order();
    for (int q1 = 0; q1 < nq; ++q1) {
      const auto p1 = conj_action(ext, q1);
      for (int q2 = 0; q2 < nq; ++q2) {
        const auto p2 = conj_action(ext, q2);
        const auto p12 = conj_action(ext, ext.q().mul(q1, q2));
        std::vector<int> composed(p1.size());
        for (size_t i = 0; i < p1.size(); ++i) composed[i] = p1[p2[i]];
        std::vector<int> inv(composed.size());
        for (size_t i = 0; i < composed.size(); ++i) inv[composed[i]] = static_cast<int>(i);
        std::vector<int> diff(p12.size());
        for (size_t i = 0; i < p12.size(); ++i) diff[i] = inv[p12[i]];
        CHECK(inner_set.count(diff) == 1);
      }
    }
  }
}

TEST_CASE("is_banded on the curated extensions") {
  CHECK(find_bundled("z4")->banded);
  CHECK(find_bundled("q8")->banded);
  CHECK(find_bundled("d4")->banded);
  CHECK_FALSE(find_bundled("s3")->banded);
  CHECK_FALSE(find_bundled("s4")->banded);
  CHECK(find_bundled("trivial-s3")->banded);
  CHECK(find_bundled("split-s3xz2")->banded);  // product action is trivial
}

TEST_CASE("split products always build and are banded for the trivial action") {
  const FiniteGroup g = group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  const FiniteGroup q = cyclic_group(4);
  auto gp = std::make_shared<const FiniteGroup>(g);
  auto qp = std::make_shared<const FiniteGroup>(q);
  auto hp = std::make_shared<const FiniteGroup>(direct_product(g, q));
  std::vector<int> iota(g.order()), pi(g.order() * q.order());
  for (int a = 0; a < g.order(); ++a) iota[a] = a * q.order();
  for (size_t x = 0; x < pi.size(); ++x) pi[x] = static_cast<int>(x) % q.order();
  const Extension ext = build_extension(gp, hp, qp, iota, pi);
  CHECK(is_banded(ext));
}

TEST_CASE("quotient of S3 by A3 is Z2") {
  const FiniteGroup s3 = group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  std::vector<int> a3{0};
  for (int x = 1; x < 6; ++x) {
    if (s3.element_order(x) == 3) a3.push_back(x);
  }
  REQUIRE(a3.size() == 3);
  const QuotientResult quot = quotient_by_normal(s3, a3);
  CHECK(quot.quotient.order() == 2);
  for (int x = 0; x < 6; ++x) CHECK(quot.proj[x] == (s3.element_order(x) == 2 ? 1 : 0));
}

TEST_CASE("group hom validation") {
  auto z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
  auto z4 = std::make_shared<const FiniteGroup>(cyclic_group(4));
  CHECK(code_of([&] { GroupHom::validate(z2, z4, {0, 1}); }) == errc::invalid_input);
  CHECK(code_of([&] { GroupHom::validate(z2, z4, {1, 0}); }) == errc::invalid_input);
  const GroupHom ok = GroupHom::validate(z2, z4, {0, 2});
  CHECK(ok.injective());
  CHECK_FALSE(ok.surjective());
}

TEST_CASE("bundled library self-test") {
  CHECK(bundled_library().size() >= 7);
  CHECK(find_bundled("nope") == nullptr);
  for (const LibraryEntry& e : bundled_library()) {
    CHECK(e.ext.g().order() * e.ext.q().order() == e.ext.h().order());
    CHECK(e.ext.section[0] == 0);
    for (int q = 0; q < e.ext.q().order(); ++q) CHECK(e.ext.proj(e.ext.section[q]) == q);
  }
}
