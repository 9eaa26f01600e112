#include "gerbe/library.hpp"

#include <algorithm>

namespace gerbe {

namespace {

GroupPtr shared(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

FiniteGroup named(FiniteGroup g, std::string name) {
  return FiniteGroup::validate(g.table(), std::move(name));
}

// Quaternion group as signed axes: index = sign * 4 + axis with
// axes (1, i, j, k); element 0 is +1.
FiniteGroup quaternion_group() {
  // axis multiplication table and the sign it produces
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int sa = a / 4, xa = a % 4, sb = b / 4, xb = b % 4;
      const int s = (sa + sb + sign[xa][xb]) % 2;
      table[a][b] = s * 4 + axis[xa][xb];
    }
  }
  return FiniteGroup::validate(std::move(table), "Q8");
}

Extension make_z4() {
  auto g = shared(cyclic_group(2));
  auto h = shared(named(cyclic_group(4), "Z4"));
  auto q = shared(cyclic_group(2));
  return build_extension(g, h, q, {0, 2}, {0, 1, 0, 1});
}

Extension make_q8() {
  auto h = shared(quaternion_group());
  auto g = shared(cyclic_group(2));
  auto quot = quotient_by_normal(*h, {0, 4});  // mod {+1, -1}
  auto q = shared(named(std::move(quot.quotient), "Z2xZ2"));
  return build_extension(g, h, q, {0, 4}, quot.proj);
}

Extension make_d4() {
  // symmetries of the square: rotation (0123) and a diagonal flip
  PermGroup pg = perm_group_closure(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  auto h = shared(named(std::move(pg.group), "D4"));
  const int r2 = pg.element_index({2, 3, 0, 1});  // half turn, the center
  auto quot = quotient_by_normal(*h, {0, r2});
  auto g = shared(cyclic_group(2));
  auto q = shared(named(std::move(quot.quotient), "Z2xZ2"));
  return build_extension(g, h, q, {0, r2}, quot.proj);
}

Extension make_s3() {
  PermGroup pg = perm_group_closure(3, {{1, 2, 0}, {1, 0, 2}});
  auto h = shared(named(std::move(pg.group), "S3"));
  const int c3 = pg.element_index({1, 2, 0});
  const int c3sq = pg.element_index({2, 0, 1});
  auto g = shared(cyclic_group(3));
  auto q = shared(cyclic_group(2));
  // parity map
  std::vector<int> pi(6);
  for (int x = 0; x < 6; ++x) {
    const auto& p = pg.elements[x];
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (p[i] > p[j]) ++inversions;
    pi[x] = inversions % 2;
  }
  return build_extension(g, h, q, {0, c3, c3sq}, pi);
}

Extension make_s4() {
  PermGroup pg = perm_group_closure(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  auto h = shared(named(std::move(pg.group), "S4"));
  const int d1 = pg.element_index({1, 0, 3, 2});  // (01)(23)
  const int d2 = pg.element_index({2, 3, 0, 1});  // (02)(13)
  const int d3 = pg.element_index({3, 2, 1, 0});  // (03)(12)
  auto quot = quotient_by_normal(*h, {0, d1, d2, d3});
  auto q = shared(named(std::move(quot.quotient), "S3"));
  // V4 with XOR labels embeds via the three double transpositions
  std::vector<std::vector<int>> v4_table(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) v4_table[a][b] = a ^ b;
  auto g = shared(FiniteGroup::validate(std::move(v4_table), "V4"));
  return build_extension(g, h, q, {0, d1, d2, d3}, quot.proj);
}

Extension make_trivial_gerbe() {
  PermGroup pg = perm_group_closure(3, {{1, 2, 0}, {1, 0, 2}});
  auto q = shared(named(pg.group, "S3"));
  auto h = shared(named(std::move(pg.group), "S3"));
  auto g = shared(named(cyclic_group(1), "1"));
  std::vector<int> id(6);
  for (int i = 0; i < 6; ++i) id[i] = i;
  return build_extension(g, h, q, {0}, id);
}

Extension make_split(const FiniteGroup& g_in, const FiniteGroup& q_in) {
  auto g = shared(g_in);
  auto q = shared(q_in);
  auto h = shared(direct_product(g_in, q_in));
  const int nq = q_in.order();
  std::vector<int> iota(g_in.order()), pi(g_in.order() * nq);
  for (int a = 0; a < g_in.order(); ++a) iota[a] = a * nq;
  for (size_t x = 0; x < pi.size(); ++x) pi[x] = static_cast<int>(x) % nq;
  return build_extension(g, h, q, std::move(iota), std::move(pi));
}

std::vector<LibraryEntry> build_library() {
  std::vector<LibraryEntry> out;
  auto add = [&out](std::string name, std::string description, Extension ext) {
    const bool banded = is_banded(ext);
    out.push_back(LibraryEntry{std::move(name), std::move(description), std::move(ext), banded});
  };

  add("z4", "Z2 -> Z4 -> Z2, central non-split", make_z4());
  add("q8", "Z2 -> Q8 -> Z2xZ2, central, nontrivial torsion on the dual", make_q8());
  add("d4", "Z2 -> D4 -> Z2xZ2, central, nontrivial torsion on the dual", make_d4());
  add("s3", "Z3 -> S3 -> Z2, non-banded (inversion action)", make_s3());
  add("s4", "V4 -> S4 -> S3, non-banded (transitive action on characters)", make_s4());
  add("trivial-s3", "1 -> S3 -> S3, trivial gerbe", make_trivial_gerbe());
  add("split-s3xz2", "S3 -> S3xZ2 -> Z2, split with nonabelian kernel",
      make_split(group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}}), cyclic_group(2)));
  add("split-z2xz3", "Z2 -> Z2xZ3 -> Z3, split abelian", make_split(cyclic_group(2), cyclic_group(3)));
  return out;
}

}  // namespace

const std::vector<LibraryEntry>& bundled_library() {
  static const std::vector<LibraryEntry> library = build_library();
  return library;
}

const LibraryEntry* find_bundled(const std::string& name) {
  for (const LibraryEntry& e : bundled_library()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace gerbe
