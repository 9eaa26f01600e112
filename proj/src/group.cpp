#include "gerbe/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace gerbe {

const char* errc_name(errc code) {
  switch (code) {
    case errc::no_identity_at_zero: return "NoIdentityAtZero";
    case errc::not_latin_square: return "NotLatinSquare";
    case errc::non_associative: return "NonAssociative";
    case errc::order_bound_exceeded: return "OrderBoundExceeded";
    case errc::not_injective: return "NotInjective";
    case errc::not_surjective: return "NotSurjective";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::not_exact: return "NotExact";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::numerical_failure: return "NumericalFailure";
    case errc::action_broken: return "ActionBroken";
    case errc::not_scalar: return "NotScalar";
    case errc::snap_failure: return "SnapFailure";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::inconsistent: return "Inconsistent";
    case errc::insufficient: return "Insufficient";
    case errc::invalid_input: return "InvalidInput";
  }
  return "UnknownError";
}

namespace {

void check_shape(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(errc::invalid_input, "empty multiplication table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      fail(errc::invalid_input, "table row " + std::to_string(a) + " has length " +
                                    std::to_string(table[a].size()) + ", expected " +
                                    std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        fail(errc::invalid_input, "table[" + std::to_string(a) + "][" + std::to_string(b) +
                                      "] = " + std::to_string(table[a][b]) +
                                      " out of range 0.." + std::to_string(n - 1));
      }
    }
  }
}

void check_identity_and_latin(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      fail(errc::no_identity_at_zero,
           "element 0 is not a two-sided identity at element " + std::to_string(a));
    }
  }
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (seen[table[a][b]]++) {
        fail(errc::not_latin_square, "row " + std::to_string(a) + " repeats element " +
                                         std::to_string(table[a][b]));
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (seen[table[b][a]]++) {
        fail(errc::not_latin_square, "column " + std::to_string(a) + " repeats element " +
                                         std::to_string(table[b][a]));
      }
    }
  }
}

}  // namespace

void FiniteGroup::build_inverses() {
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (table_[a][b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
    // Latin square guarantees a right inverse; associativity makes it two-sided.
  }
}

FiniteGroup FiniteGroup::validate(std::vector<std::vector<int>> table, std::string name) {
  check_shape(table);
  check_identity_and_latin(table);
  const int n = static_cast<int>(table.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = table[a][b];
      for (int c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          fail(errc::non_associative, "(a,b,c) = (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  FiniteGroup g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_ = std::move(table);
  g.build_inverses();
  return g;
}

FiniteGroup trusted_group(std::vector<std::vector<int>> table, std::string name) {
  check_shape(table);
  check_identity_and_latin(table);
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  g.name_ = std::move(name);
  g.table_ = std::move(table);
  g.build_inverses();
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int x = g;
  while (x != 0) {
    x = table_[x][g];
    ++k;
  }
  return k;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return this == &other || table_ == other.table_;
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) fail(errc::invalid_input, "cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return trusted_group(std::move(table), "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const std::string& name) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int ax = x / nb, bx = x % nb, ay = y / nb, by = y % nb;
      table[x][y] = a.mul(ax, ay) * nb + b.mul(bx, by);
    }
  }
  std::string nm = name.empty() ? a.name() + "x" + b.name() : name;
  return trusted_group(std::move(table), std::move(nm));
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> out(p.size());
  for (size_t x = 0; x < p.size(); ++x) out[x] = p[q[x]];
  return out;
}

bool is_permutation(const std::vector<int>& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]++) return false;
  }
  return true;
}

}  // namespace

PermGroup perm_group_closure(int degree, const std::vector<std::vector<int>>& generators,
                             int order_bound) {
  if (degree <= 0) fail(errc::invalid_input, "degree must be positive");
  for (size_t i = 0; i < generators.size(); ++i) {
    if (!is_permutation(generators[i], degree)) {
      fail(errc::invalid_input,
           "generator " + std::to_string(i) + " is not a permutation of 0.." +
               std::to_string(degree - 1));
    }
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<std::vector<int>> elements{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int cur = todo.front();
    todo.pop();
    for (const auto& gen : generators) {
      for (const auto& prod :
           {compose_perm(elements[cur], gen), compose_perm(gen, elements[cur])}) {
        if (index.emplace(prod, static_cast<int>(elements.size())).second) {
          elements.push_back(prod);
          if (static_cast<int>(elements.size()) > order_bound) {
            fail(errc::order_bound_exceeded,
                 "closure exceeds order bound " + std::to_string(order_bound));
          }
          todo.push(index[prod]);
        }
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose_perm(elements[a], elements[b]));

  PermGroup out{trusted_group(std::move(table)), std::move(elements)};
  return out;
}

int PermGroup::element_index(const std::vector<int>& perm) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == perm) return static_cast<int>(i);
  return -1;
}

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    int order_bound) {
  return perm_group_closure(degree, generators, order_bound).group;
}

QuotientResult quotient_by_normal(const FiniteGroup& h, const std::vector<int>& normal) {
  const int n = h.order();
  std::vector<char> in_n(n, 0);
  for (int x : normal) {
    if (x < 0 || x >= n) fail(errc::invalid_input, "normal subgroup index out of range");
    in_n[x] = 1;
  }
  if (!in_n[0]) fail(errc::invalid_input, "normal subgroup must contain the identity");
  // closure and normality checks
  for (int x : normal) {
    for (int y : normal)
      if (!in_n[h.mul(x, y)]) fail(errc::invalid_input, "subgroup is not closed under product");
    for (int g = 0; g < n; ++g)
      if (!in_n[h.conj(g, x)]) fail(errc::invalid_input, "subgroup is not normal");
  }

  std::vector<int> coset(n, -1);
  std::vector<int> reps;  // minimal element of each coset, ascending
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int label = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int u : normal) coset[h.mul(x, u)] = label;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) table[a][b] = coset[h.mul(reps[a], reps[b])];
  QuotientResult out{trusted_group(std::move(table), h.name() + "/N"), std::move(coset)};
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::set<int> cls;
    for (int x = 0; x < n; ++x) cls.insert(g.conj(x, a));
    std::vector<int> sorted(cls.begin(), cls.end());
    for (int y : sorted) done[y] = 1;
    classes.push_back(std::move(sorted));
  }
  // outer scan order already yields classes sorted by minimal element
  return classes;
}

GroupHom GroupHom::validate(GroupPtr source, GroupPtr target, std::vector<int> map) {
  const int ns = source->order(), nt = target->order();
  if (static_cast<int>(map.size()) != ns) {
    fail(errc::invalid_input, "hom map has length " + std::to_string(map.size()) +
                                  ", expected " + std::to_string(ns));
  }
  for (int v : map) {
    if (v < 0 || v >= nt) fail(errc::invalid_input, "hom map value out of range");
  }
  if (map[0] != 0) fail(errc::invalid_input, "hom must send identity to identity");
  for (int a = 0; a < ns; ++a) {
    for (int b = 0; b < ns; ++b) {
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) {
        fail(errc::invalid_input, "map is not a homomorphism at (a,b) = (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
      }
    }
  }
  return GroupHom(std::move(source), std::move(target), std::move(map));
}

bool GroupHom::injective() const {
  std::vector<char> seen(target_->order(), 0);
  for (int v : map_) {
    if (seen[v]++) return false;
  }
  return true;
}

bool GroupHom::surjective() const {
  std::vector<char> seen(target_->order(), 0);
  int count = 0;
  for (int v : map_) {
    if (!seen[v]++) ++count;
  }
  return count == target_->order();
}

Extension build_extension(GroupPtr g, GroupPtr h, GroupPtr q, std::vector<int> iota,
                          std::vector<int> pi) {
  if (g->order() * q->order() != h->order()) {
    fail(errc::order_mismatch, "|G|*|Q| = " + std::to_string(g->order() * q->order()) +
                                   " != |H| = " + std::to_string(h->order()));
  }
  GroupHom incl = GroupHom::validate(g, h, std::move(iota));
  GroupHom proj = GroupHom::validate(h, q, std::move(pi));
  if (!incl.injective()) fail(errc::not_injective, "iota is not injective");
  if (!proj.surjective()) fail(errc::not_surjective, "pi is not surjective");

  // exactness: kernel of pi equals image of iota, as sets
  std::vector<int> incl_inverse(h->order(), -1);
  for (int a = 0; a < g->order(); ++a) incl_inverse[incl(a)] = a;
  for (int x = 0; x < h->order(); ++x) {
    const bool in_kernel = proj(x) == 0;
    const bool in_image = incl_inverse[x] >= 0;
    if (in_kernel != in_image) {
      fail(errc::not_exact, std::string("witness element ") + std::to_string(x) +
                                (in_kernel ? " is in ker(pi) but not in im(iota)"
                                           : " is in im(iota) but not in ker(pi)"));
    }
  }

  std::vector<int> section(q->order(), -1);
  for (int x = 0; x < h->order(); ++x) {
    if (section[proj(x)] < 0) section[proj(x)] = x;  // smallest H index wins
  }
  // proj(0) = 0 forces section[0] = 0

  Extension ext{std::move(g), std::move(h), std::move(q), std::move(incl), std::move(proj),
                std::move(section), std::move(incl_inverse)};
  return ext;
}

std::vector<int> conj_action(const Extension& ext, int q) {
  const FiniteGroup& g = ext.g();
  const FiniteGroup& h = ext.h();
  const int s = ext.section[q];
  std::vector<int> perm(g.order());
  for (int a = 0; a < g.order(); ++a) {
    const int image = h.conj(s, ext.incl(a));
    const int back = ext.incl_inverse[image];
    if (back < 0) {
      fail(errc::not_automorphism, "conjugate of kernel element " + std::to_string(a) +
                                       " left the kernel (broken extension)");
    }
    perm[a] = back;
  }
  // must preserve the multiplication table
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) {
        fail(errc::not_automorphism,
             "conjugation by section of q = " + std::to_string(q) + " is not an automorphism");
      }
    }
  }
  return perm;
}

std::vector<std::vector<int>> inner_automorphisms(const FiniteGroup& g) {
  std::set<std::vector<int>> uniq;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> perm(g.order());
    for (int a = 0; a < g.order(); ++a) perm[a] = g.conj(x, a);
    uniq.insert(std::move(perm));
  }
  return {uniq.begin(), uniq.end()};
}

bool is_banded(const Extension& ext) {
  const auto inner = inner_automorphisms(ext.g());
  const std::set<std::vector<int>> inner_set(inner.begin(), inner.end());
  for (int q = 0; q < ext.q().order(); ++q) {
    if (!inner_set.count(conj_action(ext, q))) return false;
  }
  return true;
}

}  // namespace gerbe
