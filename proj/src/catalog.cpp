#include "tribrace/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace tribrace::catalog {

static FiniteGroup from_table(std::vector<std::vector<Elem>> table) {
  GroupCheck ck = validate_group(table);
  if (!ck.ok()) throw std::logic_error("catalog: stock table failed validation");
  return *ck.group;
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw DomainError("cyclic: order must be positive");
  std::vector<std::vector<Elem>> t(static_cast<size_t>(n),
                                   std::vector<Elem>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  return from_table(std::move(t));
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw DomainError("dihedral: parameter must be positive");
  FiniteGroup cn = cyclic(n), c2 = cyclic(2);
  std::vector<Elem> invert(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) invert[static_cast<size_t>(i)] = (n - i) % n;
  std::vector<Elem> id(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
  return semidirect_product(cn, c2, {id, invert});
}

FiniteGroup quaternion8() {
  // 0..7 = 1, i, j, k, -1, -i, -j, -k
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1},
                                 {+1, -1, +1, -1},
                                 {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x % 4, sx = x / 4 ? -1 : +1;
      const int uy = y % 4, sy = y / 4 ? -1 : +1;
      const int u = unit[ux][uy];
      const int s = sx * sy * sign[ux][uy];
      t[static_cast<size_t>(x)][static_cast<size_t>(y)] = u + (s < 0 ? 4 : 0);
    }
  return from_table(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const int na = A.order(), nb = B.order();
  const int n = na * nb;
  std::vector<std::vector<Elem>> t(static_cast<size_t>(n),
                                   std::vector<Elem>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[static_cast<size_t>(a1 * nb + b1)][static_cast<size_t>(a2 * nb + b2)] =
              A.mul(a1, a2) * nb + B.mul(b1, b2);
  return from_table(std::move(t));
}

FiniteGroup klein4() { return direct_product(cyclic(2), cyclic(2)); }

FiniteGroup elementary_abelian8() { return direct_product(klein4(), cyclic(2)); }

FiniteGroup c4xc2() { return direct_product(cyclic(4), cyclic(2)); }

std::vector<std::vector<int>> permutation_closure(const std::vector<std::vector<int>>& gens,
                                                  int points) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != points)
      throw DomainError("from_permutations: wrong permutation length");
    std::vector<char> seen(static_cast<size_t>(points), 0);
    for (int v : p) {
      if (v < 0 || v >= points || seen[static_cast<size_t>(v)])
        throw DomainError("from_permutations: not a permutation");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  auto compose = [points](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(static_cast<size_t>(points));
    for (int x = 0; x < points; ++x)
      r[static_cast<size_t>(x)] = p[static_cast<size_t>(q[static_cast<size_t>(x)])];
    return r;
  };
  std::vector<int> identity(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) identity[static_cast<size_t>(i)] = i;

  std::set<std::vector<int>> elems;
  elems.insert(identity);
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> pg = compose(p, g);
        if (elems.insert(pg).second) next.push_back(std::move(pg));
      }
    frontier = std::move(next);
  }

  // set iteration is lexicographic and the identity is lex-least, so it
  // lands at index 0
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
  assert(sorted.front() == identity);
  return sorted;
}

Elem permutation_index(const std::vector<std::vector<int>>& gens, int points,
                       const std::vector<int>& target) {
  const std::vector<std::vector<int>> sorted = permutation_closure(gens, points);
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), target);
  if (it == sorted.end() || *it != target)
    throw DomainError("permutation_index: permutation not in the generated group");
  return static_cast<Elem>(it - sorted.begin());
}

FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens, int points) {
  const std::vector<std::vector<int>> sorted = permutation_closure(gens, points);
  auto compose = [points](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(static_cast<size_t>(points));
    for (int x = 0; x < points; ++x)
      r[static_cast<size_t>(x)] = p[static_cast<size_t>(q[static_cast<size_t>(x)])];
    return r;
  };
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

  const int n = static_cast<int>(sorted.size());
  std::vector<std::vector<Elem>> t(static_cast<size_t>(n),
                                   std::vector<Elem>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          index.at(compose(sorted[static_cast<size_t>(i)], sorted[static_cast<size_t>(j)]));
  return from_table(std::move(t));
}

FiniteGroup symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}, 3); }

FiniteGroup alternating5() { return from_permutations({{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, 5); }

std::vector<NamedGroup> small_groups_through_8() {
  std::vector<NamedGroup> out;
  out.push_back({"C1", cyclic(1)});
  out.push_back({"C2", cyclic(2)});
  out.push_back({"C3", cyclic(3)});
  out.push_back({"C4", cyclic(4)});
  out.push_back({"V4", klein4()});
  out.push_back({"C5", cyclic(5)});
  out.push_back({"C6", cyclic(6)});
  out.push_back({"S3", symmetric3()});
  out.push_back({"C7", cyclic(7)});
  out.push_back({"C8", cyclic(8)});
  out.push_back({"C4xC2", c4xc2()});
  out.push_back({"C2^3", elementary_abelian8()});
  out.push_back({"D8", dihedral(4)});
  out.push_back({"Q8", quaternion8()});
  return out;
}

}  // namespace tribrace::catalog
