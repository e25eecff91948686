#pragma once

#include <span>
#include <vector>

#include "tribrace/group.hpp"

// Stock groups used by tests and the enumeration corpus.
namespace tribrace::catalog {

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);  // order 2n, realized as [C_n]C_2
FiniteGroup quaternion8();
FiniteGroup klein4();
FiniteGroup symmetric3();
FiniteGroup alternating5();

// Dense table on pairs (a, b) -> a * |B| + b; matches the semidirect
// encoding with trivial action.
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

FiniteGroup elementary_abelian8();
FiniteGroup c4xc2();

// Closure of the given permutations of {0..points-1} under composition,
// elements sorted lexicographically (identity first).
FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens, int points);

// The sorted element list behind from_permutations.
std::vector<std::vector<int>> permutation_closure(const std::vector<std::vector<int>>& gens,
                                                  int points);
// Element index of a specific permutation inside from_permutations(gens, points).
// Throws DomainError when it is not in the generated group.
Elem permutation_index(const std::vector<std::vector<int>>& gens, int points,
                       const std::vector<int>& target);

struct NamedGroup {
  const char* name;
  FiniteGroup group;
};

// All groups of order <= 8: the brace enumeration corpus.
std::vector<NamedGroup> small_groups_through_8();

}  // namespace tribrace::catalog
