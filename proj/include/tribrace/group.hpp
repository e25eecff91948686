#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tribrace/bounds.hpp"
#include "tribrace/errors.hpp"

namespace tribrace {

// Element index. Every group in this library lives on {0, ..., n-1} with the
// identity at index 0; all file formats and constructions preserve that.
using Elem = int;

class FiniteGroup;
struct SemidirectData;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  bool valid() const noexcept { return impl_ != nullptr; }
  int order() const noexcept;

  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem conj(Elem g, Elem x) const;  // g x g^-1
  int element_order(Elem x) const;

  static constexpr Elem identity = 0;

  bool is_semidirect() const noexcept;
  const SemidirectData& semidirect_data() const;

  // True when the full Cayley table is materialized (always for groups built
  // from tables; semidirect groups above the dense bound multiply on the fly).
  bool has_table() const noexcept;

  // Same underlying object (shared payload), not structural equality.
  bool same_group(const FiniteGroup& other) const noexcept;
  // Same order and identical products.
  bool table_equal(const FiniteGroup& other) const;

  // Row-major n*n product table (computed on demand if not materialized).
  std::vector<Elem> table_copy() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend struct GroupBuilder;
};

// Defining data of a semidirect product [base]actor. Element (k, e) is
// encoded as k * actor.order() + e, so the identity (0, 0) is index 0.
// action[e] is the permutation of base induced by e; it must be an
// automorphism of base and e -> action[e] a homomorphism.
struct SemidirectData {
  FiniteGroup base;
  FiniteGroup actor;
  std::vector<std::vector<Elem>> action;
};

// ---------------------------------------------------------------------------
// Validation

enum class GroupDefect {
  BadShape,             // ragged table or entry out of range
  NoIdentity,           // index 0 is not a two-sided identity
  NoInverse,            // some element has no two-sided inverse
  NonAssociative,       // witness triple recorded
  ActionNotPermutation, // semidirect: action[e] is not a bijection
  ActionNotAutomorphism,
  ActionNotHomomorphism,
};

std::string to_string(GroupDefect d);

struct GroupViolation {
  GroupDefect kind;
  std::array<Elem, 3> witness{-1, -1, -1};
  std::string detail;
};

struct GroupCheck {
  std::optional<FiniteGroup> group;
  std::vector<GroupViolation> violations;
  bool certified_full_assoc = false;  // exhaustive scan ran (vs sampled)
  bool ok() const { return group.has_value(); }
};

// Certify a Cayley table as a group. The identity must sit at index 0.
// Associativity is scanned exhaustively up to bounds.full_assoc_check and
// otherwise certified through a generating set plus sampled triples.
GroupCheck validate_group(const std::vector<std::vector<Elem>>& table,
                          const Bounds& bounds = Bounds::active());

// Certify a semidirect product [base]actor. The action is checked to be a
// homomorphism actor -> Aut(base); associativity then holds by construction.
GroupCheck validate_semidirect(const FiniteGroup& base, const FiniteGroup& actor,
                               const std::vector<std::vector<Elem>>& action,
                               const Bounds& bounds = Bounds::active());

// Throwing shorthand for validate_semidirect (DomainError on any violation).
FiniteGroup semidirect_product(const FiniteGroup& base, const FiniteGroup& actor,
                               const std::vector<std::vector<Elem>>& action,
                               const Bounds& bounds = Bounds::active());

// ---------------------------------------------------------------------------
// Subgroups

// A certified subgroup: sorted member indices, closed under product and
// inverse, containing the identity. Construction throws DomainError with a
// witness in the message otherwise.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  SubgroupSet(FiniteGroup parent, std::vector<Elem> members);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Elem x) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_full() const { return size() == parent_.order(); }

  // Same parent object and identical member list.
  bool set_equal(const SubgroupSet& other) const;

  // members_ lexicographic order; used wherever subgroup lists are sorted.
  static bool lex_less(const SubgroupSet& a, const SubgroupSet& b);

 private:
  FiniteGroup parent_;
  std::vector<Elem> members_;

  struct Unchecked {};
  SubgroupSet(Unchecked, FiniteGroup parent, std::vector<Elem> members)
      : parent_(std::move(parent)), members_(std::move(members)) {}
  friend struct SubgroupBuilder;
};

// Set algebra on sorted index vectors. Inputs must be sorted and in range;
// results are sorted and duplicate free.
std::vector<Elem> product_set(const FiniteGroup& G, std::span<const Elem> A,
                              std::span<const Elem> B);
std::vector<Elem> intersection(std::span<const Elem> A, std::span<const Elem> B);
std::vector<Elem> inverse_set(const FiniteGroup& G, std::span<const Elem> A);
bool set_contains(std::span<const Elem> sorted, Elem x);
bool subset_of(std::span<const Elem> A, std::span<const Elem> B);

// Subgroup predicates on plain sorted sets. The witness (when given) receives
// the violating pair: {x, y} with xy outside, or {x, -1} for a missing
// inverse / missing identity.
bool is_subgroup_set(const FiniteGroup& G, std::span<const Elem> S,
                     std::array<Elem, 2>* witness = nullptr);
// Assumes S is a subgroup; witness receives {g, s} with g s g^-1 outside.
bool is_normal_set(const FiniteGroup& G, std::span<const Elem> S,
                   std::array<Elem, 2>* witness = nullptr);
bool is_normal(const FiniteGroup& G, const SubgroupSet& S);

SubgroupSet generated_subgroup(const FiniteGroup& G, std::span<const Elem> gens);
SubgroupSet normal_closure(const FiniteGroup& G, std::span<const Elem> gens);
SubgroupSet trivial_subgroup(const FiniteGroup& G);
SubgroupSet full_subgroup(const FiniteGroup& G);

std::vector<Elem> normalizer(const FiniteGroup& G, std::span<const Elem> S);
// {a in A : ab = ba for all b in B}
std::vector<Elem> centralizer_in(const FiniteGroup& G, std::span<const Elem> A,
                                 std::span<const Elem> B);

// Modular law check A(B n C) == AB n C for A <= C; used as an internal
// cross-check wherever factorised sets are manipulated.
bool dedekind_identity_holds(const FiniteGroup& G, std::span<const Elem> A,
                             std::span<const Elem> B, std::span<const Elem> C);

// The subgroup with the given members re-indexed as a group on 0..|S|-1,
// position in the sorted member list giving the new index. Throws DomainError
// when the set is not closed.
FiniteGroup subgroup_as_group(const FiniteGroup& G, std::span<const Elem> members);

// ---------------------------------------------------------------------------
// Homomorphisms

// A certified homomorphism given by its full image array.
class GroupMap {
 public:
  GroupMap() = default;
  // Throws DomainError when images is not a homomorphism.
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images);
  static std::optional<GroupMap> try_make(FiniteGroup source, FiniteGroup target,
                                          std::vector<Elem> images,
                                          std::array<Elem, 2>* witness = nullptr);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  Elem operator()(Elem x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<Elem>& images() const { return images_; }

  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool bijective() const { return injective_ && surjective_; }

  std::vector<Elem> kernel() const;
  std::vector<Elem> image() const;
  std::vector<Elem> image_of(std::span<const Elem> S) const;
  std::vector<Elem> preimage_of(std::span<const Elem> S) const;

  GroupMap inverted() const;  // requires bijective()
  static GroupMap compose(const GroupMap& outer, const GroupMap& inner);
  static GroupMap identity_map(const FiniteGroup& G);

  bool same_map(const GroupMap& other) const;

 private:
  FiniteGroup source_, target_;
  std::vector<Elem> images_;
  bool injective_ = false, surjective_ = false;

  struct Unchecked {};
  GroupMap(Unchecked, FiniteGroup source, FiniteGroup target, std::vector<Elem> images);
  friend struct MapBuilder;
};

// ---------------------------------------------------------------------------
// Quotients

struct QuotientResult {
  FiniteGroup quotient;      // dense table on coset indices
  GroupMap projection;       // G -> quotient
  std::vector<Elem> reps;    // least-index representative per coset
};

// Throws DomainError when N is not normal in G.
QuotientResult quotient_group(const FiniteGroup& G, const SubgroupSet& N);

// ---------------------------------------------------------------------------
// Searches

// Deterministic generating sequence: repeatedly adjoin the element whose
// closure with the current set is largest, ties broken by least index.
std::vector<Elem> greedy_generators(const FiniteGroup& G);

// Classes sorted internally and ordered by least member.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& G);

// All automorphisms, sorted lexicographically by image array.
// Throws BoundExceeded when G.order() > bounds.automorphism_search.
std::vector<GroupMap> automorphisms(const FiniteGroup& G,
                                    const Bounds& bounds = Bounds::active());

struct SearchStats {
  std::uint64_t nodes = 0;    // search tree nodes visited
  bool exhausted = false;     // full space covered (meaningful when no hit)
};

// First isomorphism G1 -> G2 (in deterministic search order) mapping each
// S1 onto the paired S2 setwise, or nullopt after exhausting the space.
// Pairs with |S1| != |S2| or |G1| != |G2| yield nullopt immediately.
std::optional<GroupMap> constrained_isomorphism(
    const FiniteGroup& G1, const FiniteGroup& G2,
    const std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>>& constraints,
    const Bounds& bounds = Bounds::active(), SearchStats* stats = nullptr);

// All normal subgroups (join closure over conjugacy class closures), sorted
// lexicographically. Throws BoundExceeded above bounds.normal_subgroup_search.
std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& G,
                                          const Bounds& bounds = Bounds::active());

// Every subgroup, sorted lexicographically. Exponential in general; guarded
// by bounds.subgroup_search.
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& G,
                                       const Bounds& bounds = Bounds::active());

}  // namespace tribrace
