#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tribrace/group.hpp"

namespace tribrace {

// A skew left brace: two group structures on the same index set, sharing the
// identity 0, subject to a(b + c) = ab - a + ac. The map
// lambda_a(b) = -a + ab is then an automorphism of (B, +) for every a, and
// a -> lambda_a is a homomorphism from (B, *) into Aut(B, +).
class SkewBrace {
 public:
  SkewBrace() = default;

  bool valid() const noexcept { return impl_ != nullptr; }
  int order() const noexcept;

  const FiniteGroup& add() const;
  const FiniteGroup& mul() const;

  Elem plus(Elem a, Elem b) const { return add().mul(a, b); }
  Elem neg(Elem a) const { return add().inv(a); }
  Elem times(Elem a, Elem b) const { return mul().mul(a, b); }
  Elem times_inv(Elem a) const { return mul().inv(a); }

  // lambda_a(b) = -a + ab
  Elem lambda_of(Elem a, Elem b) const { return plus(neg(a), times(a, b)); }

  bool same_brace(const SkewBrace& other) const noexcept;
  bool table_equal(const SkewBrace& other) const;
  bool is_trivial() const;  // a * b == a + b everywhere

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit SkewBrace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend struct BraceBuilder;
};

// ---------------------------------------------------------------------------
// Validation

enum class BraceDefect {
  AddNotGroup,
  MulNotGroup,
  SizeMismatch,
  BraceLawViolated,  // witness (a, b, c) with a(b+c) != ab - a + ac
};

std::string to_string(BraceDefect d);

struct BraceViolation {
  BraceDefect kind;
  std::array<Elem, 3> witness{-1, -1, -1};
  std::string detail;
};

struct BraceCheck {
  std::optional<SkewBrace> brace;
  std::vector<BraceViolation> violations;
  bool ok() const { return brace.has_value(); }
};

BraceCheck validate_brace(const std::vector<std::vector<Elem>>& add,
                          const std::vector<std::vector<Elem>>& mul,
                          const Bounds& bounds = Bounds::active());

// Certified groups on the same index set; throws DomainError when the brace
// law fails or the orders differ.
SkewBrace make_brace(const FiniteGroup& add, const FiniteGroup& mul,
                     const Bounds& bounds = Bounds::active());

SkewBrace trivial_brace(const FiniteGroup& G);
// add is the opposite group (a + b := b a), mul is G itself; lambda becomes
// conjugation, so the kernel of lambda is the centre of G.
SkewBrace opposite_brace(const FiniteGroup& G);

// ---------------------------------------------------------------------------
// Lambda

// Certified family {lambda_a}: each an automorphism of (B, +), the assignment
// a -> lambda_a a homomorphism from (B, *).
class LambdaMap {
 public:
  LambdaMap() = default;
  bool valid() const noexcept { return impl_ != nullptr; }

  const SkewBrace& brace() const;
  const std::vector<Elem>& perm(Elem a) const;  // lambda_a as a permutation
  Elem apply(Elem a, Elem b) const;

  // The distinct lambda permutations under composition, indexed with the
  // identity first and the rest in lexicographic order.
  const FiniteGroup& image_group() const;
  // a -> index of lambda_a inside image_group
  const std::vector<Elem>& image_index() const;
  // the permutation realizing an image_group element
  const std::vector<Elem>& image_perm(Elem i) const;
  GroupMap as_group_map() const;  // (B, *) -> image_group

  std::vector<Elem> kernel() const;  // sorted {a : lambda_a = id}

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit LambdaMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend struct LambdaBuilder;
};

LambdaMap lambda_map(const SkewBrace& B);

// Kernel of lambda as a subgroup of (B, *); it is normal there and a
// subgroup of (B, +) as well.
SubgroupSet ker_lambda(const SkewBrace& B);

// ---------------------------------------------------------------------------
// Homomorphisms

// A map that is simultaneously a homomorphism for + and for *.
class BraceMap {
 public:
  BraceMap() = default;
  bool valid() const noexcept { return !images_.empty(); }

  const SkewBrace& source() const { return source_; }
  const SkewBrace& target() const { return target_; }
  Elem operator()(Elem x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<Elem>& images() const { return images_; }

  GroupMap add_map() const;
  GroupMap mul_map() const;

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  std::vector<Elem> kernel() const;  // {x : f(x) = 0}, an ideal of the source
  std::vector<Elem> image_of(std::span<const Elem> S) const;

  static BraceMap compose(const BraceMap& outer, const BraceMap& inner);
  BraceMap inverted() const;

  bool same_map(const BraceMap& other) const;

 private:
  SkewBrace source_, target_;
  std::vector<Elem> images_;

  struct Unchecked {};
  BraceMap(Unchecked, SkewBrace source, SkewBrace target, std::vector<Elem> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}
  friend struct BraceMapBuilder;
};

struct BraceHomCheck {
  std::optional<BraceMap> map;
  enum class Defect { None, Shape, AddLaw, MulLaw } defect = Defect::None;
  std::array<Elem, 2> witness{-1, -1};
  bool ok() const { return map.has_value(); }
};

BraceHomCheck is_brace_hom(const SkewBrace& B1, const SkewBrace& B2,
                           const std::vector<Elem>& images);

// All brace automorphisms, sorted lexicographically by image array.
std::vector<BraceMap> brace_automorphisms(const SkewBrace& B,
                                          const Bounds& bounds = Bounds::active());

// ---------------------------------------------------------------------------
// Substructure

// Cumulative ladder: each kind includes everything below it.
enum class SubstructureKind {
  None,             // not a subbrace
  Subbrace,         // subgroup for + and *
  LeftIdeal,        // additionally lambda-stable
  StrongLeftIdeal,  // additionally normal in (B, +)
  Ideal,            // additionally normal in (B, *)
};

std::string to_string(SubstructureKind k);

struct SubstructureFlags {
  bool add_subgroup = false;
  bool mul_subgroup = false;
  bool lambda_stable = false;   // lambda_a(L) = L for all a
  bool normal_in_add = false;
  bool normal_in_mul = false;
};

struct SubstructureClass {
  SubstructureKind kind = SubstructureKind::None;
  SubstructureFlags flags;
};

// L is any index subset; flags are evaluated independently, the kind is the
// highest rung whose requirements all hold.
SubstructureClass classify_substructure(const SkewBrace& B, std::vector<Elem> L);

// ---------------------------------------------------------------------------
// Quotients

struct BraceQuotientResult {
  SkewBrace quotient;
  BraceMap projection;
  std::vector<Elem> reps;  // least-index representative per class
};

// Throws DomainError unless L is an ideal.
BraceQuotientResult brace_quotient(const SkewBrace& B, const std::vector<Elem>& L);

// ---------------------------------------------------------------------------
// Enumeration

// Every skew brace structure with (B, +) equal to K on the nose, sorted by
// multiplication table. Equivalent to enumerating the regular subgroups of
// the holomorph of K. Throws BoundExceeded above bounds.brace_enumeration.
std::vector<SkewBrace> enumerate_braces(const FiniteGroup& K,
                                        const Bounds& bounds = Bounds::active());

}  // namespace tribrace
