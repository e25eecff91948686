#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tribrace/brace.hpp"
#include "tribrace/group.hpp"

namespace tribrace {

// Where a tuple came from, when it was built from a brace: the brace and the
// admissible kernel N <= ker lambda (elements of the brace, not of G).
struct Provenance {
  SkewBrace brace;
  std::vector<Elem> kernel;
};

// A group G with subgroups K, H, E such that K is normal, G = KE = KH = HE,
// and K∩E = H∩E = 1. Every g then factors uniquely as k_g e_g with k_g in K
// and e_g in E, and h -> k_h is a bijection H -> K.
class TrifactorisedGroup {
 public:
  TrifactorisedGroup() = default;
  bool valid() const noexcept { return impl_ != nullptr; }

  const FiniteGroup& group() const;
  const SubgroupSet& k_set() const;
  const SubgroupSet& h_set() const;
  const SubgroupSet& e_set() const;

  Elem k_part(Elem g) const;  // k_g
  Elem e_part(Elem g) const;  // e_g

  const std::optional<Provenance>& provenance() const;

  bool same_tuple(const TrifactorisedGroup& other) const noexcept;
  // same group table and same three member sets
  bool tuple_equal(const TrifactorisedGroup& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit TrifactorisedGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend struct TrifactBuilder;
};

// ---------------------------------------------------------------------------
// Validation

enum class TrifactDefect {
  NotSubgroup,             // witness[0] names the factor: 0 = K, 1 = H, 2 = E
  KNotNormal,              // witness: (g, k) with g k g^-1 outside K
  FactorisationFails,      // witness[0]: 0 = KE, 1 = KH, 2 = HE
  IntersectionNontrivial,  // witness[0]: 0 = K∩E, 1 = H∩E; witness[1] an element
};

std::string to_string(TrifactDefect d);

struct TrifactViolation {
  TrifactDefect kind;
  std::array<Elem, 2> witness{-1, -1};
  std::string detail;
};

struct TrifactCheck {
  std::optional<TrifactorisedGroup> tuple;
  std::vector<TrifactViolation> violations;
  bool ok() const { return tuple.has_value(); }
};

// Certifies every axiom; the returned tuple carries no provenance.
TrifactCheck validate_trifact(const FiniteGroup& G, std::vector<Elem> K, std::vector<Elem> H,
                              std::vector<Elem> E, const Bounds& bounds = Bounds::active());

// ---------------------------------------------------------------------------
// Constructions from a brace

// G = [K](mul/N) with the quotient acting through lambda; K sits at indices
// {k |E|}, E at {0..|E|-1}, and H = {(c, eta(c))}. K∩H corresponds to N.
// Throws DomainError when N is not normal in (B, *) or not inside ker lambda.
TrifactorisedGroup generalised_trifact(const SkewBrace& B, const std::vector<Elem>& N,
                                       const Bounds& bounds = Bounds::active());

// generalised_trifact with N = {0}: G = [K](B, *) of order |B|^2, and
// additionally K∩H = {0}.
TrifactorisedGroup large_trifact(const SkewBrace& B, const Bounds& bounds = Bounds::active());

// generalised_trifact with N = ker lambda: E is the lambda-image acting
// faithfully, so Cent_E(K) = {0}. For a trivial brace this is (K, K, K, {0})
// on K itself, not a copy.
TrifactorisedGroup small_trifact(const SkewBrace& B, const Bounds& bounds = Bounds::active());

// ---------------------------------------------------------------------------
// Recovery

// The brace on K's member list (re-indexed 0..|K|-1 in sorted order):
// addition is K's own operation, multiplication is
// k1 ⊡ k2 = k1 (e_{k1} k2 e_{k1}^{-1}) with e_{k1} the E-part of sigma^{-1}(k1).
SkewBrace associated_brace(const TrifactorisedGroup& T);

// sigma: H -> K, h -> k_h, with the cocycle
// sigma(h1 h2) = sigma(h1) (e_{h1} sigma(h2) e_{h1}^{-1}) certified.
class DerivationMap {
 public:
  DerivationMap() = default;
  bool valid() const noexcept { return !sigma_.empty(); }

  const TrifactorisedGroup& tuple() const { return tuple_; }
  Elem sigma_of(Elem h) const;      // G-index in K
  Elem sigma_inv_of(Elem k) const;  // G-index in H

 private:
  TrifactorisedGroup tuple_;
  std::vector<Elem> sigma_;      // by G-index, -1 off H
  std::vector<Elem> sigma_inv_;  // by G-index, -1 off K
  friend struct DerivationBuilder;
};

DerivationMap derivation(const TrifactorisedGroup& T);

// eta = pi_E|_H ∘ sigma^{-1} packaged abstractly: the E factor re-indexed to
// 0..|E|-1 (sorted members) and eta as a map from the associated brace's
// multiplicative group. ker eta corresponds to K∩H.
struct EtaDatum {
  SkewBrace brace;              // associated brace of the tuple
  SubgroupSet kernel;           // subgroup of brace.mul(), equals ker eta
  FiniteGroup e_group;          // E re-indexed
  GroupMap eta;                 // brace.mul() -> e_group, surjective
  std::vector<Elem> e_members;  // e_group index -> G-index
};

EtaDatum recover_eta(const TrifactorisedGroup& T);

// ---------------------------------------------------------------------------
// Morphisms

// A homomorphism f: G1 -> G2 with f(K1) <= K2, f(H1) <= H2, f(E1) <= E2.
// Such a map automatically intertwines the derivations:
// sigma2(f(h)) = f(sigma1(h)).
class TrifactMorphism {
 public:
  TrifactMorphism() = default;
  bool valid() const noexcept { return !map_.images().empty(); }

  const TrifactorisedGroup& source() const { return source_; }
  const TrifactorisedGroup& target() const { return target_; }
  const GroupMap& map() const { return map_; }
  Elem operator()(Elem g) const { return map_(g); }

 private:
  TrifactorisedGroup source_, target_;
  GroupMap map_;
  friend struct TrifactMorphismBuilder;
};

struct TrifactMorphCheck {
  std::optional<TrifactMorphism> morphism;
  enum class Defect { None, Shape, NotHomomorphism, KContainment, HContainment, EContainment };
  Defect defect = Defect::None;
  std::array<Elem, 2> witness{-1, -1};
  bool ok() const { return morphism.has_value(); }
};

TrifactMorphCheck is_trifact_morphism(const TrifactorisedGroup& T1, const TrifactorisedGroup& T2,
                                      const std::vector<Elem>& images);

// f restricted to K as a map of associated braces.
BraceMap induced_brace_hom(const TrifactMorphism& m);

// ---------------------------------------------------------------------------
// Lifting

struct LiftResult {
  std::optional<TrifactMorphism> morphism;
  // when lifting fails: an element c of the source brace with eta1(c) = 0 but
  // eta2(f(c)) != 0, i.e. f(ker eta1) is not inside ker eta2
  Elem obstruction = -1;
  bool ok() const { return morphism.has_value(); }
};

// Extends a brace homomorphism f between the associated braces to a
// trifactorised morphism T1 -> T2 via f(k eta1(c)) = f(k) eta2(f(c)), when
// f(ker eta1) <= ker eta2; otherwise reports the obstruction witness.
// f's source and target must table-match the associated braces.
LiftResult lift_brace_hom(const BraceMap& f, const TrifactorisedGroup& T1,
                          const TrifactorisedGroup& T2);

}  // namespace tribrace
