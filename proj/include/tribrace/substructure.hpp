#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tribrace/brace.hpp"
#include "tribrace/group.hpp"
#include "tribrace/trifact.hpp"

namespace tribrace {

// Derivation images and preimages computed through set products, without
// touching sigma element by element. Inputs and outputs are G indices.

// sigma^{-1}(L) = LE n H for any subset L of K.
std::vector<Elem> sigma_preimage(const TrifactorisedGroup& T, std::vector<Elem> L);

// sigma(S) = SE n K for any subset S of H.
std::vector<Elem> sigma_image(const TrifactorisedGroup& T, std::vector<Elem> S);

// pi_E(sigma^{-1}(L)) = L^{-1}H n E: the E-parts of the preimage.
std::vector<Elem> pi_e_of_preimage(const TrifactorisedGroup& T, std::vector<Elem> L);

// ---------------------------------------------------------------------------
// Joint classification

struct SubstructureCondition {
  std::string name;
  bool holds = false;
  // first violating pair of the first failing scan, when one exists
  std::array<Elem, 2> witness{-1, -1};
};

// One rung of the ladder with every condition equivalent to it. The
// equivalences are theorems about the tuple; agree() reports whether the
// computed booleans actually came out equal.
struct SubstructureBattery {
  std::string level;
  std::vector<SubstructureCondition> conditions;
  bool agree() const;
  bool verdict() const;  // value of the first condition; meaningful when agree()
};

// Classification of a subset L of K from both sides: the brace classifier on
// the associated brace, and the group-side conditions on G. Every condition
// is evaluated, none short-circuits another.
struct SubstructureReport {
  std::vector<Elem> set;        // L, sorted G indices
  std::vector<Elem> brace_set;  // L as positions in the associated brace
  SubstructureClass brace_label;
  std::array<SubstructureBattery, 4> batteries;  // subbrace .. ideal
  bool consistent() const;  // every battery agrees and matches brace_label
};

SubstructureReport classify_substructure_trifact(const TrifactorisedGroup& T,
                                                 std::vector<Elem> L);

// ---------------------------------------------------------------------------
// Sub-tuples

// A tuple living on a subgroup of some ambient group, re-indexed to
// 0..m-1; members maps new indices back to ambient ones.
struct EmbeddedTuple {
  TrifactorisedGroup tuple;
  std::vector<Elem> members;
};

// The tuple (LE n LH, L, LE n H, LH n E) attached to a subbrace L of the
// associated brace, L given as a subset of K in G indices. Its associated
// brace is the subbrace itself. Throws DomainError when L is not a subbrace.
EmbeddedTuple subbrace_trifact(const TrifactorisedGroup& T, std::vector<Elem> L);

struct TrifactSubgroupCheck {
  bool holds = false;
  std::vector<Elem> expected;  // (S n K)E n (S n K)H
  // certified sub-tuple (S, S n K, S n H, S n E) when holds
  std::optional<EmbeddedTuple> tuple;
  bool derivation_restricts = false;  // its derivation is sigma restricted to S n H
};

// S (a subgroup of G, any order) is a trifactorised subgroup exactly when
// S = (S n K)E n (S n K)H. Throws DomainError when S is not a subgroup.
TrifactSubgroupCheck is_trifact_subgroup(const TrifactorisedGroup& T, std::vector<Elem> S);

// ---------------------------------------------------------------------------
// The subbrace correspondence

struct SubbraceBijection {
  struct Pair {
    std::vector<Elem> subbrace;  // brace indices
    std::vector<Elem> subgroup;  // LH n LE, G indices
    bool ideal = false;          // brace-side rung
    bool normal = false;         // subgroup normal in G
  };
  std::vector<Pair> pairs;         // lexicographic in the subbrace member list
  int trifact_subgroup_count = 0;  // among all subgroups of G
  bool bijective = false;          // L -> LH n LE hits each exactly once
  bool ideals_match_normals = false;  // per pair: ideal == normal
};

// Matches every subbrace of the associated brace against every trifactorised
// subgroup of G. Throws BoundExceeded above bounds.subgroup_search.
SubbraceBijection subbrace_bijection(const TrifactorisedGroup& T,
                                     const Bounds& bounds = Bounds::active());

}  // namespace tribrace
