#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tribrace/brace.hpp"
#include "tribrace/trifact.hpp"

namespace tribrace {

// Admissible kernels: the normal subgroups of (B, *) inside ker lambda.
// Every tuple associated with B is isomorphic to the one built from some
// member, so this list parametrises them all. Members sorted
// lexicographically; {0} and ker lambda always appear.
struct OmegaSet {
  SkewBrace brace;
  std::vector<std::vector<Elem>> members;
  int index_of(const std::vector<Elem>& N) const;  // -1 when absent
};

OmegaSet omega(const SkewBrace& B, const Bounds& bounds = Bounds::active());

// Brace automorphisms act on the admissible kernels by taking images; the
// orbits correspond to the isomorphism classes of the associated tuples.
struct OrbitPartition {
  OmegaSet omega;
  std::vector<std::vector<int>> orbits;  // member indices, sorted, ordered by least
  std::vector<int> representatives;      // least member index per orbit
  std::int64_t aut_order = 0;
  int orbit_of(int member) const;  // -1 when out of range
};

OrbitPartition aut_orbits(const SkewBrace& B, const Bounds& bounds = Bounds::active());

// Where a tuple sits in the family of its brace: the biggest one has
// K∩H = 1, the smallest has ker eta = ker lambda, anything else is strictly
// between. When ker lambda is trivial the two coincide; both flags are set
// and the single label prefers Large.
enum class TupleKind { Large, Small, Intermediate };

std::string to_string(TupleKind k);

struct KindCertificate {
  TupleKind kind = TupleKind::Intermediate;
  bool is_large = false;
  bool is_small = false;
  std::vector<Elem> ker_eta;     // brace indices
  std::vector<Elem> ker_lambda;  // brace indices
};

KindCertificate identify_kind(const TrifactorisedGroup& T);

struct IsoClass {
  int orbit = -1;
  std::vector<Elem> kernel;  // the orbit representative
  TrifactorisedGroup tuple;  // built from that kernel
  TupleKind kind = TupleKind::Intermediate;
};

// How each kernel's tuple is identified with its class representative: a
// brace automorphism carrying the representative kernel onto this one, and
// its lift, a tuple isomorphism.
struct MemberLink {
  int member = -1;
  int orbit = -1;
  int representative = -1;  // member index
  BraceMap aut;
  TrifactMorphism iso;  // bijective, representative tuple -> member tuple
};

struct Classification {
  OrbitPartition orbits;
  std::vector<IsoClass> classes;  // one per orbit, in orbit order
  std::vector<MemberLink> links;  // one per member, in member order
  bool certified = false;         // cross-class searches exhausted
  std::uint64_t search_nodes = 0;
};

// One tuple per orbit. Same-orbit tuples come with explicit isomorphisms;
// with certify set, representatives are proved pairwise non-isomorphic by
// exhaustive constrained search.
Classification iso_classes(const SkewBrace& B, bool certify = false,
                           const Bounds& bounds = Bounds::active());

}  // namespace tribrace
