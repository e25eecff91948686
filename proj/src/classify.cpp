#include "tribrace/classify.hpp"

#include <algorithm>
#include <cassert>

namespace tribrace {

int OmegaSet::index_of(const std::vector<Elem>& N) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == N) return static_cast<int>(i);
  return -1;
}

OmegaSet omega(const SkewBrace& B, const Bounds& bounds) {
  if (!B.valid()) throw DomainError("omega: missing brace");
  OmegaSet out;
  out.brace = B;
  const std::vector<Elem> kl = ker_lambda(B).members();
  for (const SubgroupSet& N : normal_subgroups(B.mul(), bounds))
    if (subset_of(N.members(), kl)) out.members.push_back(N.members());
  // normal_subgroups is lexicographically sorted, so the filtered list is too
  assert(!out.members.empty() && out.members.front() == std::vector<Elem>{0});
  assert(out.index_of(kl) >= 0);
  return out;
}

int OrbitPartition::orbit_of(int member) const {
  for (size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].begin(), orbits[i].end(), member)) return static_cast<int>(i);
  return -1;
}

OrbitPartition aut_orbits(const SkewBrace& B, const Bounds& bounds) {
  OrbitPartition out;
  out.omega = omega(B, bounds);
  const std::vector<BraceMap> auts = brace_automorphisms(B, bounds);
  out.aut_order = static_cast<std::int64_t>(auts.size());

  const int n = static_cast<int>(out.omega.members.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    std::vector<int> orbit = {root};
    seen[static_cast<size_t>(root)] = true;
    for (size_t cur = 0; cur < orbit.size(); ++cur) {
      for (const BraceMap& f : auts) {
        std::vector<Elem> img =
            f.image_of(out.omega.members[static_cast<size_t>(orbit[cur])]);
        std::sort(img.begin(), img.end());
        const int at = out.omega.index_of(img);
        // automorphisms preserve admissibility
        if (at < 0) throw DomainError("aut_orbits: automorphism left the kernel set");
        if (!seen[static_cast<size_t>(at)]) {
          seen[static_cast<size_t>(at)] = true;
          orbit.push_back(at);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(orbit.front());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

std::string to_string(TupleKind k) {
  switch (k) {
    case TupleKind::Large: return "large";
    case TupleKind::Small: return "small";
    case TupleKind::Intermediate: return "intermediate";
  }
  return "?";
}

KindCertificate identify_kind(const TrifactorisedGroup& T) {
  if (!T.valid()) throw DomainError("identify_kind: missing tuple");
  EtaDatum d = recover_eta(T);
  KindCertificate out;
  out.ker_eta = d.kernel.members();
  out.ker_lambda = ker_lambda(d.brace).members();
  out.is_large = out.ker_eta == std::vector<Elem>{0};
  out.is_small = out.ker_eta == out.ker_lambda;
  out.kind = out.is_large  ? TupleKind::Large
             : out.is_small ? TupleKind::Small
                            : TupleKind::Intermediate;
  return out;
}

Classification iso_classes(const SkewBrace& B, bool certify, const Bounds& bounds) {
  Classification out;
  out.orbits = aut_orbits(B, bounds);
  const OmegaSet& om = out.orbits.omega;
  const std::vector<BraceMap> auts = brace_automorphisms(B, bounds);

  const int n = static_cast<int>(om.members.size());
  std::vector<TrifactorisedGroup> tuples(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m)
    tuples[static_cast<size_t>(m)] = generalised_trifact(B, om.members[static_cast<size_t>(m)], bounds);

  for (size_t o = 0; o < out.orbits.orbits.size(); ++o) {
    const int rep = out.orbits.representatives[o];
    IsoClass cls;
    cls.orbit = static_cast<int>(o);
    cls.kernel = om.members[static_cast<size_t>(rep)];
    cls.tuple = tuples[static_cast<size_t>(rep)];
    cls.kind = identify_kind(cls.tuple).kind;
    out.classes.push_back(std::move(cls));
  }

  // orbit soundness: exhibit the isomorphism behind every orbit membership
  for (int m = 0; m < n; ++m) {
    MemberLink link;
    link.member = m;
    link.orbit = out.orbits.orbit_of(m);
    link.representative = out.orbits.representatives[static_cast<size_t>(link.orbit)];
    const std::vector<Elem>& from = om.members[static_cast<size_t>(link.representative)];
    const std::vector<Elem>& to = om.members[static_cast<size_t>(m)];
    for (const BraceMap& f : auts) {
      std::vector<Elem> img = f.image_of(from);
      std::sort(img.begin(), img.end());
      if (img == to) {
        link.aut = f;
        break;
      }
    }
    if (!link.aut.valid()) throw DomainError("iso_classes: orbit without a connecting automorphism");
    LiftResult lr = lift_brace_hom(link.aut, tuples[static_cast<size_t>(link.representative)],
                                   tuples[static_cast<size_t>(m)]);
    if (!lr.ok() || !lr.morphism->map().bijective())
      throw DomainError("iso_classes: lifted automorphism is not a tuple isomorphism");
    link.iso = *lr.morphism;
    out.links.push_back(std::move(link));
  }

  if (certify) {
    for (size_t i = 0; i < out.classes.size(); ++i)
      for (size_t j = i + 1; j < out.classes.size(); ++j) {
        const TrifactorisedGroup& a = out.classes[i].tuple;
        const TrifactorisedGroup& b = out.classes[j].tuple;
        SearchStats stats;
        std::optional<GroupMap> hit = constrained_isomorphism(
            a.group(), b.group(),
            {{a.k_set().members(), b.k_set().members()},
             {a.h_set().members(), b.h_set().members()},
             {a.e_set().members(), b.e_set().members()}},
            bounds, &stats);
        out.search_nodes += stats.nodes;
        if (hit.has_value())
          throw DomainError("iso_classes: distinct orbits produced isomorphic tuples");
        if (a.group().order() == b.group().order() && !stats.exhausted)
          throw BoundExceeded("iso_classes: isomorphism search not exhausted");
      }
    out.certified = true;
  }
  return out;
}

}  // namespace tribrace
