#include "tribrace/substructure.hpp"

#include <algorithm>
#include <cassert>

#include "tribrace/errors.hpp"

namespace tribrace {

namespace {

std::vector<Elem> canon_subset(const TrifactorisedGroup& T, std::vector<Elem> L,
                               const std::vector<Elem>& ambient, const char* ambient_name) {
  std::sort(L.begin(), L.end());
  L.erase(std::unique(L.begin(), L.end()), L.end());
  if (!L.empty() && (L.front() < 0 || L.back() >= T.group().order()))
    throw DomainError(std::string("subset of ") + ambient_name + " has out-of-range members");
  for (Elem x : L)
    if (!set_contains(ambient, x))
      throw DomainError("element " + std::to_string(x) + " is not in " + ambient_name);
  return L;
}

// all c in C satisfy c A c^-1 = A; witness gets the first escaping pair
bool normalised_by(const FiniteGroup& G, std::span<const Elem> A, std::span<const Elem> C,
                   std::array<Elem, 2>* witness = nullptr) {
  for (Elem c : C)
    for (Elem a : A)
      if (!set_contains(A, G.conj(c, a))) {
        if (witness) *witness = {c, a};
        return false;
      }
  return true;
}

std::vector<Elem> positions_in(const std::vector<Elem>& members, std::span<const Elem> S) {
  std::vector<Elem> out;
  out.reserve(S.size());
  for (Elem x : S) {
    const auto it = std::lower_bound(members.begin(), members.end(), x);
    assert(it != members.end() && *it == x);
    out.push_back(static_cast<Elem>(it - members.begin()));
  }
  return out;
}

bool at_least(SubstructureKind k, SubstructureKind floor) {
  return static_cast<int>(k) >= static_cast<int>(floor);
}

}  // namespace

std::vector<Elem> sigma_preimage(const TrifactorisedGroup& T, std::vector<Elem> L) {
  L = canon_subset(T, std::move(L), T.k_set().members(), "K");
  const FiniteGroup& G = T.group();
  std::vector<Elem> out =
      intersection(product_set(G, L, T.e_set().members()), T.h_set().members());
#ifndef NDEBUG
  // agrees with the element-wise preimage under the derivation
  {
    DerivationMap d = derivation(T);
    std::vector<Elem> direct;
    for (Elem h : T.h_set().members())
      if (set_contains(L, d.sigma_of(h))) direct.push_back(h);
    assert(direct == out);
  }
#endif
  return out;
}

std::vector<Elem> sigma_image(const TrifactorisedGroup& T, std::vector<Elem> S) {
  S = canon_subset(T, std::move(S), T.h_set().members(), "H");
  const FiniteGroup& G = T.group();
  std::vector<Elem> out =
      intersection(product_set(G, S, T.e_set().members()), T.k_set().members());
#ifndef NDEBUG
  {
    DerivationMap d = derivation(T);
    std::vector<Elem> direct;
    for (Elem h : S) direct.push_back(d.sigma_of(h));
    std::sort(direct.begin(), direct.end());
    assert(direct == out);
  }
#endif
  return out;
}

std::vector<Elem> pi_e_of_preimage(const TrifactorisedGroup& T, std::vector<Elem> L) {
  L = canon_subset(T, std::move(L), T.k_set().members(), "K");
  const FiniteGroup& G = T.group();
  std::vector<Elem> out = intersection(
      product_set(G, inverse_set(G, L), T.h_set().members()), T.e_set().members());
#ifndef NDEBUG
  // the E-parts of the sigma-preimage, computed independently
  {
    std::vector<Elem> direct;
    for (Elem h : sigma_preimage(T, L)) direct.push_back(T.e_part(h));
    std::sort(direct.begin(), direct.end());
    direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
    assert(direct == out);
  }
#endif
  return out;
}

// ---------------------------------------------------------------------------
// Joint classification

bool SubstructureBattery::agree() const {
  for (const SubstructureCondition& c : conditions)
    if (c.holds != conditions.front().holds) return false;
  return true;
}

bool SubstructureBattery::verdict() const { return conditions.front().holds; }

bool SubstructureReport::consistent() const {
  for (const SubstructureBattery& b : batteries)
    if (!b.agree()) return false;
  return true;
}

SubstructureReport classify_substructure_trifact(const TrifactorisedGroup& T,
                                                 std::vector<Elem> L) {
  L = canon_subset(T, std::move(L), T.k_set().members(), "K");
  const FiniteGroup& G = T.group();
  const std::vector<Elem>& K = T.k_set().members();
  const std::vector<Elem>& H = T.h_set().members();
  const std::vector<Elem>& E = T.e_set().members();

  const std::vector<Elem> LE = product_set(G, L, E);
  const std::vector<Elem> LH = product_set(G, L, H);
  const std::vector<Elem> LEnH = intersection(LE, H);
  const std::vector<Elem> LEnLH = intersection(LE, LH);

  SubstructureReport rep;
  rep.set = L;
  rep.brace_set = positions_in(K, L);
  SkewBrace B = associated_brace(T);
  rep.brace_label = classify_substructure(B, rep.brace_set);
  const SubstructureKind kind = rep.brace_label.kind;

  // primitive group-side facts, evaluated once each
  struct Fact {
    bool holds;
    std::array<Elem, 2> witness{-1, -1};
  };
  auto subgroup_fact = [&](std::span<const Elem> S) {
    Fact f;
    f.holds = is_subgroup_set(G, S, &f.witness);
    return f;
  };
  auto normal_fact = [&](std::span<const Elem> S, std::span<const Elem> conjugators) {
    Fact f;
    f.holds = normalised_by(G, S, conjugators, &f.witness);
    return f;
  };
  const std::vector<Elem> all = [&] {
    std::vector<Elem> v(static_cast<size_t>(G.order()));
    for (Elem g = 0; g < G.order(); ++g) v[static_cast<size_t>(g)] = g;
    return v;
  }();

  const Fact l_sub = subgroup_fact(L);
  const Fact lenh_sub = subgroup_fact(LEnH);
  const Fact lenh_norms_l = normal_fact(L, LEnH);
  const Fact lenlh_sub = subgroup_fact(LEnLH);
  const Fact e_norms_l = normal_fact(L, E);
  const Fact le_sub = subgroup_fact(LE);
  const Fact l_normal = normal_fact(L, all);
  const Fact lenh_normal_h = normal_fact(LEnH, H);
  const Fact lenlh_normal = normal_fact(LEnLH, all);

  auto joint = [](std::string name, std::initializer_list<const Fact*> facts) {
    SubstructureCondition c;
    c.name = std::move(name);
    c.holds = true;
    for (const Fact* f : facts)
      if (!f->holds) {
        c.holds = false;
        c.witness = f->witness;
        break;
      }
    return c;
  };
  auto brace_side = [&](std::string name, bool holds) {
    SubstructureCondition c;
    c.name = std::move(name);
    c.holds = holds;
    return c;
  };

  rep.batteries[0] = SubstructureBattery{
      "subbrace",
      {brace_side("closed under both brace operations", at_least(kind, SubstructureKind::Subbrace)),
       joint("L subgroup of K with LE n H a subgroup of H", {&l_sub, &lenh_sub}),
       joint("L subgroup of K normalised by the subgroup LE n H",
             {&l_sub, &lenh_sub, &lenh_norms_l}),
       joint("LE n LH is a subgroup of G", {&lenlh_sub})}};
  rep.batteries[1] = SubstructureBattery{
      "left ideal",
      {brace_side("stable under every lambda map", at_least(kind, SubstructureKind::LeftIdeal)),
       joint("L subgroup of K normalised by E", {&l_sub, &e_norms_l}),
       joint("LE is a subgroup of G", {&le_sub})}};
  rep.batteries[2] = SubstructureBattery{
      "strong left ideal",
      {brace_side("additionally normal in the additive group",
                  at_least(kind, SubstructureKind::StrongLeftIdeal)),
       joint("L is a normal subgroup of G", {&l_sub, &l_normal})}};
  rep.batteries[3] = SubstructureBattery{
      "ideal",
      {brace_side("additionally normal in the multiplicative group",
                  at_least(kind, SubstructureKind::Ideal)),
       joint("L normal in G with LE n H normal in H",
             {&l_sub, &l_normal, &lenh_sub, &lenh_normal_h}),
       joint("LE n LH is a normal subgroup of G", {&lenlh_sub, &lenlh_normal})}};
  return rep;
}

// ---------------------------------------------------------------------------
// Sub-tuples

EmbeddedTuple subbrace_trifact(const TrifactorisedGroup& T, std::vector<Elem> L) {
  L = canon_subset(T, std::move(L), T.k_set().members(), "K");
  const FiniteGroup& G = T.group();
  const std::vector<Elem>& H = T.h_set().members();
  const std::vector<Elem>& E = T.e_set().members();

  SubstructureReport rep = classify_substructure_trifact(T, L);
  assert(rep.consistent());
  if (!at_least(rep.brace_label.kind, SubstructureKind::Subbrace))
    throw DomainError("the set is not a subbrace of the associated brace");

  const std::vector<Elem> LE = product_set(G, L, E);
  const std::vector<Elem> LH = product_set(G, L, H);
  const std::vector<Elem> members = intersection(LE, LH);
  // T = L(LE n H) by the modular law, with L inside LE
  assert(dedekind_identity_holds(G, L, H, LE));

  FiniteGroup sub = subgroup_as_group(G, members);
  TrifactCheck ck = validate_trifact(sub, positions_in(members, L),
                                     positions_in(members, intersection(LE, H)),
                                     positions_in(members, intersection(LH, E)));
  if (!ck.ok())
    throw DomainError("sub-tuple of a subbrace failed validation: " + ck.violations[0].detail);
  return EmbeddedTuple{*ck.tuple, members};
}

TrifactSubgroupCheck is_trifact_subgroup(const TrifactorisedGroup& T, std::vector<Elem> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  const FiniteGroup& G = T.group();
  if (S.empty() || S.front() < 0 || S.back() >= G.order())
    throw DomainError("subgroup members out of range");
  std::array<Elem, 2> w{-1, -1};
  if (!is_subgroup_set(G, S, &w))
    throw DomainError("not a subgroup: witness " + std::to_string(w[0]) + ", " +
                      std::to_string(w[1]));

  const std::vector<Elem> SnK = intersection(S, T.k_set().members());
  const std::vector<Elem> SnH = intersection(S, T.h_set().members());
  const std::vector<Elem> SnE = intersection(S, T.e_set().members());

  TrifactSubgroupCheck out;
  out.expected = intersection(product_set(G, SnK, T.e_set().members()),
                              product_set(G, SnK, T.h_set().members()));
  out.holds = (out.expected == S);
  if (!out.holds) return out;

  FiniteGroup sub = subgroup_as_group(G, S);
  TrifactCheck ck = validate_trifact(sub, positions_in(S, SnK), positions_in(S, SnH),
                                     positions_in(S, SnE));
  if (!ck.ok())
    throw DomainError("factorised subgroup failed tuple validation: " +
                      ck.violations[0].detail);

  // its derivation is sigma restricted to S n H
  DerivationMap ds = derivation(*ck.tuple);
  DerivationMap dt = derivation(T);
  out.derivation_restricts = true;
  for (Elem h : SnH) {
    const Elem p = positions_in(S, std::vector<Elem>{h})[0];
    if (S[static_cast<size_t>(ds.sigma_of(p))] != dt.sigma_of(h)) {
      out.derivation_restricts = false;
      break;
    }
  }
  out.tuple = EmbeddedTuple{*ck.tuple, S};
  return out;
}

// ---------------------------------------------------------------------------
// The subbrace correspondence

SubbraceBijection subbrace_bijection(const TrifactorisedGroup& T, const Bounds& bounds) {
  const FiniteGroup& G = T.group();
  if (G.order() > bounds.subgroup_search)
    throw BoundExceeded("subbrace correspondence needs all subgroups of a group of order " +
                        std::to_string(G.order()) + ", bound is " +
                        std::to_string(bounds.subgroup_search));
  const std::vector<Elem>& K = T.k_set().members();
  const std::vector<Elem>& H = T.h_set().members();
  const std::vector<Elem>& E = T.e_set().members();
  SkewBrace B = associated_brace(T);

  SubbraceBijection out;
  std::vector<std::vector<Elem>> images;
  for (const SubgroupSet& L : all_subgroups(B.add(), bounds)) {
    const SubstructureClass cls = classify_substructure(B, L.members());
    if (!at_least(cls.kind, SubstructureKind::Subbrace)) continue;
    std::vector<Elem> LG;
    LG.reserve(L.members().size());
    for (Elem p : L.members()) LG.push_back(K[static_cast<size_t>(p)]);
    std::sort(LG.begin(), LG.end());
    SubbraceBijection::Pair pair;
    pair.subbrace = L.members();
    pair.subgroup = intersection(product_set(G, LG, H), product_set(G, LG, E));
    pair.ideal = (cls.kind == SubstructureKind::Ideal);
    pair.normal = is_normal_set(G, pair.subgroup);
    images.push_back(pair.subgroup);
    out.pairs.push_back(std::move(pair));
  }

  std::vector<std::vector<Elem>> targets;
  for (const SubgroupSet& S : all_subgroups(G, bounds))
    if (is_trifact_subgroup(T, S.members()).holds) targets.push_back(S.members());
  out.trifact_subgroup_count = static_cast<int>(targets.size());

  std::sort(images.begin(), images.end());
  const bool injective =
      std::adjacent_find(images.begin(), images.end()) == images.end();
  out.bijective = injective && images == targets;

  out.ideals_match_normals = true;
  for (const SubbraceBijection::Pair& p : out.pairs)
    if (p.ideal != p.normal) {
      out.ideals_match_normals = false;
      break;
    }
  return out;
}

}  // namespace tribrace
