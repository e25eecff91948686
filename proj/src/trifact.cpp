#include "tribrace/trifact.hpp"

#include <algorithm>
#include <cassert>

namespace tribrace {

struct TrifactorisedGroup::Impl {
  FiniteGroup G;
  SubgroupSet K, H, E;
  std::vector<Elem> kpart, epart;  // eager decomposition cache, may be empty
  std::optional<Provenance> prov;
};

struct TrifactBuilder {
  using Impl = TrifactorisedGroup::Impl;
  static std::shared_ptr<Impl> make_impl() { return std::make_shared<Impl>(); }
  static TrifactorisedGroup wrap(std::shared_ptr<const Impl> impl) {
    return TrifactorisedGroup(std::move(impl));
  }
  static TrifactorisedGroup attach(const TrifactorisedGroup& t, Provenance prov) {
    auto impl = std::make_shared<Impl>(*t.impl_);
    impl->prov = std::move(prov);
    return TrifactorisedGroup(std::move(impl));
  }
};

const FiniteGroup& TrifactorisedGroup::group() const { return impl_->G; }
const SubgroupSet& TrifactorisedGroup::k_set() const { return impl_->K; }
const SubgroupSet& TrifactorisedGroup::h_set() const { return impl_->H; }
const SubgroupSet& TrifactorisedGroup::e_set() const { return impl_->E; }
const std::optional<Provenance>& TrifactorisedGroup::provenance() const { return impl_->prov; }

Elem TrifactorisedGroup::k_part(Elem g) const {
  if (!impl_->kpart.empty()) return impl_->kpart[static_cast<size_t>(g)];
  for (Elem e : impl_->E.members()) {
    const Elem k = impl_->G.mul(g, impl_->G.inv(e));
    if (impl_->K.contains(k)) return k;
  }
  throw DomainError("k_part: element does not decompose");
}

Elem TrifactorisedGroup::e_part(Elem g) const {
  if (!impl_->epart.empty()) return impl_->epart[static_cast<size_t>(g)];
  for (Elem e : impl_->E.members())
    if (impl_->K.contains(impl_->G.mul(g, impl_->G.inv(e)))) return e;
  throw DomainError("e_part: element does not decompose");
}

bool TrifactorisedGroup::same_tuple(const TrifactorisedGroup& other) const noexcept {
  return impl_ == other.impl_;
}

bool TrifactorisedGroup::tuple_equal(const TrifactorisedGroup& other) const {
  if (!valid() || !other.valid()) return valid() == other.valid();
  // member lists compare by value: the table comparison already identifies
  // the ambient groups, which may be distinct objects
  return impl_->G.table_equal(other.impl_->G) && impl_->K.members() == other.impl_->K.members() &&
         impl_->H.members() == other.impl_->H.members() &&
         impl_->E.members() == other.impl_->E.members();
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(TrifactDefect d) {
  switch (d) {
    case TrifactDefect::NotSubgroup: return "NotSubgroup";
    case TrifactDefect::KNotNormal: return "KNotNormal";
    case TrifactDefect::FactorisationFails: return "FactorisationFails";
    case TrifactDefect::IntersectionNontrivial: return "IntersectionNontrivial";
  }
  return "?";
}

static const char* factor_name(Elem which) {
  switch (which) {
    case 0: return "K";
    case 1: return "H";
    case 2: return "E";
  }
  return "?";
}

TrifactCheck validate_trifact(const FiniteGroup& G, std::vector<Elem> K, std::vector<Elem> H,
                              std::vector<Elem> E, const Bounds& bounds) {
  if (!G.valid()) throw DomainError("validate_trifact: missing group");
  TrifactCheck ck;
  std::vector<Elem>* sets[3] = {&K, &H, &E};
  for (int i = 0; i < 3; ++i) {
    std::vector<Elem>& S = *sets[i];
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    for (Elem x : S)
      if (x < 0 || x >= G.order())
        throw DomainError(std::string("validate_trifact: index out of range in ") +
                          factor_name(i));
    std::array<Elem, 2> w{-1, -1};
    if (!is_subgroup_set(G, S, &w))
      ck.violations.push_back({TrifactDefect::NotSubgroup,
                               {i, w[0]},
                               std::string(factor_name(i)) + " is not a subgroup"});
  }
  if (!ck.violations.empty()) return ck;

  {
    std::array<Elem, 2> w{-1, -1};
    if (!is_normal_set(G, K, &w))
      ck.violations.push_back({TrifactDefect::KNotNormal, w, "K is not normal in G"});
  }
  const std::pair<const std::vector<Elem>*, const std::vector<Elem>*> prods[3] = {
      {&K, &E}, {&K, &H}, {&H, &E}};
  const char* prod_names[3] = {"KE", "KH", "HE"};
  for (int i = 0; i < 3; ++i) {
    std::vector<Elem> p = product_set(G, *prods[i].first, *prods[i].second);
    if (static_cast<int>(p.size()) != G.order())
      ck.violations.push_back({TrifactDefect::FactorisationFails,
                               {i, static_cast<Elem>(p.size())},
                               std::string(prod_names[i]) + " covers only " +
                                   std::to_string(p.size()) + " of " +
                                   std::to_string(G.order()) + " elements"});
  }
  const std::pair<const std::vector<Elem>*, const std::vector<Elem>*> inters[2] = {{&K, &E},
                                                                                   {&H, &E}};
  const char* inter_names[2] = {"K∩E", "H∩E"};
  for (int i = 0; i < 2; ++i) {
    std::vector<Elem> x = intersection(*inters[i].first, *inters[i].second);
    if (x.size() != 1 || x[0] != FiniteGroup::identity) {
      Elem witness = -1;
      for (Elem v : x)
        if (v != FiniteGroup::identity) {
          witness = v;
          break;
        }
      ck.violations.push_back({TrifactDefect::IntersectionNontrivial,
                               {i, witness},
                               std::string(inter_names[i]) + " has " +
                                   std::to_string(x.size()) + " elements"});
    }
  }
  if (!ck.violations.empty()) return ck;

  auto impl = TrifactBuilder::make_impl();
  impl->G = G;
  impl->K = SubgroupSet(G, K);
  impl->H = SubgroupSet(G, H);
  impl->E = SubgroupSet(G, E);
  if (G.order() <= bounds.eager_decomposition) {
    impl->kpart.assign(static_cast<size_t>(G.order()), -1);
    impl->epart.assign(static_cast<size_t>(G.order()), -1);
    for (Elem k : K)
      for (Elem e : E) {
        const Elem g = G.mul(k, e);
        assert(impl->kpart[static_cast<size_t>(g)] == -1);
        impl->kpart[static_cast<size_t>(g)] = k;
        impl->epart[static_cast<size_t>(g)] = e;
      }
#ifndef NDEBUG
    for (Elem g = 0; g < G.order(); ++g) assert(impl->kpart[static_cast<size_t>(g)] >= 0);
#endif
  }
  assert(K.size() == H.size());
  ck.tuple = TrifactBuilder::wrap(std::move(impl));
  return ck;
}

// ---------------------------------------------------------------------------
// Constructions

TrifactorisedGroup generalised_trifact(const SkewBrace& B, const std::vector<Elem>& N,
                                       const Bounds& bounds) {
  if (!B.valid()) throw DomainError("generalised_trifact: missing brace");
  SubgroupSet Nsub(B.mul(), N);  // throws if not a subgroup of (B, *)
  std::array<Elem, 2> w{-1, -1};
  if (!is_normal_set(B.mul(), Nsub.members(), &w))
    throw DomainError("generalised_trifact: kernel is not normal in (B, *)");
  LambdaMap lm = lambda_map(B);
  {
    const std::vector<Elem> kerl = lm.kernel();
    if (!subset_of(Nsub.members(), kerl))
      throw DomainError("generalised_trifact: kernel is not inside ker lambda");
  }

  QuotientResult qr = quotient_group(B.mul(), Nsub);
  const int m = qr.quotient.order();
  std::vector<std::vector<Elem>> action;
  action.reserve(static_cast<size_t>(m));
  for (Elem e = 0; e < m; ++e) action.push_back(lm.perm(qr.reps[static_cast<size_t>(e)]));
  FiniteGroup G = semidirect_product(B.add(), qr.quotient, action);

  const int n = B.order();
  std::vector<Elem> K, H, E;
  K.reserve(static_cast<size_t>(n));
  H.reserve(static_cast<size_t>(n));
  E.reserve(static_cast<size_t>(m));
  for (Elem k = 0; k < n; ++k) K.push_back(k * m);
  for (Elem c = 0; c < n; ++c) H.push_back(c * m + qr.projection(c));
  for (Elem e = 0; e < m; ++e) E.push_back(e);

  TrifactCheck ck = validate_trifact(G, K, H, E, bounds);
  if (!ck.ok()) throw DomainError("generalised_trifact: construction failed validation");
  return TrifactBuilder::attach(*ck.tuple, Provenance{B, Nsub.members()});
}

TrifactorisedGroup large_trifact(const SkewBrace& B, const Bounds& bounds) {
  return generalised_trifact(B, {FiniteGroup::identity}, bounds);
}

TrifactorisedGroup small_trifact(const SkewBrace& B, const Bounds& bounds) {
  if (!B.valid()) throw DomainError("small_trifact: missing brace");
  if (B.is_trivial()) {
    // lambda is trivial, the tuple collapses onto the additive group itself
    const FiniteGroup& G = B.add();
    std::vector<Elem> all(static_cast<size_t>(G.order()));
    for (Elem g = 0; g < G.order(); ++g) all[static_cast<size_t>(g)] = g;
    TrifactCheck ck = validate_trifact(G, all, all, {FiniteGroup::identity}, bounds);
    assert(ck.ok());
    return TrifactBuilder::attach(*ck.tuple, Provenance{B, all});
  }
  TrifactorisedGroup T = generalised_trifact(B, lambda_map(B).kernel(), bounds);
#ifndef NDEBUG
  const std::vector<Elem> cent =
      centralizer_in(T.group(), T.e_set().members(), T.k_set().members());
  assert(cent.size() == 1 && cent[0] == FiniteGroup::identity);
#endif
  return T;
}

// ---------------------------------------------------------------------------
// Recovery

SkewBrace associated_brace(const TrifactorisedGroup& T) {
  if (!T.valid()) throw DomainError("associated_brace: missing tuple");
  const FiniteGroup& G = T.group();
  const std::vector<Elem>& km = T.k_set().members();
  const int n = static_cast<int>(km.size());
  std::vector<Elem> pos(static_cast<size_t>(G.order()), -1);
  for (Elem i = 0; i < n; ++i) pos[static_cast<size_t>(km[static_cast<size_t>(i)])] = i;

  // sigma^{-1}: K -> H through the decomposition of H's members
  std::vector<Elem> sigma_inv(static_cast<size_t>(G.order()), -1);
  for (Elem h : T.h_set().members()) {
    const Elem k = T.k_part(h);
    assert(sigma_inv[static_cast<size_t>(k)] == -1);
    sigma_inv[static_cast<size_t>(k)] = h;
  }

  std::vector<std::vector<Elem>> add(static_cast<size_t>(n),
                                     std::vector<Elem>(static_cast<size_t>(n)));
  std::vector<std::vector<Elem>> mul = add;
  for (Elem i = 0; i < n; ++i) {
    const Elem k1 = km[static_cast<size_t>(i)];
    const Elem e1 = T.e_part(sigma_inv[static_cast<size_t>(k1)]);
    for (Elem j = 0; j < n; ++j) {
      const Elem k2 = km[static_cast<size_t>(j)];
      add[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          pos[static_cast<size_t>(G.mul(k1, k2))];
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          pos[static_cast<size_t>(G.mul(k1, G.conj(e1, k2)))];
    }
  }
  BraceCheck ck = validate_brace(add, mul);
  if (!ck.ok()) throw DomainError("associated_brace: recovered tables fail the brace law");
  return *ck.brace;
}

Elem DerivationMap::sigma_of(Elem h) const {
  const Elem k = sigma_[static_cast<size_t>(h)];
  if (k < 0) throw DomainError("sigma_of: element not in H");
  return k;
}

Elem DerivationMap::sigma_inv_of(Elem k) const {
  const Elem h = sigma_inv_[static_cast<size_t>(k)];
  if (h < 0) throw DomainError("sigma_inv_of: element not in K");
  return h;
}

struct DerivationBuilder {
  static DerivationMap make(TrifactorisedGroup t, std::vector<Elem> sigma,
                            std::vector<Elem> sigma_inv) {
    DerivationMap d;
    d.tuple_ = std::move(t);
    d.sigma_ = std::move(sigma);
    d.sigma_inv_ = std::move(sigma_inv);
    return d;
  }
};

DerivationMap derivation(const TrifactorisedGroup& T) {
  if (!T.valid()) throw DomainError("derivation: missing tuple");
  const FiniteGroup& G = T.group();
  std::vector<Elem> sigma(static_cast<size_t>(G.order()), -1);
  std::vector<Elem> sigma_inv(static_cast<size_t>(G.order()), -1);
  for (Elem h : T.h_set().members()) {
    const Elem k = T.k_part(h);
    if (sigma_inv[static_cast<size_t>(k)] != -1)
      throw DomainError("derivation: sigma is not injective");
    sigma[static_cast<size_t>(h)] = k;
    sigma_inv[static_cast<size_t>(k)] = h;
  }
  for (Elem k : T.k_set().members())
    if (sigma_inv[static_cast<size_t>(k)] < 0)
      throw DomainError("derivation: sigma is not surjective");
  // cocycle: sigma(h1 h2) = sigma(h1) (e_{h1} sigma(h2) e_{h1}^{-1})
  for (Elem h1 : T.h_set().members()) {
    const Elem e1 = T.e_part(h1);
    for (Elem h2 : T.h_set().members()) {
      const Elem lhs = sigma[static_cast<size_t>(G.mul(h1, h2))];
      const Elem rhs = G.mul(sigma[static_cast<size_t>(h1)],
                             G.conj(e1, sigma[static_cast<size_t>(h2)]));
      if (lhs != rhs) throw DomainError("derivation: cocycle fails");
    }
  }
  return DerivationBuilder::make(T, std::move(sigma), std::move(sigma_inv));
}

EtaDatum recover_eta(const TrifactorisedGroup& T) {
  SkewBrace B = associated_brace(T);
  DerivationMap d = derivation(T);
  const FiniteGroup& G = T.group();
  const std::vector<Elem>& km = T.k_set().members();
  const std::vector<Elem>& em = T.e_set().members();
  const int n = static_cast<int>(km.size());
  const int m = static_cast<int>(em.size());

  std::vector<Elem> epos(static_cast<size_t>(G.order()), -1);
  for (Elem i = 0; i < m; ++i) epos[static_cast<size_t>(em[static_cast<size_t>(i)])] = i;
  std::vector<std::vector<Elem>> etable(static_cast<size_t>(m),
                                        std::vector<Elem>(static_cast<size_t>(m)));
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      const Elem p = G.mul(em[static_cast<size_t>(a)], em[static_cast<size_t>(b)]);
      assert(epos[static_cast<size_t>(p)] >= 0);
      etable[static_cast<size_t>(a)][static_cast<size_t>(b)] = epos[static_cast<size_t>(p)];
    }
  GroupCheck eck = validate_group(etable);
  if (!eck.ok()) throw DomainError("recover_eta: E factor failed validation");

  std::vector<Elem> images(static_cast<size_t>(n));
  for (Elem c = 0; c < n; ++c) {
    const Elem h = d.sigma_inv_of(km[static_cast<size_t>(c)]);
    images[static_cast<size_t>(c)] = epos[static_cast<size_t>(T.e_part(h))];
  }
  GroupMap eta(B.mul(), *eck.group, images);
  if (!eta.surjective()) throw DomainError("recover_eta: eta is not surjective");
  SubgroupSet kernel(B.mul(), eta.kernel());
  assert(subset_of(kernel.members(), lambda_map(B).kernel()));
  return EtaDatum{std::move(B), std::move(kernel), *eck.group, std::move(eta),
                  em};
}

// ---------------------------------------------------------------------------
// Morphisms

struct TrifactMorphismBuilder {
  static TrifactMorphism make(TrifactorisedGroup s, TrifactorisedGroup t, GroupMap f) {
    TrifactMorphism m;
    m.source_ = std::move(s);
    m.target_ = std::move(t);
    m.map_ = std::move(f);
    return m;
  }
};

TrifactMorphCheck is_trifact_morphism(const TrifactorisedGroup& T1, const TrifactorisedGroup& T2,
                                      const std::vector<Elem>& images) {
  if (!T1.valid() || !T2.valid()) throw DomainError("is_trifact_morphism: missing tuple");
  TrifactMorphCheck ck;
  if (static_cast<int>(images.size()) != T1.group().order()) {
    ck.defect = TrifactMorphCheck::Defect::Shape;
    return ck;
  }
  for (Elem v : images)
    if (v < 0 || v >= T2.group().order()) {
      ck.defect = TrifactMorphCheck::Defect::Shape;
      return ck;
    }
  std::array<Elem, 2> w{-1, -1};
  std::optional<GroupMap> f = GroupMap::try_make(T1.group(), T2.group(), images, &w);
  if (!f) {
    ck.defect = TrifactMorphCheck::Defect::NotHomomorphism;
    ck.witness = w;
    return ck;
  }
  const struct {
    const SubgroupSet& src;
    const SubgroupSet& dst;
    TrifactMorphCheck::Defect defect;
  } parts[3] = {{T1.k_set(), T2.k_set(), TrifactMorphCheck::Defect::KContainment},
                {T1.h_set(), T2.h_set(), TrifactMorphCheck::Defect::HContainment},
                {T1.e_set(), T2.e_set(), TrifactMorphCheck::Defect::EContainment}};
  for (const auto& p : parts)
    for (Elem x : p.src.members())
      if (!p.dst.contains(images[static_cast<size_t>(x)])) {
        ck.defect = p.defect;
        ck.witness = {x, images[static_cast<size_t>(x)]};
        return ck;
      }
#ifndef NDEBUG
  // the derivations intertwine: sigma2(f(h)) = f(sigma1(h))
  for (Elem h : T1.h_set().members())
    assert(T2.k_part(images[static_cast<size_t>(h)]) ==
           images[static_cast<size_t>(T1.k_part(h))]);
#endif
  ck.morphism = TrifactMorphismBuilder::make(T1, T2, std::move(*f));
  return ck;
}

BraceMap induced_brace_hom(const TrifactMorphism& m) {
  if (!m.valid()) throw DomainError("induced_brace_hom: missing morphism");
  SkewBrace B1 = associated_brace(m.source());
  SkewBrace B2 = associated_brace(m.target());
  const std::vector<Elem>& km1 = m.source().k_set().members();
  const std::vector<Elem>& km2 = m.target().k_set().members();
  std::vector<Elem> pos2(static_cast<size_t>(m.target().group().order()), -1);
  for (size_t i = 0; i < km2.size(); ++i) pos2[static_cast<size_t>(km2[i])] = static_cast<Elem>(i);

  std::vector<Elem> images(km1.size());
  for (size_t i = 0; i < km1.size(); ++i) {
    const Elem y = m(km1[i]);
    assert(pos2[static_cast<size_t>(y)] >= 0);
    images[i] = pos2[static_cast<size_t>(y)];
  }
  BraceHomCheck ck = is_brace_hom(B1, B2, images);
  if (!ck.ok()) throw DomainError("induced_brace_hom: restriction violates a brace law");
  return *ck.map;
}

// ---------------------------------------------------------------------------
// Lifting

LiftResult lift_brace_hom(const BraceMap& f, const TrifactorisedGroup& T1,
                          const TrifactorisedGroup& T2) {
  if (!f.valid()) throw DomainError("lift_brace_hom: missing brace map");
  if (!T1.valid() || !T2.valid()) throw DomainError("lift_brace_hom: missing tuple");
  EtaDatum d1 = recover_eta(T1);
  EtaDatum d2 = recover_eta(T2);
  if (!f.source().table_equal(d1.brace))
    throw DomainError("lift_brace_hom: map source does not match the first tuple's brace");
  if (!f.target().table_equal(d2.brace))
    throw DomainError("lift_brace_hom: map target does not match the second tuple's brace");

  LiftResult out;
  for (Elem c : d1.kernel.members())
    if (!d2.kernel.contains(f(c))) {
      out.obstruction = c;
      return out;
    }

  const FiniteGroup& G1 = T1.group();
  const FiniteGroup& G2 = T2.group();
  const std::vector<Elem>& km1 = T1.k_set().members();
  const std::vector<Elem>& km2 = T2.k_set().members();
  const int n1 = static_cast<int>(km1.size());
  std::vector<Elem> pos1(static_cast<size_t>(G1.order()), -1);
  for (Elem i = 0; i < n1; ++i) pos1[static_cast<size_t>(km1[static_cast<size_t>(i)])] = i;

  // least brace preimage of each E1 member under eta1, as a G1-index table
  DerivationMap s1 = derivation(T1);
  DerivationMap s2 = derivation(T2);
  std::vector<Elem> least_pre(static_cast<size_t>(G1.order()), -1);
  for (Elem c = 0; c < n1; ++c) {
    const Elem e = T1.e_part(s1.sigma_inv_of(km1[static_cast<size_t>(c)]));
    if (least_pre[static_cast<size_t>(e)] < 0) least_pre[static_cast<size_t>(e)] = c;
  }

  // fbar(k eta1(c)) = f(k) eta2(f(c))
  std::vector<Elem> images(static_cast<size_t>(G1.order()));
  for (Elem g = 0; g < G1.order(); ++g) {
    const Elem k = T1.k_part(g);
    const Elem e = T1.e_part(g);
    const Elem c = least_pre[static_cast<size_t>(e)];
    const Elem fk = km2[static_cast<size_t>(f(pos1[static_cast<size_t>(k)]))];
    const Elem fe = T2.e_part(s2.sigma_inv_of(km2[static_cast<size_t>(f(c))]));
    images[static_cast<size_t>(g)] = G2.mul(fk, fe);
  }
  TrifactMorphCheck ck = is_trifact_morphism(T1, T2, images);
  if (!ck.ok()) throw DomainError("lift_brace_hom: lifted map failed certification");
#ifndef NDEBUG
  {
    BraceMap back = induced_brace_hom(*ck.morphism);
    assert(back.images() == f.images());
  }
#endif
  out.morphism = std::move(ck.morphism);
  return out;
}

}  // namespace tribrace
