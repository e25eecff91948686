#include "tribrace/quotients.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace tribrace {

namespace {

std::vector<Elem> canon_subset(const FiniteGroup& G, std::vector<Elem> S, const char* who) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  if (S.empty() || S.front() < 0 || S.back() >= G.order())
    throw DomainError(std::string(who) + ": set out of range");
  return S;
}

std::vector<Elem> project_set(const GroupMap& pi, std::span<const Elem> S) {
  std::vector<Elem> out;
  out.reserve(S.size());
  for (Elem x : S) out.push_back(pi(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

QuotientReport quotient_admissible(const TrifactorisedGroup& T, std::vector<Elem> Tn) {
  if (!T.valid()) throw DomainError("quotient_admissible: missing tuple");
  const FiniteGroup& G = T.group();
  Tn = canon_subset(G, std::move(Tn), "quotient_admissible");
  SubgroupSet N(G, Tn);  // rejects non-subgroups
  if (!is_normal(G, N)) throw DomainError("quotient_admissible: subgroup is not normal");

  const std::vector<Elem>& K = T.k_set().members();
  const std::vector<Elem>& H = T.h_set().members();
  const std::vector<Elem>& E = T.e_set().members();
  const std::vector<Elem> TnK = intersection(Tn, K);
  const std::vector<Elem> TnH = intersection(Tn, H);
  const std::vector<Elem> TnE = intersection(Tn, E);

  QuotientReport rep;
  rep.t_members = Tn;
  rep.product_equalities =
      product_set(G, TnK, TnE) == Tn && product_set(G, TnH, TnE) == Tn;
  const std::vector<Elem> inner =
      intersection(product_set(G, TnK, H), product_set(G, TnK, E));
  rep.absorbed_form = product_set(G, inner, TnE) == Tn;

  QuotientResult q = quotient_group(G, N);
  TrifactCheck ck = validate_trifact(q.quotient, project_set(q.projection, K),
                                     project_set(q.projection, H), project_set(q.projection, E));
  rep.quotient_is_tuple = ck.ok();
  assert(rep.agree());

  if (ck.ok()) {
    rep.quotient = *ck.tuple;
    rep.reps = q.reps;
    TrifactMorphCheck mc = is_trifact_morphism(T, *ck.tuple, q.projection.images());
    if (!mc.ok()) throw DomainError("quotient_admissible: projection failed certification");
    rep.projection = *mc.morphism;
  }
  return rep;
}

TupleQuotient quotient_trifact(const TrifactorisedGroup& T, std::vector<Elem> Tn) {
  QuotientReport rep = quotient_admissible(T, std::move(Tn));
  if (!rep.admissible())
    throw DomainError("quotient_trifact: the quotient by this subgroup is not a tuple");

  // the induced derivation is the derivation of the quotient tuple
  const DerivationMap d = derivation(T);
  const DerivationMap dq = derivation(*rep.quotient);
  const GroupMap& pi = rep.projection->map();
  for (Elem h : T.h_set().members())
    if (dq.sigma_of(pi(h)) != pi(d.sigma_of(h)))
      throw DomainError("quotient_trifact: induced derivation mismatch");

  return {*rep.quotient, *rep.projection, rep.reps};
}

IdealQuotient ideal_quotient_tuple(const TrifactorisedGroup& T, std::vector<Elem> I) {
  if (!T.valid()) throw DomainError("ideal_quotient_tuple: missing tuple");
  const SkewBrace B = associated_brace(T);
  I = canon_subset(B.add(), std::move(I), "ideal_quotient_tuple");
  if (classify_substructure(B, I).kind != SubstructureKind::Ideal)
    throw DomainError("ideal_quotient_tuple: the set is not an ideal of the associated brace");

  BraceQuotientResult bq = brace_quotient(B, I);

  const FiniteGroup& G = T.group();
  const std::vector<Elem>& K = T.k_set().members();
  std::vector<Elem> LG;
  LG.reserve(I.size());
  for (Elem x : I) LG.push_back(K[static_cast<size_t>(x)]);
  std::sort(LG.begin(), LG.end());
  const std::vector<Elem> Tn = intersection(product_set(G, LG, T.h_set().members()),
                                            product_set(G, LG, T.e_set().members()));

  TupleQuotient tq = quotient_trifact(T, Tn);
  if (!associated_brace(tq.quotient).table_equal(bq.quotient))
    throw DomainError("ideal_quotient_tuple: quotient brace mismatch");
  if (recover_eta(T).kernel.is_trivial()) {
    // a source with K n H = 1 keeps that in the quotient
    const std::vector<Elem> meet =
        intersection(tq.quotient.k_set().members(), tq.quotient.h_set().members());
    if (meet != std::vector<Elem>{0})
      throw DomainError("ideal_quotient_tuple: K n H = 1 lost in the quotient");
  }
  return {std::move(tq.quotient), std::move(tq.projection), std::move(bq)};
}

bool quotient_stays_small(const TrifactorisedGroup& T, std::vector<Elem> Tn) {
  if (!T.valid()) throw DomainError("quotient_stays_small: missing tuple");
  const FiniteGroup& G = T.group();
  const std::vector<Elem> cent =
      centralizer_in(G, T.e_set().members(), T.k_set().members());
  if (cent != std::vector<Elem>{0})
    throw DomainError("quotient_stays_small: E does not centralise K trivially");

  TupleQuotient tq = quotient_trifact(T, std::move(Tn));
  const std::vector<Elem> cq =
      centralizer_in(tq.quotient.group(), tq.quotient.e_set().members(),
                     tq.quotient.k_set().members());
  return cq == std::vector<Elem>{0};
}

TupleQuotient quotient_by_e_normal(const TrifactorisedGroup& T, std::vector<Elem> Tn) {
  if (!T.valid()) throw DomainError("quotient_by_e_normal: missing tuple");
  const FiniteGroup& G = T.group();
  Tn = canon_subset(G, std::move(Tn), "quotient_by_e_normal");
  if (!subset_of(Tn, T.e_set().members()))
    throw DomainError("quotient_by_e_normal: subgroup is not contained in E");
  SubgroupSet N(G, Tn);
  if (!is_normal(G, N)) throw DomainError("quotient_by_e_normal: subgroup is not normal");

  // Tn n K and Tn n H are trivial, so the product equalities hold outright
  TupleQuotient tq = quotient_trifact(T, std::move(Tn));
  if (!associated_brace(tq.quotient).table_equal(associated_brace(T)))
    throw DomainError("quotient_by_e_normal: associated brace changed");
  return tq;
}

ChainEpimorphism quotient_chain(const SkewBrace& B, std::vector<Elem> N1, std::vector<Elem> N2,
                                const Bounds& bounds) {
  if (!B.valid()) throw DomainError("quotient_chain: missing brace");
  N1 = canon_subset(B.add(), std::move(N1), "quotient_chain");
  N2 = canon_subset(B.add(), std::move(N2), "quotient_chain");
  if (!subset_of(N1, N2)) throw DomainError("quotient_chain: kernels are not nested");

  TrifactorisedGroup T1 = generalised_trifact(B, N1, bounds);
  TrifactorisedGroup T2 = generalised_trifact(B, N2, bounds);

  std::vector<Elem> id(static_cast<size_t>(B.order()));
  std::iota(id.begin(), id.end(), 0);
  BraceHomCheck idc = is_brace_hom(B, B, id);
  if (!idc.ok()) throw DomainError("quotient_chain: identity map rejected");
  LiftResult lr = lift_brace_hom(*idc.map, T1, T2);
  // nested kernels leave no obstruction
  if (!lr.ok()) throw DomainError("quotient_chain: lift failed");

  ChainEpimorphism out;
  out.source = T1;
  out.target = T2;
  out.morphism = *lr.morphism;
  if (!out.morphism.map().surjective())
    throw DomainError("quotient_chain: morphism is not surjective");
  out.kernel = out.morphism.map().kernel();
  out.kernel_in_e = subset_of(out.kernel, T1.e_set().members());
  assert(out.kernel_in_e);
  return out;
}

}  // namespace tribrace
