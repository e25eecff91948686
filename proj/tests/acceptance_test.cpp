// Acceptance gate: eight end-to-end checks over the full enumeration corpus
// (every brace on every group of order <= 8). One PASS/FAIL line each; the
// process exits nonzero when any line fails.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <numeric>
#include <string>
#include <vector>

#include "tribrace/catalog.hpp"
#include "tribrace/classify.hpp"
#include "tribrace/errors.hpp"
#include "tribrace/quotients.hpp"
#include "tribrace/substructure.hpp"

using namespace tribrace;

namespace {

struct CorpusEntry {
  std::string name;
  SkewBrace brace;
  std::vector<std::vector<Elem>> omega;  // admissible kernels, lex sorted
};

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const catalog::NamedGroup& ng : catalog::small_groups_through_8()) {
      const std::vector<SkewBrace> braces = enumerate_braces(ng.group);
      for (size_t i = 0; i < braces.size(); ++i) {
        CorpusEntry e;
        e.name = std::string(ng.name) + "#" + std::to_string(i);
        e.brace = braces[i];
        e.omega = omega(braces[i]).members;
        out.push_back(std::move(e));
      }
    }
    return out;
  }();
  return entries;
}

// subgroups of (B, +) that the brace classifier labels as ideals
std::vector<std::vector<Elem>> ideals_of(const SkewBrace& B) {
  std::vector<std::vector<Elem>> out;
  for (const SubgroupSet& S : all_subgroups(B.add()))
    if (classify_substructure(B, S.members()).kind == SubstructureKind::Ideal)
      out.push_back(S.members());
  return out;
}

std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> factor_constraints(
    const TrifactorisedGroup& A, const TrifactorisedGroup& B) {
  return {{A.k_set().members(), B.k_set().members()},
          {A.h_set().members(), B.h_set().members()},
          {A.e_set().members(), B.e_set().members()}};
}

// ---------------------------------------------------------------------------
// 1. associated_brace inverts generalised_trifact across the whole corpus

std::string criterion1() {
  int tuples = 0;
  for (const CorpusEntry& e : corpus())
    for (const std::vector<Elem>& N : e.omega) {
      TrifactorisedGroup T = generalised_trifact(e.brace, N);
      SkewBrace back = associated_brace(T);
      if (!back.add().table_equal(e.brace.add()) || !back.mul().table_equal(e.brace.mul()))
        throw std::runtime_error(e.name + ": round trip changed the tables");
      ++tuples;
    }
  return std::to_string(corpus().size()) + " braces, " + std::to_string(tuples) +
         " tuples round-trip exactly";
}

// ---------------------------------------------------------------------------
// 2. orbit count == independently counted isomorphism classes

std::string criterion2() {
  std::uint64_t nodes = 0;
  int pairs = 0;
  for (const CorpusEntry& e : corpus()) {
    const size_t m = e.omega.size();
    std::vector<TrifactorisedGroup> tuples;
    tuples.reserve(m);
    for (const std::vector<Elem>& N : e.omega) tuples.push_back(generalised_trifact(e.brace, N));

    // union-find over Omega members, edges found by exhaustive search only
    std::vector<size_t> root(m);
    std::iota(root.begin(), root.end(), size_t{0});
    auto find = [&](size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) {
        if (e.omega[i].size() != e.omega[j].size()) continue;  // tuple orders differ
        if (find(i) == find(j)) continue;
        SearchStats stats;
        auto iso = constrained_isomorphism(tuples[i].group(), tuples[j].group(),
                                           factor_constraints(tuples[i], tuples[j]),
                                           Bounds::active(), &stats);
        nodes += stats.nodes;
        ++pairs;
        if (iso.has_value())
          root[find(j)] = find(i);
        else if (!stats.exhausted)
          throw std::runtime_error(e.name + ": isomorphism search not exhausted");
      }
    size_t independent = 0;
    for (size_t i = 0; i < m; ++i)
      if (find(i) == i) ++independent;

    const OrbitPartition orbits = aut_orbits(e.brace);
    if (orbits.orbits.size() != independent)
      throw std::runtime_error(e.name + ": " + std::to_string(orbits.orbits.size()) +
                               " orbits vs " + std::to_string(independent) + " classes");
  }
  return "orbit counts match exhaustive search on every brace (" + std::to_string(pairs) +
         " pair searches, " + std::to_string(nodes) + " nodes)";
}

// ---------------------------------------------------------------------------
// 3. the Klein four-group worked example

std::string criterion3() {
  SkewBrace B = trivial_brace(catalog::klein4());
  Classification cls = iso_classes(B, true);
  if (cls.orbits.omega.members.size() != 5) throw std::runtime_error("|Omega| != 5");
  if (cls.orbits.orbits.size() != 3) throw std::runtime_error("orbit count != 3");
  if (cls.classes.size() != 3) throw std::runtime_error("class count != 3");
  std::vector<int> orders;
  for (const IsoClass& c : cls.classes) orders.push_back(c.tuple.group().order());
  std::sort(orders.begin(), orders.end());
  if (orders != std::vector<int>{4, 8, 16}) throw std::runtime_error("class orders wrong");

  // the two order-8 tuples with different kernels admit an explicit isomorphism
  TrifactorisedGroup T1 = generalised_trifact(B, {0, 1});
  TrifactorisedGroup T2 = generalised_trifact(B, {0, 2});
  SearchStats stats;
  auto iso = constrained_isomorphism(T1.group(), T2.group(), factor_constraints(T1, T2),
                                     Bounds::active(), &stats);
  if (!iso.has_value()) throw std::runtime_error("no isomorphism between the order-8 tuples");
  TrifactMorphCheck mc = is_trifact_morphism(T1, T2, iso->images());
  if (!mc.ok() || !mc.morphism->map().bijective())
    throw std::runtime_error("found map is not a tuple isomorphism");
  return "|Omega| = 5, 3 orbits, class orders {16, 8, 4}, explicit order-8 isomorphism found";
}

// ---------------------------------------------------------------------------
// 4. the order-2 brace mapping into the opposite A5 brace

std::string criterion4() {
  SkewBrace B1 = trivial_brace(catalog::cyclic(2));
  SkewBrace B2 = opposite_brace(catalog::alternating5());

  // the image point: the even permutation swapping the first two pairs
  const std::vector<std::vector<int>> gens = {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}};
  const Elem t = catalog::permutation_index(gens, 5, {1, 0, 3, 2, 4});
  BraceHomCheck hc = is_brace_hom(B1, B2, {0, t});
  if (!hc.ok()) throw std::runtime_error("map does not certify as a brace homomorphism");

  LiftResult large = lift_brace_hom(*hc.map, large_trifact(B1), large_trifact(B2));
  if (!large.ok()) throw std::runtime_error("large lift failed");

  TrifactorisedGroup S1 = small_trifact(B1);
  TrifactorisedGroup S2 = small_trifact(B2);
  if (S2.group().order() != 3600) throw std::runtime_error("|S(B2)| != 3600");
  if (S2.e_set().size() != 60) throw std::runtime_error("|E2| != 60");
  LiftResult small = lift_brace_hom(*hc.map, S1, S2);
  if (small.ok()) throw std::runtime_error("small lift unexpectedly succeeded");
  if (small.obstruction != 1)
    throw std::runtime_error("obstruction witness is not the nonzero element");
  return "brace map certified, large lift ok, small lift obstructed at 1, |S(B2)| = 3600, |E2| = 60";
}

// ---------------------------------------------------------------------------
// 5. substructure condition batteries agree everywhere

std::string criterion5() {
  int reports = 0;
  for (const CorpusEntry& e : corpus()) {
    const std::vector<SubgroupSet> subs = all_subgroups(e.brace.add());
    for (const std::vector<Elem>& N : e.omega) {
      TrifactorisedGroup T = generalised_trifact(e.brace, N);
      const std::vector<Elem>& kmem = T.k_set().members();
      for (const SubgroupSet& S : subs) {
        std::vector<Elem> L(S.members().size());
        for (size_t i = 0; i < L.size(); ++i)
          L[i] = kmem[static_cast<size_t>(S.members()[i])];
        SubstructureReport r = classify_substructure_trifact(T, L);
        if (!r.consistent())
          throw std::runtime_error(e.name + ": condition groups disagree on a subgroup");
        ++reports;
      }
    }
  }
  return std::to_string(reports) + " subgroup reports, zero discrepancies";
}

// ---------------------------------------------------------------------------
// 6. quotient tri-equivalence and ideal quotients

std::string criterion6() {
  int admissibility_checks = 0;
  int ideal_quotients = 0;
  for (const CorpusEntry& e : corpus()) {
    const std::vector<std::vector<Elem>> ideals = ideals_of(e.brace);
    for (const std::vector<Elem>& N : e.omega) {
      TrifactorisedGroup T = generalised_trifact(e.brace, N);
      if (T.group().order() > 96) continue;
      for (const SubgroupSet& Tn : normal_subgroups(T.group())) {
        QuotientReport r = quotient_admissible(T, Tn.members());
        if (!r.agree())
          throw std::runtime_error(e.name + ": the three quotient conditions disagree");
        if (r.quotient.has_value() != r.admissible())
          throw std::runtime_error(e.name + ": quotient existence does not track the conditions");
        ++admissibility_checks;
      }
      for (const std::vector<Elem>& I : ideals) {
        IdealQuotient iq = ideal_quotient_tuple(T, I);
        BraceQuotientResult bq = brace_quotient(e.brace, I);
        SkewBrace back = associated_brace(iq.quotient);
        if (!back.add().table_equal(bq.quotient.add()) ||
            !back.mul().table_equal(bq.quotient.mul()))
          throw std::runtime_error(e.name + ": ideal quotient brace mismatch");
        if (N.size() == 1) {
          const auto kh = intersection(iq.quotient.k_set().members(),
                                       iq.quotient.h_set().members());
          if (kh != std::vector<Elem>{0})
            throw std::runtime_error(e.name + ": large quotient lost K n H = 1");
        }
        ++ideal_quotients;
      }
    }
  }
  return std::to_string(admissibility_checks) + " normal subgroups tri-checked, " +
         std::to_string(ideal_quotients) + " ideal quotients match the brace quotients";
}

// ---------------------------------------------------------------------------
// 7. the dihedral order-12 worked example

std::string criterion7() {
  FiniteGroup G = catalog::dihedral(6);
  TrifactCheck ck = validate_trifact(G, {0, 2, 4, 6, 8, 10}, {0, 3, 4, 7, 8, 11}, {0, 1});
  if (!ck.ok()) throw std::runtime_error("the D12 tuple fails validation");
  const TrifactorisedGroup& T = *ck.tuple;

  const std::vector<Elem> cent =
      centralizer_in(G, T.e_set().members(), T.k_set().members());
  if (cent != std::vector<Elem>{0}) throw std::runtime_error("Cent_E(K) != 1");

  const std::vector<Elem> x2 = {0, 4, 8};  // the rotation subgroup <x^2>
  QuotientReport rep = quotient_admissible(T, x2);
  if (!rep.admissible()) throw std::runtime_error("quotient by <x^2> not admissible");
  const FiniteGroup& Q = rep.quotient->group();
  if (Q.order() != 4) throw std::runtime_error("quotient order != 4");
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      if (Q.mul(a, b) != Q.mul(b, a)) throw std::runtime_error("quotient not abelian");

  if (quotient_stays_small(T, x2)) throw std::runtime_error("small criterion survived");
  const std::vector<Elem> centq = centralizer_in(
      Q, rep.quotient->e_set().members(), rep.quotient->k_set().members());
  if (centq.size() != 2) throw std::runtime_error("|Cent(K)| in quotient != 2");
  return "small certificate, quotient admissible of order 4, abelian, |Cent(Kbar)| = 2";
}

// ---------------------------------------------------------------------------
// 8. the epimorphism chain through every admissible kernel

std::string criterion8() {
  int chains = 0;
  for (const CorpusEntry& e : corpus()) {
    const std::vector<Elem> kerl = ker_lambda(e.brace).members();
    const TrifactorisedGroup big = large_trifact(e.brace);
    const TrifactorisedGroup small = small_trifact(e.brace);
    for (const std::vector<Elem>& N : e.omega) {
      ChainEpimorphism down = quotient_chain(e.brace, {0}, N);
      ChainEpimorphism up = quotient_chain(e.brace, N, kerl);
      if (!down.source.tuple_equal(big) || !up.target.tuple_equal(small) ||
          !down.target.tuple_equal(up.source))
        throw std::runtime_error(e.name + ": chain endpoints are not the expected tuples");
      if (!down.morphism.map().surjective() || !up.morphism.map().surjective())
        throw std::runtime_error(e.name + ": chain map not surjective");
      if (!down.kernel_in_e || !up.kernel_in_e)
        throw std::runtime_error(e.name + ": chain kernel escapes the E factor");
      chains += 2;
    }
  }
  return std::to_string(chains) + " chain epimorphisms certified with kernels in E";
}

// ---------------------------------------------------------------------------

int run(int number, const char* title, std::string (*fn)()) {
  try {
    std::string note = fn();
    std::printf("PASS %d %s: %s\n", number, title, note.c_str());
    return 0;
  } catch (const std::exception& ex) {
    std::printf("FAIL %d %s: %s\n", number, title, ex.what());
    return 1;
  }
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "round-trip", criterion1);
  failures += run(2, "classification", criterion2);
  failures += run(3, "Klein four example", criterion3);
  failures += run(4, "order-2 into opposite A5", criterion4);
  failures += run(5, "substructure equivalences", criterion5);
  failures += run(6, "quotient tri-equivalence", criterion6);
  failures += run(7, "D12 example", criterion7);
  failures += run(8, "epimorphism chains", criterion8);
  return failures == 0 ? 0 : 1;
}
