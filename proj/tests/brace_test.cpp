#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tribrace/brace.hpp"
#include "tribrace/catalog.hpp"
#include "tribrace/errors.hpp"

using namespace tribrace;

namespace {

using Table = std::vector<std::vector<Elem>>;

Table nested(const FiniteGroup& G) {
  const int n = G.order();
  Table t(static_cast<size_t>(n), std::vector<Elem>(static_cast<size_t>(n)));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = G.mul(a, b);
  return t;
}

// Brute-force reference for small orders: sweep every table whose rows are
// permutations, keep those that form a group and satisfy
// a(b + c) = ab - a + ac against the given addition table. Nothing here
// touches the library. The two identities coincide as a consequence of the
// law; identity_always_zero reports whether the sweep confirmed that.
struct OracleResult {
  std::vector<Table> mul_tables;  // sorted
  bool identity_always_zero = true;
};

OracleResult brute_force_braces(const Table& add) {
  const int n = static_cast<int>(add.size());
  std::vector<std::vector<Elem>> perms;
  {
    std::vector<Elem> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<Elem> neg(static_cast<size_t>(n), -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) neg[static_cast<size_t>(a)] = b;

  auto at = [](const Table& t, Elem i, Elem j) {
    return t[static_cast<size_t>(i)][static_cast<size_t>(j)];
  };

  OracleResult out;
  const size_t P = perms.size();
  std::vector<size_t> choice(static_cast<size_t>(n), 0);
  Table t(static_cast<size_t>(n));
  while (true) {
    for (Elem r = 0; r < n; ++r) t[static_cast<size_t>(r)] = perms[choice[static_cast<size_t>(r)]];

    bool keep = true;
    for (Elem c = 0; c < n && keep; ++c) {
      std::vector<char> seen(static_cast<size_t>(n), 0);
      for (Elem r = 0; r < n && keep; ++r) {
        const Elem v = at(t, r, c);
        if (seen[static_cast<size_t>(v)]) keep = false;
        seen[static_cast<size_t>(v)] = 1;
      }
    }
    Elem e = -1;
    if (keep) {
      for (Elem cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = at(t, cand, x) == x && at(t, x, cand) == x;
        if (ok) e = cand;
      }
      keep = e >= 0;
    }
    if (keep)
      for (Elem a = 0; a < n && keep; ++a)
        for (Elem b = 0; b < n && keep; ++b)
          for (Elem c = 0; c < n && keep; ++c)
            keep = at(t, at(t, a, b), c) == at(t, a, at(t, b, c));
    if (keep)
      for (Elem a = 0; a < n && keep; ++a) {
        bool found = false;
        for (Elem b = 0; b < n && !found; ++b) found = at(t, a, b) == e && at(t, b, a) == e;
        keep = found;
      }
    if (keep)
      for (Elem a = 0; a < n && keep; ++a)
        for (Elem b = 0; b < n && keep; ++b)
          for (Elem c = 0; c < n && keep; ++c) {
            const Elem lhs = at(t, a, at(add, b, c));
            const Elem rhs = at(add, at(add, at(t, a, b), neg[static_cast<size_t>(a)]), at(t, a, c));
            keep = lhs == rhs;
          }
    if (keep) {
      if (e != 0)
        out.identity_always_zero = false;
      else
        out.mul_tables.push_back(t);
    }

    size_t pos = 0;
    while (pos < static_cast<size_t>(n) && ++choice[pos] == P) choice[pos++] = 0;
    if (pos == static_cast<size_t>(n)) break;
  }
  std::sort(out.mul_tables.begin(), out.mul_tables.end());
  return out;
}

std::vector<Table> library_mul_tables(const FiniteGroup& K) {
  std::vector<Table> got;
  for (const SkewBrace& B : enumerate_braces(K)) {
    CHECK(B.add().table_equal(K));
    got.push_back(nested(B.mul()));
  }
  CHECK(std::is_sorted(got.begin(), got.end()));
  return got;
}

bool defect_present(const BraceCheck& ck, BraceDefect kind) {
  for (const auto& v : ck.violations)
    if (v.kind == kind) return true;
  return false;
}

// Substructure flags recomputed from raw tables only.
SubstructureFlags raw_flags(const SkewBrace& B, const std::vector<Elem>& L) {
  const Table add = nested(B.add());
  const Table mul = nested(B.mul());
  const int n = B.order();
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (Elem x : L) in[static_cast<size_t>(x)] = 1;
  std::vector<Elem> aneg(static_cast<size_t>(n)), minv(static_cast<size_t>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (add[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) aneg[static_cast<size_t>(a)] = b;
      if (mul[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) minv[static_cast<size_t>(a)] = b;
    }

  SubstructureFlags f;
  f.add_subgroup = !L.empty() && in[0];
  for (Elem x : L)
    for (Elem y : L)
      if (!in[static_cast<size_t>(add[static_cast<size_t>(x)][static_cast<size_t>(y)])])
        f.add_subgroup = false;
  for (Elem x : L)
    if (!in[static_cast<size_t>(aneg[static_cast<size_t>(x)])]) f.add_subgroup = false;

  f.mul_subgroup = !L.empty() && in[0];
  for (Elem x : L)
    for (Elem y : L)
      if (!in[static_cast<size_t>(mul[static_cast<size_t>(x)][static_cast<size_t>(y)])])
        f.mul_subgroup = false;
  for (Elem x : L)
    if (!in[static_cast<size_t>(minv[static_cast<size_t>(x)])]) f.mul_subgroup = false;

  f.lambda_stable = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem x : L) {
      const Elem lam =
          add[static_cast<size_t>(aneg[static_cast<size_t>(a)])]
             [static_cast<size_t>(mul[static_cast<size_t>(a)][static_cast<size_t>(x)])];
      if (!in[static_cast<size_t>(lam)]) f.lambda_stable = false;
    }

  f.normal_in_add = f.add_subgroup;
  for (Elem g = 0; g < n && f.normal_in_add; ++g)
    for (Elem x : L) {
      const Elem gx = add[static_cast<size_t>(g)][static_cast<size_t>(x)];
      const Elem conj = add[static_cast<size_t>(gx)][static_cast<size_t>(aneg[static_cast<size_t>(g)])];
      if (!in[static_cast<size_t>(conj)]) f.normal_in_add = false;
    }
  f.normal_in_mul = f.mul_subgroup;
  for (Elem g = 0; g < n && f.normal_in_mul; ++g)
    for (Elem x : L) {
      const Elem gx = mul[static_cast<size_t>(g)][static_cast<size_t>(x)];
      const Elem conj = mul[static_cast<size_t>(gx)][static_cast<size_t>(minv[static_cast<size_t>(g)])];
      if (!in[static_cast<size_t>(conj)]) f.normal_in_mul = false;
    }
  return f;
}

SubstructureKind kind_from_flags(const SubstructureFlags& f) {
  if (!f.add_subgroup || !f.mul_subgroup) return SubstructureKind::None;
  if (!f.lambda_stable) return SubstructureKind::Subbrace;
  if (!f.normal_in_add) return SubstructureKind::LeftIdeal;
  if (!f.normal_in_mul) return SubstructureKind::StrongLeftIdeal;
  return SubstructureKind::Ideal;
}

// The valid pair: addition C4, multiplication the Klein table.
SkewBrace c4_klein_brace() {
  GroupCheck mul = validate_group(nested(catalog::klein4()));
  REQUIRE(mul.ok());
  return make_brace(catalog::cyclic(4), *mul.group);
}

}  // namespace

TEST_CASE("trivial brace basics") {
  SkewBrace B = trivial_brace(catalog::dihedral(4));
  CHECK(B.valid());
  CHECK(B.order() == 8);
  CHECK(B.is_trivial());
  CHECK(B.add().same_group(B.mul()));
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) CHECK(B.lambda_of(a, b) == b);
}

TEST_CASE("validate_brace accepts a trivial pairing") {
  const Table t = nested(catalog::cyclic(6));
  BraceCheck ck = validate_brace(t, t);
  REQUIRE(ck.ok());
  CHECK(ck.brace->is_trivial());
}

TEST_CASE("validate_brace rejects a bad addition table") {
  // non-associative intercalate tweak of C6 (rows 2 and 5 swapped on columns 2, 5)
  Table bad = nested(catalog::cyclic(6));
  std::swap(bad[2][2], bad[5][2]);
  std::swap(bad[2][5], bad[5][5]);
  BraceCheck ck = validate_brace(bad, nested(catalog::cyclic(6)));
  CHECK(!ck.ok());
  CHECK(defect_present(ck, BraceDefect::AddNotGroup));
  CHECK(!defect_present(ck, BraceDefect::MulNotGroup));

  BraceCheck ck2 = validate_brace(nested(catalog::cyclic(6)), bad);
  CHECK(!ck2.ok());
  CHECK(defect_present(ck2, BraceDefect::MulNotGroup));
}

TEST_CASE("validate_brace rejects mismatched orders") {
  BraceCheck ck = validate_brace(nested(catalog::cyclic(2)), nested(catalog::cyclic(4)));
  CHECK(!ck.ok());
  CHECK(defect_present(ck, BraceDefect::SizeMismatch));
}

TEST_CASE("validate_brace pins down a law violation") {
  // both tables are C4 up to relabelling, but the pairing breaks the law
  const Table add = nested(catalog::cyclic(4));
  const Table mul = {{0, 1, 2, 3}, {1, 3, 0, 2}, {2, 0, 3, 1}, {3, 2, 1, 0}};
  REQUIRE(validate_group(mul).ok());
  BraceCheck ck = validate_brace(add, mul);
  REQUIRE(!ck.ok());
  REQUIRE(ck.violations.size() == 1);
  const BraceViolation& v = ck.violations[0];
  CHECK(v.kind == BraceDefect::BraceLawViolated);
  CHECK(v.witness == std::array<Elem, 3>{1, 1, 1});
  // replay the witness on the raw tables
  const Elem a = v.witness[0], b = v.witness[1], c = v.witness[2];
  const Elem lhs = mul[a][add[b][c]];
  const Elem rhs = add[add[mul[a][b]][3]][mul[a][c]];  // -1 = 3 in C4
  CHECK(lhs != rhs);

  CHECK_THROWS_AS(make_brace(catalog::cyclic(4), *validate_group(mul).group), DomainError);
}

TEST_CASE("the C4/Klein pairing is a brace") {
  SkewBrace B = c4_klein_brace();
  CHECK(!B.is_trivial());
  CHECK(B.order() == 4);
  // lambda_1 and lambda_3 invert C4, lambda_2 is the identity
  LambdaMap lm = lambda_map(B);
  CHECK(lm.perm(0) == std::vector<Elem>{0, 1, 2, 3});
  CHECK(lm.perm(1) == std::vector<Elem>{0, 3, 2, 1});
  CHECK(lm.perm(2) == std::vector<Elem>{0, 1, 2, 3});
  CHECK(lm.perm(3) == std::vector<Elem>{0, 3, 2, 1});
  CHECK(lm.image_group().order() == 2);
  CHECK(lm.kernel() == std::vector<Elem>{0, 2});
  CHECK(lm.image_index() == std::vector<Elem>{0, 1, 0, 1});
  CHECK(lm.image_perm(0) == std::vector<Elem>{0, 1, 2, 3});
  CHECK(lm.image_perm(1) == std::vector<Elem>{0, 3, 2, 1});
  GroupMap gm = lm.as_group_map();
  CHECK(gm.kernel() == std::vector<Elem>{0, 2});
  CHECK(gm.surjective());

  SubgroupSet k = ker_lambda(B);
  CHECK(k.members() == std::vector<Elem>{0, 2});
}

TEST_CASE("opposite brace of an abelian group is trivial") {
  CHECK(opposite_brace(catalog::cyclic(4)).is_trivial());
  CHECK(opposite_brace(catalog::klein4()).is_trivial());
}

TEST_CASE("opposite brace lambda is conjugation") {
  FiniteGroup G = catalog::symmetric3();
  SkewBrace B = opposite_brace(G);
  CHECK(!B.is_trivial());
  CHECK(B.mul().same_group(G));
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) CHECK(B.lambda_of(a, b) == G.conj(a, b));
  // kernel of lambda is the centre: trivial for S3
  CHECK(ker_lambda(B).members() == std::vector<Elem>{0});
  LambdaMap lm = lambda_map(B);
  CHECK(lm.image_group().order() == 6);
  SearchStats st;
  CHECK(constrained_isomorphism(lm.image_group(), G, {}, Bounds::active(), &st).has_value());
}

TEST_CASE("opposite brace of the quaternions has the centre as kernel") {
  SkewBrace B = opposite_brace(catalog::quaternion8());
  CHECK(ker_lambda(B).members() == std::vector<Elem>{0, 4});
  CHECK(lambda_map(B).image_group().order() == 4);
}

TEST_CASE("is_brace_hom distinguishes the two laws") {
  SkewBrace B = c4_klein_brace();
  SkewBrace T2 = trivial_brace(catalog::cyclic(2));

  BraceHomCheck ok = is_brace_hom(B, T2, {0, 1, 0, 1});
  REQUIRE(ok.ok());
  CHECK(ok.map->kernel() == std::vector<Elem>{0, 2});
  CHECK(ok.map->surjective());
  CHECK(!ok.map->injective());

  // additive hom C4 -> C2 that is not multiplicative for the Klein table:
  // none exists here (every additive hom kills 2), so test the other gap on
  // a pair where it shows: identity images on mismatched braces
  BraceHomCheck bad = is_brace_hom(B, trivial_brace(catalog::cyclic(4)), {0, 1, 2, 3});
  CHECK(!bad.ok());
  CHECK(bad.defect == BraceHomCheck::Defect::MulLaw);

  BraceHomCheck bad2 = is_brace_hom(B, T2, {0, 1, 1, 0});
  CHECK(!bad2.ok());
  CHECK(bad2.defect == BraceHomCheck::Defect::AddLaw);

  BraceHomCheck shape = is_brace_hom(B, T2, {0, 1, 0});
  CHECK(!shape.ok());
  CHECK(shape.defect == BraceHomCheck::Defect::Shape);
}

TEST_CASE("brace map composition and inversion") {
  SkewBrace B = c4_klein_brace();
  std::vector<BraceMap> auts = brace_automorphisms(B);
  REQUIRE(auts.size() == 2);
  CHECK(auts[0].images() == std::vector<Elem>{0, 1, 2, 3});
  CHECK(auts[1].images() == std::vector<Elem>{0, 3, 2, 1});
  BraceMap inv = auts[1].inverted();
  CHECK(inv.images() == auts[1].images());  // an involution
  CHECK(BraceMap::compose(auts[1], auts[1]).same_map(auts[0]));
  CHECK(auts[1].bijective());
  CHECK(auts[1].kernel() == std::vector<Elem>{0});
}

TEST_CASE("brace automorphisms against a raw search") {
  // every permutation fixing 0 that preserves both tables, order <= 4
  std::vector<SkewBrace> cases;
  cases.push_back(trivial_brace(catalog::cyclic(4)));
  cases.push_back(trivial_brace(catalog::klein4()));
  cases.push_back(c4_klein_brace());
  for (const SkewBrace& B : cases) {
    const Table add = nested(B.add());
    const Table mul = nested(B.mul());
    const int n = B.order();
    std::vector<std::vector<Elem>> expect;
    std::vector<Elem> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      if (p[0] != 0) continue;
      bool hom = true;
      for (Elem a = 0; a < n && hom; ++a)
        for (Elem b = 0; b < n && hom; ++b)
          hom = p[static_cast<size_t>(add[static_cast<size_t>(a)][static_cast<size_t>(b)])] ==
                    add[static_cast<size_t>(p[static_cast<size_t>(a)])]
                       [static_cast<size_t>(p[static_cast<size_t>(b)])] &&
                p[static_cast<size_t>(mul[static_cast<size_t>(a)][static_cast<size_t>(b)])] ==
                    mul[static_cast<size_t>(p[static_cast<size_t>(a)])]
                       [static_cast<size_t>(p[static_cast<size_t>(b)])];
      if (hom) expect.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(expect.begin(), expect.end());

    std::vector<std::vector<Elem>> got;
    for (const BraceMap& f : brace_automorphisms(B)) got.push_back(f.images());
    CHECK(got == expect);
  }
}

TEST_CASE("substructure ladder on stock examples") {
  SkewBrace triv = trivial_brace(catalog::dihedral(4));
  // reflection subgroup {0, 1}: lambda-stable for free, but not normal
  SubstructureClass s1 = classify_substructure(triv, {0, 1});
  CHECK(s1.kind == SubstructureKind::LeftIdeal);
  CHECK(s1.flags.add_subgroup);
  CHECK(s1.flags.mul_subgroup);
  CHECK(s1.flags.lambda_stable);
  CHECK(!s1.flags.normal_in_add);
  CHECK(!s1.flags.normal_in_mul);
  // rotations {0,2,4,6}: normal on both sides
  CHECK(classify_substructure(triv, {0, 2, 4, 6}).kind == SubstructureKind::Ideal);
  // centre {0,4}
  CHECK(classify_substructure(triv, {0, 4}).kind == SubstructureKind::Ideal);
  // not an additive subgroup
  CHECK(classify_substructure(triv, {0, 2, 4}).kind == SubstructureKind::None);
  CHECK(classify_substructure(triv, {1, 2}).kind == SubstructureKind::None);

  // opposite of D8: lambda is conjugation, so stability means normality;
  // a non-normal subgroup stays a subbrace and nothing more
  SkewBrace op = opposite_brace(catalog::dihedral(4));
  SubstructureClass s2 = classify_substructure(op, {0, 1});
  CHECK(s2.kind == SubstructureKind::Subbrace);
  CHECK(!s2.flags.lambda_stable);
  CHECK(classify_substructure(op, {0, 4}).kind == SubstructureKind::Ideal);
  CHECK(classify_substructure(op, {0, 2, 4, 6}).kind == SubstructureKind::Ideal);

  CHECK_THROWS_AS(classify_substructure(op, {0, 99}), DomainError);
}

TEST_CASE("substructure flags match a raw recomputation") {
  std::vector<SkewBrace> braces;
  for (const FiniteGroup& K :
       {catalog::cyclic(4), catalog::klein4(), catalog::cyclic(6), catalog::symmetric3()})
    for (const SkewBrace& B : enumerate_braces(K)) braces.push_back(B);
  braces.push_back(opposite_brace(catalog::symmetric3()));
  braces.push_back(opposite_brace(catalog::quaternion8()));

  for (const SkewBrace& B : braces) {
    for (const SubgroupSet& S : all_subgroups(B.add())) {
      SubstructureClass cls = classify_substructure(B, S.members());
      SubstructureFlags raw = raw_flags(B, S.members());
      CHECK(cls.flags.add_subgroup == raw.add_subgroup);
      CHECK(cls.flags.mul_subgroup == raw.mul_subgroup);
      CHECK(cls.flags.lambda_stable == raw.lambda_stable);
      CHECK(cls.flags.normal_in_add == raw.normal_in_add);
      CHECK(cls.flags.normal_in_mul == raw.normal_in_mul);
      CHECK(cls.kind == kind_from_flags(raw));
    }
    // the kernel of lambda is a subbrace, normal in (B, *); with abelian
    // addition it is lambda-stable too, hence an ideal
    SubstructureClass kcls = classify_substructure(B, ker_lambda(B).members());
    CHECK(kcls.flags.add_subgroup);
    CHECK(kcls.flags.mul_subgroup);
    CHECK(kcls.flags.normal_in_mul);
    bool abelian_add = true;
    for (Elem a = 0; a < B.order() && abelian_add; ++a)
      for (Elem b = 0; b < B.order() && abelian_add; ++b)
        abelian_add = B.plus(a, b) == B.plus(b, a);
    if (abelian_add) CHECK(kcls.kind == SubstructureKind::Ideal);
  }
}

TEST_CASE("brace quotient by an ideal") {
  SkewBrace B = c4_klein_brace();
  BraceQuotientResult qr = brace_quotient(B, {0, 2});
  CHECK(qr.quotient.order() == 2);
  CHECK(qr.quotient.is_trivial());
  CHECK(qr.reps == std::vector<Elem>{0, 1});
  CHECK(qr.projection.images() == std::vector<Elem>{0, 1, 0, 1});
  CHECK(qr.projection.kernel() == std::vector<Elem>{0, 2});
  CHECK(qr.projection.surjective());

  CHECK_THROWS_AS(brace_quotient(trivial_brace(catalog::dihedral(4)), {0, 1}), DomainError);
}

TEST_CASE("quotient of the opposite quaternion brace by its centre") {
  SkewBrace B = opposite_brace(catalog::quaternion8());
  BraceQuotientResult qr = brace_quotient(B, {0, 4});
  CHECK(qr.quotient.order() == 4);
  // Q8 over its centre is Klein; conjugation dies in the quotient
  CHECK(qr.quotient.is_trivial());
  SearchStats st;
  CHECK(constrained_isomorphism(qr.quotient.mul(), catalog::klein4(), {}, Bounds::active(), &st)
            .has_value());
  CHECK(qr.reps == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("enumeration matches the brute-force sweep through order 4") {
  struct Case {
    FiniteGroup K;
    size_t count;
  };
  const std::vector<Case> cases = {
      {catalog::cyclic(1), 1}, {catalog::cyclic(2), 1}, {catalog::cyclic(3), 1},
      {catalog::cyclic(4), 2}, {catalog::klein4(), 4},
  };
  for (const Case& c : cases) {
    OracleResult oracle = brute_force_braces(nested(c.K));
    CHECK(oracle.identity_always_zero);
    CHECK(oracle.mul_tables.size() == c.count);
    CHECK(library_mul_tables(c.K) == oracle.mul_tables);
  }
}

TEST_CASE("braces over C6") {
  std::vector<SkewBrace> braces = enumerate_braces(catalog::cyclic(6));
  REQUIRE(braces.size() == 2);
  // sorted by table: the twisted one (row 1 = [1,0,5,4,3,2]) precedes trivial
  const Table twisted = {{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 3, 4, 5, 0, 1},
                         {3, 2, 1, 0, 5, 4}, {4, 5, 0, 1, 2, 3}, {5, 4, 3, 2, 1, 0}};
  CHECK(nested(braces[0].mul()) == twisted);
  CHECK(braces[1].is_trivial());

  SearchStats st;
  CHECK(constrained_isomorphism(braces[0].mul(), catalog::symmetric3(), {}, Bounds::active(), &st)
            .has_value());
  CHECK(ker_lambda(braces[0]).members() == std::vector<Elem>{0, 2, 4});
}

TEST_CASE("every enumerated brace over the Klein group re-validates") {
  std::vector<SkewBrace> braces = enumerate_braces(catalog::klein4());
  REQUIRE(braces.size() == 4);
  int trivial = 0, cyclic_mul = 0;
  for (const SkewBrace& B : braces) {
    BraceCheck ck = validate_brace(nested(B.add()), nested(B.mul()));
    CHECK(ck.ok());
    if (B.is_trivial()) ++trivial;
    SearchStats st;
    if (constrained_isomorphism(B.mul(), catalog::cyclic(4), {}, Bounds::active(), &st))
      ++cyclic_mul;
  }
  CHECK(trivial == 1);
  CHECK(cyclic_mul == 3);
}

TEST_CASE("enumeration respects its bound") {
  Bounds tight;
  tight.brace_enumeration = 3;
  CHECK_THROWS_AS(enumerate_braces(catalog::klein4(), tight), BoundExceeded);
  CHECK(enumerate_braces(catalog::cyclic(3), tight).size() == 1);
}
