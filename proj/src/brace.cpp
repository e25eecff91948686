#include "tribrace/brace.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>

namespace tribrace {

struct SkewBrace::Impl {
  FiniteGroup add;
  FiniteGroup mul;
};

struct BraceBuilder {
  static SkewBrace wrap(FiniteGroup add, FiniteGroup mul) {
    auto impl = std::make_shared<SkewBrace::Impl>();
    impl->add = std::move(add);
    impl->mul = std::move(mul);
    return SkewBrace(std::move(impl));
  }
};

int SkewBrace::order() const noexcept { return impl_ ? impl_->add.order() : 0; }
const FiniteGroup& SkewBrace::add() const { return impl_->add; }
const FiniteGroup& SkewBrace::mul() const { return impl_->mul; }

bool SkewBrace::same_brace(const SkewBrace& other) const noexcept {
  return impl_ == other.impl_;
}

bool SkewBrace::table_equal(const SkewBrace& other) const {
  if (!valid() || !other.valid()) return valid() == other.valid();
  return impl_->add.table_equal(other.impl_->add) && impl_->mul.table_equal(other.impl_->mul);
}

bool SkewBrace::is_trivial() const { return impl_->add.table_equal(impl_->mul); }

// ---------------------------------------------------------------------------
// Validation

std::string to_string(BraceDefect d) {
  switch (d) {
    case BraceDefect::AddNotGroup: return "AddNotGroup";
    case BraceDefect::MulNotGroup: return "MulNotGroup";
    case BraceDefect::SizeMismatch: return "SizeMismatch";
    case BraceDefect::BraceLawViolated: return "BraceLawViolated";
  }
  return "?";
}

// law at (a, b, c): a(b + c) == ab - a + ac
static bool law_holds(const SkewBrace& B, Elem a, Elem b, Elem c) {
  const Elem lhs = B.times(a, B.plus(b, c));
  const Elem rhs = B.plus(B.plus(B.times(a, b), B.neg(a)), B.times(a, c));
  return lhs == rhs;
}

static bool check_brace_law(const SkewBrace& B, const Bounds& bounds,
                            std::array<Elem, 3>* witness) {
  const int n = B.order();
  if (n <= bounds.full_assoc_check) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!law_holds(B, a, b, c)) {
            if (witness) *witness = {a, b, c};
            return false;
          }
    return true;
  }
  // the law says lambda_a is additive; checking it against additive
  // generators in the last slot covers all sums by induction
  const std::vector<Elem> gens = greedy_generators(B.add());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem g : gens)
        if (!law_holds(B, a, b, g)) {
          if (witness) *witness = {a, b, g};
          return false;
        }
  std::mt19937 rng(0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < bounds.assoc_samples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (!law_holds(B, a, b, c)) {
      if (witness) *witness = {a, b, c};
      return false;
    }
  }
  return true;
}

BraceCheck validate_brace(const std::vector<std::vector<Elem>>& add,
                          const std::vector<std::vector<Elem>>& mul, const Bounds& bounds) {
  BraceCheck ck;
  GroupCheck addck = validate_group(add, bounds);
  if (!addck.ok())
    for (const auto& v : addck.violations)
      ck.violations.push_back(
          {BraceDefect::AddNotGroup, v.witness, to_string(v.kind) + ": " + v.detail});
  GroupCheck mulck = validate_group(mul, bounds);
  if (!mulck.ok())
    for (const auto& v : mulck.violations)
      ck.violations.push_back(
          {BraceDefect::MulNotGroup, v.witness, to_string(v.kind) + ": " + v.detail});
  if (!addck.ok() || !mulck.ok()) return ck;
  if (addck.group->order() != mulck.group->order()) {
    ck.violations.push_back({BraceDefect::SizeMismatch,
                             {addck.group->order(), mulck.group->order(), -1},
                             "tables have different sizes"});
    return ck;
  }
  SkewBrace B = BraceBuilder::wrap(*addck.group, *mulck.group);
  std::array<Elem, 3> w{-1, -1, -1};
  if (!check_brace_law(B, bounds, &w)) {
    ck.violations.push_back({BraceDefect::BraceLawViolated, w,
                             "a(b+c) != ab - a + ac at a=" + std::to_string(w[0]) +
                                 " b=" + std::to_string(w[1]) + " c=" + std::to_string(w[2])});
    return ck;
  }
  ck.brace = std::move(B);
  return ck;
}

SkewBrace make_brace(const FiniteGroup& add, const FiniteGroup& mul, const Bounds& bounds) {
  if (!add.valid() || !mul.valid()) throw DomainError("make_brace: missing group");
  if (add.order() != mul.order()) throw DomainError("make_brace: orders differ");
  SkewBrace B = BraceBuilder::wrap(add, mul);
  std::array<Elem, 3> w{-1, -1, -1};
  if (!check_brace_law(B, bounds, &w))
    throw DomainError("make_brace: brace law fails at (" + std::to_string(w[0]) + "," +
                      std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
  return B;
}

SkewBrace trivial_brace(const FiniteGroup& G) {
  if (!G.valid()) throw DomainError("trivial_brace: missing group");
  return BraceBuilder::wrap(G, G);
}

SkewBrace opposite_brace(const FiniteGroup& G) {
  if (!G.valid()) throw DomainError("opposite_brace: missing group");
  const int n = G.order();
  std::vector<std::vector<Elem>> op(static_cast<size_t>(n),
                                    std::vector<Elem>(static_cast<size_t>(n)));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) op[static_cast<size_t>(x)][static_cast<size_t>(y)] = G.mul(y, x);
  GroupCheck ck = validate_group(op);
  assert(ck.ok());
  return make_brace(*ck.group, G);
}

// ---------------------------------------------------------------------------
// Lambda

struct LambdaMap::Impl {
  SkewBrace B;
  std::vector<std::vector<Elem>> perms;       // lambda_a per a
  FiniteGroup image;                          // composition group of distinct perms
  std::vector<Elem> image_index;              // a -> image element
  std::vector<std::vector<Elem>> image_perms; // image element -> permutation
  std::vector<Elem> kernel;
};

struct LambdaBuilder {
  static std::shared_ptr<LambdaMap::Impl> make_impl() {
    return std::make_shared<LambdaMap::Impl>();
  }
  static LambdaMap wrap(std::shared_ptr<const LambdaMap::Impl> impl) {
    return LambdaMap(std::move(impl));
  }
};

const SkewBrace& LambdaMap::brace() const { return impl_->B; }
const std::vector<Elem>& LambdaMap::perm(Elem a) const {
  return impl_->perms[static_cast<size_t>(a)];
}
Elem LambdaMap::apply(Elem a, Elem b) const {
  return impl_->perms[static_cast<size_t>(a)][static_cast<size_t>(b)];
}
const FiniteGroup& LambdaMap::image_group() const { return impl_->image; }
const std::vector<Elem>& LambdaMap::image_index() const { return impl_->image_index; }
const std::vector<Elem>& LambdaMap::image_perm(Elem i) const {
  return impl_->image_perms[static_cast<size_t>(i)];
}
GroupMap LambdaMap::as_group_map() const {
  return GroupMap(impl_->B.mul(), impl_->image, impl_->image_index);
}
std::vector<Elem> LambdaMap::kernel() const { return impl_->kernel; }

LambdaMap lambda_map(const SkewBrace& B) {
  if (!B.valid()) throw DomainError("lambda_map: missing brace");
  const int n = B.order();
  auto impl = LambdaBuilder::make_impl();
  impl->B = B;
  impl->perms.resize(static_cast<size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem>& p = impl->perms[static_cast<size_t>(a)];
    p.resize(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (Elem b = 0; b < n; ++b) {
      p[static_cast<size_t>(b)] = B.lambda_of(a, b);
      seen[static_cast<size_t>(p[static_cast<size_t>(b)])] = 1;
    }
    for (char s : seen)
      if (!s) throw DomainError("lambda_map: lambda_" + std::to_string(a) + " not bijective");
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (p[static_cast<size_t>(B.plus(x, y))] !=
            B.plus(p[static_cast<size_t>(x)], p[static_cast<size_t>(y)]))
          throw DomainError("lambda_map: lambda_" + std::to_string(a) +
                            " is not additive at (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
  }
  // homomorphism from (B, *)
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto& pab = impl->perms[static_cast<size_t>(B.times(a, b))];
      const auto& pa = impl->perms[static_cast<size_t>(a)];
      const auto& pb = impl->perms[static_cast<size_t>(b)];
      for (Elem x = 0; x < n; ++x)
        if (pab[static_cast<size_t>(x)] !=
            pa[static_cast<size_t>(pb[static_cast<size_t>(x)])])
          throw DomainError("lambda_map: lambda is not multiplicative at (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
    }

  // distinct permutations in lexicographic order; the identity permutation is
  // lex-least, so it lands at index 0
  std::map<std::vector<Elem>, Elem> index_of;
  for (Elem a = 0; a < n; ++a) index_of.emplace(impl->perms[static_cast<size_t>(a)], 0);
  Elem next = 0;
  for (auto& [p, idx] : index_of) idx = next++;
  const int m = static_cast<int>(index_of.size());
  impl->image_perms.resize(static_cast<size_t>(m));
  for (const auto& [p, idx] : index_of) impl->image_perms[static_cast<size_t>(idx)] = p;
  impl->image_index.resize(static_cast<size_t>(n));
  for (Elem a = 0; a < n; ++a)
    impl->image_index[static_cast<size_t>(a)] = index_of.at(impl->perms[static_cast<size_t>(a)]);

  std::vector<std::vector<Elem>> table(static_cast<size_t>(m),
                                       std::vector<Elem>(static_cast<size_t>(m)));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      std::vector<Elem> comp(static_cast<size_t>(n));
      const auto& pi = impl->image_perms[static_cast<size_t>(i)];
      const auto& pj = impl->image_perms[static_cast<size_t>(j)];
      for (Elem x = 0; x < n; ++x)
        comp[static_cast<size_t>(x)] = pi[static_cast<size_t>(pj[static_cast<size_t>(x)])];
      auto it = index_of.find(comp);
      if (it == index_of.end())
        throw DomainError("lambda_map: image not closed under composition");
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = it->second;
    }
  GroupCheck ck = validate_group(table);
  assert(ck.ok());
  impl->image = *ck.group;

  for (Elem a = 0; a < n; ++a)
    if (impl->image_index[static_cast<size_t>(a)] == 0) impl->kernel.push_back(a);
  return LambdaBuilder::wrap(std::move(impl));
}

SubgroupSet ker_lambda(const SkewBrace& B) {
  LambdaMap lm = lambda_map(B);
  std::vector<Elem> k = lm.kernel();
  // kernel of a homomorphism from (B, *); it is an additive subgroup too
  assert(is_subgroup_set(B.add(), k, nullptr));
  assert(is_normal_set(B.mul(), k, nullptr));
  return SubgroupSet(B.mul(), std::move(k));
}

// ---------------------------------------------------------------------------
// BraceMap

struct BraceMapBuilder {
  static BraceMap wrap(SkewBrace source, SkewBrace target, std::vector<Elem> images) {
    return BraceMap(BraceMap::Unchecked{}, std::move(source), std::move(target),
                    std::move(images));
  }
};

GroupMap BraceMap::add_map() const { return GroupMap(source_.add(), target_.add(), images_); }
GroupMap BraceMap::mul_map() const { return GroupMap(source_.mul(), target_.mul(), images_); }

bool BraceMap::injective() const {
  std::vector<char> seen(static_cast<size_t>(target_.order()), 0);
  for (Elem v : images_) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

bool BraceMap::surjective() const {
  std::vector<char> seen(static_cast<size_t>(target_.order()), 0);
  int distinct = 0;
  for (Elem v : images_)
    if (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      ++distinct;
    }
  return distinct == target_.order();
}

std::vector<Elem> BraceMap::kernel() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < source_.order(); ++x)
    if (images_[static_cast<size_t>(x)] == FiniteGroup::identity) out.push_back(x);
  return out;
}

std::vector<Elem> BraceMap::image_of(std::span<const Elem> S) const {
  std::vector<Elem> out;
  out.reserve(S.size());
  for (Elem s : S) out.push_back(images_[static_cast<size_t>(s)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BraceMap BraceMap::compose(const BraceMap& outer, const BraceMap& inner) {
  if (!inner.target_.same_brace(outer.source_))
    throw DomainError("BraceMap::compose: inner target and outer source differ");
  std::vector<Elem> images(inner.images_.size());
  for (size_t i = 0; i < images.size(); ++i)
    images[i] = outer.images_[static_cast<size_t>(inner.images_[i])];
  return BraceMapBuilder::wrap(inner.source_, outer.target_, std::move(images));
}

BraceMap BraceMap::inverted() const {
  if (!bijective()) throw DomainError("BraceMap::inverted: map is not bijective");
  std::vector<Elem> inv(images_.size());
  for (Elem x = 0; x < source_.order(); ++x)
    inv[static_cast<size_t>(images_[static_cast<size_t>(x)])] = x;
  return BraceMapBuilder::wrap(target_, source_, std::move(inv));
}

bool BraceMap::same_map(const BraceMap& other) const {
  return source_.same_brace(other.source_) && target_.same_brace(other.target_) &&
         images_ == other.images_;
}

BraceHomCheck is_brace_hom(const SkewBrace& B1, const SkewBrace& B2,
                           const std::vector<Elem>& images) {
  BraceHomCheck ck;
  if (!B1.valid() || !B2.valid()) throw DomainError("is_brace_hom: missing brace");
  if (static_cast<int>(images.size()) != B1.order()) {
    ck.defect = BraceHomCheck::Defect::Shape;
    return ck;
  }
  for (Elem v : images)
    if (v < 0 || v >= B2.order()) {
      ck.defect = BraceHomCheck::Defect::Shape;
      return ck;
    }
  std::array<Elem, 2> w{-1, -1};
  if (!GroupMap::try_make(B1.add(), B2.add(), images, &w)) {
    ck.defect = BraceHomCheck::Defect::AddLaw;
    ck.witness = w;
    return ck;
  }
  if (!GroupMap::try_make(B1.mul(), B2.mul(), images, &w)) {
    ck.defect = BraceHomCheck::Defect::MulLaw;
    ck.witness = w;
    return ck;
  }
  ck.map = BraceMapBuilder::wrap(B1, B2, images);
  return ck;
}

std::vector<BraceMap> brace_automorphisms(const SkewBrace& B, const Bounds& bounds) {
  std::vector<BraceMap> out;
  for (const GroupMap& f : automorphisms(B.add(), bounds))
    if (GroupMap::try_make(B.mul(), B.mul(), f.images()))
      out.push_back(BraceMapBuilder::wrap(B, B, f.images()));
  return out;  // automorphisms() is sorted by image array already
}

// ---------------------------------------------------------------------------
// Substructure

std::string to_string(SubstructureKind k) {
  switch (k) {
    case SubstructureKind::None: return "none";
    case SubstructureKind::Subbrace: return "subbrace";
    case SubstructureKind::LeftIdeal: return "left-ideal";
    case SubstructureKind::StrongLeftIdeal: return "strong-left-ideal";
    case SubstructureKind::Ideal: return "ideal";
  }
  return "?";
}

SubstructureClass classify_substructure(const SkewBrace& B, std::vector<Elem> L) {
  if (!B.valid()) throw DomainError("classify_substructure: missing brace");
  std::sort(L.begin(), L.end());
  L.erase(std::unique(L.begin(), L.end()), L.end());
  for (Elem x : L)
    if (x < 0 || x >= B.order())
      throw DomainError("classify_substructure: index " + std::to_string(x) + " out of range");

  SubstructureClass out;
  out.flags.add_subgroup = is_subgroup_set(B.add(), L, nullptr);
  out.flags.mul_subgroup = is_subgroup_set(B.mul(), L, nullptr);
  bool stable = true;
  for (Elem a = 0; a < B.order() && stable; ++a)
    for (Elem l : L)
      if (!set_contains(L, B.lambda_of(a, l))) {
        stable = false;
        break;
      }
  out.flags.lambda_stable = stable;
  out.flags.normal_in_add = out.flags.add_subgroup && is_normal_set(B.add(), L, nullptr);
  out.flags.normal_in_mul = out.flags.mul_subgroup && is_normal_set(B.mul(), L, nullptr);

  // an additive subgroup that is lambda-stable is automatically closed
  // under * (ab = a + lambda_a(b)), hence a subbrace
  assert(!(out.flags.add_subgroup && out.flags.lambda_stable) || out.flags.mul_subgroup);

  if (out.flags.add_subgroup && out.flags.mul_subgroup) {
    out.kind = SubstructureKind::Subbrace;
    if (out.flags.lambda_stable) {
      out.kind = SubstructureKind::LeftIdeal;
      if (out.flags.normal_in_add) {
        out.kind = SubstructureKind::StrongLeftIdeal;
        if (out.flags.normal_in_mul) out.kind = SubstructureKind::Ideal;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotient

BraceQuotientResult brace_quotient(const SkewBrace& B, const std::vector<Elem>& L) {
  SubstructureClass cls = classify_substructure(B, L);
  if (cls.kind != SubstructureKind::Ideal) {
    std::string msg = "brace_quotient: not an ideal (";
    msg += "add_subgroup=" + std::to_string(cls.flags.add_subgroup);
    msg += " lambda_stable=" + std::to_string(cls.flags.lambda_stable);
    msg += " normal_in_add=" + std::to_string(cls.flags.normal_in_add);
    msg += " normal_in_mul=" + std::to_string(cls.flags.normal_in_mul);
    msg += ")";
    throw DomainError(msg);
  }
  std::vector<Elem> I = L;
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());

  const int n = B.order();
  std::vector<Elem> coset(static_cast<size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[static_cast<size_t>(x)] >= 0) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : I) coset[static_cast<size_t>(B.plus(x, m))] = c;
  }
#ifndef NDEBUG
  // for an ideal the additive and multiplicative cosets coincide
  for (Elem x = 0; x < n; ++x)
    for (Elem m : I)
      assert(coset[static_cast<size_t>(B.times(x, m))] == coset[static_cast<size_t>(x)]);
#endif

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<Elem>> qadd(static_cast<size_t>(q),
                                      std::vector<Elem>(static_cast<size_t>(q)));
  std::vector<std::vector<Elem>> qmul = qadd;
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) {
      qadd[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          coset[static_cast<size_t>(B.plus(reps[static_cast<size_t>(a)],
                                           reps[static_cast<size_t>(b)]))];
      qmul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          coset[static_cast<size_t>(B.times(reps[static_cast<size_t>(a)],
                                            reps[static_cast<size_t>(b)]))];
    }
  BraceCheck ck = validate_brace(qadd, qmul);
  if (!ck.ok()) throw DomainError("brace_quotient: quotient failed validation");
  BraceHomCheck hom = is_brace_hom(B, *ck.brace, coset);
  assert(hom.ok());
  return BraceQuotientResult{*ck.brace, std::move(*hom.map), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<SkewBrace> enumerate_braces(const FiniteGroup& K, const Bounds& bounds) {
  if (!K.valid()) throw DomainError("enumerate_braces: missing group");
  const int n = K.order();
  if (n > bounds.brace_enumeration)
    throw BoundExceeded("enumerate_braces: order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bounds.brace_enumeration));

  const std::vector<GroupMap> auts = automorphisms(K, bounds);
  const int m = static_cast<int>(auts.size());
  std::map<std::vector<Elem>, int> aut_index;
  for (int i = 0; i < m; ++i) aut_index.emplace(auts[i].images(), i);
  assert(aut_index.at(GroupMap::identity_map(K).images()) == 0);

  // composition table of Aut(K)
  std::vector<std::vector<int>> comp(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      comp[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          aut_index.at(GroupMap::compose(auts[static_cast<size_t>(i)],
                                         auts[static_cast<size_t>(j)]).images());

  // assignment a -> alpha_a in Aut(K); brace multiplication is then
  // a * b = a + alpha_a(b), and associativity of * is exactly
  // alpha_{a + alpha_a(b)} = alpha_a alpha_b
  std::vector<std::vector<int>> complete;
  std::vector<int> alpha(static_cast<size_t>(n), -1);
  alpha[0] = 0;

  auto propagate = [&](std::vector<int>& st) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem a = 0; a < n; ++a) {
        if (st[static_cast<size_t>(a)] < 0) continue;
        const auto& pa = auts[static_cast<size_t>(st[static_cast<size_t>(a)])].images();
        for (Elem b = 0; b < n; ++b) {
          if (st[static_cast<size_t>(b)] < 0) continue;
          const Elem t = K.mul(a, pa[static_cast<size_t>(b)]);
          const int req = comp[static_cast<size_t>(st[static_cast<size_t>(a)])]
                              [static_cast<size_t>(st[static_cast<size_t>(b)])];
          if (st[static_cast<size_t>(t)] < 0) {
            st[static_cast<size_t>(t)] = req;
            changed = true;
          } else if (st[static_cast<size_t>(t)] != req) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::vector<int>& st) -> void {
    Elem free = -1;
    for (Elem a = 0; a < n; ++a)
      if (st[static_cast<size_t>(a)] < 0) {
        free = a;
        break;
      }
    if (free < 0) {
      complete.push_back(st);
      return;
    }
    for (int c = 0; c < m; ++c) {
      std::vector<int> next = st;
      next[static_cast<size_t>(free)] = c;
      if (propagate(next)) self(self, next);
    }
  };
  if (propagate(alpha)) dfs(dfs, alpha);

  std::vector<std::vector<std::vector<Elem>>> tables;
  for (const auto& st : complete) {
    std::vector<std::vector<Elem>> mul(static_cast<size_t>(n),
                                       std::vector<Elem>(static_cast<size_t>(n)));
    for (Elem a = 0; a < n; ++a) {
      const auto& pa = auts[static_cast<size_t>(st[static_cast<size_t>(a)])].images();
      for (Elem b = 0; b < n; ++b)
        mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            K.mul(a, pa[static_cast<size_t>(b)]);
    }
    tables.push_back(std::move(mul));
  }
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());

  std::vector<SkewBrace> out;
  out.reserve(tables.size());
  for (const auto& mul : tables) {
    GroupCheck ck = validate_group(mul, bounds);
    if (!ck.ok()) throw DomainError("enumerate_braces: candidate table failed validation");
    out.push_back(make_brace(K, *ck.group, bounds));
  }
  return out;
}

}  // namespace tribrace
