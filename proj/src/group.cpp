#include "tribrace/group.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace tribrace {

// ---------------------------------------------------------------------------
// Bounds

static int env_bound(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed <= 0) return fallback;
  return static_cast<int>(parsed);
}

Bounds Bounds::from_env() {
  Bounds b;
  b.full_assoc_check = env_bound("TRIFACT_BOUND_ASSOC", b.full_assoc_check);
  b.dense_table = env_bound("TRIFACT_BOUND_DENSE", b.dense_table);
  b.automorphism_search = env_bound("TRIFACT_BOUND_AUT", b.automorphism_search);
  b.isomorphism_search = env_bound("TRIFACT_BOUND_ISO", b.isomorphism_search);
  b.normal_subgroup_search = env_bound("TRIFACT_BOUND_NORMAL", b.normal_subgroup_search);
  b.subgroup_search = env_bound("TRIFACT_BOUND_SUBGROUP", b.subgroup_search);
  b.brace_enumeration = env_bound("TRIFACT_BOUND_ENUM", b.brace_enumeration);
  b.eager_decomposition = env_bound("TRIFACT_BOUND_DECOMP", b.eager_decomposition);
  return b;
}

const Bounds& Bounds::active() {
  static const Bounds b = Bounds::from_env();
  return b;
}

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Impl {
  int n = 0;
  std::vector<std::int32_t> table;    // n*n row-major when materialized
  std::vector<std::int32_t> inverse;  // size n, always present
  std::optional<SemidirectData> sd;
};

struct GroupBuilder {
  using Impl = FiniteGroup::Impl;
  static std::shared_ptr<Impl> make_impl() { return std::make_shared<Impl>(); }
  static FiniteGroup wrap(std::shared_ptr<const Impl> impl) {
    return FiniteGroup(std::move(impl));
  }
};

int FiniteGroup::order() const noexcept { return impl_ ? impl_->n : 0; }

Elem FiniteGroup::mul(Elem x, Elem y) const {
  const Impl& im = *impl_;
  assert(x >= 0 && x < im.n && y >= 0 && y < im.n);
  if (!im.table.empty()) return im.table[static_cast<size_t>(x) * im.n + y];
  const SemidirectData& sd = *im.sd;
  const int na = sd.actor.order();
  const Elem k1 = x / na, e1 = x % na, k2 = y / na, e2 = y % na;
  return sd.base.mul(k1, sd.action[static_cast<size_t>(e1)][static_cast<size_t>(k2)]) * na +
         sd.actor.mul(e1, e2);
}

Elem FiniteGroup::inv(Elem x) const {
  assert(x >= 0 && x < impl_->n);
  return impl_->inverse[static_cast<size_t>(x)];
}

Elem FiniteGroup::conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

int FiniteGroup::element_order(Elem x) const {
  int ord = 1;
  Elem cur = x;
  while (cur != identity) {
    cur = mul(cur, x);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_semidirect() const noexcept { return impl_ && impl_->sd.has_value(); }

const SemidirectData& FiniteGroup::semidirect_data() const {
  if (!is_semidirect()) throw DomainError("semidirect_data: group has no semidirect realization");
  return *impl_->sd;
}

bool FiniteGroup::has_table() const noexcept { return impl_ && !impl_->table.empty(); }

bool FiniteGroup::same_group(const FiniteGroup& other) const noexcept {
  return impl_ == other.impl_;
}

bool FiniteGroup::table_equal(const FiniteGroup& other) const {
  if (!valid() || !other.valid()) return valid() == other.valid();
  if (order() != other.order()) return false;
  if (same_group(other)) return true;
  const int n = order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (mul(x, y) != other.mul(x, y)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::table_copy() const {
  const int n = order();
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[static_cast<size_t>(x) * n + y] = mul(x, y);
  return t;
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(GroupDefect d) {
  switch (d) {
    case GroupDefect::BadShape: return "BadShape";
    case GroupDefect::NoIdentity: return "NoIdentity";
    case GroupDefect::NoInverse: return "NoInverse";
    case GroupDefect::NonAssociative: return "NonAssociative";
    case GroupDefect::ActionNotPermutation: return "ActionNotPermutation";
    case GroupDefect::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case GroupDefect::ActionNotHomomorphism: return "ActionNotHomomorphism";
  }
  return "?";
}

static void push_violation(GroupCheck& ck, GroupDefect kind, std::array<Elem, 3> witness,
                           std::string detail) {
  ck.violations.push_back(GroupViolation{kind, witness, std::move(detail)});
}

// Light's associativity test: with S generating the magma (closure under
// products from the identity), associativity is equivalent to
// (x*g)*y == x*(g*y) for all g in S and all x, y.
static bool light_assoc_check(const FiniteGroup& G, std::span<const Elem> gens,
                              std::array<Elem, 3>* witness) {
  const int n = G.order();
  for (Elem g : gens)
    for (Elem x = 0; x < n; ++x) {
      const Elem xg = G.mul(x, g);
      for (Elem y = 0; y < n; ++y)
        if (G.mul(xg, y) != G.mul(x, G.mul(g, y))) {
          if (witness) *witness = {x, g, y};
          return false;
        }
    }
  return true;
}

static bool sampled_assoc_check(const FiniteGroup& G, int samples,
                                std::array<Elem, 3>* witness) {
  const int n = G.order();
  std::mt19937 rng(0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < samples; ++i) {
    const Elem x = pick(rng), y = pick(rng), z = pick(rng);
    if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z))) {
      if (witness) *witness = {x, y, z};
      return false;
    }
  }
  return true;
}

GroupCheck validate_group(const std::vector<std::vector<Elem>>& table, const Bounds& bounds) {
  GroupCheck ck;
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    push_violation(ck, GroupDefect::BadShape, {-1, -1, -1}, "empty table");
    return ck;
  }
  for (Elem x = 0; x < n; ++x) {
    if (static_cast<int>(table[static_cast<size_t>(x)].size()) != n) {
      push_violation(ck, GroupDefect::BadShape, {x, -1, -1},
                     "row " + std::to_string(x) + " has wrong length");
      return ck;
    }
    for (Elem y = 0; y < n; ++y) {
      const Elem v = table[static_cast<size_t>(x)][static_cast<size_t>(y)];
      if (v < 0 || v >= n) {
        push_violation(ck, GroupDefect::BadShape, {x, y, v}, "entry out of range");
        return ck;
      }
    }
  }

  bool structure_ok = true;
  for (Elem x = 0; x < n; ++x)
    if (table[0][static_cast<size_t>(x)] != x || table[static_cast<size_t>(x)][0] != x) {
      push_violation(ck, GroupDefect::NoIdentity, {x, -1, -1},
                     "index 0 is not a two-sided identity at " + std::to_string(x));
      structure_ok = false;
      break;
    }

  std::vector<std::int32_t> inverse(static_cast<size_t>(n), -1);
  if (structure_ok) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y)
        if (table[static_cast<size_t>(x)][static_cast<size_t>(y)] == 0 &&
            table[static_cast<size_t>(y)][static_cast<size_t>(x)] == 0) {
          inverse[static_cast<size_t>(x)] = y;
          break;
        }
      if (inverse[static_cast<size_t>(x)] < 0) {
        push_violation(ck, GroupDefect::NoInverse, {x, -1, -1},
                       "no two-sided inverse for " + std::to_string(x));
        structure_ok = false;
        break;
      }
    }
  }
  if (!structure_ok) return ck;

  auto impl = GroupBuilder::make_impl();
  impl->n = n;
  impl->table.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      impl->table[static_cast<size_t>(x) * n + y] =
          table[static_cast<size_t>(x)][static_cast<size_t>(y)];
  impl->inverse = std::move(inverse);
  FiniteGroup G = GroupBuilder::wrap(impl);

  std::array<Elem, 3> w{-1, -1, -1};
  if (n <= bounds.full_assoc_check) {
    ck.certified_full_assoc = true;
    for (Elem x = 0; x < n && structure_ok; ++x)
      for (Elem y = 0; y < n && structure_ok; ++y)
        for (Elem z = 0; z < n; ++z)
          if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z))) {
            push_violation(ck, GroupDefect::NonAssociative, {x, y, z}, "associativity fails");
            structure_ok = false;
            break;
          }
  } else {
    // greedy_generators only needs a closed binary operation
    const std::vector<Elem> gens = greedy_generators(G);
    if (!light_assoc_check(G, gens, &w) || !sampled_assoc_check(G, bounds.assoc_samples, &w)) {
      push_violation(ck, GroupDefect::NonAssociative, w, "associativity fails");
      structure_ok = false;
    }
  }
  if (!structure_ok) return ck;

  ck.group = std::move(G);
  return ck;
}

GroupCheck validate_semidirect(const FiniteGroup& base, const FiniteGroup& actor,
                               const std::vector<std::vector<Elem>>& action,
                               const Bounds& bounds) {
  GroupCheck ck;
  if (!base.valid() || !actor.valid()) {
    push_violation(ck, GroupDefect::BadShape, {-1, -1, -1}, "base or actor missing");
    return ck;
  }
  const int nb = base.order(), na = actor.order();
  if (static_cast<int>(action.size()) != na) {
    push_violation(ck, GroupDefect::BadShape, {-1, -1, -1},
                   "action must have one permutation per actor element");
    return ck;
  }
  for (Elem e = 0; e < na; ++e) {
    if (static_cast<int>(action[static_cast<size_t>(e)].size()) != nb) {
      push_violation(ck, GroupDefect::BadShape, {e, -1, -1}, "action row has wrong length");
      return ck;
    }
    for (Elem x = 0; x < nb; ++x) {
      const Elem v = action[static_cast<size_t>(e)][static_cast<size_t>(x)];
      if (v < 0 || v >= nb) {
        push_violation(ck, GroupDefect::BadShape, {e, x, v}, "action entry out of range");
        return ck;
      }
    }
  }

  bool ok = true;
  for (Elem e = 0; e < na && ok; ++e) {
    const auto& p = action[static_cast<size_t>(e)];
    std::vector<char> seen(static_cast<size_t>(nb), 0);
    for (Elem x = 0; x < nb; ++x) {
      if (seen[static_cast<size_t>(p[static_cast<size_t>(x)])]) {
        push_violation(ck, GroupDefect::ActionNotPermutation, {e, x, -1},
                       "action of " + std::to_string(e) + " is not a bijection");
        ok = false;
        break;
      }
      seen[static_cast<size_t>(p[static_cast<size_t>(x)])] = 1;
    }
    if (!ok) break;
    for (Elem x = 0; x < nb && ok; ++x)
      for (Elem y = 0; y < nb; ++y)
        if (p[static_cast<size_t>(base.mul(x, y))] !=
            base.mul(p[static_cast<size_t>(x)], p[static_cast<size_t>(y)])) {
          push_violation(ck, GroupDefect::ActionNotAutomorphism, {e, x, y},
                         "action of " + std::to_string(e) + " is not an automorphism");
          ok = false;
          break;
        }
  }
  if (!ok) return ck;

  for (Elem e1 = 0; e1 < na && ok; ++e1)
    for (Elem e2 = 0; e2 < na && ok; ++e2) {
      const auto& p12 = action[static_cast<size_t>(actor.mul(e1, e2))];
      const auto& p1 = action[static_cast<size_t>(e1)];
      const auto& p2 = action[static_cast<size_t>(e2)];
      for (Elem x = 0; x < nb; ++x)
        if (p12[static_cast<size_t>(x)] !=
            p1[static_cast<size_t>(p2[static_cast<size_t>(x)])]) {
          push_violation(ck, GroupDefect::ActionNotHomomorphism, {e1, e2, x},
                         "action is not a homomorphism into Aut(base)");
          ok = false;
          break;
        }
    }
  if (!ok) return ck;

  const int n = nb * na;
  auto impl = GroupBuilder::make_impl();
  impl->n = n;
  impl->sd = SemidirectData{base, actor, action};
  impl->inverse.resize(static_cast<size_t>(n));
  for (Elem k = 0; k < nb; ++k)
    for (Elem e = 0; e < na; ++e) {
      const Elem ei = actor.inv(e);
      const Elem ki = action[static_cast<size_t>(ei)][static_cast<size_t>(base.inv(k))];
      impl->inverse[static_cast<size_t>(k * na + e)] = ki * na + ei;
    }
  if (n <= bounds.dense_table) {
    impl->table.resize(static_cast<size_t>(n) * n);
    for (Elem x = 0; x < n; ++x) {
      const Elem k1 = x / na, e1 = x % na;
      const auto& p1 = action[static_cast<size_t>(e1)];
      for (Elem y = 0; y < n; ++y) {
        const Elem k2 = y / na, e2 = y % na;
        impl->table[static_cast<size_t>(x) * n + y] =
            base.mul(k1, p1[static_cast<size_t>(k2)]) * na + actor.mul(e1, e2);
      }
    }
  }
  FiniteGroup G = GroupBuilder::wrap(impl);

  // associativity holds by construction once the action is certified; the
  // sampled scan is cheap insurance against construction bugs
  std::array<Elem, 3> w{-1, -1, -1};
  if (n <= bounds.full_assoc_check) {
    ck.certified_full_assoc = true;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z))) {
            push_violation(ck, GroupDefect::NonAssociative, {x, y, z}, "associativity fails");
            return ck;
          }
  } else if (!sampled_assoc_check(G, bounds.assoc_samples, &w)) {
    push_violation(ck, GroupDefect::NonAssociative, w, "associativity fails");
    return ck;
  }

  ck.group = std::move(G);
  return ck;
}

FiniteGroup semidirect_product(const FiniteGroup& base, const FiniteGroup& actor,
                               const std::vector<std::vector<Elem>>& action,
                               const Bounds& bounds) {
  GroupCheck ck = validate_semidirect(base, actor, action, bounds);
  if (!ck.ok()) {
    std::string msg = "semidirect_product:";
    for (const auto& v : ck.violations) msg += " " + to_string(v.kind) + " (" + v.detail + ")";
    throw DomainError(msg);
  }
  return *ck.group;
}

// ---------------------------------------------------------------------------
// Subgroup machinery

bool set_contains(std::span<const Elem> sorted, Elem x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool subset_of(std::span<const Elem> A, std::span<const Elem> B) {
  return std::includes(B.begin(), B.end(), A.begin(), A.end());
}

std::vector<Elem> intersection(std::span<const Elem> A, std::span<const Elem> B) {
  std::vector<Elem> out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

std::vector<Elem> product_set(const FiniteGroup& G, std::span<const Elem> A,
                              std::span<const Elem> B) {
  std::vector<char> in(static_cast<size_t>(G.order()), 0);
  std::vector<Elem> out;
  out.reserve(A.size() * B.size());
  for (Elem a : A)
    for (Elem b : B) {
      const Elem p = G.mul(a, b);
      if (!in[static_cast<size_t>(p)]) {
        in[static_cast<size_t>(p)] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> inverse_set(const FiniteGroup& G, std::span<const Elem> A) {
  std::vector<Elem> out;
  out.reserve(A.size());
  for (Elem a : A) out.push_back(G.inv(a));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup_set(const FiniteGroup& G, std::span<const Elem> S,
                     std::array<Elem, 2>* witness) {
  if (S.empty() || !set_contains(S, FiniteGroup::identity)) {
    if (witness) *witness = {FiniteGroup::identity, -1};
    return false;
  }
  for (Elem a : S)
    for (Elem b : S)
      if (!set_contains(S, G.mul(a, b))) {
        if (witness) *witness = {a, b};
        return false;
      }
#ifndef NDEBUG
  // finite and product-closed, so inverse-closed; assert the implication
  for (Elem a : S) assert(set_contains(S, G.inv(a)));
#endif
  return true;
}

bool is_normal_set(const FiniteGroup& G, std::span<const Elem> S,
                   std::array<Elem, 2>* witness) {
  const int n = G.order();
  for (Elem g = 0; g < n; ++g)
    for (Elem s : S)
      if (!set_contains(S, G.conj(g, s))) {
        if (witness) *witness = {g, s};
        return false;
      }
  return true;
}

bool is_normal(const FiniteGroup& G, const SubgroupSet& S) {
  if (!S.parent().same_group(G)) throw DomainError("is_normal: subgroup of a different group");
  return is_normal_set(G, S.members(), nullptr);
}

SubgroupSet::SubgroupSet(FiniteGroup parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_.valid()) throw DomainError("SubgroupSet: missing parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem m : members_)
    if (m < 0 || m >= parent_.order())
      throw DomainError("SubgroupSet: index " + std::to_string(m) + " out of range");
  std::array<Elem, 2> w{-1, -1};
  if (!is_subgroup_set(parent_, members_, &w))
    throw DomainError("SubgroupSet: not a subgroup (witness " + std::to_string(w[0]) + "," +
                      std::to_string(w[1]) + ")");
}

bool SubgroupSet::contains(Elem x) const { return set_contains(members_, x); }

bool SubgroupSet::set_equal(const SubgroupSet& other) const {
  return parent_.same_group(other.parent_) && members_ == other.members_;
}

bool SubgroupSet::lex_less(const SubgroupSet& a, const SubgroupSet& b) {
  return std::lexicographical_compare(a.members_.begin(), a.members_.end(),
                                      b.members_.begin(), b.members_.end());
}

struct SubgroupBuilder {
  // callers guarantee members is a sorted subgroup
  static SubgroupSet wrap(FiniteGroup parent, std::vector<Elem> members) {
    return SubgroupSet(SubgroupSet::Unchecked{}, std::move(parent), std::move(members));
  }
};

static std::vector<Elem> closure_members(const FiniteGroup& G, std::span<const Elem> gens) {
  std::vector<char> in(static_cast<size_t>(G.order()), 0);
  std::vector<Elem> members;
  members.push_back(FiniteGroup::identity);
  in[FiniteGroup::identity] = 1;
  std::queue<Elem> q;
  q.push(FiniteGroup::identity);
  for (Elem g : gens)
    if (!in[static_cast<size_t>(g)]) {
      in[static_cast<size_t>(g)] = 1;
      members.push_back(g);
      q.push(g);
    }
  while (!q.empty()) {
    const Elem x = q.front();
    q.pop();
    for (Elem g : gens) {
      const Elem y = G.mul(x, g);
      if (!in[static_cast<size_t>(y)]) {
        in[static_cast<size_t>(y)] = 1;
        members.push_back(y);
        q.push(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubgroupSet generated_subgroup(const FiniteGroup& G, std::span<const Elem> gens) {
  if (!G.valid()) throw DomainError("generated_subgroup: missing group");
  for (Elem g : gens)
    if (g < 0 || g >= G.order())
      throw DomainError("generated_subgroup: index " + std::to_string(g) + " out of range");
  return SubgroupBuilder::wrap(G, closure_members(G, gens));
}

SubgroupSet normal_closure(const FiniteGroup& G, std::span<const Elem> gens) {
  std::vector<Elem> seed;
  const int n = G.order();
  for (Elem g : gens) {
    if (g < 0 || g >= n)
      throw DomainError("normal_closure: index " + std::to_string(g) + " out of range");
    for (Elem x = 0; x < n; ++x) seed.push_back(G.conj(x, g));
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  SubgroupSet S = generated_subgroup(G, seed);
  assert(is_normal_set(G, S.members(), nullptr));
  return S;
}

SubgroupSet trivial_subgroup(const FiniteGroup& G) {
  return SubgroupBuilder::wrap(G, {FiniteGroup::identity});
}

SubgroupSet full_subgroup(const FiniteGroup& G) {
  std::vector<Elem> all(static_cast<size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) all[static_cast<size_t>(i)] = i;
  return SubgroupBuilder::wrap(G, std::move(all));
}

std::vector<Elem> normalizer(const FiniteGroup& G, std::span<const Elem> S) {
  std::vector<Elem> out;
  const int n = G.order();
  for (Elem g = 0; g < n; ++g) {
    bool all_in = true;
    for (Elem s : S)
      if (!set_contains(S, G.conj(g, s))) {
        all_in = false;
        break;
      }
    // conjugation by g permutes S when it maps S into S (S finite)
    if (all_in) out.push_back(g);
  }
  return out;
}

std::vector<Elem> centralizer_in(const FiniteGroup& G, std::span<const Elem> A,
                                 std::span<const Elem> B) {
  std::vector<Elem> out;
  for (Elem a : A) {
    bool commutes = true;
    for (Elem b : B)
      if (G.mul(a, b) != G.mul(b, a)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(a);
  }
  return out;
}

bool dedekind_identity_holds(const FiniteGroup& G, std::span<const Elem> A,
                             std::span<const Elem> B, std::span<const Elem> C) {
  assert(subset_of(A, C));
  const std::vector<Elem> lhs = product_set(G, A, intersection(B, C));
  const std::vector<Elem> rhs = intersection(product_set(G, A, B), C);
  return lhs == rhs;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, std::span<const Elem> members) {
  std::vector<Elem> S(members.begin(), members.end());
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  const int n = G.order();
  const int m = static_cast<int>(S.size());
  if (m == 0 || S.front() < 0 || S.back() >= n)
    throw DomainError("subgroup_as_group: members out of range");
  std::vector<Elem> pos(static_cast<size_t>(n), -1);
  for (Elem i = 0; i < m; ++i) pos[static_cast<size_t>(S[static_cast<size_t>(i)])] = i;
  std::vector<std::vector<Elem>> table(static_cast<size_t>(m),
                                       std::vector<Elem>(static_cast<size_t>(m)));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const Elem p = G.mul(S[static_cast<size_t>(i)], S[static_cast<size_t>(j)]);
      if (pos[static_cast<size_t>(p)] < 0)
        throw DomainError("subgroup_as_group: set not closed, " +
                          std::to_string(S[static_cast<size_t>(i)]) + " * " +
                          std::to_string(S[static_cast<size_t>(j)]) + " escapes");
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos[static_cast<size_t>(p)];
    }
  GroupCheck ck = validate_group(table);
  if (!ck.ok())
    throw DomainError("subgroup_as_group: " + to_string(ck.violations[0].kind));
  return *ck.group;
}

// ---------------------------------------------------------------------------
// GroupMap

struct MapBuilder {
  static GroupMap wrap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images) {
    return GroupMap(GroupMap::Unchecked{}, std::move(source), std::move(target),
                    std::move(images));
  }
};

GroupMap::GroupMap(Unchecked, FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  std::vector<char> seen(static_cast<size_t>(target_.order()), 0);
  int distinct = 0;
  for (Elem v : images_)
    if (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      ++distinct;
    }
  injective_ = distinct == static_cast<int>(images_.size());
  surjective_ = distinct == target_.order();
}

std::optional<GroupMap> GroupMap::try_make(FiniteGroup source, FiniteGroup target,
                                           std::vector<Elem> images,
                                           std::array<Elem, 2>* witness) {
  if (!source.valid() || !target.valid())
    throw DomainError("GroupMap: missing source or target");
  if (static_cast<int>(images.size()) != source.order())
    throw DomainError("GroupMap: image array has wrong length");
  for (Elem v : images)
    if (v < 0 || v >= target.order())
      throw DomainError("GroupMap: image out of range");
  const int n = source.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (images[static_cast<size_t>(source.mul(x, y))] !=
          target.mul(images[static_cast<size_t>(x)], images[static_cast<size_t>(y)])) {
        if (witness) *witness = {x, y};
        return std::nullopt;
      }
  return MapBuilder::wrap(std::move(source), std::move(target), std::move(images));
}

GroupMap::GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Elem> images) {
  std::array<Elem, 2> w{-1, -1};
  auto m = try_make(std::move(source), std::move(target), std::move(images), &w);
  if (!m)
    throw DomainError("GroupMap: not a homomorphism (witness " + std::to_string(w[0]) + "," +
                      std::to_string(w[1]) + ")");
  *this = std::move(*m);
}

std::vector<Elem> GroupMap::kernel() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < source_.order(); ++x)
    if (images_[static_cast<size_t>(x)] == FiniteGroup::identity) out.push_back(x);
  return out;
}

std::vector<Elem> GroupMap::image() const {
  std::vector<Elem> out = images_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Elem> GroupMap::image_of(std::span<const Elem> S) const {
  std::vector<Elem> out;
  out.reserve(S.size());
  for (Elem s : S) out.push_back(images_[static_cast<size_t>(s)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Elem> GroupMap::preimage_of(std::span<const Elem> S) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < source_.order(); ++x)
    if (set_contains(S, images_[static_cast<size_t>(x)])) out.push_back(x);
  return out;
}

GroupMap GroupMap::inverted() const {
  if (!bijective()) throw DomainError("GroupMap::inverted: map is not bijective");
  std::vector<Elem> inv(images_.size());
  for (Elem x = 0; x < source_.order(); ++x)
    inv[static_cast<size_t>(images_[static_cast<size_t>(x)])] = x;
  return MapBuilder::wrap(target_, source_, std::move(inv));
}

GroupMap GroupMap::compose(const GroupMap& outer, const GroupMap& inner) {
  if (!inner.target_.same_group(outer.source_))
    throw DomainError("GroupMap::compose: inner target and outer source differ");
  std::vector<Elem> images(inner.images_.size());
  for (size_t i = 0; i < images.size(); ++i)
    images[i] = outer.images_[static_cast<size_t>(inner.images_[i])];
  return MapBuilder::wrap(inner.source_, outer.target_, std::move(images));
}

GroupMap GroupMap::identity_map(const FiniteGroup& G) {
  std::vector<Elem> images(static_cast<size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) images[static_cast<size_t>(i)] = i;
  return MapBuilder::wrap(G, G, std::move(images));
}

bool GroupMap::same_map(const GroupMap& other) const {
  return source_.same_group(other.source_) && target_.same_group(other.target_) &&
         images_ == other.images_;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientResult quotient_group(const FiniteGroup& G, const SubgroupSet& N) {
  if (!N.parent().same_group(G))
    throw DomainError("quotient_group: subgroup of a different group");
  std::array<Elem, 2> w{-1, -1};
  if (!is_normal_set(G, N.members(), &w))
    throw DomainError("quotient_group: subgroup not normal (witness " + std::to_string(w[0]) +
                      "," + std::to_string(w[1]) + ")");
  const int n = G.order();
  std::vector<Elem> coset(static_cast<size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[static_cast<size_t>(x)] >= 0) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);  // ascending scan, so reps are least-index
    for (Elem m : N.members()) coset[static_cast<size_t>(G.mul(x, m))] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<Elem>> table(static_cast<size_t>(q),
                                       std::vector<Elem>(static_cast<size_t>(q)));
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          coset[static_cast<size_t>(G.mul(reps[static_cast<size_t>(a)],
                                          reps[static_cast<size_t>(b)]))];
  GroupCheck ck = validate_group(table);
  assert(ck.ok());
  QuotientResult out{*ck.group, GroupMap(G, *ck.group, coset), std::move(reps)};
  return out;
}

// ---------------------------------------------------------------------------
// Searches

std::vector<Elem> greedy_generators(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<Elem> gens;
  std::vector<Elem> current{FiniteGroup::identity};
  while (static_cast<int>(current.size()) < n) {
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (Elem c : current) in[static_cast<size_t>(c)] = 1;
    int best_size = -1;
    Elem best = -1;
    std::vector<Elem> best_closure;
    for (Elem x = 0; x < n; ++x) {
      if (in[static_cast<size_t>(x)]) continue;
      gens.push_back(x);
      std::vector<Elem> cl = closure_members(G, gens);
      gens.pop_back();
      if (static_cast<int>(cl.size()) > best_size) {
        best_size = static_cast<int>(cl.size());
        best = x;
        best_closure = std::move(cl);
      }
    }
    gens.push_back(best);
    current = std::move(best_closure);
  }
  return gens;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    std::vector<Elem> cls;
    for (Elem g = 0; g < n; ++g) {
      const Elem y = G.conj(g, x);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& G, const Bounds& bounds) {
  if (G.order() > bounds.normal_subgroup_search)
    throw BoundExceeded("normal_subgroups: order " + std::to_string(G.order()) +
                        " exceeds bound " + std::to_string(bounds.normal_subgroup_search));
  // every normal subgroup is a join of closures of the conjugacy classes it
  // contains, so join-closure over class closures reaches all of them
  std::vector<std::vector<Elem>> closures;
  for (const auto& cls : conjugacy_classes(G)) {
    std::vector<Elem> cl = closure_members(G, cls);
    assert(is_normal_set(G, cl, nullptr));
    closures.push_back(std::move(cl));
  }
  std::set<std::vector<Elem>> found;
  std::queue<std::vector<Elem>> work;
  std::vector<Elem> triv{FiniteGroup::identity};
  found.insert(triv);
  work.push(triv);
  while (!work.empty()) {
    std::vector<Elem> S = std::move(work.front());
    work.pop();
    for (const auto& cl : closures) {
      if (subset_of(cl, S)) continue;
      std::vector<Elem> gens = S;
      gens.insert(gens.end(), cl.begin(), cl.end());
      std::vector<Elem> join = closure_members(G, gens);
      if (found.insert(join).second) work.push(std::move(join));
    }
  }
  std::vector<SubgroupSet> out;
  out.reserve(found.size());
  for (const auto& members : found) out.push_back(SubgroupBuilder::wrap(G, members));
  std::sort(out.begin(), out.end(), SubgroupSet::lex_less);
  return out;
}

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& G, const Bounds& bounds) {
  if (G.order() > bounds.subgroup_search)
    throw BoundExceeded("all_subgroups: order " + std::to_string(G.order()) +
                        " exceeds bound " + std::to_string(bounds.subgroup_search));
  std::set<std::vector<Elem>> found;
  std::queue<std::vector<Elem>> work;
  std::vector<Elem> triv{FiniteGroup::identity};
  found.insert(triv);
  work.push(triv);
  const int n = G.order();
  while (!work.empty()) {
    std::vector<Elem> S = std::move(work.front());
    work.pop();
    for (Elem x = 0; x < n; ++x) {
      if (set_contains(S, x)) continue;
      std::vector<Elem> gens = S;
      gens.push_back(x);
      std::vector<Elem> ext = closure_members(G, gens);
      if (found.insert(ext).second) work.push(std::move(ext));
    }
  }
  std::vector<SubgroupSet> out;
  out.reserve(found.size());
  for (const auto& members : found) out.push_back(SubgroupBuilder::wrap(G, members));
  std::sort(out.begin(), out.end(), SubgroupSet::lex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

// Backtracking over images of a greedy generating sequence of G1. Partial
// maps are grown by closing under products with conflict detection; every
// (element, generator) product is checked, which certifies the full
// homomorphism property on the generated subgroup.
struct IsoSearch {
  const FiniteGroup& G1;
  const FiniteGroup& G2;
  std::vector<Elem> gens;
  std::vector<std::vector<char>> masks1, masks2;  // per-constraint membership
  std::vector<int> eorder1, eorder2;
  bool collect_all = false;
  std::vector<std::vector<Elem>> results;
  std::uint64_t nodes = 0;
  bool stopped = false;

  bool profile_match(Elem x, Elem y) const {
    if (eorder1[static_cast<size_t>(x)] != eorder2[static_cast<size_t>(y)]) return false;
    for (size_t j = 0; j < masks1.size(); ++j)
      if (masks1[j][static_cast<size_t>(x)] != masks2[j][static_cast<size_t>(y)]) return false;
    return true;
  }

  void run() {
    const int n = G1.order();
    std::vector<Elem> f(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<Elem> defined{FiniteGroup::identity};
    f[FiniteGroup::identity] = FiniteGroup::identity;
    used[FiniteGroup::identity] = 1;
    dfs(0, f, used, defined);
  }

  void dfs(size_t level, const std::vector<Elem>& f, const std::vector<char>& used,
           const std::vector<Elem>& defined) {
    if (stopped) return;
    if (level == gens.size()) {
      assert(static_cast<int>(defined.size()) == G1.order());
      results.push_back(f);
      if (!collect_all) stopped = true;
      return;
    }
    const Elem g = gens[level];
    const int n = G1.order();
    for (Elem y = 0; y < n; ++y) {
      if (used[static_cast<size_t>(y)] || !profile_match(g, y)) continue;
      ++nodes;
      std::vector<Elem> nf = f;
      std::vector<char> nused = used;
      std::vector<Elem> ndefined = defined;
      if (extend(level, g, y, nf, nused, ndefined)) {
        dfs(level + 1, nf, nused, ndefined);
        if (stopped) return;
      }
    }
  }

  // close f under products with generators 0..level; every product pair
  // (x, gens[i]) is verified, so a completed map is a homomorphism
  bool extend(size_t level, Elem g, Elem y, std::vector<Elem>& f, std::vector<char>& used,
              std::vector<Elem>& defined) {
    f[static_cast<size_t>(g)] = y;
    used[static_cast<size_t>(y)] = 1;
    defined.push_back(g);
    if (!profile_match(g, y)) return false;
    // re-scan all defined elements against all assigned generators until
    // stable; newly defined elements are appended and scanned in turn
    size_t scanned = 0;
    while (scanned < defined.size()) {
      const Elem x = defined[scanned];
      for (size_t i = 0; i <= level; ++i) {
        const Elem gi = gens[i];
        if (f[static_cast<size_t>(gi)] < 0) continue;
        const Elem xg = G1.mul(x, gi);
        const Elem fxg = G2.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(gi)]);
        if (f[static_cast<size_t>(xg)] < 0) {
          if (used[static_cast<size_t>(fxg)]) return false;  // injectivity
          if (!profile_match(xg, fxg)) return false;
          f[static_cast<size_t>(xg)] = fxg;
          used[static_cast<size_t>(fxg)] = 1;
          defined.push_back(xg);
        } else if (f[static_cast<size_t>(xg)] != fxg) {
          return false;  // relation conflict
        }
      }
      ++scanned;
    }
    return true;
  }
};

}  // namespace

std::vector<GroupMap> automorphisms(const FiniteGroup& G, const Bounds& bounds) {
  if (G.order() > bounds.automorphism_search)
    throw BoundExceeded("automorphisms: order " + std::to_string(G.order()) +
                        " exceeds bound " + std::to_string(bounds.automorphism_search));
  IsoSearch s{G, G, greedy_generators(G), {}, {}, {}, {}, true, {}, 0, false};
  const int n = G.order();
  s.eorder1.resize(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) s.eorder1[static_cast<size_t>(x)] = G.element_order(x);
  s.eorder2 = s.eorder1;
  s.run();
  std::sort(s.results.begin(), s.results.end());
  std::vector<GroupMap> out;
  out.reserve(s.results.size());
  for (auto& images : s.results) out.emplace_back(G, G, std::move(images));
  return out;
}

std::optional<GroupMap> constrained_isomorphism(
    const FiniteGroup& G1, const FiniteGroup& G2,
    const std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>>& constraints,
    const Bounds& bounds, SearchStats* stats) {
  if (stats) *stats = SearchStats{};
  if (!G1.valid() || !G2.valid())
    throw DomainError("constrained_isomorphism: missing group");
  if (G1.order() != G2.order()) {
    if (stats) stats->exhausted = true;  // order is an isomorphism invariant
    return std::nullopt;
  }
  if (G1.order() > bounds.isomorphism_search)
    throw BoundExceeded("constrained_isomorphism: order " + std::to_string(G1.order()) +
                        " exceeds bound " + std::to_string(bounds.isomorphism_search));
  const int n = G1.order();
  IsoSearch s{G1, G2, greedy_generators(G1), {}, {}, {}, {}, false, {}, 0, false};
  for (const auto& [S1, S2] : constraints) {
    if (S1.size() != S2.size()) {
      if (stats) stats->exhausted = true;  // paired sets of unequal size
      return std::nullopt;
    }
    std::vector<char> m1(static_cast<size_t>(n), 0), m2(static_cast<size_t>(n), 0);
    for (Elem x : S1) {
      if (x < 0 || x >= n) throw DomainError("constrained_isomorphism: index out of range");
      m1[static_cast<size_t>(x)] = 1;
    }
    for (Elem x : S2) {
      if (x < 0 || x >= n) throw DomainError("constrained_isomorphism: index out of range");
      m2[static_cast<size_t>(x)] = 1;
    }
    s.masks1.push_back(std::move(m1));
    s.masks2.push_back(std::move(m2));
  }
  s.eorder1.resize(static_cast<size_t>(n));
  s.eorder2.resize(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    s.eorder1[static_cast<size_t>(x)] = G1.element_order(x);
    s.eorder2[static_cast<size_t>(x)] = G2.element_order(x);
  }
  s.run();
  if (stats) {
    stats->nodes = s.nodes;
    stats->exhausted = s.results.empty();
  }
  if (s.results.empty()) return std::nullopt;
  return GroupMap(G1, G2, std::move(s.results.front()));
}

}  // namespace tribrace
