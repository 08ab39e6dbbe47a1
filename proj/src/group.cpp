#include "igt/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "igt/numtheory.hpp"

namespace igt {

std::vector<Element> to_members(const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
    out.push_back(static_cast<Element>(i));
  return out;
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         std::vector<std::string> labels, std::string spec_text)
    : order_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      spec_text_(std::move(spec_text)) {
  if (order_ == 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != order_ * order_) throw std::invalid_argument("table size mismatch");
  if (labels_.size() != order_) throw std::invalid_argument("label count mismatch");
  for (Element x = 0; x < order_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x)
      throw std::invalid_argument("element 0 is not the identity");

  inv_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    auto r = row(x);
    auto it = std::find(r.begin(), r.end(), identity);
    if (it == r.end()) throw std::invalid_argument("element " + labels_[x] + " has no inverse");
    inv_[x] = static_cast<Element>(it - r.begin());
  }

  orders_.assign(order_, 1);
  for (Element x = 1; x < order_; ++x) {
    std::uint32_t k = 1;
    Element y = x;
    while (y != identity) {
      y = mul(y, x);
      if (++k > order_) throw std::invalid_argument("element of infinite order in table");
    }
    orders_[x] = k;
  }

  std::vector<Element> by_order(order_);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders_[a] > orders_[b]; });
  ElementSet span = empty_set();
  span.set(identity);
  std::vector<Element> members{identity};
  for (Element x : by_order) {
    if (span.count() == order_) break;
    if (span.test(x)) continue;
    span = adjoin(*this, span, members, generators_, x);
    generators_.push_back(x);
    members = to_members(span);
  }
}

std::uint32_t element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }

ElementSet adjoin(const FiniteGroup& g, const ElementSet& h_set, std::span<const Element> h_members,
                  std::span<const Element> h_gens, Element extra) {
  if (h_set.test(extra)) return h_set;
  const std::size_t n = g.order();
  // Any subgroup larger than n / p (p the least prime dividing n) is the whole group.
  const std::size_t saturation = n / smallest_prime_factor(n);

  std::vector<Element> gens(h_gens.begin(), h_gens.end());
  gens.push_back(extra);

  ElementSet result = h_set;
  std::size_t size = h_members.size();
  // The result is a union of left cosets y*H; `reps` holds one representative each.
  std::vector<Element> reps{FiniteGroup::identity};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(s, reps[i]);
      if (result.test(y)) continue;
      for (Element h : h_members) result.set(g.mul(y, h));
      size += h_members.size();
      if (size > saturation) return g.full_set();
      reps.push_back(y);
    }
  }
  return result;
}

ElementSet closure(const FiniteGroup& g, std::span<const Element> seed) {
  ElementSet set = g.empty_set();
  set.set(FiniteGroup::identity);
  std::vector<Element> members{FiniteGroup::identity};
  std::vector<Element> gens;
  for (Element x : seed) {
    if (x >= g.order()) throw std::out_of_range("seed element out of range");
    if (set.test(x)) continue;
    set = adjoin(g, set, members, gens, x);
    gens.push_back(x);
    members = to_members(set);
  }
  return set;
}

bool is_abelian(const FiniteGroup& g) {
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.set(x);
  }
  return z;
}

ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& sub) {
  const auto members = to_members(sub);
  ElementSet seen = g.empty_set();
  std::vector<Element> commutators;
  for (Element x : members)
    for (Element y : members) {
      Element c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!seen.test(c)) {
        seen.set(c);
        commutators.push_back(c);
      }
    }
  return closure(g, commutators);
}

ElementSet derived_subgroup(const FiniteGroup& g) { return commutator_subgroup(g, g.full_set()); }

bool is_nilpotent(const FiniteGroup& g) {
  // The Sylow p-subgroup is normal iff it is the only one, iff the p-elements
  // number exactly p^a.
  for (auto [p, e] : factorize(g.order())) {
    std::size_t sylow_order = 1;
    for (unsigned i = 0; i < e; ++i) sylow_order *= p;
    std::size_t p_elements = 0;
    for (Element x = 0; x < g.order(); ++x) {
      std::uint32_t k = g.element_order(x);
      while (k % p == 0) k /= static_cast<std::uint32_t>(p);
      if (k == 1) ++p_elements;
    }
    if (p_elements != sylow_order) return false;
  }
  return true;
}

bool is_solvable(const FiniteGroup& g) {
  ElementSet current = g.full_set();
  while (current.count() > 1) {
    ElementSet next = commutator_subgroup(g, current);
    if (next == current) return false;
    current = std::move(next);
  }
  return true;
}

bool is_elementary_abelian(const FiniteGroup& g, const ElementSet& sub) {
  const auto members = to_members(sub);
  if (members.size() < 2) return false;
  std::uint32_t prime = g.element_order(members[1]);
  if (!is_prime(prime)) return false;
  for (Element x : members) {
    if (x != FiniteGroup::identity && g.element_order(x) != prime) return false;
    for (Element y : members)
      if (g.mul(x, y) != g.mul(y, x) || !sub.test(g.mul(x, y))) return false;
  }
  return true;
}

std::optional<std::string> find_axiom_violation(const FiniteGroup& g, std::size_t exhaustive_limit,
                                                std::size_t samples) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return "identity fails at " + g.label(x);
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) return "inverse fails at " + g.label(x);
  }
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t tick = 0;
  for (Element x = 0; x < n; ++x) {
    ++tick;
    for (Element y = 0; y < n; ++y) {
      Element z = g.mul(x, y);
      if (z >= n || stamp[z] == tick) return "row of " + g.label(x) + " is not a permutation";
      stamp[z] = tick;
    }
    ++tick;
    for (Element y = 0; y < n; ++y) {
      Element z = g.mul(y, x);
      if (stamp[z] == tick) return "column of " + g.label(x) + " is not a permutation";
      stamp[z] = tick;
    }
  }
  auto check = [&](Element a, Element b, Element c) -> std::optional<std::string> {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      return "associativity fails at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")";
    return std::nullopt;
  };
  if (n <= exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (auto v = check(a, b, c)) return v;
  } else {
    std::mt19937_64 rng(0x1f2e3d4c5b6a7988ULL);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < samples; ++i)
      if (auto v = check(pick(rng), pick(rng), pick(rng))) return v;
  }
  return std::nullopt;
}

}  // namespace igt
