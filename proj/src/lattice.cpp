#include "igt/lattice.hpp"

#include <algorithm>

#include "igt/errors.hpp"
#include "igt/numtheory.hpp"

namespace igt {

SubgroupLattice::SubgroupLattice(std::shared_ptr<const FiniteGroup> group, std::vector<Subgroup> subgroups)
    : group_(std::move(group)), subgroups_(std::move(subgroups)) {
  for (const auto& s : subgroups_) {
    ++counts_[s.order];
    index_.emplace(s.set, s.id);
  }
}

std::size_t SubgroupLattice::count_of_order(std::size_t order) const {
  auto it = counts_.find(order);
  return it == counts_.end() ? 0 : it->second;
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& set) const {
  auto it = index_.find(set);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Candidate {
  ElementSet set;
  std::vector<Element> members;
  std::vector<Element> gens;
};

bool is_normal_in(const FiniteGroup& g, const Candidate& c) {
  for (Element s : g.generators()) {
    Element s_inv = g.inv(s);
    for (Element h : c.members)
      if (!c.set.test(g.mul(g.mul(s, h), s_inv))) return false;
  }
  return true;
}

}  // namespace

SubgroupLattice enumerate_subgroups(std::shared_ptr<const FiniteGroup> group, std::size_t max_subgroups) {
  const FiniteGroup& g = *group;
  std::vector<Candidate> found;
  std::unordered_map<ElementSet, std::size_t> seen;

  auto insert = [&](ElementSet set, std::vector<Element> gens) -> bool {
    if (seen.contains(set)) return false;
    if (found.size() >= max_subgroups)
      throw GuardExceeded("more than " + std::to_string(max_subgroups) + " subgroups in " + g.spec_text());
    seen.emplace(set, found.size());
    auto members = to_members(set);
    found.push_back({std::move(set), std::move(members), std::move(gens)});
    return true;
  };

  ElementSet trivial = g.empty_set();
  trivial.set(FiniteGroup::identity);
  insert(trivial, {});

  // Cyclic subgroups. Those of prime-power order generate every subgroup.
  std::vector<Element> joiners;
  for (Element x = 1; x < g.order(); ++x) {
    ElementSet cyc = g.empty_set();
    for (Element y = x; !cyc.test(y); y = g.mul(y, x)) cyc.set(y);
    const bool fresh = insert(std::move(cyc), {x});
    if (fresh && as_prime_power(g.element_order(x))) joiners.push_back(x);
  }

  for (std::size_t i = 1; i < found.size(); ++i) {
    for (Element x : joiners) {
      if (found[i].set.test(x)) continue;
      ElementSet joined = adjoin(g, found[i].set, found[i].members, found[i].gens, x);
      if (seen.contains(joined)) continue;
      std::vector<Element> gens = found[i].gens;
      gens.push_back(x);
      insert(std::move(joined), std::move(gens));
    }
  }

  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });

  std::vector<Subgroup> subgroups(found.size());
  for (std::size_t id = 0; id < found.size(); ++id) {
    Subgroup& s = subgroups[id];
    s.id = id;
    s.order = found[id].members.size();
    s.is_normal = is_normal_in(g, found[id]);
    s.set = std::move(found[id].set);
    s.members = std::move(found[id].members);
  }

  // H is maximal iff it is proper and no proper subgroup strictly contains it.
  const std::size_t n = g.order();
  for (auto& h : subgroups) {
    if (h.order == n) continue;
    h.is_maximal = std::none_of(subgroups.begin(), subgroups.end(), [&](const Subgroup& k) {
      return k.order > h.order && k.order < n && k.order % h.order == 0 && h.set.is_subset_of(k.set);
    });
  }

  return SubgroupLattice(std::move(group), std::move(subgroups));
}

const Subgroup& frattini(const SubgroupLattice& lattice) {
  ElementSet meet = lattice.group().full_set();
  for (const auto& s : lattice.subgroups())
    if (s.is_maximal) meet &= s.set;
  return lattice.at(*lattice.find(meet));
}

const Subgroup& normalizer(const SubgroupLattice& lattice, const Subgroup& h) {
  const FiniteGroup& g = lattice.group();
  ElementSet norm = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    Element x_inv = g.inv(x);
    bool stable = std::all_of(h.members.begin(), h.members.end(),
                              [&](Element m) { return h.set.test(g.mul(g.mul(x, m), x_inv)); });
    if (stable) norm.set(x);
  }
  return lattice.at(*lattice.find(norm));
}

bool sylow_congruence_check(const SubgroupLattice& lattice, std::size_t p, unsigned k) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::size_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  if (lattice.group().order() % pk != 0)
    throw InputError(std::to_string(p) + "^" + std::to_string(k) + " does not divide the group order");
  return lattice.count_of_order(pk) % p == 1 % p;
}

bool product_formula_check(const FiniteGroup& g, const Subgroup& x, const Subgroup& y) {
  ElementSet xy = g.empty_set();
  for (Element a : x.members)
    for (Element b : y.members) xy.set(g.mul(a, b));
  const std::size_t meet = (x.set & y.set).count();
  return xy.count() * meet == x.order * y.order;
}

std::vector<const Subgroup*> minimal_normal_subgroups(const SubgroupLattice& lattice) {
  std::vector<const Subgroup*> normals;
  for (const auto& s : lattice.subgroups())
    if (s.is_normal && s.order > 1) normals.push_back(&s);
  std::vector<const Subgroup*> out;
  for (const Subgroup* n : normals) {
    bool minimal = std::none_of(normals.begin(), normals.end(), [&](const Subgroup* m) {
      return m->order < n->order && m->set.is_subset_of(n->set);
    });
    if (minimal) out.push_back(n);
  }
  return out;
}

nlohmann::ordered_json lattice_to_json(const SubgroupLattice& lattice) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (auto [order, count] : lattice.counts_by_order()) counts[std::to_string(order)] = count;
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const auto& s : lattice.subgroups())
    subs.push_back({{"id", s.id},
                    {"order", s.order},
                    {"members", s.members},
                    {"normal", s.is_normal},
                    {"maximal", s.is_maximal}});
  return {{"group", lattice.group().spec_text()},
          {"order", lattice.group().order()},
          {"counts_by_order", counts},
          {"subgroups", subs}};
}

}  // namespace igt
