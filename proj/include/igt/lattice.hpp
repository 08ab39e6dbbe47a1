#ifndef IGT_LATTICE_HPP
#define IGT_LATTICE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "igt/group.hpp"

namespace igt {

struct Subgroup {
  std::size_t id = 0;
  std::vector<Element> members;  // sorted
  ElementSet set;
  std::size_t order = 0;
  bool is_normal = false;
  bool is_maximal = false;
};

/// Every subgroup of a finite group, sorted by (order, member list).
///
/// Id 0 is the trivial subgroup and the last id is the whole group. The
/// lattice keeps the group alive and is immutable once built.
class SubgroupLattice {
 public:
  SubgroupLattice(std::shared_ptr<const FiniteGroup> group, std::vector<Subgroup> subgroups);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const noexcept { return group_; }

  std::span<const Subgroup> subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& at(std::size_t id) const { return subgroups_.at(id); }
  const Subgroup& trivial() const { return subgroups_.front(); }
  const Subgroup& whole() const { return subgroups_.back(); }

  const std::map<std::size_t, std::size_t>& counts_by_order() const noexcept { return counts_; }
  std::size_t count_of_order(std::size_t order) const;

  // Id of the subgroup with exactly this member set.
  std::optional<std::size_t> find(const ElementSet& set) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::map<std::size_t, std::size_t> counts_;
  std::unordered_map<ElementSet, std::size_t> index_;
};

// Bottom-up join closure: cyclic subgroups first, then joins with cyclic
// subgroups of prime-power order until nothing new appears. Annotates
// normality and maximality. Throws GuardExceeded past `max_subgroups`.
SubgroupLattice enumerate_subgroups(std::shared_ptr<const FiniteGroup> group,
                                    std::size_t max_subgroups = 20000);

// Intersection of all maximal subgroups (the whole group if there are none).
const Subgroup& frattini(const SubgroupLattice& lattice);

// {g : g H g^-1 = H}
const Subgroup& normalizer(const SubgroupLattice& lattice, const Subgroup& h);

// Number of subgroups of order p^k is 1 mod p. Throws InputError unless p is
// prime and p^k divides |G|.
bool sylow_congruence_check(const SubgroupLattice& lattice, std::size_t p, unsigned k);

// |XY| |X n Y| = |X| |Y| with XY computed as an explicit set.
bool product_formula_check(const FiniteGroup& g, const Subgroup& x, const Subgroup& y);

// Normal subgroups that are minimal among the non-trivial normal subgroups.
std::vector<const Subgroup*> minimal_normal_subgroups(const SubgroupLattice& lattice);

// {"group", "order", "counts_by_order", "subgroups": [{"id", "order", "members", "normal", "maximal"}]}
nlohmann::ordered_json lattice_to_json(const SubgroupLattice& lattice);

}  // namespace igt

#endif  // IGT_LATTICE_HPP
