#ifndef IGT_GROUP_HPP
#define IGT_GROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace igt {

using Element = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

// Sorted member list of a bitset.
std::vector<Element> to_members(const ElementSet& set);

/// A finite group given by its full multiplication table.
///
/// Elements are the indices 0..order-1 and 0 is always the identity. The table
/// is stored row-major: mul(a, b) = table[a * order + b]. Construction checks
/// that 0 is a two-sided identity and that every element has an inverse;
/// the remaining axioms are checked on demand by find_axiom_violation().
class FiniteGroup {
 public:
  static constexpr Element identity = 0;

  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
              std::string spec_text);

  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const { return table_[std::size_t{a} * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + std::size_t{a} * order_, order_};
  }

  const std::string& label(Element a) const { return labels_[a]; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& spec_text() const noexcept { return spec_text_; }

  // Cached element orders.
  std::uint32_t element_order(Element a) const { return orders_[a]; }

  // A small generating set, chosen greedily from elements of largest order.
  std::span<const Element> generators() const noexcept { return generators_; }

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const {
    ElementSet s(order_);
    s.set();
    return s;
  }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
  std::string spec_text_;
};

// Smallest k >= 1 with x^k = identity.
std::uint32_t element_order(const FiniteGroup& g, Element x);

// <H, extra> where H is the subgroup with member set `h_set` (sorted list `h_members`)
// generated by `h_gens`. Works coset by coset; stops as soon as the result is known
// to be the whole group.
ElementSet adjoin(const FiniteGroup& g, const ElementSet& h_set, std::span<const Element> h_members,
                  std::span<const Element> h_gens, Element extra);

// Smallest subgroup containing `seed`.
ElementSet closure(const FiniteGroup& g, std::span<const Element> seed);

bool is_abelian(const FiniteGroup& g);
ElementSet center(const FiniteGroup& g);

// Subgroup generated by all commutators [x, y] with x, y in `sub`.
ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& sub);
ElementSet derived_subgroup(const FiniteGroup& g);

// Every Sylow subgroup normal.
bool is_nilpotent(const FiniteGroup& g);
// Derived series reaches the trivial subgroup.
bool is_solvable(const FiniteGroup& g);

// Abelian, and every non-identity member has the same prime order.
bool is_elementary_abelian(const FiniteGroup& g, const ElementSet& sub);

// Checks identity, inverses, the Latin-square property and associativity.
// Associativity is exhaustive up to `exhaustive_limit`, otherwise `samples`
// random triples from a fixed seed are tested. Returns a description of the
// first violation found.
std::optional<std::string> find_axiom_violation(const FiniteGroup& g,
                                                std::size_t exhaustive_limit = 512,
                                                std::size_t samples = 1'000'000);

}  // namespace igt

#endif  // IGT_GROUP_HPP
