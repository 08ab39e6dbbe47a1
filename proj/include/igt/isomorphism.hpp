#ifndef IGT_ISOMORPHISM_HPP
#define IGT_ISOMORPHISM_HPP

#include <cstddef>

#include "igt/group.hpp"

namespace igt {

// Decides G ~= H by backtracking over images of G's generating set. Candidate
// images are pruned by element order and centraliser size; the groups are first
// compared on element-order profile, centre size, commutativity and derived
// subgroup order. Throws GuardExceeded when either order is above `max_order`.
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::size_t max_order = 512);

}  // namespace igt

#endif  // IGT_ISOMORPHISM_HPP
