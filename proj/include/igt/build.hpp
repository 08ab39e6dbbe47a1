#ifndef IGT_BUILD_HPP
#define IGT_BUILD_HPP

#include <string_view>

#include "igt/errors.hpp"
#include "igt/group.hpp"
#include "igt/spec.hpp"

namespace igt {

// Realises a spec as a multiplication table.
//
// Element numbering: direct products are left-factor major, (a, b) -> a*|B| + b;
// SDC elements a^x b^y are x*m + y; SDE elements (x0, x1; c^y) are (x0*p + x1)*m + y;
// Perm elements are numbered in breadth-first discovery order from the identity.
// Throws GuardExceeded when the order would exceed limits.max_group_order and
// ParameterError when an invariant fails (including non-permutation generators).
FiniteGroup build(const GroupSpec& spec, const Limits& limits = {});

// parse_spec followed by build.
FiniteGroup build(std::string_view text, const Limits& limits = {});

}  // namespace igt

#endif  // IGT_BUILD_HPP
