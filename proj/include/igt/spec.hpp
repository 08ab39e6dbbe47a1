#ifndef IGT_SPEC_HPP
#define IGT_SPEC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace igt {

// Group description language:
//
//   Spec  := Atom { "*" Atom }            left-associative direct product
//   Atom  := "C(" INT ")" | "D(" INT ")" | "Dic(" INT ")"
//          | "SDC(" INT "," INT "," INT ")" | "SDE(" INT "," INT "," INT ")"
//          | "Perm(" INT ";" CYCLES { "," CYCLES } ")"
//
// CYCLES is cycle notation over points 1..degree, e.g. (1 2)(3 4). Whitespace
// is insignificant. D(m) is the dihedral group of order m.
namespace spec {

struct Cyclic {
  std::uint32_t n;
};
struct Dihedral {
  std::uint32_t order;  // even, >= 4
};
// <a, b | a^(2k) = 1, b^2 = a^k, b a b^-1 = a^-1>, order 4k.
struct Dicyclic {
  std::uint32_t k;
};
// Z_q x|_alpha Z_m with b a b^-1 = a^alpha.
struct SdCyclic {
  std::uint32_t q, m, alpha;
};
// (Z_p x Z_p) x|_theta Z_m, theta = [[0, -1], [1, beta]] over Z_p.
struct SdElemAb {
  std::uint32_t p, m, beta;
};
using Cycle = std::vector<std::uint32_t>;
struct PermClosure {
  std::uint32_t degree;
  std::vector<std::vector<Cycle>> generators;  // each generator is a product of cycles
};

}  // namespace spec

struct GroupSpec;

namespace spec {
struct DirectProduct {
  std::shared_ptr<const GroupSpec> left, right;
};
}  // namespace spec

struct GroupSpec {
  std::variant<spec::Cyclic, spec::Dihedral, spec::Dicyclic, spec::SdCyclic, spec::SdElemAb,
               spec::PermClosure, spec::DirectProduct>
      node;
};

GroupSpec direct_product(GroupSpec left, GroupSpec right);

// Throws SyntaxError or ParameterError.
GroupSpec parse_spec(std::string_view text);

// Canonical text; parse_spec(to_string(s)) reproduces s.
std::string to_string(const GroupSpec& spec);

// Checks the parameter invariants of every atom; throws ParameterError.
void validate(const GroupSpec& spec);

// Order of the described group, when known without building it (not for Perm).
std::optional<std::uint64_t> predicted_order(const GroupSpec& spec);

}  // namespace igt

#endif  // IGT_SPEC_HPP
