#include "igt/spec.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "igt/errors.hpp"
#include "igt/numtheory.hpp"

namespace igt {

namespace {

constexpr std::uint32_t kMaxDegree = 12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_atom(const spec::Cyclic& c) {
  if (c.n < 1) throw ParameterError("C(n) requires n >= 1");
}

void validate_atom(const spec::Dihedral& d) {
  if (d.order < 4 || d.order % 2 != 0)
    throw ParameterError("D(m) requires an even group order m >= 4, got " + std::to_string(d.order));
}

void validate_atom(const spec::Dicyclic& d) {
  if (d.k < 2) throw ParameterError("Dic(k) requires k >= 2, got " + std::to_string(d.k));
}

void validate_atom(const spec::SdCyclic& s) {
  if (!is_prime(s.q)) throw ParameterError("SDC(q,m,alpha): q = " + std::to_string(s.q) + " is not prime");
  if (s.m < 1) throw ParameterError("SDC(q,m,alpha) requires m >= 1");
  if (std::gcd(s.alpha, s.q) != 1)
    throw ParameterError("SDC(q,m,alpha): alpha = " + std::to_string(s.alpha) + " is not coprime to q");
  if (pow_mod(s.alpha, s.m, s.q) != 1)
    throw ParameterError("SDC(q,m,alpha): alpha^m is not 1 mod q");
}

void validate_atom(const spec::SdElemAb& s) {
  if (!is_prime(s.p)) throw ParameterError("SDE(p,m,beta): p = " + std::to_string(s.p) + " is not prime");
  if (s.m < 1) throw ParameterError("SDE(p,m,beta) requires m >= 1");
  if (!(mat_pow(companion(s.p, s.beta), s.m, s.p) == mat_identity()))
    throw ParameterError("SDE(p,m,beta): theta^m is not the identity matrix");
}

void validate_atom(const spec::PermClosure& p) {
  if (p.degree < 1 || p.degree > kMaxDegree)
    throw ParameterError("Perm degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  for (const auto& gen : p.generators)
    for (const auto& cycle : gen)
      for (auto point : cycle)
        if (point < 1 || point > p.degree)
          throw ParameterError("Perm point " + std::to_string(point) + " outside 1.." +
                               std::to_string(p.degree));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec left = atom();
    while (peek() == '*') {
      ++pos_;
      left = direct_product(std::move(left), atom());
    }
    skip_ws();
    if (pos_ != text_.size()) fail("'*' or end of input");
    return left;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(pos_, expected, std::string(text_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  std::uint32_t integer() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail("integer below 2^32");
      ++pos_;
    }
    if (pos_ == start) fail("integer");
    return static_cast<std::uint32_t>(value);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  template <class Atom>
  GroupSpec checked(Atom a, std::size_t at) {
    try {
      validate_atom(a);
    } catch (const ParameterError& e) {
      throw ParameterError(std::string(e.what()) + " (at position " + std::to_string(at) + ")");
    }
    return GroupSpec{a};
  }

  GroupSpec atom() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name.empty()) fail("one of C, D, Dic, SDC, SDE, Perm");
    if (name != "C" && name != "D" && name != "Dic" && name != "SDC" && name != "SDE" && name != "Perm") {
      pos_ = at;
      fail("one of C, D, Dic, SDC, SDE, Perm");
    }
    expect('(');
    GroupSpec result;
    if (name == "C") {
      result = checked(spec::Cyclic{integer()}, at);
    } else if (name == "D") {
      result = checked(spec::Dihedral{integer()}, at);
    } else if (name == "Dic") {
      result = checked(spec::Dicyclic{integer()}, at);
    } else if (name == "SDC" || name == "SDE") {
      std::uint32_t a = integer();
      expect(',');
      std::uint32_t b = integer();
      expect(',');
      std::uint32_t c = integer();
      result = name == "SDC" ? checked(spec::SdCyclic{a, b, c}, at) : checked(spec::SdElemAb{a, b, c}, at);
    } else {
      spec::PermClosure perm{integer(), {}};
      expect(';');
      perm.generators.push_back(cycles());
      while (peek() == ',') {
        ++pos_;
        perm.generators.push_back(cycles());
      }
      result = checked(std::move(perm), at);
    }
    expect(')');
    return result;
  }

  std::vector<spec::Cycle> cycles() {
    std::vector<spec::Cycle> out;
    if (peek() != '(') fail("'(' starting a cycle");
    while (peek() == '(') {
      ++pos_;
      spec::Cycle cycle;
      while (peek() != ')') {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("point or ')'");
        cycle.push_back(integer());
      }
      ++pos_;
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec direct_product(GroupSpec left, GroupSpec right) {
  return GroupSpec{spec::DirectProduct{std::make_shared<const GroupSpec>(std::move(left)),
                                       std::make_shared<const GroupSpec>(std::move(right))}};
}

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpec& s) {
  return std::visit(
      overloaded{
          [](const spec::Cyclic& c) { return "C(" + std::to_string(c.n) + ")"; },
          [](const spec::Dihedral& d) { return "D(" + std::to_string(d.order) + ")"; },
          [](const spec::Dicyclic& d) { return "Dic(" + std::to_string(d.k) + ")"; },
          [](const spec::SdCyclic& x) {
            return "SDC(" + std::to_string(x.q) + "," + std::to_string(x.m) + "," +
                   std::to_string(x.alpha) + ")";
          },
          [](const spec::SdElemAb& x) {
            return "SDE(" + std::to_string(x.p) + "," + std::to_string(x.m) + "," +
                   std::to_string(x.beta) + ")";
          },
          [](const spec::PermClosure& p) {
            std::ostringstream out;
            out << "Perm(" << p.degree << ";";
            for (std::size_t g = 0; g < p.generators.size(); ++g) {
              if (g) out << ",";
              if (p.generators[g].empty()) out << "()";
              for (const auto& cycle : p.generators[g]) {
                out << "(";
                for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
                out << ")";
              }
            }
            out << ")";
            return out.str();
          },
          [](const spec::DirectProduct& d) { return to_string(*d.left) + "*" + to_string(*d.right); },
      },
      s.node);
}

void validate(const GroupSpec& s) {
  std::visit(overloaded{[](const spec::DirectProduct& d) {
                          validate(*d.left);
                          validate(*d.right);
                        },
                        [](const auto& atom) { validate_atom(atom); }},
             s.node);
}

std::optional<std::uint64_t> predicted_order(const GroupSpec& s) {
  return std::visit(
      overloaded{
          [](const spec::Cyclic& c) -> std::optional<std::uint64_t> { return c.n; },
          [](const spec::Dihedral& d) -> std::optional<std::uint64_t> { return d.order; },
          [](const spec::Dicyclic& d) -> std::optional<std::uint64_t> { return 4ULL * d.k; },
          [](const spec::SdCyclic& x) -> std::optional<std::uint64_t> { return std::uint64_t{x.q} * x.m; },
          [](const spec::SdElemAb& x) -> std::optional<std::uint64_t> {
            return std::uint64_t{x.p} * x.p * x.m;
          },
          [](const spec::PermClosure&) -> std::optional<std::uint64_t> { return std::nullopt; },
          [](const spec::DirectProduct& d) -> std::optional<std::uint64_t> {
            auto l = predicted_order(*d.left);
            auto r = predicted_order(*d.right);
            if (!l || !r) return std::nullopt;
            return *l * *r;
          },
      },
      s.node);
}

}  // namespace igt
