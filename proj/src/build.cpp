#include "igt/build.hpp"

#include <unordered_map>

#include "igt/numtheory.hpp"

namespace igt {

namespace {

std::string power(const char* name, std::uint64_t k) {
  if (k == 0) return "";
  if (k == 1) return name;
  return std::string(name) + "^" + std::to_string(k);
}

std::string word(std::string a, const std::string& b) {
  if (a.empty() && b.empty()) return "e";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

void guard_order(std::uint64_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_group_order)
    throw GuardExceeded(what + " has order " + std::to_string(order) + ", above the order bound " +
                        std::to_string(limits.max_group_order));
}

template <class Rule>
FiniteGroup tabulate(std::size_t n, Rule rule, std::vector<std::string> labels, std::string text) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>(rule(i, j));
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(text));
}

FiniteGroup cyclic(std::uint32_t n, std::string text) {
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return tabulate(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; }, std::move(labels),
                  std::move(text));
}

// r^i s^f  ->  f*h + i, h = order/2.
FiniteGroup dihedral(std::uint32_t order, std::string text) {
  const std::size_t h = order / 2;
  std::vector<std::string> labels(order);
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < h; ++i) labels[f * h + i] = word(power("r", i), power("s", f));
  auto rule = [h](std::size_t x, std::size_t y) {
    std::size_t i = x % h, f = x / h, j = y % h, g = y / h;
    std::size_t rot = f ? (i + h - j) % h : (i + j) % h;
    return ((f + g) % 2) * h + rot;
  };
  return tabulate(order, rule, std::move(labels), std::move(text));
}

// a^i b^f  ->  f*2k + i, with b a = a^-1 b and b^2 = a^k.
FiniteGroup dicyclic(std::uint32_t k, std::string text) {
  const std::size_t h = 2 * std::size_t{k};
  std::vector<std::string> labels(2 * h);
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < h; ++i) labels[f * h + i] = word(power("a", i), power("b", f));
  auto rule = [h, k](std::size_t x, std::size_t y) -> std::size_t {
    std::size_t i = x % h, f = x / h, j = y % h, g = y / h;
    if (!f) return g * h + (i + j) % h;
    if (!g) return h + (i + h - j) % h;
    return (i + h - j + k) % h;
  };
  return tabulate(2 * h, rule, std::move(labels), std::move(text));
}

FiniteGroup sd_cyclic(const spec::SdCyclic& s, std::string text) {
  const std::size_t q = s.q, m = s.m, n = q * m;
  std::vector<std::size_t> alpha_pow(m);
  for (std::size_t y = 0; y < m; ++y) alpha_pow[y] = pow_mod(s.alpha, y, q);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < m; ++y)
      labels[x * m + y] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  // a^x b^y . a^u b^v = a^(x + alpha^y u) b^(y + v)
  auto rule = [&](std::size_t e1, std::size_t e2) {
    std::size_t x = e1 / m, y = e1 % m, u = e2 / m, v = e2 % m;
    return ((x + alpha_pow[y] * u) % q) * m + (y + v) % m;
  };
  return tabulate(n, rule, std::move(labels), std::move(text));
}

FiniteGroup sd_elem_ab(const spec::SdElemAb& s, std::string text) {
  const std::size_t p = s.p, m = s.m, n = p * p * m;
  const Mat2 theta = companion(s.p, s.beta);
  std::vector<Mat2> theta_pow(m);
  theta_pow[0] = mat_identity();
  for (std::size_t y = 1; y < m; ++y) theta_pow[y] = mat_mul(theta_pow[y - 1], theta, s.p);
  std::vector<std::string> labels(n);
  for (std::size_t x0 = 0; x0 < p; ++x0)
    for (std::size_t x1 = 0; x1 < p; ++x1)
      for (std::size_t y = 0; y < m; ++y)
        labels[(x0 * p + x1) * m + y] =
            "((" + std::to_string(x0) + "," + std::to_string(x1) + ")," + std::to_string(y) + ")";
  // (v, y)(w, z) = (v + theta^y w, y + z); coordinates are exponents of a and b.
  auto rule = [&](std::size_t e1, std::size_t e2) {
    std::size_t y = e1 % m, vi = e1 / m, z = e2 % m, wi = e2 / m;
    std::size_t v0 = vi / p, v1 = vi % p, w0 = wi / p, w1 = wi % p;
    const Mat2& t = theta_pow[y];
    std::size_t r0 = (v0 + t(0, 0) * w0 + t(0, 1) * w1) % p;
    std::size_t r1 = (v1 + t(1, 0) * w0 + t(1, 1) * w1) % p;
    return (r0 * p + r1) * m + (y + z) % m;
  };
  return tabulate(n, rule, std::move(labels), std::move(text));
}

// Permutations of at most 12 points packed 4 bits per image.
using Packed = std::uint64_t;

std::uint32_t image(Packed x, std::uint32_t i) { return static_cast<std::uint32_t>((x >> (4 * i)) & 0xF); }

Packed compose(Packed x, Packed y, std::uint32_t degree) {
  Packed r = 0;
  for (std::uint32_t i = 0; i < degree; ++i) r |= Packed{image(x, image(y, i))} << (4 * i);
  return r;
}

std::string cycle_label(Packed x, std::uint32_t degree) {
  std::string out;
  std::vector<bool> seen(degree, false);
  for (std::uint32_t i = 0; i < degree; ++i) {
    if (seen[i] || image(x, i) == i) continue;
    out += "(";
    for (std::uint32_t j = i; !seen[j]; j = image(x, j)) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup perm_closure(const spec::PermClosure& p, const Limits& limits, std::string text) {
  const std::uint32_t d = p.degree;
  Packed id = 0;
  for (std::uint32_t i = 0; i < d; ++i) id |= Packed{i} << (4 * i);

  std::vector<Packed> gens;
  for (const auto& cycles : p.generators) {
    std::vector<std::uint32_t> img(d);
    for (std::uint32_t i = 0; i < d; ++i) img[i] = i;
    std::vector<bool> used(d, false);
    for (const auto& cycle : cycles) {
      for (auto point : cycle) {
        if (point < 1 || point > d) throw ParameterError("Perm point out of range in " + text);
        if (used[point - 1])
          throw ParameterError("Perm generator is not a permutation: point " + std::to_string(point) +
                               " repeated in " + text);
        used[point - 1] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
    Packed g = 0;
    for (std::uint32_t i = 0; i < d; ++i) g |= Packed{img[i]} << (4 * i);
    gens.push_back(g);
  }

  std::vector<Packed> elements{id};
  std::unordered_map<Packed, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (Packed g : gens) {
      Packed y = compose(elements[i], g, d);
      if (index.contains(y)) continue;
      guard_order(elements.size() + 1, limits, text);
      index.emplace(y, static_cast<Element>(elements.size()));
      elements.push_back(y);
    }

  const std::size_t n = elements.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = cycle_label(elements[i], d);
  auto rule = [&](std::size_t i, std::size_t j) { return index.at(compose(elements[i], elements[j], d)); };
  return tabulate(n, rule, std::move(labels), std::move(text));
}

FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b, std::string text) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::string> labels(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels[i * nb + j] = "(" + a.label(static_cast<Element>(i)) + "," + b.label(static_cast<Element>(j)) + ")";
  auto rule = [&](std::size_t x, std::size_t y) {
    return std::size_t{a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb))} * nb +
           b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
  };
  return tabulate(na * nb, rule, std::move(labels), std::move(text));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

FiniteGroup build(const GroupSpec& s, const Limits& limits) {
  validate(s);
  std::string text = to_string(s);
  if (auto order = predicted_order(s)) guard_order(*order, limits, text);
  return std::visit(
      overloaded{
          [&](const spec::Cyclic& c) { return cyclic(c.n, text); },
          [&](const spec::Dihedral& d) { return dihedral(d.order, text); },
          [&](const spec::Dicyclic& d) { return dicyclic(d.k, text); },
          [&](const spec::SdCyclic& x) { return sd_cyclic(x, text); },
          [&](const spec::SdElemAb& x) { return sd_elem_ab(x, text); },
          [&](const spec::PermClosure& p) { return perm_closure(p, limits, text); },
          [&](const spec::DirectProduct& d) {
            FiniteGroup left = build(*d.left, limits);
            FiniteGroup right = build(*d.right, limits);
            guard_order(std::uint64_t{left.order()} * right.order(), limits, text);
            return product(left, right, text);
          },
      },
      s.node);
}

FiniteGroup build(std::string_view text, const Limits& limits) { return build(parse_spec(text), limits); }

}  // namespace igt
