#include "igt/numtheory.hpp"

#include <numeric>

namespace igt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
  std::uint64_t x = a % q;
  std::uint64_t k = 1;
  while (x != 1 % q) {
    x = x * a % q;
    ++k;
  }
  return k;
}

std::optional<std::uint32_t> find_alpha(std::uint32_t q, std::uint32_t m) {
  if (!is_prime(q) || m == 0 || (q - 1) % m != 0) return std::nullopt;
  for (std::uint32_t a = 2; a < q; ++a)
    if (multiplicative_order(a, q) == m) return a;
  return std::nullopt;
}

Mat2 mat_identity() { return Mat2{}; }

Mat2 mat_mul(const Mat2& x, const Mat2& y, std::uint32_t p) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::uint64_t s = std::uint64_t{x(i, 0)} * y(0, j) + std::uint64_t{x(i, 1)} * y(1, j);
      r.a[static_cast<std::size_t>(2 * i + j)] = static_cast<std::uint32_t>(s % p);
    }
  return r;
}

Mat2 mat_pow(const Mat2& x, std::uint64_t k, std::uint32_t p) {
  Mat2 result = mat_identity();
  Mat2 base = x;
  while (k) {
    if (k & 1) result = mat_mul(result, base, p);
    base = mat_mul(base, base, p);
    k >>= 1;
  }
  return result;
}

Mat2 companion(std::uint32_t p, std::uint32_t beta) {
  return Mat2{{0, p - 1, 1 % p, beta % p}};
}

std::optional<std::uint64_t> matrix_order(const Mat2& x, std::uint32_t p) {
  std::uint64_t det = (std::uint64_t{x(0, 0)} * x(1, 1) + std::uint64_t{p - x(0, 1) % p} * x(1, 0)) % p;
  if (det == 0) return std::nullopt;
  // |GL(2, p)| bounds the order.
  const std::uint64_t bound = (std::uint64_t{p} * p - 1) * (std::uint64_t{p} * p - p);
  Mat2 cur = x;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (cur == mat_identity()) return k;
    cur = mat_mul(cur, x, p);
  }
  return std::nullopt;
}

bool has_eigenvalue(const Mat2& x, std::uint32_t p) {
  for (std::uint32_t t = 0; t < p; ++t) {
    std::uint64_t d0 = (x(0, 0) + p - t) % p;
    std::uint64_t d1 = (x(1, 1) + p - t) % p;
    std::uint64_t off = std::uint64_t{x(0, 1)} * x(1, 0) % p;
    if ((d0 * d1 % p + p - off) % p == 0) return true;
  }
  return false;
}

std::optional<std::uint32_t> find_beta(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) return std::nullopt;
  auto pp = as_prime_power(m);
  if (!pp) return std::nullopt;
  const auto q = static_cast<std::uint32_t>(pp->first);
  for (std::uint32_t beta = 0; beta < p; ++beta) {
    Mat2 theta = companion(p, beta);
    if (matrix_order(theta, p) != m) continue;
    if (!has_eigenvalue(mat_pow(theta, m / q, p), p)) return beta;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> smallest_beta_of_order(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) return std::nullopt;
  for (std::uint32_t beta = 0; beta < p; ++beta)
    if (matrix_order(companion(p, beta), p) == m) return beta;
  return std::nullopt;
}

}  // namespace igt
