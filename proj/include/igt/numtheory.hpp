#ifndef IGT_NUMTHEORY_HPP
#define IGT_NUMTHEORY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace igt {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t smallest_prime_factor(std::uint64_t n);

// If n = p^k for a prime p and k >= 1, returns (p, k).
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Order of a in the unit group of Z_q; requires gcd(a, q) = 1 and q > 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

// Smallest alpha in [2, q-1] of multiplicative order exactly m modulo the prime q.
std::optional<std::uint32_t> find_alpha(std::uint32_t q, std::uint32_t m);

// 2x2 matrix over Z_p, row-major.
struct Mat2 {
  std::array<std::uint32_t, 4> a{1, 0, 0, 1};

  std::uint32_t operator()(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_identity();
Mat2 mat_mul(const Mat2& x, const Mat2& y, std::uint32_t p);
Mat2 mat_pow(const Mat2& x, std::uint64_t k, std::uint32_t p);

// [[0, -1], [1, beta]] over Z_p.
Mat2 companion(std::uint32_t p, std::uint32_t beta);

// Order in GL(2, Z_p), or nullopt if the matrix is singular.
std::optional<std::uint64_t> matrix_order(const Mat2& x, std::uint32_t p);

// True iff the characteristic polynomial has a root in Z_p.
bool has_eigenvalue(const Mat2& x, std::uint32_t p);

// Smallest beta in [0, p-1] with companion(p, beta) of order exactly m = q^k
// and companion^(m/q) free of eigenvalues in Z_p.
std::optional<std::uint32_t> find_beta(std::uint32_t p, std::uint32_t m);

// Smallest beta in [0, p-1] with companion(p, beta) of order exactly m.
// No eigenvalue condition; used for the non-abelian group of order 27 and exponent 3.
std::optional<std::uint32_t> smallest_beta_of_order(std::uint32_t p, std::uint32_t m);

}  // namespace igt

#endif  // IGT_NUMTHEORY_HPP
