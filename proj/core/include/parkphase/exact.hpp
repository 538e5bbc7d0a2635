#pragma once

/**
 * @file exact.hpp
 * @brief Exact block-size laws, counting formulas and limit distributions.
 */

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkphase {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A probability held as an exact rational; equality is value equality.
class ExactProbability {
 public:
  ExactProbability() = default;
  explicit ExactProbability(BigRational value);
  ExactProbability(const BigInt& numerator, const BigInt& denominator);

  [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  [[nodiscard]] const BigRational& value() const noexcept { return value_; }
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;  ///< "num/den"

  bool operator==(const ExactProbability&) const = default;
  friend ExactProbability operator*(const ExactProbability& a, const ExactProbability& b) {
    return ExactProbability(a.value_ * b.value_);
  }

 private:
  BigRational value_{0};
};

BigInt ipow(const BigInt& base, std::int64_t exponent);
BigInt binomial(std::int64_t n, std::int64_t k);

/// Confined schemes of n cars on m places (place m empty): (m-n) m^{n-1}, 1 if n = 0.
BigInt count_confined(std::int64_t m, std::int64_t n);

/// Probability that car 1's block holds k cars when n cars park on m places:
///   C(n-1,k-1) (k+1)^{k-1} m (m-k-1)^{n-k-1} (m-n-1) / m^n.
/// The last two factors count confined schemes of n-k cars on m-k-1 places, which
/// makes the single-empty-place case (n = m-1) come out as P(k = n) = 1.
/// Domain: 1 <= k <= n <= m-1; violations throw std::domain_error.
ExactProbability phi(std::int64_t m, std::int64_t n, std::int64_t k);

/// log phi(m, n, k) in extended precision, for table sizes beyond exact evaluation.
long double log_phi(std::int64_t m, std::int64_t n, std::int64_t k);

struct IdentityCheck {
  bool holds = false;
  BigInt lhs;  ///< m^n
  BigInt rhs;  ///< sum over k of the block-of-car-1 counts
};

/// m^n = sum_{k=1}^{n} C(n-1,k-1) m (k+1)^{k-1} (m-k-1)^{n-k-1} (m-n-1), 1 <= n <= m-2.
IdentityCheck verify_identity(std::int64_t m, std::int64_t n);

/// P(R_1 = k_1, ..., R_i = k_i) for blocks ordered by birth:
///   prod_{j=0}^{i-1} phi(m - d_j - j, n - d_j, k_{j+1}),  d_j = k_1 + ... + k_j.
ExactProbability joint_birth_law(std::int64_t m, std::int64_t n, std::span<const std::int64_t> ks);

/// Density of N^2 / (lambda^2 + N^2), N standard Gaussian. Zero outside (0,1).
double limit_density(double lambda, double x);

/// P(N^2 / (lambda^2 + N^2) <= x) = P(N^2 <= lambda^2 x / (1-x)).
double limit_cdf(double lambda, double x);

/// Largest limit block: P(B_1(lambda) <= x), evaluated from the finite alternating
/// series of simplex integrals. Requires x > 1/4 (at most three terms). Nested
/// adaptive Gauss-Kronrod with absolute tolerance `tolerance`; throws
/// std::runtime_error when the error estimate exceeds it.
double largest_block_cdf(double lambda, double x, double tolerance = 1e-4);

/// Probability that blocks of sizes x and y merge at the next arrival,
/// (x + y + 2) / ((l - 1) m). Requires l >= 2, x, y >= 1, x + y <= m - l.
ExactProbability merge_probability(std::int64_t x, std::int64_t y, std::int64_t l, std::int64_t m);

/// Forest-coalescent kernel (x' + y') / (m (l - 1)) on masses; with x' = x + 1
/// (a block plus the empty place on its right) it equals merge_probability.
ExactProbability additive_kernel(std::int64_t mass_x, std::int64_t mass_y, std::int64_t l,
                                 std::int64_t m);

}  // namespace parkphase
