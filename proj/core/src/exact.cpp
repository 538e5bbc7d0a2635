#include "parkphase/exact.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace parkphase {

ExactProbability::ExactProbability(BigRational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw std::domain_error("ExactProbability: value outside [0,1]");
  }
}

ExactProbability::ExactProbability(const BigInt& numerator, const BigInt& denominator) {
  if (denominator <= 0) throw std::domain_error("ExactProbability: denominator must be positive");
  *this = ExactProbability(BigRational(numerator, denominator));
}

double ExactProbability::to_double() const { return static_cast<double>(value_); }

std::string ExactProbability::str() const {
  return numerator().str() + "/" + denominator().str();
}

BigInt ipow(const BigInt& base, std::int64_t exponent) {
  if (exponent < 0) throw std::domain_error("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt count_confined(std::int64_t m, std::int64_t n) {
  if (n < 0 || n >= m) {
    throw std::domain_error("count_confined: need 0 <= n < m (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }
  if (n == 0) return 1;
  return BigInt(m - n) * ipow(m, n - 1);
}

namespace {

void check_phi_domain(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (k < 1) throw std::domain_error("phi: need k >= 1 (k=" + std::to_string(k) + ")");
  if (k > n) {
    throw std::domain_error("phi: need k <= n (k=" + std::to_string(k) +
                            ", n=" + std::to_string(n) + ")");
  }
  if (n > m - 1) {
    throw std::domain_error("phi: need n <= m - 1 (n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ")");
  }
}

BigInt block_of_car_one_count(std::int64_t m, std::int64_t n, std::int64_t k) {
  // The cars outside car 1's block park confined on the m - k - 1 places left.
  // With one empty place in all (n = m - 1) and k < n they would fill it: none.
  BigInt rest = 1;
  if (n > k) rest = (n == m - 1) ? BigInt(0) : count_confined(m - k - 1, n - k);
  return binomial(n - 1, k - 1) * ipow(k + 1, k - 1) * m * rest;
}

}  // namespace

ExactProbability phi(std::int64_t m, std::int64_t n, std::int64_t k) {
  check_phi_domain(m, n, k);
  return ExactProbability(block_of_car_one_count(m, n, k), ipow(m, n));
}

long double log_phi(std::int64_t m, std::int64_t n, std::int64_t k) {
  check_phi_domain(m, n, k);
  const auto ld = [](std::int64_t v) { return static_cast<long double>(v); };
  long double out = std::lgamma(ld(n)) - std::lgamma(ld(k)) - std::lgamma(ld(n - k + 1));
  out += ld(k - 1) * std::log(ld(k + 1)) + std::log(ld(m)) - ld(n) * std::log(ld(m));
  if (n > k) {
    if (m - n - 1 == 0) return -std::numeric_limits<long double>::infinity();
    out += std::log(ld(m - n - 1)) + ld(n - k - 1) * std::log(ld(m - k - 1));
  }
  return out;
}

IdentityCheck verify_identity(std::int64_t m, std::int64_t n) {
  if (n < 1 || n > m - 2) {
    throw std::domain_error("verify_identity: need 1 <= n <= m - 2 (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }
  IdentityCheck out;
  out.lhs = ipow(m, n);
  out.rhs = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    // k = n has exponent -1 on (m-k-1), cancelled by (m-n-1) = (m-k-1).
    const BigInt tail = (k < n) ? ipow(m - k - 1, n - k - 1) * (m - n - 1) : BigInt(1);
    out.rhs += binomial(n - 1, k - 1) * m * ipow(k + 1, k - 1) * tail;
  }
  out.holds = (out.lhs == out.rhs);
  return out;
}

ExactProbability joint_birth_law(std::int64_t m, std::int64_t n,
                                 std::span<const std::int64_t> ks) {
  BigRational product = 1;
  std::int64_t d = 0;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    product *= phi(m - d - jj, n - d, ks[j]).value();
    d += ks[j];
  }
  return ExactProbability(product);
}

double limit_density(double lambda, double x) {
  if (!(lambda > 0.0)) throw std::invalid_argument("limit_density: need lambda > 0");
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  return lambda / std::sqrt(2.0 * std::numbers::pi) * std::pow(x, -0.5) *
         std::pow(1.0 - x, -1.5) * std::exp(-lambda * lambda * x / (2.0 * (1.0 - x)));
}

double limit_cdf(double lambda, double x) {
  if (!(lambda > 0.0)) throw std::invalid_argument("limit_cdf: need lambda > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double q = lambda * lambda * x / (1.0 - x);
  return std::erf(std::sqrt(q / 2.0));
}

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct SimplexIntegral {
  double lambda;
  double lower;  // each coordinate >= lower, coordinates sum <= 1
  double tolerance;
  double worst_error = 0.0;

  // (prod y)^{-3/2} (1-s)^{-3/2} exp(-lambda^2 s / (2 (1-s))), the exp(lambda^2/2)
  // prefactor folded in.
  double integrand_tail(double s, double product) const {
    const double rest = 1.0 - s;
    if (rest <= 0.0) return 0.0;
    return std::pow(product * rest, -1.5) * std::exp(-lambda * lambda * s / (2.0 * rest));
  }

  double integrate(int remaining, double s, double product) {
    if (remaining == 0) return integrand_tail(s, product);
    const double a = lower;
    const double b = 1.0 - s - static_cast<double>(remaining - 1) * lower;
    if (b <= a) return 0.0;
    double error = 0.0;
    const double value = Kronrod::integrate(
        [&](double y) { return integrate(remaining - 1, s + y, product * y); }, a, b, 15,
        tolerance * 1e-3, &error);
    worst_error = std::max(worst_error, error);
    return value;
  }
};

}  // namespace

double largest_block_cdf(double lambda, double x, double tolerance) {
  if (!(lambda > 0.0)) throw std::invalid_argument("largest_block_cdf: need lambda > 0");
  if (x >= 1.0) return 1.0;
  if (!(x > 0.25)) {
    throw std::domain_error("largest_block_cdf: series evaluation needs x > 1/4");
  }
  double total = 1.0;
  double factorial = 1.0;
  const double scale = lambda / std::sqrt(2.0 * std::numbers::pi);
  double error_bound = 0.0;
  for (int k = 1; static_cast<double>(k) * x < 1.0; ++k) {
    factorial *= k;
    SimplexIntegral integral{lambda, x, tolerance};
    const double value = integral.integrate(k, 0.0, 1.0);
    const double weight = std::pow(scale, k) / factorial;
    total += ((k % 2 == 0) ? 1.0 : -1.0) * weight * value;
    error_bound += weight * integral.worst_error;
  }
  if (!(error_bound <= tolerance) || !std::isfinite(total)) {
    throw std::runtime_error("largest_block_cdf: quadrature did not reach tolerance (estimate " +
                             std::to_string(error_bound) + ")");
  }
  return total;
}

ExactProbability merge_probability(std::int64_t x, std::int64_t y, std::int64_t l,
                                   std::int64_t m) {
  if (l < 2) throw std::domain_error("merge_probability: need l >= 2");
  if (x < 1 || y < 1) throw std::domain_error("merge_probability: need x, y >= 1");
  if (x + y > m - l) throw std::domain_error("merge_probability: need x + y <= m - l");
  return ExactProbability(BigInt(x + y + 2), BigInt(l - 1) * m);
}

ExactProbability additive_kernel(std::int64_t mass_x, std::int64_t mass_y, std::int64_t l,
                                 std::int64_t m) {
  if (l < 2) throw std::domain_error("additive_kernel: need l >= 2");
  if (mass_x < 1 || mass_y < 1) throw std::domain_error("additive_kernel: masses must be positive");
  return ExactProbability(BigInt(mass_x + mass_y), BigInt(m) * (l - 1));
}

}  // namespace parkphase
