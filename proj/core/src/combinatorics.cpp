#include "fanochern/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace fanochern {

namespace {

class BernoulliCache {
 public:
  Rational get(unsigned m) {
    {
      std::shared_lock lock(mutex_);
      if (m < values_.size()) return values_[m];
    }
    std::unique_lock lock(mutex_);
    extend_locked(m);
    return values_[m];
  }

  std::vector<Rational> prefix(unsigned max_m) {
    {
      std::shared_lock lock(mutex_);
      if (max_m < values_.size()) return {values_.begin(), values_.begin() + max_m + 1};
    }
    std::unique_lock lock(mutex_);
    extend_locked(max_m);
    return {values_.begin(), values_.begin() + max_m + 1};
  }

 private:
  void extend_locked(unsigned m) {
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= m) {
      const auto n = static_cast<std::int64_t>(values_.size());
      Rational sum;
      for (std::int64_t k = 0; k < n; ++k) sum.add_product(Rational(binomial(n + 1, k)), values_[k]);
      values_.push_back(-sum / Rational(n + 1));
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

BigInt power(std::int64_t base, std::int64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  require(n >= 0, "binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Rational bernoulli(unsigned m) { return cache().get(m); }

std::vector<Rational> bernoulli_table(unsigned max_m) { return cache().prefix(max_m); }

Rational bernoulli_in_convention(unsigned m, BernoulliConvention convention) {
  Rational value = bernoulli(m);
  if (convention == BernoulliConvention::signed_tilde && m % 2 == 1) return -value;
  return value;
}

Rational c_coeff(std::int64_t m, std::int64_t p) {
  require(m >= 1, "c_coeff: m must be positive");
  require(p >= 1, "c_coeff: p must be positive");
  BigInt sum = 0;
  for (std::int64_t q = 1; q <= p; ++q) {
    const BigInt term = binomial(p, q) * power(q, m);
    if (q % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Rational(sum);
}

Rational power_sum(std::int64_t q, std::int64_t j, SumBound bound) {
  require(q >= 0, "power_sum: q must be non-negative");
  require(j >= 1, "power_sum: j must be positive");
  if (q == 0) return {};
  const auto b = bernoulli_table(static_cast<unsigned>(j));
  Rational sum;
  for (std::int64_t m = 0; m <= j; ++m) {
    Rational term = b[m] * Rational(BigInt(binomial(j + 1, m) * power(q, j + 1 - m)));
    if (bound == SumBound::inclusive && m % 2 == 1) term = -term;
    sum += term;
  }
  return sum / Rational(j + 1);
}

Rational alternating_binomial_tail(std::int64_t p, std::int64_t r) {
  require(p >= 1, "alternating_binomial_tail: p must be positive");
  if (r < 0 || r > p - 1) {
    throw std::invalid_argument("alternating_binomial_tail: r=" + std::to_string(r) +
                                " outside [0, " + std::to_string(p - 1) + "]");
  }
  BigInt sum = 0;
  for (std::int64_t q = r + 1; q <= p; ++q) {
    if (q % 2 == 0) {
      sum += binomial(p, q);
    } else {
      sum -= binomial(p, q);
    }
  }
  return Rational(sum);
}

}  // namespace fanochern
