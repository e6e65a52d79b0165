#pragma once

// Test-side reference computations. None of these call into the library's
// combinatorics, so agreement is a genuine cross-check.

#include <cstdint>
#include <vector>

#include "fanochern/rational.hpp"

namespace fanochern::testing {

// Akiyama–Tanigawa: an algorithm unrelated to the binomial recurrence. It
// produces the t e^t/(e^t - 1) numbers, i.e. (-1)^m B_m.
inline std::vector<Rational> akiyama_tanigawa(int max_m) {
  std::vector<Rational> a(static_cast<std::size_t>(max_m) + 1);
  std::vector<Rational> out;
  for (int m = 0; m <= max_m; ++m) {
    a[m] = Rational(BigInt(1), BigInt(m + 1));
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

// c_(m,p) = sum_{q=1}^{p} (-1)^q C(p,q) q^m, with the binomial built by the
// multiplicative formula.
inline BigInt stirling_c(int m, int p) {
  BigInt total = 0;
  for (int q = 1; q <= p; ++q) {
    BigInt choose = 1;
    for (int t = 0; t < q; ++t) choose = choose * (p - t) / (t + 1);
    BigInt qm = 1;
    for (int t = 0; t < m; ++t) qm *= q;
    total += (q % 2 == 0 ? 1 : -1) * choose * qm;
  }
  return total;
}

inline Rational stirling_bernoulli(int m) {
  Rational total;
  for (int p = 1; p <= m; ++p) total += Rational(stirling_c(m, p), BigInt(p + 1));
  return total;
}

inline Rational brute_power_sum(std::int64_t last, std::int64_t j) {
  BigInt sum = 0;
  for (std::int64_t r = 1; r <= last; ++r) {
    BigInt term = 1;
    for (std::int64_t t = 0; t < j; ++t) term *= static_cast<long>(r);
    sum += term;
  }
  return Rational(sum);
}

inline BigInt brute_factorial(int n) {
  BigInt out = 1;
  for (int t = 2; t <= n; ++t) out *= t;
  return out;
}

// ((-1)^j / j!) sum_p c_(j,p) / (i + p)
inline Rational k1_closed_form(int i, int j) {
  Rational sum;
  for (int p = 1; p <= j; ++p) sum += Rational(stirling_c(j, p), BigInt(i + p));
  sum /= Rational(brute_factorial(j));
  return j % 2 == 0 ? sum : -sum;
}

}  // namespace fanochern::testing
