#pragma once

#include <cstdint>
#include <vector>

#include "fanochern/rational.hpp"

namespace fanochern {

/// Which generating function defines the Bernoulli numbers.
///   standard:     t / (e^t - 1),      B_1 = -1/2
///   signed_tilde: t e^t / (e^t - 1),  value at m is (-1)^m B_m
enum class BernoulliConvention { standard, signed_tilde };

/// Which endpoint a power sum includes.
///   exclusive: 1^j + ... + (q-1)^j
///   inclusive: 1^j + ... + q^j
enum class SumBound { exclusive, inclusive };

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
/// Throws std::invalid_argument when n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(unsigned n);

/// B_m in the standard convention (B_1 = -1/2).
///
/// Computed from sum_{k=0}^{m} C(m+1, k) B_k = 0 with B_0 = 1. Values live in a
/// process-wide, monotonically growing cache: asking for B_m fills B_0..B_m.
/// Safe to call from multiple threads.
Rational bernoulli(unsigned m);

/// B_0..B_max_m, from the same cache as bernoulli().
std::vector<Rational> bernoulli_table(unsigned max_m);

Rational bernoulli_in_convention(unsigned m, BernoulliConvention convention);

/// c_(m,p) = sum_{q=1}^{p} (-1)^q C(p,q) q^m.
/// Requires m >= 1 and p >= 1 (std::invalid_argument otherwise).
Rational c_coeff(std::int64_t m, std::int64_t p);

/// Sum of r^j over r = 1..q (inclusive) or r = 1..q-1 (exclusive), evaluated
/// through the Bernoulli closed form rather than term by term.
/// Requires q >= 0 and j >= 1.
Rational power_sum(std::int64_t q, std::int64_t j, SumBound bound);

/// sum_{q=r+1}^{p} (-1)^q C(p, q), summed directly.
/// Requires p >= 1 and 0 <= r <= p-1 (std::invalid_argument otherwise).
Rational alternating_binomial_tail(std::int64_t p, std::int64_t r);

}  // namespace fanochern
