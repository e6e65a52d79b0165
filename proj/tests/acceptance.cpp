// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "fanochern/chern_calculus.hpp"
#include "fanochern/coefficients.hpp"
#include "fanochern/combinatorics.hpp"
#include "fanochern/fano_invariants.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

namespace {

using namespace fanochern;
namespace ref = fanochern::testing;

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no runtime limit
  std::function<void(Check&)> body;
};

Rational q(const char* text) { return Rational::parse(text); }

std::string at(int i, int j, int k) { return CoeffIndex{i, j, k}.str(); }

void table5(Check& c) {
  const auto values = bernoulli_table(10);
  c.expect(values.size() == ref::kBernoulli.size(), "table length");
  for (unsigned m = 0; m < values.size() && m < ref::kBernoulli.size(); ++m) {
    c.expect(values[m].str() == ref::kBernoulli[m], "B_" + std::to_string(m));
  }
  c.expect(values[10] == q("5/66") && values[8] == q("-1/30"), "anchors");
}

void table6(Check& c) {
  for (int m = 1; m <= 6; ++m) {
    for (int p = 1; p <= 6; ++p) {
      c.expect(c_coeff(m, p).str() == ref::kCTable[m - 1][p - 1], "c_(" + std::to_string(m) + "," + std::to_string(p) + ")");
    }
  }
  c.expect(c_coeff(6, 5) == Rational(-1800) && c_coeff(5, 3) == Rational(-150), "anchors");
}

void tables1to4(Check& c) {
  for (int j = 1; j <= 4; ++j) {
    for (int i = 1; i <= 6; ++i) {
      const auto row = b_row(i, j);
      const auto& expected = ref::kBTables[j - 1][i - 1];
      c.expect(row.size() == expected.size(), "row length " + at(i, j, 0));
      for (std::size_t k = 0; k < row.size() && k < expected.size(); ++k) {
        c.expect(row[k].str() == expected[k], at(i, j, static_cast<int>(k)));
      }
    }
  }
  c.expect(b_coeff({3, 1, 2}) == q("11/12"), at(3, 1, 2));
  c.expect(b_coeff({5, 2, 3}) == q("239/240"), at(5, 2, 3));
  c.expect(b_coeff({6, 3, 3}) == q("607/1890"), at(6, 3, 3));
  c.expect(b_coeff({6, 4, 4}) == q("19097/60480"), at(6, 4, 4));
}

void conjecture(Check& c) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  const auto report = verify_positivity({1, 99, {1, 2}, true, workers});
  c.expect(report.violations.empty(), std::to_string(report.violations.size()) + " violations");
  // sum_{i=1}^{99} (i+1) + (i+2)
  c.expect(report.coefficients_checked == 2 * 4950 + 99 * 3, "coefficient count");
}

void negative_control(Check& c) {
  const auto three = verify_positivity({1, 6, {3}, true, 1});
  c.expect(three.violations.size() == 1 && three.violations[0].index == CoeffIndex{1, 3, 1} &&
               three.violations[0].value.is_zero(),
           "j=3 zero at (1,3,1)");
  const auto four = verify_positivity({1, 6, {4}, true, 1});
  const bool has_negative = std::any_of(four.violations.begin(), four.violations.end(), [](const Violation& v) {
    return v.index == CoeffIndex{1, 4, 1} && v.value == q("-1/720");
  });
  c.expect(has_negative, "j=4 negative at (1,4,1)");
  std::size_t expected = 0;
  for (const auto& row : ref::kBTables[3]) {
    for (std::size_t k = 1; k < row.size(); ++k) expected += q(std::string(row[k]).c_str()).sign() <= 0;
  }
  c.expect(four.violations.size() == expected, "j=4 violation count matches the table");
}

void closed_forms(Check& c) {
  CoefficientTable table;
  for (int i = 1; i <= 200; ++i) {
    for (int j = 1; j <= 6; ++j) {
      const Rational k0 = Rational(-i) / Rational(ref::brute_factorial(j));
      c.expect(table.b({i, j, 0}) == k0, at(i, j, 0));
      c.expect(table.b({i, j, 1}) == ref::k1_closed_form(i, j), at(i, j, 1));
    }
  }
}

struct Displayed {
  int depth;
  int codim;
  std::vector<std::tuple<int, int, const char*>> terms;  // (k, L power, coefficient)
};

void symbolic(Check& c) {
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const auto cls = expand_chain(ChainConfig::all_ones(i), j);
      std::size_t nonzero = 0;
      for (int k = 0; k <= i + j; ++k) {
        const Rational b = b_coeff({i, j, k});
        nonzero += !b.is_zero();
        c.expect(cls.coefficient(BasisTerm::alpha(i, j, k)) == b, "symbolic " + at(i, j, k));
      }
      c.expect(cls.terms().size() == nonzero, "stray symbols at " + at(i, j, 0));
    }
  }

  const std::vector<Displayed> displayed = {
      {1, 1, {{0, 1, "-1"}, {1, 1, "1/2"}, {2, 0, "1"}}},
      {1, 2, {{0, 2, "-1/2"}, {1, 2, "1/12"}, {2, 1, "1/2"}, {3, 0, "1"}}},
      {1, 3, {{0, 3, "-1/6"}, {2, 2, "1/12"}, {3, 1, "1/2"}, {4, 0, "1"}}},
      {2, 1, {{0, 1, "-2"}, {1, 1, "1/3"}, {2, 1, "1"}, {3, 0, "1"}}},
      {2, 2, {{0, 2, "-1"}, {1, 2, "1/12"}, {2, 2, "5/12"}, {3, 1, "1"}, {4, 0, "1"}}},
      {3, 1, {{0, 1, "-3"}, {1, 1, "1/4"}, {2, 1, "11/12"}, {3, 1, "3/2"}, {4, 0, "1"}}},
  };
  for (const auto& d : displayed) {
    FormalClass expected(d.depth, d.codim);
    for (const auto& [k, l, coefficient] : d.terms) expected.add(BasisTerm(d.depth, k, l), q(coefficient));
    const auto actual = expand_chain(ChainConfig::all_ones(d.depth), d.codim);
    c.expect(actual == expected, "displayed formula ch_" + std::to_string(d.codim) + "(H_" + std::to_string(d.depth) +
                                     ") = " + actual.str());
  }
}

void identities(Check& c) {
  for (int j = 1; j <= 10; ++j) {
    for (int last = 0; last <= 50; ++last) {
      c.expect(power_sum(last, j, SumBound::inclusive) == ref::brute_power_sum(last, j), "power sum inclusive");
      c.expect(power_sum(last, j, SumBound::exclusive) == ref::brute_power_sum(last - 1, j), "power sum exclusive");
    }
  }
  const auto tilde = ref::akiyama_tanigawa(40);
  for (int m = 1; m <= 40; ++m) {
    Rational via_c;
    for (int p = 1; p <= m; ++p) via_c += c_coeff(m, p) / Rational(p + 1);
    c.expect(bernoulli(static_cast<unsigned>(m)) == via_c, "B_m via c at m=" + std::to_string(m));
    c.expect(via_c == ref::stirling_bernoulli(m), "c oracle at m=" + std::to_string(m));
    c.expect(via_c == (m % 2 == 0 ? tilde[m] : -tilde[m]), "Akiyama-Tanigawa at m=" + std::to_string(m));
  }
  for (int p = 2; p <= 20; ++p) {
    for (int m = 1; m < p; ++m) c.expect(c_coeff(m, p).is_zero(), "c below diagonal");
  }
  for (int p = 1; p <= 15; ++p) {
    for (int r = 0; r <= p - 1; ++r) {
      const Rational sign = (r - 1) % 2 == 0 ? Rational(1) : Rational(-1);
      c.expect(alternating_binomial_tail(p, r) == sign * Rational(binomial(p - 1, r)), "alternating tail");
    }
  }
}

void invariants(Check& c) {
  for (int n = 1; n <= 20; ++n) {
    c.expect(example_invariants(ModelFamily::projective_space(n)) == InvariantPair{n, n}, "P^n");
    if (n >= 3) {
      const int half = (n + 1) / 2;
      c.expect(example_invariants(ModelFamily::quadric(n)) == InvariantPair{half, half}, "Q^n");
    }
    for (int m = 0; m <= n - 1; ++m) {
      c.expect(example_invariants(ModelFamily::blowup_linear_subspace(n, m)) == InvariantPair{m + 1, m + 1}, "Bl");
    }
    c.expect(example_invariants(ModelFamily::quadric_times_projective(n)) == InvariantPair{(n + 2) / 2, n}, "QxP");
  }
  for (std::int64_t m = 2; m <= 99; ++m) {
    const std::int64_t d1 = m * m + m - 1;
    c.expect(corollary1_c1(static_cast<int>(m), d1) == Rational(BigInt(1), BigInt(m + 1)), "corollary at M=" + std::to_string(m));
    c.expect(chain_dim_lower_bound(m, d1) == Rational(BigInt(1), BigInt(m)), "chain bound at M=" + std::to_string(m));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Bernoulli table B_0..B_10", 1.0, table5},
      {2, "c_(m,p) table for m, p <= 6", 1.0, table6},
      {3, "b_(i,j,k) tables for i <= 6, j <= 4", 1.0, tables1to4},
      {4, "positivity for 1 <= i <= 99, j in {1,2}", 60.0, conjecture},
      {5, "zero and negative entries for j = 3, 4", 0.0, negative_control},
      {6, "closed forms at k = 0, 1 for i <= 200, j <= 6", 30.0, closed_forms},
      {7, "symbolic expansion equals b_(i,j,k) for i <= 8, j <= 4", 0.0, symbolic},
      {8, "power sums, Bernoulli and binomial identities", 0.0, identities},
      {9, "model invariants and chain bounds", 0.0, invariants},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
      check.expect(false, "took longer than " + std::to_string(criterion.limit_seconds) + " s");
    }
    std::printf("[%s] %d %s (%.3f s", check.ok ? "PASS" : "FAIL", criterion.id, criterion.name, seconds);
    if (criterion.limit_seconds > 0) std::printf(", limit %.0f s", criterion.limit_seconds);
    std::printf(")%s%s\n", check.ok ? "" : ": ", check.first_failure.c_str());
    failures += !check.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
