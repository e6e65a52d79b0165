#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fanochern/rational.hpp"

namespace fanochern {

/// Index (i, j, k) of a coefficient b_(i,j,k): chain depth i >= 1, Chern degree
/// j >= 1, basis index 0 <= k <= i + j.
struct CoeffIndex {
  int i = 1;
  int j = 1;
  int k = 0;

  bool valid() const { return i >= 1 && j >= 1 && k >= 0 && k <= i + j; }
  /// Throws std::out_of_range unless valid().
  void validate() const;
  std::string str() const;

  friend auto operator<=>(const CoeffIndex&, const CoeffIndex&) = default;
};

/// Weights (-1)^m B_m / m! for m = 0..max_m.
std::vector<Rational> bernoulli_weights(int max_m);

/// Row of the depth-1 coefficients: b_(1,j,0) = -1/j!, and for k >= 1
/// b_(1,j,k) = (-1)^(j+1-k) B_(j+1-k) / (j+1-k)!.
std::vector<Rational> base_row(int j);

/// Computes one row [b_(i,j,0), ..., b_(i,j,i+j)] for i >= 2 from the rows
/// b_(i-1, j', .) with 1 <= j' <= j + 1. `previous(j')` must return the row
/// for depth i-1 and degree j'. `weights` must cover m = 0..j.
std::vector<Rational> recurrence_row(int i, int j, const std::vector<Rational>& weights,
                                     const std::function<const std::vector<Rational>&(int)>& previous);

/// Memoized table of b_(i,j,k).
///
/// Lookups are top-down and memoize every (i', j', k) they touch; fill() builds
/// whole rows bottom-up. The table may be shared between threads: concurrent
/// calls can duplicate work but always agree on values.
class CoefficientTable {
 public:
  /// Throws std::out_of_range when idx is outside 0 <= k <= i + j.
  Rational b(const CoeffIndex& idx);

  /// [b_(i,j,0), ..., b_(i,j,i+j)].
  std::vector<Rational> row(int i, int j);

  /// Bottom-up fill of every row needed for b_(i, j, .) with i <= i_max and
  /// j <= j_max, using up to `workers` threads per depth.
  void fill(int i_max, int j_max, unsigned workers = 1);

  std::size_t size() const;

  /// Largest i with a complete stored row at degree j, or 0.
  int high_water(int j) const;

 private:
  using Key = std::uint64_t;
  static Key key(int i, int j, int k);

  bool lookup(const CoeffIndex& idx, Rational& out) const;
  void store(const CoeffIndex& idx, const Rational& value);
  void store_row(int i, int j, const std::vector<Rational>& row);
  const std::vector<Rational>& weights(int max_m);
  Rational compute(const CoeffIndex& idx);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Rational> entries_;
  std::map<int, int> high_water_;
  std::vector<Rational> weights_;
};

/// Process-wide table backing the free functions below.
CoefficientTable& shared_coefficient_table();

Rational b_coeff(const CoeffIndex& idx);
std::vector<Rational> b_row(int i, int j);

/// -i / j!
Rational b_closed_form_k0(int i, int j);
/// ((-1)^j / j!) * sum_{p=1}^{j} c_(j,p) / (i + p)
Rational b_closed_form_k1(int i, int j);

struct PositivityRequest {
  int i_lo = 1;
  int i_hi = 1;
  std::set<int> j_set;
  bool strict = true;
  unsigned workers = 1;
};

struct Violation {
  CoeffIndex index;
  Rational value;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// A regularity seen in the scanned rows. Patterns are reported, not asserted.
struct ObservedPattern {
  std::string name;
  std::string description;
  std::size_t checked = 0;
  std::size_t matched = 0;

  bool holds() const { return checked == matched; }
  friend bool operator==(const ObservedPattern&, const ObservedPattern&) = default;
};

struct PositivityReport {
  int i_lo = 1;
  int i_hi = 1;
  std::set<int> j_set;
  bool strict = true;
  std::vector<Violation> violations;
  std::vector<ObservedPattern> patterns;
  std::size_t coefficients_checked = 0;
  std::chrono::duration<double> elapsed{};

  bool verified() const { return violations.empty(); }
};

/// Checks b_(i,j,k) > 0 (strict) or >= 0 (non-strict) for every i in
/// [i_lo, i_hi], j in j_set and 1 <= k <= i + j. Violations are returned in
/// ascending (i, j, k) order regardless of the worker count.
///
/// Rows are swept bottom-up with a private window of two depths, so memory
/// stays proportional to one depth of rows. Throws std::invalid_argument on an
/// empty j_set or i_lo < 1 or i_lo > i_hi.
PositivityReport verify_positivity(const PositivityRequest& request);

}  // namespace fanochern
