#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanochern/rational.hpp"

namespace fanochern {

struct MinimalFamilyDimension {
  std::int64_t dimension = 0;
  /// d <= n - 1; false means the input cannot come from a Fano n-fold.
  bool within_bound = true;
  /// d = n - 1, which happens exactly for projective space.
  bool projective_space_case = false;
};

/// d = (-K_X . C) - 2 for a minimal family on a Fano n-fold.
/// Throws std::invalid_argument when the degree is below 2 or n < 1.
MinimalFamilyDimension minimal_family_dim(std::int64_t anticanonical_degree, std::int64_t ambient_dim);

/// The model Fano manifolds with known chains of minimal families.
///   "P:n"    projective space P^n, n >= 1
///   "Q:n"    smooth quadric Q^n, n >= 3
///   "Bl:n,m" blow-up of P^n along a linear subspace of dimension m, 0 <= m <= n-1
///   "QxP:m"  Q^(m+1) x P^m, m >= 1
class ModelFamily {
 public:
  enum class Kind { projective_space, quadric, blowup_linear_subspace, quadric_times_projective };

  static ModelFamily projective_space(int n);
  static ModelFamily quadric(int n);
  static ModelFamily blowup_linear_subspace(int n, int m);
  static ModelFamily quadric_times_projective(int m);
  /// Throws std::invalid_argument on a malformed or out-of-range spec.
  static ModelFamily parse(std::string_view spec);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int ambient_dimension() const;
  /// Blowing up a hyperplane (m = n - 1) changes nothing.
  bool isomorphic_to_projective_space() const;
  std::string str() const;

  friend bool operator==(const ModelFamily&, const ModelFamily&) = default;

 private:
  ModelFamily(Kind kind, int n, int m) : kind_(kind), n_(n), m_(m) {}

  Kind kind_;
  int n_;
  int m_;
};

/// Minimum and maximum length of chains of minimal families ending at a
/// non-Fano member.
struct InvariantPair {
  int n_lower = 0;
  int n_upper = 0;
  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

InvariantPair example_invariants(const ModelFamily& family);

/// (H, L) for a model family: the minimal family H with its polarization.
struct PolarizedFamily {
  ModelFamily::Kind kind;
  int dimension;
  std::string polarization;

  /// e.g. "P:6, hyperplane".
  std::string str() const;
  friend bool operator==(const PolarizedFamily&, const PolarizedFamily&) = default;
};

bool has_known_polarized_family(const ModelFamily& family);

/// Throws std::invalid_argument for Q^(m+1) x P^m, whose (H, L) is not given.
PolarizedFamily example_polarized_family(const ModelFamily& family);

struct HypothesisCheck {
  bool holds = true;
  std::vector<std::string> reasons;
};

/// 2 <= N <= 100 and d1 >= N^2 - N - 1.
HypothesisCheck theorem1_hypothesis(std::int64_t n, std::int64_t d1);

/// -(M - 1) + (d1 + 2)/M - 2, a lower bound for d_M. Requires M >= 2.
Rational chain_dim_lower_bound(std::int64_t m, std::int64_t d1);

/// (d1/2) a2 - 2, the lower bound on d_2 when ch_2(X) is nef.
/// Requires d1 >= 0 and a2 >= 1.
Rational second_family_dim_bound(std::int64_t d1, std::int64_t a2);

}  // namespace fanochern
