#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fanochern/rational.hpp"

namespace fanochern {

// Symbolic bookkeeping for Chern characters along a chain
//   X = H_0 |- H_1 |- ... |- H_i
// of minimal families. A class on H_d is a rational combination of basis
// symbols, and T (pushforward along the universal family) moves it to H_{d+1}.
// The basis is free: no relations among the symbols are imposed.

enum class TermKind {
  pure,          // c1(L_d)^s
  scalar_chern,  // T^k(ch_k(X)) c1(L_d)^s with 1 <= k <= d; T^k(ch_k(X)) is a number
  cycle_chern,   // T^d(ch_k(X)) c1(L_d)^s with k > d
};

std::string_view to_string(TermKind kind);

/// One basis symbol on H_depth. The kind is determined by (depth, chern_index):
/// k = 0 is pure, 1 <= k <= depth is scalar-chern, k > depth is cycle-chern.
/// Depth 0 is X itself, where the only symbols are ch_k(X), k >= 1.
class BasisTerm {
 public:
  /// Throws std::invalid_argument for negative fields or a depth-0 symbol that
  /// is not a bare ch_k(X).
  BasisTerm(int depth, int chern_index, int l_power);

  /// The symbol alpha_(i,j,k) appearing in ch_j(H_i).
  static BasisTerm alpha(int i, int j, int k);

  int depth() const { return depth_; }
  int chern_index() const { return chern_index_; }
  int l_power() const { return l_power_; }
  TermKind kind() const;
  /// Number of T applications that have hit ch_k(X).
  int t_order() const;
  /// Codimension of the symbol as a class on H_depth.
  int codimension() const;

  /// e.g. "T^2(ch_2(X)) c1(L_3)".
  std::string str() const;
  /// e.g. "T^{2}(\mathrm{ch}_{2}(X))\, c_1(L_{3})".
  std::string tex() const;

  friend auto operator<=>(const BasisTerm&, const BasisTerm&) = default;

 private:
  int depth_;
  int chern_index_;
  int l_power_;
};

struct PushedTerm {
  BasisTerm term;
  Rational multiplier;
};

/// T(t) * c1(L_{d+1})^extra_l_power for a symbol t on H_d, where
/// a = (L_d . C) for curves C of the next family.
///
///   T(c1(L)^s)              = a^s c1(L')^(s-1)
///   T(beta * c1(L)^s)       = a^s T(beta) c1(L')^s
///
/// so the multiplier is always a^(l_power). Throws std::invalid_argument when
/// t is a number (pure or scalar-chern with l_power 0), a < 1 or
/// extra_l_power < 0.
PushedTerm pushforward_term(const BasisTerm& t, std::int64_t a, int extra_l_power);

/// Finite rational combination of basis symbols on H_depth, all of the same
/// codimension. Zero coefficients are never stored.
class FormalClass {
 public:
  FormalClass(int depth, int codimension);

  /// ch_k(X) as a class at depth 0.
  static FormalClass ambient_chern_character(int k);

  int depth() const { return depth_; }
  int codimension() const { return codimension_; }
  const std::map<BasisTerm, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Throws std::invalid_argument when the symbol's depth or codimension does
  /// not match the class.
  void add(const BasisTerm& term, const Rational& coefficient);

  Rational coefficient(const BasisTerm& term) const;
  /// Coefficient on the unique symbol with this chern index (zero if absent).
  Rational coefficient_at(int chern_index) const;

  FormalClass scaled(const Rational& factor) const;
  /// T(this) * c1(L_{depth+1})^extra_l_power, with a = (L_depth . C).
  FormalClass pushforward(std::int64_t a, int extra_l_power) const;
  /// Replaces the number T(c1(X)) by d1 + 2, folding T(c1(X)) c1(L)^s into c1(L)^s.
  FormalClass with_first_family_dimension(std::int64_t d1) const;

  FormalClass& operator+=(const FormalClass& rhs);
  friend FormalClass operator+(FormalClass lhs, const FormalClass& rhs) { return lhs += rhs; }
  friend FormalClass operator-(FormalClass lhs, const FormalClass& rhs) { return lhs += rhs.scaled(-1); }
  friend bool operator==(const FormalClass&, const FormalClass&) = default;

  /// e.g. "-3 c1(L_3) + 1/4 T(c1(X)) c1(L_3) + ...". Zero class renders as "0".
  std::string str() const;
  std::string tex() const;

 private:
  int depth_;
  int codimension_;
  std::map<BasisTerm, Rational> terms_;
};

/// Chain X |- H_1 |- ... |- H_i described by a = (a_2, ..., a_i), where a_d is
/// the degree of L_{d-1} on curves of H_d. Its length i is a.size() + 1.
struct ChainConfig {
  std::vector<std::int64_t> a;

  int length() const { return static_cast<int>(a.size()) + 1; }
  /// a for the step from H_{depth-1} to H_depth; 1 for depth 1, where no
  /// pure symbols exist yet.
  std::int64_t a_at(int depth) const;
  /// Throws std::invalid_argument when some a_d < 1.
  void validate() const;

  static ChainConfig all_ones(int length);
  /// Parses "1,2,1" (empty string means length 1). Throws std::invalid_argument.
  static ChainConfig parse(std::string_view text);
};

/// ch_j(H_d) = sum_{m=0}^{j} (-1)^m B_m/m! T(ch_{j+1-m}(H_{d-1})) c1(L_d)^m - c1(L_d)^j / j!
///
/// `previous` holds ch_1, ..., ch_{j+1} of H_{d-1} (entry q is ch_{q+1}); extra
/// entries are ignored. Throws std::invalid_argument when the list is short or
/// inconsistent.
FormalClass chern_next(int j, std::span<const FormalClass> previous, std::int64_t a);

/// ch_j(H_i) for the chain, expanded down to symbols in ch_k(X).
FormalClass expand_chain(const ChainConfig& config, int j);

/// ch_1, ..., ch_count of H_i for the chain.
std::vector<FormalClass> expand_chain_window(const ChainConfig& config, int count);

/// Coefficient of c1(L_i) in c1(H_i) once T(c1(X)) = d1 + 2, all a = 1:
/// -i + (d1 + 2)/(i + 1).
Rational corollary1_c1(int i, std::int64_t d1);

/// Coefficient of c1(L_i)^2 in ch_2(H_i) once T(c1(X)) = d1 + 2, all a = 1:
/// -i/2 + i (d1 + 2) / (2 (i + 1)(i + 2)).
Rational corollary1_ch2(int i, std::int64_t d1);

}  // namespace fanochern
