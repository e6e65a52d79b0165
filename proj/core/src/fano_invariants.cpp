#include "fanochern/fano_invariants.hpp"

#include <charconv>
#include <stdexcept>

namespace fanochern {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("model spec '" + std::string(spec) + "': bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

MinimalFamilyDimension minimal_family_dim(std::int64_t anticanonical_degree, std::int64_t ambient_dim) {
  require(anticanonical_degree >= 2, "minimal_family_dim: anticanonical degree must be at least 2");
  require(ambient_dim >= 1, "minimal_family_dim: ambient dimension must be positive");
  MinimalFamilyDimension out;
  out.dimension = anticanonical_degree - 2;
  out.within_bound = out.dimension <= ambient_dim - 1;
  out.projective_space_case = out.dimension == ambient_dim - 1;
  return out;
}

ModelFamily ModelFamily::projective_space(int n) {
  require(n >= 1, "P:n needs n >= 1");
  return {Kind::projective_space, n, 0};
}

ModelFamily ModelFamily::quadric(int n) {
  require(n >= 3, "Q:n needs n >= 3");
  return {Kind::quadric, n, 0};
}

ModelFamily ModelFamily::blowup_linear_subspace(int n, int m) {
  require(n >= 1 && m >= 0 && m <= n - 1, "Bl:n,m needs 0 <= m <= n-1");
  return {Kind::blowup_linear_subspace, n, m};
}

ModelFamily ModelFamily::quadric_times_projective(int m) {
  require(m >= 1, "QxP:m needs m >= 1");
  return {Kind::quadric_times_projective, 2 * m + 1, m};
}

ModelFamily ModelFamily::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("model spec '" + std::string(spec) + "': expected KIND:ARGS");
  }
  const std::string_view head = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (head == "P") return projective_space(parse_int(args, spec));
  if (head == "Q") return quadric(parse_int(args, spec));
  if (head == "QxP") return quadric_times_projective(parse_int(args, spec));
  if (head == "Bl") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("model spec '" + std::string(spec) + "': Bl needs n,m");
    }
    return blowup_linear_subspace(parse_int(args.substr(0, comma), spec), parse_int(args.substr(comma + 1), spec));
  }
  throw std::invalid_argument("model spec '" + std::string(spec) + "': unknown kind '" + std::string(head) + "'");
}

int ModelFamily::ambient_dimension() const { return n_; }

bool ModelFamily::isomorphic_to_projective_space() const {
  return kind_ == Kind::projective_space || (kind_ == Kind::blowup_linear_subspace && m_ == n_ - 1);
}

std::string ModelFamily::str() const {
  switch (kind_) {
    case Kind::projective_space:
      return "P:" + std::to_string(n_);
    case Kind::quadric:
      return "Q:" + std::to_string(n_);
    case Kind::blowup_linear_subspace:
      return "Bl:" + std::to_string(n_) + "," + std::to_string(m_);
    case Kind::quadric_times_projective:
      return "QxP:" + std::to_string(m_);
  }
  return "?";
}

InvariantPair example_invariants(const ModelFamily& family) {
  switch (family.kind()) {
    case ModelFamily::Kind::projective_space:
      return {family.n(), family.n()};
    case ModelFamily::Kind::quadric:
      return {(family.n() + 1) / 2, (family.n() + 1) / 2};
    case ModelFamily::Kind::blowup_linear_subspace:
      return {family.m() + 1, family.m() + 1};
    case ModelFamily::Kind::quadric_times_projective:
      return {(family.m() + 2) / 2, family.m()};
  }
  throw std::logic_error("example_invariants: unknown kind");
}

std::string PolarizedFamily::str() const {
  const char* prefix = kind == ModelFamily::Kind::quadric ? "Q:" : "P:";
  return prefix + std::to_string(dimension) + ", " + polarization;
}

bool has_known_polarized_family(const ModelFamily& family) {
  return family.kind() != ModelFamily::Kind::quadric_times_projective;
}

PolarizedFamily example_polarized_family(const ModelFamily& family) {
  switch (family.kind()) {
    case ModelFamily::Kind::projective_space:
      return {ModelFamily::Kind::projective_space, family.n() - 1, "hyperplane"};
    case ModelFamily::Kind::quadric:
      return {ModelFamily::Kind::quadric, family.n() - 2, "hyperplane"};
    case ModelFamily::Kind::blowup_linear_subspace:
      return {ModelFamily::Kind::projective_space, family.m(), "hyperplane"};
    case ModelFamily::Kind::quadric_times_projective:
      break;
  }
  throw std::invalid_argument("example_polarized_family: (H, L) of " + family.str() + " is not known");
}

HypothesisCheck theorem1_hypothesis(std::int64_t n, std::int64_t d1) {
  HypothesisCheck out;
  if (n < 2 || n > 100) {
    out.holds = false;
    out.reasons.push_back("N = " + std::to_string(n) + " outside 2 <= N <= 100");
  }
  // n * n fits in int64 for n <= 3e9.
  if (n >= 2 && n <= 3'000'000'000 && d1 < n * n - n - 1) {
    out.holds = false;
    out.reasons.push_back("d1 = " + std::to_string(d1) + " below N^2 - N - 1 = " + std::to_string(n * n - n - 1));
  }
  return out;
}

Rational chain_dim_lower_bound(std::int64_t m, std::int64_t d1) {
  require(m >= 2, "chain_dim_lower_bound: M must be at least 2");
  return Rational(-(m - 1)) + Rational(d1 + 2) / Rational(m) - Rational(2);
}

Rational second_family_dim_bound(std::int64_t d1, std::int64_t a2) {
  require(d1 >= 0, "second_family_dim_bound: d1 must be non-negative");
  require(a2 >= 1, "second_family_dim_bound: a2 must be positive");
  return Rational(d1) * Rational(a2) / Rational(2) - Rational(2);
}

}  // namespace fanochern
