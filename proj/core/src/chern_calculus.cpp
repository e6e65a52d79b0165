#include "fanochern/chern_calculus.hpp"

#include <charconv>
#include <stdexcept>

#include "fanochern/coefficients.hpp"
#include "fanochern/combinatorics.hpp"

namespace fanochern {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

std::string chern_name(int k) { return k == 1 ? "c1(X)" : "ch_" + std::to_string(k) + "(X)"; }

std::string chern_name_tex(int k) {
  return k == 1 ? "c_1(X)" : "\\mathrm{ch}_{" + std::to_string(k) + "}(X)";
}

std::string with_t(const std::string& inner, int order, bool tex) {
  if (order == 0) return inner;
  if (order == 1) return "T(" + inner + ")";
  return tex ? "T^{" + std::to_string(order) + "}(" + inner + ")"
             : "T^" + std::to_string(order) + "(" + inner + ")";
}

std::string l_factor(int depth, int power, bool tex) {
  if (power == 0) return {};
  std::string base = tex ? "c_1(L_{" + std::to_string(depth) + "})" : "c1(L_" + std::to_string(depth) + ")";
  if (power == 1) return base;
  return tex ? base + "^{" + std::to_string(power) + "}" : base + "^" + std::to_string(power);
}

std::string tex_rational(const Rational& value) {
  if (value.is_integer()) return value.str();
  return "\\frac{" + value.numerator().get_str() + "}{" + value.denominator().get_str() + "}";
}

std::string render(const std::map<BasisTerm, Rational>& terms, bool tex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, coefficient] : terms) {
    const bool negative = coefficient.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -coefficient : coefficient;
    out += tex ? tex_rational(magnitude) : magnitude.str();
    out += tex ? "\\, " : " ";
    out += tex ? term.tex() : term.str();
    first = false;
  }
  return out;
}

Rational integer_power(std::int64_t base, int exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(result);
}

}  // namespace

std::string_view to_string(TermKind kind) {
  switch (kind) {
    case TermKind::pure:
      return "pure";
    case TermKind::scalar_chern:
      return "scalar-chern";
    case TermKind::cycle_chern:
      return "cycle-chern";
  }
  return "unknown";
}

BasisTerm::BasisTerm(int depth, int chern_index, int l_power)
    : depth_(depth), chern_index_(chern_index), l_power_(l_power) {
  require(depth >= 0 && chern_index >= 0 && l_power >= 0, "BasisTerm: negative field");
  if (depth == 0) require(chern_index >= 1 && l_power == 0, "BasisTerm: depth 0 only carries ch_k(X)");
}

BasisTerm BasisTerm::alpha(int i, int j, int k) {
  require(i >= 1 && j >= 1 && k >= 0 && k <= i + j, "alpha: index outside 0 <= k <= i+j");
  return {i, k, k <= i ? j : i + j - k};
}

TermKind BasisTerm::kind() const {
  if (chern_index_ == 0) return TermKind::pure;
  return chern_index_ <= depth_ ? TermKind::scalar_chern : TermKind::cycle_chern;
}

int BasisTerm::t_order() const {
  switch (kind()) {
    case TermKind::pure:
      return 0;
    case TermKind::scalar_chern:
      return chern_index_;
    case TermKind::cycle_chern:
      return depth_;
  }
  return 0;
}

int BasisTerm::codimension() const {
  return kind() == TermKind::cycle_chern ? chern_index_ - depth_ + l_power_ : l_power_;
}

std::string BasisTerm::str() const {
  if (kind() == TermKind::pure) return l_power_ == 0 ? "1" : l_factor(depth_, l_power_, false);
  std::string out = with_t(chern_name(chern_index_), t_order(), false);
  if (l_power_ > 0) out += " " + l_factor(depth_, l_power_, false);
  return out;
}

std::string BasisTerm::tex() const {
  if (kind() == TermKind::pure) return l_power_ == 0 ? "1" : l_factor(depth_, l_power_, true);
  std::string out = with_t(chern_name_tex(chern_index_), t_order(), true);
  if (l_power_ > 0) out += "\\, " + l_factor(depth_, l_power_, true);
  return out;
}

PushedTerm pushforward_term(const BasisTerm& t, std::int64_t a, int extra_l_power) {
  require(a >= 1, "pushforward_term: a must be positive");
  require(extra_l_power >= 0, "pushforward_term: extra L power must be non-negative");
  const int s = t.l_power();
  switch (t.kind()) {
    case TermKind::pure:
      require(s >= 1, "pushforward_term: T of the number 1 is undefined");
      return {BasisTerm(t.depth() + 1, 0, s - 1 + extra_l_power), integer_power(a, s)};
    case TermKind::scalar_chern:
      require(s >= 1, "pushforward_term: T of the number " + t.str() + " is undefined");
      return {BasisTerm(t.depth() + 1, t.chern_index(), s - 1 + extra_l_power), integer_power(a, s)};
    case TermKind::cycle_chern:
      return {BasisTerm(t.depth() + 1, t.chern_index(), s + extra_l_power), integer_power(a, s)};
  }
  throw std::logic_error("pushforward_term: unknown kind");
}

FormalClass::FormalClass(int depth, int codimension) : depth_(depth), codimension_(codimension) {
  require(depth >= 0 && codimension >= 0, "FormalClass: negative depth or codimension");
}

FormalClass FormalClass::ambient_chern_character(int k) {
  FormalClass out(0, k);
  out.add(BasisTerm(0, k, 0), Rational(1));
  return out;
}

void FormalClass::add(const BasisTerm& term, const Rational& coefficient) {
  require(term.depth() == depth_, "FormalClass: symbol " + term.str() + " lives at another depth");
  require(term.codimension() == codimension_,
          "FormalClass: symbol " + term.str() + " has codimension " + std::to_string(term.codimension()) +
              ", expected " + std::to_string(codimension_));
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(term, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational FormalClass::coefficient(const BasisTerm& term) const {
  const auto it = terms_.find(term);
  return it == terms_.end() ? Rational() : it->second;
}

Rational FormalClass::coefficient_at(int chern_index) const {
  for (const auto& [term, c] : terms_) {
    if (term.chern_index() == chern_index) return c;
  }
  return {};
}

FormalClass FormalClass::scaled(const Rational& factor) const {
  FormalClass out(depth_, codimension_);
  if (factor.is_zero()) return out;
  for (const auto& [term, c] : terms_) out.terms_.emplace(term, c * factor);
  return out;
}

FormalClass FormalClass::pushforward(std::int64_t a, int extra_l_power) const {
  require(codimension_ >= 1, "FormalClass::pushforward: T of a number is undefined");
  FormalClass out(depth_ + 1, codimension_ - 1 + extra_l_power);
  for (const auto& [term, c] : terms_) {
    const auto pushed = pushforward_term(term, a, extra_l_power);
    out.add(pushed.term, c * pushed.multiplier);
  }
  return out;
}

FormalClass FormalClass::with_first_family_dimension(std::int64_t d1) const {
  FormalClass out(depth_, codimension_);
  for (const auto& [term, c] : terms_) {
    if (term.kind() == TermKind::scalar_chern && term.chern_index() == 1) {
      out.add(BasisTerm(depth_, 0, term.l_power()), c * Rational(d1 + 2));
    } else {
      out.add(term, c);
    }
  }
  return out;
}

FormalClass& FormalClass::operator+=(const FormalClass& rhs) {
  require(rhs.depth_ == depth_ && rhs.codimension_ == codimension_, "FormalClass: adding unlike classes");
  for (const auto& [term, c] : rhs.terms_) add(term, c);
  return *this;
}

std::string FormalClass::str() const { return render(terms_, false); }

std::string FormalClass::tex() const { return render(terms_, true); }

std::int64_t ChainConfig::a_at(int depth) const {
  if (depth < 1 || depth > length()) throw std::out_of_range("ChainConfig: depth outside the chain");
  return depth == 1 ? 1 : a[static_cast<std::size_t>(depth - 2)];
}

void ChainConfig::validate() const {
  for (std::size_t n = 0; n < a.size(); ++n) {
    require(a[n] >= 1, "ChainConfig: a_" + std::to_string(n + 2) + " must be positive");
  }
}

ChainConfig ChainConfig::all_ones(int length) {
  require(length >= 1, "ChainConfig: length must be positive");
  return {std::vector<std::int64_t>(static_cast<std::size_t>(length - 1), 1)};
}

ChainConfig ChainConfig::parse(std::string_view text) {
  ChainConfig config;
  if (text.empty()) return config;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw std::invalid_argument("ChainConfig: malformed a-list entry '" + std::string(item) + "'");
    }
    config.a.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  config.validate();
  return config;
}

FormalClass chern_next(int j, std::span<const FormalClass> previous, std::int64_t a) {
  require(j >= 1, "chern_next: j must be positive");
  require(previous.size() >= static_cast<std::size_t>(j) + 1,
          "chern_next: need ch_1..ch_" + std::to_string(j + 1) + " of the previous family");
  const int depth = previous.front().depth();
  for (std::size_t q = 0; q <= static_cast<std::size_t>(j); ++q) {
    require(previous[q].depth() == depth, "chern_next: previous classes live at different depths");
    require(previous[q].codimension() == static_cast<int>(q) + 1,
            "chern_next: previous entry " + std::to_string(q) + " is not ch_" + std::to_string(q + 1));
  }

  const auto weights = bernoulli_weights(j);
  FormalClass out(depth + 1, j);
  for (int m = 0; m <= j; ++m) {
    if (weights[m].is_zero()) continue;
    const int degree = j + 1 - m;
    if (degree < 1) throw std::logic_error("chern_next: ch_0 must never enter");
    out += previous[degree - 1].pushforward(a, m).scaled(weights[m]);
  }
  out.add(BasisTerm(depth + 1, 0, j), -Rational(1) / Rational(factorial(static_cast<unsigned>(j))));
  return out;
}

std::vector<FormalClass> expand_chain_window(const ChainConfig& config, int count) {
  config.validate();
  require(count >= 1, "expand_chain: degree must be positive");
  const int length = config.length();
  std::vector<FormalClass> window;
  for (int k = 1; k <= count + length; ++k) window.push_back(FormalClass::ambient_chern_character(k));
  for (int depth = 1; depth <= length; ++depth) {
    const int needed = count + length - depth;
    std::vector<FormalClass> next;
    next.reserve(static_cast<std::size_t>(needed));
    for (int j = 1; j <= needed; ++j) next.push_back(chern_next(j, window, config.a_at(depth)));
    window = std::move(next);
  }
  return window;
}

FormalClass expand_chain(const ChainConfig& config, int j) { return expand_chain_window(config, j).back(); }

Rational corollary1_c1(int i, std::int64_t d1) {
  require(i >= 1, "corollary1_c1: i must be positive");
  return Rational(-i) + Rational(d1 + 2) / Rational(i + 1);
}

Rational corollary1_ch2(int i, std::int64_t d1) {
  require(i >= 1, "corollary1_ch2: i must be positive");
  return Rational(-i) / Rational(2) +
         Rational(static_cast<std::int64_t>(i) * (d1 + 2)) / Rational(2 * (i + 1) * (i + 2));
}

}  // namespace fanochern
