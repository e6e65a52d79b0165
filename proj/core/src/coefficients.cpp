#include "fanochern/coefficients.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fanochern/combinatorics.hpp"

namespace fanochern {

namespace {

using RowVisitor = std::function<void(int i, int j, const std::vector<Rational>& row)>;

// Visits every row (i, j) with 1 <= i <= i_max and 1 <= j <= j_top + i_max - i,
// depth by depth, j ascending. Only two depths of rows are alive at a time.
void sweep(int i_max, int j_top, unsigned workers, const RowVisitor& visit) {
  const int j_first = j_top + i_max - 1;
  const auto weights = bernoulli_weights(j_first);

  std::vector<std::vector<Rational>> previous;
  previous.reserve(static_cast<std::size_t>(j_first));
  for (int j = 1; j <= j_first; ++j) previous.push_back(base_row(j));
  for (int j = 1; j <= j_first; ++j) visit(1, j, previous[j - 1]);

  workers = std::max(1u, workers);
  for (int i = 2; i <= i_max; ++i) {
    const int count = j_top + i_max - i;
    std::vector<std::vector<Rational>> current(static_cast<std::size_t>(count));
    const auto lookup = [&previous](int jp) -> const std::vector<Rational>& { return previous[jp - 1]; };

    std::atomic<int> next{1};
    const auto work = [&] {
      for (int j = next++; j <= count; j = next++) current[j - 1] = recurrence_row(i, j, weights, lookup);
    };
    const unsigned spawn = std::min<unsigned>(workers, static_cast<unsigned>(count)) - 1;
    std::vector<std::jthread> pool;
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(work);
    work();
    pool.clear();

    for (int j = 1; j <= count; ++j) visit(i, j, current[j - 1]);
    previous = std::move(current);
  }
}

}  // namespace

void CoeffIndex::validate() const {
  if (i < 1 || j < 1) throw std::out_of_range("coefficient index " + str() + ": i and j must be positive");
  if (k < 0 || k > i + j) throw std::out_of_range("coefficient index " + str() + ": k outside [0, i+j]");
}

std::string CoeffIndex::str() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::vector<Rational> bernoulli_weights(int max_m) {
  const auto b = bernoulli_table(static_cast<unsigned>(std::max(max_m, 0)));
  std::vector<Rational> weights;
  weights.reserve(b.size());
  for (std::size_t m = 0; m < b.size(); ++m) {
    Rational w = b[m] / Rational(factorial(static_cast<unsigned>(m)));
    weights.push_back(m % 2 == 1 ? -w : w);
  }
  return weights;
}

std::vector<Rational> base_row(int j) {
  if (j < 1) throw std::out_of_range("base_row: j must be positive");
  const auto weights = bernoulli_weights(j);
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(j) + 2);
  row.push_back(-Rational(1) / Rational(factorial(static_cast<unsigned>(j))));
  for (int k = 1; k <= j + 1; ++k) row.push_back(weights[j + 1 - k]);
  return row;
}

std::vector<Rational> recurrence_row(int i, int j, const std::vector<Rational>& weights,
                                     const std::function<const std::vector<Rational>&(int)>& previous) {
  if (i < 2 || j < 1) throw std::out_of_range("recurrence_row: needs i >= 2 and j >= 1");
  if (static_cast<int>(weights.size()) <= j) throw std::out_of_range("recurrence_row: weights too short");
  std::vector<Rational> row(static_cast<std::size_t>(i + j) + 1);
  for (int k = 0; k <= i + j; ++k) {
    Rational& sum = row[k];
    const int m_max = std::min(j, i + j - k);
    for (int m = 0; m <= m_max; ++m) {
      if (weights[m].is_zero()) continue;
      const int jp = j + 1 - m;
      if (k > (i - 1) + jp) throw std::logic_error("recurrence_row: inner index leaves the domain");
      sum.add_product(weights[m], previous(jp)[k]);
    }
    if (k == 0) sum -= Rational(1) / Rational(factorial(static_cast<unsigned>(j)));
  }
  return row;
}

CoefficientTable::Key CoefficientTable::key(int i, int j, int k) {
  return (static_cast<Key>(i) << 42) | (static_cast<Key>(j) << 21) | static_cast<Key>(k);
}

bool CoefficientTable::lookup(const CoeffIndex& idx, Rational& out) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(key(idx.i, idx.j, idx.k));
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void CoefficientTable::store(const CoeffIndex& idx, const Rational& value) {
  std::unique_lock lock(mutex_);
  entries_.try_emplace(key(idx.i, idx.j, idx.k), value);
}

void CoefficientTable::store_row(int i, int j, const std::vector<Rational>& row) {
  std::unique_lock lock(mutex_);
  for (int k = 0; k < static_cast<int>(row.size()); ++k) entries_.try_emplace(key(i, j, k), row[k]);
  int& mark = high_water_[j];
  mark = std::max(mark, i);
}

const std::vector<Rational>& CoefficientTable::weights(int max_m) {
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(weights_.size()) > max_m) return weights_;
  }
  auto grown = bernoulli_weights(max_m);
  std::unique_lock lock(mutex_);
  if (static_cast<int>(weights_.size()) <= max_m) weights_ = std::move(grown);
  return weights_;
}

Rational CoefficientTable::b(const CoeffIndex& idx) {
  idx.validate();
  Rational value;
  if (lookup(idx, value)) return value;
  return compute(idx);
}

Rational CoefficientTable::compute(const CoeffIndex& idx) {
  // Copy: weights_ may be regrown by another thread while this recursion runs.
  const std::vector<Rational> w = [&] {
    const auto& shared = weights(idx.i + idx.j);
    std::shared_lock lock(mutex_);
    return std::vector<Rational>(shared.begin(), shared.begin() + idx.i + idx.j + 1);
  }();

  // Explicit stack instead of recursion: depth grows linearly with i.
  std::vector<CoeffIndex> pending{idx};
  Rational value;
  while (!pending.empty()) {
    const CoeffIndex cur = pending.back();
    if (lookup(cur, value)) {
      pending.pop_back();
      continue;
    }
    if (cur.i == 1) {
      value = cur.k == 0 ? -Rational(1) / Rational(factorial(static_cast<unsigned>(cur.j)))
                         : w[cur.j + 1 - cur.k];
      store(cur, value);
      pending.pop_back();
      continue;
    }
    const int m_max = std::min(cur.j, cur.i + cur.j - cur.k);
    bool ready = true;
    Rational sum;
    for (int m = 0; m <= m_max; ++m) {
      if (w[m].is_zero()) continue;
      const CoeffIndex inner{cur.i - 1, cur.j + 1 - m, cur.k};
      if (!inner.valid()) throw std::logic_error("b_coeff: inner index " + inner.str() + " leaves the domain");
      Rational term;
      if (lookup(inner, term)) {
        if (ready) sum.add_product(w[m], term);
      } else {
        ready = false;
        pending.push_back(inner);
      }
    }
    if (!ready) continue;
    if (cur.k == 0) sum -= Rational(1) / Rational(factorial(static_cast<unsigned>(cur.j)));
    store(cur, sum);
    pending.pop_back();
  }
  lookup(idx, value);
  return value;
}

std::vector<Rational> CoefficientTable::row(int i, int j) {
  if (i < 1 || j < 1) throw std::out_of_range("b_row: i and j must be positive");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(i + j) + 1);
  for (int k = 0; k <= i + j; ++k) out.push_back(b({i, j, k}));
  return out;
}

void CoefficientTable::fill(int i_max, int j_max, unsigned workers) {
  if (i_max < 1 || j_max < 1) throw std::out_of_range("fill: i_max and j_max must be positive");
  sweep(i_max, j_max, workers, [this](int i, int j, const std::vector<Rational>& r) { store_row(i, j, r); });
}

std::size_t CoefficientTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

int CoefficientTable::high_water(int j) const {
  std::shared_lock lock(mutex_);
  const auto it = high_water_.find(j);
  return it == high_water_.end() ? 0 : it->second;
}

CoefficientTable& shared_coefficient_table() {
  static CoefficientTable table;
  return table;
}

Rational b_coeff(const CoeffIndex& idx) { return shared_coefficient_table().b(idx); }

std::vector<Rational> b_row(int i, int j) { return shared_coefficient_table().row(i, j); }

Rational b_closed_form_k0(int i, int j) {
  if (i < 1 || j < 1) throw std::out_of_range("b_closed_form_k0: i and j must be positive");
  return Rational(-i) / Rational(factorial(static_cast<unsigned>(j)));
}

Rational b_closed_form_k1(int i, int j) {
  if (i < 1 || j < 1) throw std::out_of_range("b_closed_form_k1: i and j must be positive");
  Rational sum;
  for (int p = 1; p <= j; ++p) sum += c_coeff(j, p) / Rational(i + p);
  sum /= Rational(factorial(static_cast<unsigned>(j)));
  return j % 2 == 0 ? sum : -sum;
}

PositivityReport verify_positivity(const PositivityRequest& request) {
  if (request.j_set.empty()) throw std::invalid_argument("verify_positivity: empty j set");
  if (*request.j_set.begin() < 1) throw std::invalid_argument("verify_positivity: j must be positive");
  if (request.i_lo < 1 || request.i_lo > request.i_hi) {
    throw std::invalid_argument("verify_positivity: need 1 <= i_lo <= i_hi");
  }
  const auto start = std::chrono::steady_clock::now();

  PositivityReport report;
  report.i_lo = request.i_lo;
  report.i_hi = request.i_hi;
  report.j_set = request.j_set;
  report.strict = request.strict;

  ObservedPattern top{"top_is_one", "b_(i,j,i+j) = 1"};
  ObservedPattern below_top{"below_top_is_half_i", "b_(i,j,i+j-1) = i/2"};

  const int j_top = *request.j_set.rbegin();
  sweep(request.i_hi, j_top, request.workers, [&](int i, int j, const std::vector<Rational>& row) {
    if (i < request.i_lo || !request.j_set.contains(j)) return;
    for (int k = 1; k <= i + j; ++k) {
      const int s = row[k].sign();
      if (s < 0 || (request.strict && s == 0)) report.violations.push_back({{i, j, k}, row[k]});
    }
    report.coefficients_checked += static_cast<std::size_t>(i + j);
    ++top.checked;
    if (row[i + j] == Rational(1)) ++top.matched;
    ++below_top.checked;
    if (row[i + j - 1] == Rational(i) / Rational(2)) ++below_top.matched;
  });

  // sweep visits depth-major, so (i, j, k) order already holds; sorting keeps
  // the contract explicit.
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) { return a.index < b.index; });
  report.patterns = {top, below_top};
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace fanochern
