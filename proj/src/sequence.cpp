#include "morrey/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace morrey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct TwoSum {
  double sum;
  double err;
};

inline TwoSum two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

}  // namespace

MorreyParams::MorreyParams(double p_, double q_) : p(p_), q(q_) {
  if (!(p >= 1.0) || !(q >= p) || !std::isfinite(q))
    throw std::invalid_argument("exponents must satisfy 1 <= p <= q < inf");
}

LogValue LogValue::zero() { return {-kInf, 0.0}; }

LogValue LogValue::from_log2(double log2v) { return {log2v, std::exp2(log2v)}; }

LogValue LogValue::from_linear(double v) {
  if (!(v >= 0.0)) throw std::invalid_argument("LogValue requires v >= 0");
  if (v == 0.0) return zero();
  return {std::log2(v), v};
}

bool LogValue::is_zero() const { return log2_value == -kInf; }

Window Window::centered(Index m, Index N) {
  if (N < 0) throw std::invalid_argument("centered window needs N >= 0");
  return {Kind::centered, m, N};
}

Window Window::span(Index k, Index n) {
  if (n < 0) throw std::invalid_argument("span window needs n >= 0");
  return {Kind::span, k, n};
}

Index Window::lo() const {
  return kind == Kind::centered ? anchor - extent : anchor;
}

Index Window::hi() const { return anchor + extent; }

Index Window::cardinality() const {
  return kind == Kind::centered ? 2 * extent + 1 : extent + 1;
}

bool operator==(const Window& a, const Window& b) {
  return a.kind == b.kind && a.anchor == b.anchor && a.extent == b.extent;
}

SparseSequence SparseSequence::from_pairs(std::vector<Entry> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseSequence seq;
  seq.entries_.reserve(pairs.size());
  for (const Entry& e : pairs) {
    if (!std::isfinite(e.value))
      throw std::invalid_argument("sequence value must be finite at index " +
                                  index_to_string(e.index));
    if (e.value == 0.0) continue;
    if (!seq.entries_.empty() && seq.entries_.back().index == e.index) {
      if (seq.entries_.back().value != e.value)
        throw std::invalid_argument(
            "conflicting duplicate values at index " +
            index_to_string(e.index));
      continue;
    }
    seq.entries_.push_back(e);
  }
  return seq;
}

Index SparseSequence::min_index() const {
  if (empty()) throw std::logic_error("min_index of an empty sequence");
  return entries_.front().index;
}

Index SparseSequence::max_index() const {
  if (empty()) throw std::logic_error("max_index of an empty sequence");
  return entries_.back().index;
}

double SparseSequence::value_at(Index i) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), i,
      [](const Entry& e, Index key) { return e.index < key; });
  if (it != entries_.end() && it->index == i) return it->value;
  return 0.0;
}

std::vector<double> prefix_masses(const SparseSequence& seq, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("prefix_masses requires p >= 1");
  std::vector<double> out;
  out.reserve(seq.size());
  double sum = 0.0, comp = 0.0;
  for (const auto& e : seq.entries()) {
    const auto [s, err] = two_sum(sum, std::pow(std::abs(e.value), p));
    sum = s;
    comp += err;
    out.push_back(sum + comp);
  }
  return out;
}

MassProfile::MassProfile(const SparseSequence& seq, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("MassProfile requires p >= 1");
  const std::size_t s = seq.size();
  idx_.reserve(s);
  term_.reserve(s);
  sum_hi_.reserve(s);
  sum_lo_.reserve(s);
  double hi = 0.0, lo = 0.0;
  for (const auto& e : seq.entries()) {
    const double t = std::pow(std::abs(e.value), p);
    // double-double accumulation
    auto [s1, e1] = two_sum(hi, t);
    auto [s2, e2] = two_sum(s1, lo + e1);
    hi = s2;
    lo = e2;
    idx_.push_back(e.index);
    term_.push_back(t);
    sum_hi_.push_back(hi);
    sum_lo_.push_back(lo);
  }
}

double MassProfile::total() const {
  return idx_.empty() ? 0.0 : sum_hi_.back() + sum_lo_.back();
}

double MassProfile::slot_mass(std::size_t first, std::size_t last) const {
  if (first > last || last >= idx_.size()) return 0.0;
  const double ah = first == 0 ? 0.0 : sum_hi_[first - 1];
  const double al = first == 0 ? 0.0 : sum_lo_[first - 1];
  const auto [d, err] = two_sum(sum_hi_[last], -ah);
  return d + (err + (sum_lo_[last] - al));
}

std::pair<std::size_t, std::size_t> MassProfile::slot_range(Index lo,
                                                            Index hi) const {
  auto first = std::lower_bound(idx_.begin(), idx_.end(), lo);
  auto last = std::upper_bound(first, idx_.end(), hi);
  return {static_cast<std::size_t>(first - idx_.begin()),
          static_cast<std::size_t>(last - idx_.begin())};
}

double MassProfile::range_mass(Index lo, Index hi) const {
  const auto [first, last] = slot_range(lo, hi);
  if (first == last) return 0.0;
  return slot_mass(first, last - 1);
}

double mass_in_window(const SparseSequence& seq, const Window& w, double p) {
  return MassProfile(seq, p).range_mass(w.lo(), w.hi());
}

}  // namespace morrey
