#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "morrey/int128.hpp"

namespace morrey {

/// Exponent pair (p, q) with 1 <= p <= q < inf.
struct MorreyParams {
  double p;
  double q;

  MorreyParams(double p_, double q_);

  /// 1/q - 1/p, in (-1, 0].
  double alpha() const { return 1.0 / q - 1.0 / p; }
};

/// Nonnegative scalar carried in base-2 log form so that window values with
/// cardinalities near 2^96 stay comparable without overflow. Exact zero is
/// encoded as log2_value = -inf; linear_value is a best-effort rendering and
/// may round to +inf for extreme exponents.
struct LogValue {
  double log2_value;
  double linear_value;

  static LogValue zero();
  static LogValue from_log2(double log2v);
  static LogValue from_linear(double v);  // requires v >= 0

  bool is_zero() const;
};

/// Integer index window: either the centered set {m-N, ..., m+N} of odd
/// cardinality 2N+1, or the span {k, ..., k+n} of cardinality n+1.
struct Window {
  enum class Kind { centered, span };

  Kind kind;
  Index anchor;  // m for centered, k for span
  Index extent;  // N for centered, n for span; always >= 0

  static Window centered(Index m, Index N);
  static Window span(Index k, Index n);

  Index lo() const;
  Index hi() const;
  Index cardinality() const;
};

bool operator==(const Window& a, const Window& b);

/// Finitely supported real sequence on Z. Entries are strictly increasing in
/// index and never store zero values; unlisted indices are implicitly zero.
class SparseSequence {
 public:
  struct Entry {
    Index index;
    double value;
  };

  SparseSequence() = default;

  /// Sorts, drops zero values, merges duplicate indices carrying the same
  /// value, and throws std::invalid_argument on conflicting duplicates.
  static SparseSequence from_pairs(std::vector<Entry> pairs);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Index min_index() const;  // requires non-empty
  Index max_index() const;  // requires non-empty

  double value_at(Index i) const;

 private:
  std::vector<Entry> entries_;
};

/// Cumulative sums of |x_j|^p over the sorted support, compensated.
std::vector<double> prefix_masses(const SparseSequence& seq, double p);

/// sum_{j in w} |x_j|^p.
double mass_in_window(const SparseSequence& seq, const Window& w, double p);

/// Prefix masses of |x|^p held in double-double form, so differencing two
/// prefixes loses nothing against the window mass even when the window holds
/// a tiny fraction of the total.
class MassProfile {
 public:
  MassProfile(const SparseSequence& seq, double p);

  std::size_t size() const { return idx_.size(); }
  double total() const;

  /// Mass of the inclusive support-slot range [first, last].
  double slot_mass(std::size_t first, std::size_t last) const;

  /// Mass of all entries with index in [lo, hi].
  double range_mass(Index lo, Index hi) const;

  /// Support slots with index in [lo, hi] as [first, last_exclusive).
  std::pair<std::size_t, std::size_t> slot_range(Index lo, Index hi) const;

  double term(std::size_t slot) const { return term_[slot]; }
  Index index(std::size_t slot) const { return idx_[slot]; }

 private:
  std::vector<Index> idx_;
  std::vector<double> term_;
  std::vector<double> sum_hi_;  // sum_hi_[t] + sum_lo_[t] = sum of term_[0..t]
  std::vector<double> sum_lo_;
};

}  // namespace morrey
