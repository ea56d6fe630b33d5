#pragma once

// Shared helpers for the test binaries: random sequence corpora and an
// independent dense grid-search oracle for the continuous norm. The oracle
// works off its own cell array and never touches the candidate enumeration
// it is used to check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "morrey/sequence.hpp"
#include "morrey/step_function.hpp"

namespace testsup {

inline morrey::SparseSequence random_sequence(std::mt19937_64& rng,
                                              long long max_abs_index,
                                              int max_support,
                                              int min_support = 0) {
  std::uniform_int_distribution<int> size_dist(min_support, max_support);
  std::uniform_int_distribution<long long> idx(-max_abs_index, max_abs_index);
  std::uniform_int_distribution<int> val(1, 5);
  const int s = size_dist(rng);
  std::set<long long> used;
  std::vector<morrey::SparseSequence::Entry> entries;
  while (static_cast<int>(entries.size()) < s) {
    const long long i = idx(rng);
    if (!used.insert(i).second) continue;
    entries.push_back({i, static_cast<double>(val(rng))});
  }
  return morrey::SparseSequence::from_pairs(std::move(entries));
}

/// Support confined to a window of the given span, placed randomly.
inline morrey::SparseSequence random_narrow_sequence(std::mt19937_64& rng,
                                                     long long span,
                                                     long long center_range,
                                                     int max_support,
                                                     int min_support = 1) {
  std::uniform_int_distribution<long long> base_dist(-center_range,
                                                     center_range);
  std::uniform_int_distribution<long long> off(0, span);
  std::uniform_int_distribution<int> size_dist(min_support, max_support);
  std::uniform_int_distribution<int> val(1, 5);
  const long long base = base_dist(rng);
  const int s = size_dist(rng);
  std::set<long long> used;
  std::vector<morrey::SparseSequence::Entry> entries;
  while (static_cast<int>(entries.size()) < s) {
    const long long i = base + off(rng);
    if (!used.insert(i).second) continue;
    entries.push_back({i, static_cast<double>(val(rng))});
  }
  return morrey::SparseSequence::from_pairs(std::move(entries));
}

inline morrey::MorreyParams random_params(std::mt19937_64& rng,
                                          double p_eq_q_share = 0.1) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> p_dist(1.0, 8.0);
  const double p = p_dist(rng);
  if (unit(rng) < p_eq_q_share) return {p, p};
  std::uniform_real_distribution<double> q_dist(p, 8.0);
  return {p, q_dist(rng)};
}

/// Plain-loop window mass, independent of MassProfile.
inline double naive_mass(const morrey::SparseSequence& seq, morrey::Index lo,
                         morrey::Index hi, double p) {
  double mass = 0.0;
  for (const auto& e : seq.entries())
    if (e.index >= lo && e.index <= hi)
      mass += std::pow(std::abs(e.value), p);
  return mass;
}

struct GridResult {
  double value = 0.0;
  double L = 0.0;
  double R = 0.0;
};

/// Dense grid search over interval endpoints with local refinement down to
/// 1e-7, for compactly supported step functions of modest span.
inline GridResult grid_continuous_norm(const morrey::StepFunction& f,
                                       const morrey::MorreyParams& params,
                                       double step = 1e-3) {
  GridResult best;
  if (f.cells.empty()) return best;
  const double alpha = params.alpha();
  const double inv_p = 1.0 / params.p;
  const long long lo =
      static_cast<long long>(f.cells.front().index) - 1;
  const long long hi = static_cast<long long>(f.cells.back().index) + 2;
  const int ncells = static_cast<int>(hi - lo);
  std::vector<double> cell_mass(static_cast<std::size_t>(ncells), 0.0);
  for (const auto& c : f.cells)
    cell_mass[static_cast<std::size_t>(c.index - lo)] =
        std::pow(std::abs(c.height), params.p);

  auto mass_at = [&](double L, double R) {
    double m = 0.0;
    for (int c = 0; c < ncells; ++c) {
      const double a = static_cast<double>(lo + c);
      const double overlap = std::min(R, a + 1.0) - std::max(L, a);
      if (overlap > 0.0) m += cell_mass[static_cast<std::size_t>(c)] * overlap;
    }
    return m;
  };
  auto offer = [&](GridResult& acc, double L, double R, double mass) {
    if (mass <= 0.0 || R <= L) return;
    const double v = std::exp2(alpha * std::log2(R - L) + inv_p * std::log2(mass));
    if (v > acc.value) acc = {v, L, R};
  };

  const int n_grid = static_cast<int>(std::llround((hi - lo) / step));
  const int per_cell = static_cast<int>(std::llround(1.0 / step));
  // log2 of the interval width by grid distance, hoisted out of the sweep
  std::vector<double> log_width(static_cast<std::size_t>(n_grid) + 1, 0.0);
  for (int d = 1; d <= n_grid; ++d)
    log_width[static_cast<std::size_t>(d)] = std::log2(d * step);

  struct LogBest {
    double log2v = -std::numeric_limits<double>::infinity();
    int iL = 0, iR = 0;
  };
  // column sweep with incremental mass; when the grid step crosses an empty
  // cell the mass is unchanged and the width only grows, so the value cannot
  // improve (alpha <= 0) and the evaluation is skipped
  auto sweep_column = [&](int iL, LogBest& acc) {
    double m = 0.0;
    double m_prev = -1.0;
    for (int iR = iL + 1; iR <= n_grid; ++iR) {
      const int cell = (iR - 1) / per_cell;
      m += cell_mass[static_cast<std::size_t>(cell)] * step;
      if (m <= 0.0 || m == m_prev) continue;
      m_prev = m;
      const double v =
          alpha * log_width[static_cast<std::size_t>(iR - iL)] +
          inv_p * std::log2(m);
      if (v > acc.log2v) acc = {v, iL, iR};
    }
  };

  LogBest top;
#ifdef _OPENMP
#pragma omp parallel
  {
    LogBest local;
#pragma omp for schedule(dynamic, 8) nowait
    for (int iL = 0; iL < n_grid; ++iL) sweep_column(iL, local);
#pragma omp critical(grid_oracle_merge)
    if (local.log2v > top.log2v) top = local;
  }
#else
  for (int iL = 0; iL < n_grid; ++iL) sweep_column(iL, top);
#endif
  if (top.iR > top.iL)
    best = {std::exp2(top.log2v), lo + top.iL * step, lo + top.iR * step};

  // local refinement around the best coarse point
  double fine = step;
  for (int round = 0; round < 4; ++round) {
    const double window = 2.0 * fine;
    fine /= 10.0;
    const GridResult center = best;
    for (double L = center.L - window; L <= center.L + window; L += fine)
      for (double R = center.R - window; R <= center.R + window; R += fine)
        offer(best, L, R, mass_at(L, R));
  }
  return best;
}

}  // namespace testsup
