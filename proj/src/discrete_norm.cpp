#include "morrey/discrete_norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morrey {

namespace {

constexpr std::size_t kMaxSupport = 20000;
constexpr Index kMaxBruteSizes = 10000;

void check_support_guard(std::size_t s) {
  if (s > kMaxSupport)
    throw std::length_error(
        "support size " + std::to_string(s) +
        " exceeds the exact pair-enumeration guard of 20000");
}

// Running best candidate; the (anchor, extent) tie-break makes the reduction
// order-independent, so parallel and serial runs agree bit for bit.
struct Best {
  double log2v = -std::numeric_limits<double>::infinity();
  Index anchor = 0;
  Index extent = -1;

  bool valid() const { return extent >= 0; }

  void offer(double cand_log2, Index anchor_, Index extent_) {
    if (cand_log2 > log2v ||
        (cand_log2 == log2v &&
         (!valid() || anchor_ < anchor ||
          (anchor_ == anchor && extent_ < extent)))) {
      log2v = cand_log2;
      anchor = anchor_;
      extent = extent_;
    }
  }

  void merge(const Best& other) {
    if (other.valid()) offer(other.log2v, other.anchor, other.extent);
  }
};

NormResult finish(const Best& best, Window::Kind kind, std::uint64_t cands) {
  NormResult r;
  r.candidates_evaluated = cands;
  if (!best.valid() || best.log2v == -std::numeric_limits<double>::infinity())
    return r;
  r.value = LogValue::from_log2(best.log2v);
  r.argmax = kind == Window::Kind::span
                 ? Window::span(best.anchor, best.extent)
                 : Window::centered(best.anchor, best.extent);
  return r;
}

inline Index floor_half(Index x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

LogValue window_value(const SparseSequence& seq, const Window& w,
                      const MorreyParams& params) {
  const double mass = mass_in_window(seq, w, params.p);
  if (mass == 0.0) return LogValue::zero();
  return LogValue::from_log2(params.alpha() * std::log2(to_double(w.cardinality())) +
                             std::log2(mass) / params.p);
}

NormResult starred_norm(const SparseSequence& seq, const MorreyParams& params,
                        Exec exec) {
  if (seq.empty()) return {};
  check_support_guard(seq.size());
  const MassProfile prof(seq, params.p);
  const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(seq.size());
  const double alpha = params.alpha();
  const double inv_p = 1.0 / params.p;

  auto scan_row = [&](std::ptrdiff_t i, Best& best) {
    const Index ai = prof.index(i);
    for (std::ptrdiff_t j = i; j < s; ++j) {
      const Index aj = prof.index(j);
      const double mass = prof.slot_mass(i, j);
      const double v =
          alpha * std::log2(to_double(aj - ai + 1)) + inv_p * std::log2(mass);
      best.offer(v, ai, aj - ai);
    }
  };

  Best best;
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::ptrdiff_t i = 0; i < s; ++i) scan_row(i, local);
#pragma omp critical(morrey_starred_merge)
      best.merge(local);
    }
  } else
#else
  (void)exec;
#endif
  {
    for (std::ptrdiff_t i = 0; i < s; ++i) scan_row(i, best);
  }

  const std::uint64_t cands =
      static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s + 1) / 2;
  return finish(best, Window::Kind::span, cands);
}

NormResult centered_norm(const SparseSequence& seq, const MorreyParams& params,
                         Exec exec) {
  if (seq.empty()) return {};
  check_support_guard(seq.size());
  const MassProfile prof(seq, params.p);
  const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(seq.size());
  const double alpha = params.alpha();
  const double inv_p = 1.0 / params.p;

  auto scan_row = [&](std::ptrdiff_t i, Best& best, std::uint64_t& cands) {
    const Index ai = prof.index(i);
    for (std::ptrdiff_t j = i; j < s; ++j) {
      const Index aj = prof.index(j);
      const Index m1 = floor_half(ai + aj);
      const Index m2 = floor_half(ai + aj + 1);  // == m1 for an even sum
      const int n_centers = m1 == m2 ? 1 : 2;
      for (int t = 0; t < n_centers; ++t) {
        const Index m = t == 0 ? m1 : m2;
        const Index N = std::max(m - ai, aj - m);
        const double mass = prof.range_mass(m - N, m + N);
        const double v = alpha * std::log2(to_double(2 * N + 1)) +
                         inv_p * std::log2(mass);
        best.offer(v, m, N);
        ++cands;
      }
    }
  };

  Best best;
  std::uint64_t cands = 0;
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      Best local;
      std::uint64_t local_cands = 0;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::ptrdiff_t i = 0; i < s; ++i) scan_row(i, local, local_cands);
#pragma omp critical(morrey_centered_merge)
      {
        best.merge(local);
        cands += local_cands;
      }
    }
  } else
#else
  (void)exec;
#endif
  {
    for (std::ptrdiff_t i = 0; i < s; ++i) scan_row(i, best, cands);
  }
  return finish(best, Window::Kind::centered, cands);
}

NormResult brute_force_norm(const SparseSequence& seq,
                            const MorreyParams& params, Window::Kind kind,
                            Index margin) {
  if (margin < 0) throw std::invalid_argument("margin must be nonnegative");
  if (seq.empty()) return {};
  const Index lo = seq.min_index() - margin;
  const Index hi = seq.max_index() + margin;
  const Index width = hi - lo + 1;
  const Index sizes = kind == Window::Kind::span ? width : (width + 1) / 2;
  if (sizes > kMaxBruteSizes)
    throw std::length_error(
        "brute-force enumeration infeasible: " + index_to_string(sizes) +
        " distinct window sizes (limit 10000)");

  const auto& ent = seq.entries();
  const double alpha = params.alpha();
  const double inv_p = 1.0 / params.p;
  const long long w = static_cast<long long>(width);

  // naive mass of [a, b]: direct sum over the support slice
  auto naive_mass = [&](Index a, Index b) {
    auto first = std::lower_bound(
        ent.begin(), ent.end(), a,
        [](const SparseSequence::Entry& e, Index key) { return e.index < key; });
    double mass = 0.0;
    for (auto it = first; it != ent.end() && it->index <= b; ++it)
      mass += std::pow(std::abs(it->value), params.p);
    return mass;
  };

  Best best;
  std::uint64_t cands = 0;
  if (kind == Window::Kind::span) {
    for (long long k = 0; k < w; ++k)
      for (long long n = 0; n + k < w; ++n) {
        const Index a = lo + k;
        const double mass = naive_mass(a, a + n);
        ++cands;
        if (mass == 0.0) continue;
        const double v = alpha * std::log2(static_cast<double>(n + 1)) +
                         inv_p * std::log2(mass);
        best.offer(v, a, n);
      }
  } else {
    for (long long m = 0; m < w; ++m) {
      const long long n_cap = std::min(m, w - 1 - m);
      for (long long N = 0; N <= n_cap; ++N) {
        const Index c = lo + m;
        const double mass = naive_mass(c - N, c + N);
        ++cands;
        if (mass == 0.0) continue;
        const double v = alpha * std::log2(static_cast<double>(2 * N + 1)) +
                         inv_p * std::log2(mass);
        best.offer(v, c, N);
      }
    }
  }
  return finish(best, kind, cands);
}

std::vector<ProfilePoint> prefix_profile(const SparseSequence& seq,
                                         const MorreyParams& params,
                                         const std::vector<Window>& windows) {
  const MassProfile prof(seq, params.p);
  const double alpha = params.alpha();
  const double inv_p = 1.0 / params.p;
  std::vector<ProfilePoint> out;
  out.reserve(windows.size());
  for (const Window& w : windows) {
    const double mass = prof.range_mass(w.lo(), w.hi());
    LogValue v = LogValue::zero();
    if (mass > 0.0)
      v = LogValue::from_log2(alpha * std::log2(to_double(w.cardinality())) +
                              inv_p * std::log2(mass));
    out.push_back({w, w.cardinality(), mass, v});
  }
  return out;
}

}  // namespace morrey
