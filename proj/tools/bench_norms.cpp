// Compares the serial reference kernels against the OpenMP ones on random
// and generated supports, checking that both return identical results.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "morrey/discrete_norm.hpp"
#include "morrey/generators.hpp"
#include "morrey/step_function.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

morrey::SparseSequence random_sequence(std::mt19937_64& rng, int count,
                                       long long range) {
  std::uniform_int_distribution<long long> idx(-range, range);
  std::uniform_int_distribution<int> val(1, 5);
  std::set<long long> used;
  std::vector<morrey::SparseSequence::Entry> entries;
  while (static_cast<int>(entries.size()) < count) {
    const long long i = idx(rng);
    if (!used.insert(i).second) continue;
    entries.push_back({i, static_cast<double>(val(rng))});
  }
  return morrey::SparseSequence::from_pairs(std::move(entries));
}

template <typename F>
double best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

void bench_discrete(const char* label, const morrey::SparseSequence& seq,
                    const morrey::MorreyParams& params) {
  morrey::NormResult serial, parallel;
  const double t_serial = best_of(3, [&] {
    serial = morrey::starred_norm(seq, params, morrey::Exec::serial);
  });
  const double t_parallel = best_of(3, [&] {
    parallel = morrey::starred_norm(seq, params, morrey::Exec::parallel);
  });
  const bool same = serial.value.log2_value == parallel.value.log2_value &&
                    serial.argmax == parallel.argmax;
  std::printf("%-24s s=%6zu  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n",
              label, seq.size(), t_serial, t_parallel, t_serial / t_parallel,
              same ? "identical" : "MISMATCH");
}

void bench_continuous(const char* label, const morrey::SparseSequence& seq,
                      const morrey::MorreyParams& params) {
  const auto f = morrey::embed(seq);
  morrey::IntervalNormResult serial, parallel;
  const double t_serial = best_of(3, [&] {
    serial = morrey::continuous_norm(f, params, morrey::Exec::serial);
  });
  const double t_parallel = best_of(3, [&] {
    parallel = morrey::continuous_norm(f, params, morrey::Exec::parallel);
  });
  const bool same = serial.value.log2_value == parallel.value.log2_value &&
                    serial.interval == parallel.interval;
  std::printf("%-24s s=%6zu  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n",
              label, seq.size(), t_serial, t_parallel, t_serial / t_parallel,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial kernel\n");
#endif

  std::mt19937_64 rng(20240901);
  const morrey::MorreyParams params(2.0, 4.0);

  for (const int s : {1000, 2000, 5000})
    bench_discrete("starred_norm/random", random_sequence(rng, s, 1000000),
                   params);

  bench_discrete("starred_norm/blocks",
                 morrey::generate_new_sequence({3, 1, 6}), params);

  for (const int s : {500, 1500})
    bench_continuous("continuous_norm/random", random_sequence(rng, s, 4000),
                     params);
  return 0;
}
