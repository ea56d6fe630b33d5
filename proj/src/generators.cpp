#include "morrey/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace morrey {

namespace {

// Materialized supports are kept small enough for the O(s^2) searches and
// for sane file sizes; far larger supports are rejected up front.
constexpr long long kMaxGeneratedSupport = 1ll << 22;

Index int128_gcd(Index a, Index b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Index t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// a/b < c/d for positive denominators; products stay within 128 bits for
// all inputs reachable from make_rational / rational_ratio.
bool frac_less(Index an, Index ad, Index bn, Index bd) {
  return an * bd < bn * ad;
}

struct Frac {
  Index num;
  Index den;
};

// Simplest fraction strictly inside (lo, hi), 0 <= lo < hi: the Stern-Brocot
// descent, unfolded as a continued-fraction recursion.
Frac simplest_between(Frac lo, Frac hi) {
  const Index n = lo.num / lo.den;  // floor, nonnegative input
  if (frac_less(n + 1, 1, hi.num, hi.den)) return {n + 1, 1};
  const Frac lo2{lo.num - n * lo.den, lo.den};
  const Frac hi2{hi.num - n * hi.den, hi.den};
  if (lo2.num == 0) {
    const Index m = hi2.den / hi2.num + 1;  // smallest m with 1/m < hi2
    return {n * m + 1, m};
  }
  const Frac inner = simplest_between({hi2.den, hi2.num}, {lo2.den, lo2.num});
  return {n * inner.num + inner.den, inner.num};
}

long long checked_ll(Index v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
  return static_cast<long long>(v);
}

void validate_new_spec(const NewSeqSpec& spec) {
  if (spec.w < 1 || spec.v <= spec.w)
    throw std::invalid_argument("block spec requires v > w >= 1");
  if (spec.n_max < 0)
    throw std::invalid_argument("block spec requires n_max >= 0");
  new_sequence_beta(spec.v, spec.n_max);  // throws on 128-bit overflow
}

long long new_support_count(const NewSeqSpec& spec) {
  long long count = 2;
  for (long long n = 1; n <= spec.n_max; ++n) {
    const long long bits = n * (spec.v - spec.w);
    if (bits >= 62 || (count += (1ll << bits)) > kMaxGeneratedSupport)
      throw std::length_error(
          "generated support would exceed " +
          std::to_string(kMaxGeneratedSupport) + " entries");
  }
  return count;
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Index g = int128_gcd(num, den);
  if (g > 1) {
    num = static_cast<long long>(num / g);
    den = static_cast<long long>(den / g);
  }
  return {num, den};
}

Rational rational_ratio(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || b == 0.0)
    throw std::invalid_argument("rational_ratio needs finite a and nonzero b");
  int ea = 0, eb = 0;
  const double ma = std::frexp(a, &ea);
  const double mb = std::frexp(b, &eb);
  Index num = static_cast<Index>(static_cast<long long>(std::ldexp(ma, 53)));
  Index den = static_cast<Index>(static_cast<long long>(std::ldexp(mb, 53)));
  long long shift = ea - eb;
  // mantissas occupy 53 bits, so +-70 keeps the shifted side inside 128
  if (shift > 70 || shift < -70)
    throw std::overflow_error("double ratio out of rational range");
  if (shift > 0)
    num <<= shift;
  else
    den <<= -shift;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Index g = int128_gcd(num, den);
  num /= g;
  den /= g;
  return {checked_ll(num, "rational numerator"),
          checked_ll(den, "rational denominator")};
}

long long legacy_k0(long long v, long long w) {
  // smallest k0 >= 1 with 1 - 1/2^{2k0} > 1/2^{w+v-1}, i.e.
  // 2^{w+v-1} (2^{2k0} - 1) > 2^{2k0}
  for (long long k0 = 1; k0 <= 32; ++k0) {
    const Index lhs = pow2_index(std::min<long long>(w + v - 1, 60)) *
                      (pow2_index(2 * k0) - 1);
    if (lhs > pow2_index(2 * k0)) return k0;
  }
  throw std::logic_error("k0 search did not terminate");
}

Index new_sequence_beta(long long v, long long n) {
  Index beta = 1;
  for (long long t = 1; t <= n; ++t) {
    if (t * v > 126)
      throw std::overflow_error("beta_" + std::to_string(n) +
                                " exceeds the 128-bit index range");
    const Index term = pow2_index(t * v);
    if (beta > (pow2_index(126) - term))
      throw std::overflow_error("beta_" + std::to_string(n) +
                                " exceeds the 128-bit index range");
    beta += term;
  }
  return beta;
}

SparseSequence generate_new_sequence(const NewSeqSpec& spec) {
  validate_new_spec(spec);
  const long long count = new_support_count(spec);
  std::vector<SparseSequence::Entry> entries;
  entries.reserve(static_cast<std::size_t>(count));
  entries.push_back({0, 1.0});
  entries.push_back({1, 1.0});
  Index beta_prev = 1;  // beta_0
  for (long long n = 1; n <= spec.n_max; ++n) {
    const Index step = pow2_index(n * spec.w);
    const long long block = 1ll << (n * (spec.v - spec.w));
    Index at = beta_prev;
    for (long long j = 0; j < block; ++j) {
      at += step;
      entries.push_back({at, 1.0});
    }
    beta_prev = at;  // == beta_n by construction
  }
  return SparseSequence::from_pairs(std::move(entries));
}

SparseSequence generate_legacy_sequence(const LegacySeqSpec& spec) {
  if (spec.v < 1 || spec.w < 1)
    throw std::invalid_argument("legacy spec requires v, w >= 1");
  if (spec.k_max < 1)
    throw std::invalid_argument("legacy spec requires k_max >= 1");
  if (spec.k_max * (spec.w + spec.v) > 126)
    throw std::overflow_error("2^{k_max(w+v)} exceeds the 128-bit range");

  const long long wv = spec.w + spec.v;
  if (wv > 21)
    throw std::length_error("initial block 2^{w+v} too large to materialize");

  std::vector<Index> positive;
  const Index dense_hi = pow2_index(wv);
  for (Index j = 0; j <= dense_hi; ++j) positive.push_back(j);

  const long long k0 = legacy_k0(spec.v, spec.w);
  for (long long k = k0; k <= spec.k_max; ++k) {
    const Index top = pow2_index(k * wv);
    const Index reach = pow2_index(k * (wv - 2));
    const Index step = pow2_index(k * spec.w);
    const Index n_offsets = reach / step;  // floor; may be 0 for v < 2
    if (n_offsets >= kMaxGeneratedSupport ||
        static_cast<long long>(n_offsets) + 1 >
            kMaxGeneratedSupport - static_cast<long long>(positive.size()))
      throw std::length_error("generated support would exceed " +
                              std::to_string(kMaxGeneratedSupport) +
                              " entries");
    for (Index t = n_offsets; t >= 0; --t) positive.push_back(top - t * step);
  }
  std::sort(positive.begin(), positive.end());
  positive.erase(std::unique(positive.begin(), positive.end()),
                 positive.end());

  std::vector<SparseSequence::Entry> entries;
  entries.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it)
    if (*it > 0) entries.push_back({-*it, 1.0});
  for (Index j : positive) entries.push_back({j, 1.0});
  return SparseSequence::from_pairs(std::move(entries));
}

std::pair<long long, long long> choose_vw(const Rational& lo,
                                          const Rational& hi) {
  if (lo.num <= 0 || lo.den <= 0 || hi.num <= 0 || hi.den <= 0)
    throw std::invalid_argument("choose_vw needs positive rational endpoints");
  if (!frac_less(lo.num, lo.den, hi.num, hi.den))
    throw std::invalid_argument("choose_vw needs a nonempty open interval");
  const Frac f = simplest_between({lo.num, lo.den}, {hi.num, hi.den});
  return {checked_ll(f.num, "chosen v"), checked_ll(f.den, "chosen w")};
}

std::pair<long long, long long> choose_vw_legacy(double p1, double p2,
                                                 double q) {
  if (!(p1 >= 1.0) || !(p1 < p2) || !(p2 <= q))
    throw std::invalid_argument(
        "choose_vw_legacy requires 1 <= p1 < p2 <= q");
  for (long long w = 1; w <= 1000000; ++w) {
    const double lo = (q / p2 - 1.0) * static_cast<double>(w) + 2.0 * q / p2;
    const double hi = (q / p1 - 1.0) * static_cast<double>(w) + 2.0;
    long long v = static_cast<long long>(std::floor(lo)) + 1;
    while (static_cast<double>(v) <= lo) ++v;
    if (static_cast<double>(v) < hi) return {v, w};
  }
  throw std::runtime_error(
      "no (v, w) satisfies the parameter inequality for w <= 10^6");
}

std::optional<NewSeqSpec> cross_counterexample(double p1, double q1, double p2,
                                               double q2) {
  if (!(p1 >= 1.0) || !(q1 >= p1) || !(p2 >= 1.0) || !(q2 >= p2))
    throw std::invalid_argument("exponents must satisfy 1 <= p <= q");
  if (p1 * q2 <= p2 * q1) return std::nullopt;  // p1/q1 <= p2/q2
  const auto [v, w] = choose_vw(rational_ratio(q1, p1), rational_ratio(q2, p2));
  NewSeqSpec spec{v, w, 0};
  for (long long n = 1; n <= 8; ++n) {
    const NewSeqSpec next{v, w, n};
    try {
      validate_new_spec(next);
      new_support_count(next);
    } catch (const std::exception&) {
      break;
    }
    spec = next;
  }
  return spec;
}

}  // namespace morrey
