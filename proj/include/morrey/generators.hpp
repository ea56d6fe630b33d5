#pragma once

#include <optional>
#include <utility>

#include "morrey/sequence.hpp"

namespace morrey {

/// Exact fraction with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;
};

Rational make_rational(long long num, long long den);

/// Exact value of a/b for finite doubles (every double is dyadic).
Rational rational_ratio(double a, double b);

/// Parameters of the block sequence with value 1 on
/// {0, 1} and on S_n = {beta_{n-1} + j*2^{nw} : j = 1..2^{n(v-w)}} for
/// n = 1..n_max, where beta_n = 1 + 2^v + ... + 2^{nv}.
struct NewSeqSpec {
  long long v = 0;
  long long w = 0;
  long long n_max = 0;
};

/// Parameters of the older symmetric sequence: value 1 for |j| <= 2^{w+v}
/// and on the arithmetic progressions from 2^{k(w+v)} down to
/// 2^{k(w+v)} - 2^{k(w+v-2)} with step 2^{kw}, mirrored, for k = k0..k_max.
struct LegacySeqSpec {
  long long v = 0;
  long long w = 0;
  long long k_max = 0;
};

/// Smallest positive k0 with 1 - 1/2^{2 k0} > 1/2^{w+v-1}.
long long legacy_k0(long long v, long long w);

/// beta_n = 1 + 2^v + ... + 2^{nv}; throws std::overflow_error past 2^126.
Index new_sequence_beta(long long v, long long n);

SparseSequence generate_new_sequence(const NewSeqSpec& spec);
SparseSequence generate_legacy_sequence(const LegacySeqSpec& spec);

/// The fraction v/w strictly inside the open interval (lo, hi) with minimal
/// denominator (and minimal numerator among those), by Stern-Brocot descent.
std::pair<long long, long long> choose_vw(const Rational& lo,
                                          const Rational& hi);

/// Smallest w >= 1 such that ((q/p2 - 1)w + 2q/p2, (q/p1 - 1)w + 2) contains
/// an integer, paired with the smallest such integer v.
std::pair<long long, long long> choose_vw_legacy(double p1, double p2,
                                                 double q);

/// Witness parameters for non-inclusion when p1/q1 > p2/q2: v/w is chosen
/// strictly inside (q1/p1, q2/p2) and n_max is the largest value <= 8 that
/// keeps generation in range. Returns nullopt when p1/q1 <= p2/q2.
std::optional<NewSeqSpec> cross_counterexample(double p1, double q1, double p2,
                                               double q2);

}  // namespace morrey
