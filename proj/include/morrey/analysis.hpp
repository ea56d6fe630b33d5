#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morrey/discrete_norm.hpp"
#include "morrey/generators.hpp"
#include "morrey/sequence.hpp"

namespace morrey {

struct CertificatePoint {
  long long n;
  Window window;
  LogValue computed;
  LogValue bound;
  bool satisfied;
  std::string label;  // "prefix" for per-n window values, "norm" for the
                      // full truncated norm check
};

struct Certificate {
  enum class Kind { divergence, boundedness };
  Kind kind;
  std::vector<CertificatePoint> points;
  bool overall = false;  // conjunction of the per-point flags
};

/// For n = 1..n_max, checks that the span-window value at {0, ..., beta_n}
/// under exponents (p2, q) strictly exceeds 3^(1/q-1/p2) * 2^(n(v/q-w/p2)),
/// the growing lower-bound family that certifies divergence. Requires
/// q/p2 < v/w and p2 < q.
Certificate divergence_certificate(const NewSeqSpec& spec, double p2,
                                   double q);

/// Checks that the full span norm of the truncated sequence under (p1, q)
/// stays within max(1 + 2^(v-w), 2^((1+v-w)/p1)) + 1e-10, recording the
/// per-prefix values at {0, ..., beta_n} along the way. Requires v/w < q/p1.
Certificate boundedness_certificate(const NewSeqSpec& spec, double p1,
                                    double q);

/// Least-squares slope of log2(value) against n; needs two distinct n.
double growth_exponent(
    const std::vector<std::pair<long long, LogValue>>& points);

struct InclusionVerdict {
  bool included;
  std::string reason;
  std::optional<NewSeqSpec> counterexample;  // present iff p1/q1 > p2/q2
};

/// Decides the inclusion of the (p2, q2) space into the (p1, q1) space:
/// included iff q2 <= q1 and p1/q1 <= p2/q2. When the ratio condition fails
/// the verdict carries witness sequence parameters.
InclusionVerdict inclusion_oracle(double p1, double q1, double p2, double q2);

}  // namespace morrey
