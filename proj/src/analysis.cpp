#include "morrey/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace morrey {

namespace {

constexpr double kBoundSlack = 1e-10;

std::vector<Window> beta_prefix_windows(const NewSeqSpec& spec) {
  std::vector<Window> windows;
  windows.reserve(static_cast<std::size_t>(spec.n_max));
  for (long long n = 1; n <= spec.n_max; ++n)
    windows.push_back(Window::span(0, new_sequence_beta(spec.v, n)));
  return windows;
}

}  // namespace

Certificate divergence_certificate(const NewSeqSpec& spec, double p2,
                                   double q) {
  if (!(p2 >= 1.0) || !(p2 < q))
    throw std::invalid_argument("divergence certificate needs 1 <= p2 < q");
  const double rate =
      static_cast<double>(spec.v) / q - static_cast<double>(spec.w) / p2;
  if (!(rate > 0.0))
    throw std::invalid_argument(
        "divergence certificate needs q/p2 < v/w (v/q - w/p2 > 0)");

  const SparseSequence seq = generate_new_sequence(spec);
  const MorreyParams params(p2, q);
  const double bound_base = (1.0 / q - 1.0 / p2) * std::log2(3.0);

  Certificate cert;
  cert.kind = Certificate::Kind::divergence;
  cert.overall = true;
  const auto profile = prefix_profile(seq, params, beta_prefix_windows(spec));
  for (std::size_t t = 0; t < profile.size(); ++t) {
    const long long n = static_cast<long long>(t) + 1;
    const LogValue bound =
        LogValue::from_log2(bound_base + static_cast<double>(n) * rate);
    // the paper-side inequality is strict, and holds with wide margin, so no
    // slack is applied
    const bool ok = profile[t].value.log2_value > bound.log2_value;
    cert.points.push_back({n, profile[t].window, profile[t].value, bound, ok,
                           "prefix"});
    cert.overall = cert.overall && ok;
  }
  return cert;
}

Certificate boundedness_certificate(const NewSeqSpec& spec, double p1,
                                    double q) {
  if (!(p1 >= 1.0) || !(q >= p1))
    throw std::invalid_argument("boundedness certificate needs 1 <= p1 <= q");
  if (!(static_cast<double>(spec.v) * p1 < static_cast<double>(spec.w) * q))
    throw std::invalid_argument("boundedness certificate needs v/w < q/p1");

  const SparseSequence seq = generate_new_sequence(spec);
  const MorreyParams params(p1, q);
  const double bound_linear =
      std::max(1.0 + std::exp2(static_cast<double>(spec.v - spec.w)),
               std::exp2(static_cast<double>(1 + spec.v - spec.w) / p1));
  const LogValue bound = LogValue::from_linear(bound_linear);

  Certificate cert;
  cert.kind = Certificate::Kind::boundedness;
  cert.overall = true;
  const auto profile = prefix_profile(seq, params, beta_prefix_windows(spec));
  for (std::size_t t = 0; t < profile.size(); ++t) {
    const long long n = static_cast<long long>(t) + 1;
    const bool ok = profile[t].value.linear_value <= bound_linear + kBoundSlack;
    cert.points.push_back({n, profile[t].window, profile[t].value, bound, ok,
                           "prefix"});
    cert.overall = cert.overall && ok;
  }

  const NormResult norm = starred_norm(seq, params);
  const bool ok = norm.value.linear_value <= bound_linear + kBoundSlack;
  cert.points.push_back({spec.n_max,
                         norm.argmax.value_or(Window::span(0, 0)), norm.value,
                         bound, ok, "norm"});
  cert.overall = cert.overall && ok;
  return cert;
}

double growth_exponent(
    const std::vector<std::pair<long long, LogValue>>& points) {
  bool two_distinct = false;
  for (const auto& [n, v] : points) {
    if (v.is_zero())
      throw std::invalid_argument("growth_exponent needs positive values");
    two_distinct = two_distinct || n != points.front().first;
  }
  if (!two_distinct)
    throw std::invalid_argument(
        "growth_exponent needs at least two points with distinct n");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, v] : points) {
    const double x = static_cast<double>(n);
    sx += x;
    sy += v.log2_value;
    sxx += x * x;
    sxy += x * v.log2_value;
  }
  const double m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

InclusionVerdict inclusion_oracle(double p1, double q1, double p2, double q2) {
  if (!(p1 >= 1.0) || !(q1 >= p1) || !(p2 >= 1.0) || !(q2 >= p2))
    throw std::invalid_argument("exponents must satisfy 1 <= p <= q");

  const bool q_ok = q2 <= q1;
  const bool ratio_ok = p1 * q2 <= p2 * q1;  // p1/q1 <= p2/q2
  InclusionVerdict v;
  v.included = q_ok && ratio_ok;
  if (v.included) {
    if (p1 * q2 < p2 * q1)
      v.reason =
          "included: q2 <= q1 and p1/q1 < p2/q2; the inclusion is proper";
    else
      v.reason = "included: q2 <= q1 and p1/q1 = p2/q2";
  } else if (!ratio_ok) {
    v.reason = q_ok ? "not included: p1/q1 > p2/q2"
                    : "not included: q2 > q1 and p1/q1 > p2/q2";
    v.counterexample = cross_counterexample(p1, q1, p2, q2);
  } else {
    v.reason = "not included: q2 > q1";
  }
  return v;
}

}  // namespace morrey
