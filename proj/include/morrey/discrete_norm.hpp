#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "morrey/sequence.hpp"

namespace morrey {

/// Engine selection for the search kernels. Both produce bit-identical
/// results; the serial path is the reference the parallel one is tested
/// against.
enum class Exec { serial, parallel };

struct NormResult {
  LogValue value = LogValue::zero();
  std::optional<Window> argmax;  // absent when value is zero
  std::uint64_t candidates_evaluated = 0;
};

struct ProfilePoint {
  Window window;
  Index cardinality;
  double mass;
  LogValue value;
};

/// |w|^(1/q-1/p) * (sum_{j in w} |x_j|^p)^(1/p), zero-mass windows map to 0.
LogValue window_value(const SparseSequence& seq, const Window& w,
                      const MorreyParams& params);

/// Supremum of window_value over all spans {k, ..., k+n}. Since the
/// cardinality exponent is nonpositive, the supremum is attained on spans
/// whose endpoints are both support points, so the search enumerates the
/// O(s^2) support pairs with prefix masses. Ties break to the smallest
/// (k, n) lexicographically.
NormResult starred_norm(const SparseSequence& seq, const MorreyParams& params,
                        Exec exec = Exec::parallel);

/// Supremum of window_value over all centered sets {m-N, ..., m+N}. For each
/// support pair the minimal covering windows (floor and ceiling midpoint
/// centers) dominate every window with the same extremal support, so those
/// are the only candidates evaluated; each is scored with the true mass of
/// the full window. Ties break to the smallest (m, N).
NormResult centered_norm(const SparseSequence& seq, const MorreyParams& params,
                         Exec exec = Exec::parallel);

/// Exhaustive oracle: evaluates every window of the requested kind lying
/// inside [min_support - margin, max_support + margin], each with a naive
/// mass loop. Throws std::length_error when the box admits more than 10^4
/// distinct window sizes.
NormResult brute_force_norm(const SparseSequence& seq,
                            const MorreyParams& params, Window::Kind kind,
                            Index margin);

/// window_value plus cardinality and mass for each requested window, in
/// order.
std::vector<ProfilePoint> prefix_profile(const SparseSequence& seq,
                                         const MorreyParams& params,
                                         const std::vector<Window>& windows);

}  // namespace morrey
