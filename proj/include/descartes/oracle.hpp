#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "descartes/descartes.hpp"

namespace descartes {

struct OracleOptions {
  std::uint64_t segment_size = std::uint64_t{1} << 20;
  unsigned workers = 1;
  /// Called after each finished segment with (segments done, segments total).
  /// Calls are serialized.
  std::function<void(std::uint64_t, std::uint64_t)> on_segment;
};

/// Every odd k <= k_limit for which sigma(k)(m + 1) = 2km has an odd solution
/// m with km > 1, as verified pairs in ascending k.
///
/// No lemma filter is applied. Segments of [1, k_limit] are sieved
/// independently and may run on several workers; the result does not depend
/// on the worker count or segment size.
std::vector<DescartesPair> brute_force_oracle(std::uint64_t k_limit, const OracleOptions& options = {});

}  // namespace descartes
