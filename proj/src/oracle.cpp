#include "descartes/oracle.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "descartes/sigma_sieve.hpp"

namespace descartes {

namespace {

using u128 = unsigned __int128;

std::vector<DescartesPair> scan_segment(std::uint64_t lo, std::uint64_t hi) {
  std::vector<DescartesPair> hits;
  const SigmaTable table = sigma_sieve(lo, hi, hi - lo);
  for (std::uint64_t k = lo | 1U; k < hi; k += 2) {
    const std::uint64_t s = table.at(k);
    if (s >= 2 * k) continue;  // perfect or abundant
    const std::uint64_t gap = 2 * k - s;
    if (s % gap != 0) continue;
    const std::uint64_t m = s / gap;
    if ((m & 1U) == 0 || static_cast<u128>(k) * m <= 1) continue;
    auto pair = DescartesPair::make(factorize(Integer(k)), factorize(Integer(m)));
    if (!pair) {
      throw std::logic_error("sieve and factorization disagree on sigma(" + std::to_string(k) + ")");
    }
    hits.push_back(std::move(*pair));
  }
  return hits;
}

}  // namespace

std::vector<DescartesPair> brute_force_oracle(std::uint64_t k_limit, const OracleOptions& options) {
  if (k_limit < 1) {
    throw std::invalid_argument("k_limit must be at least 1");
  }
  if (options.segment_size == 0 || options.workers == 0) {
    throw std::invalid_argument("segment_size and workers must be positive");
  }
  const std::uint64_t end = k_limit + 1;
  const std::uint64_t segments = (k_limit + options.segment_size - 1) / options.segment_size;
  std::vector<std::vector<DescartesPair>> per_segment(segments);

  std::atomic<std::uint64_t> next{0};
  std::mutex report_mutex;
  std::uint64_t done = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (std::uint64_t s = next++; s < segments; s = next++) {
      const std::uint64_t lo = 1 + s * options.segment_size;
      const std::uint64_t hi = std::min(end, lo + options.segment_size);
      try {
        per_segment[s] = scan_segment(lo, hi);
      } catch (...) {
        std::lock_guard lock(report_mutex);
        if (!failure) failure = std::current_exception();
        next = segments;
        return;
      }
      std::lock_guard lock(report_mutex);
      ++done;
      if (options.on_segment) options.on_segment(done, segments);
    }
  };

  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::uint64_t>(options.workers, segments));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<DescartesPair> out;
  for (auto& seg : per_segment) {
    for (auto& pair : seg) out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace descartes
