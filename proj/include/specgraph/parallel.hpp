#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace specgraph {

/// Run fn(chunk_index, begin, end) over [0, count) split into `jobs`
/// contiguous chunks, one thread per chunk. Results must be combined in
/// chunk-index order (or with an order-independent reduction) so that the
/// outcome does not depend on the worker count.
template <typename Fn>
void parallel_chunks(std::size_t count, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 2) {
    fn(0, std::size_t{0}, count);
    return;
  }
  const std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> threads;
  threads.reserve(nchunks);
  for (std::size_t c = 0; c < nchunks; ++c) {
    const std::size_t begin = count * c / nchunks;
    const std::size_t end = count * (c + 1) / nchunks;
    threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace specgraph
