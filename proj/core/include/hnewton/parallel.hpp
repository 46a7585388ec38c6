#pragma once

#include <cstddef>
#include <functional>

namespace hnewton {

// worker count: hardware concurrency, capped by the HN_THREADS environment
// variable when set (HN_THREADS=1 forces sequential execution)
int worker_count();

// run fn over [0, n) split into contiguous chunks, one thread per chunk.
// fn(begin, end) must not touch state shared with other chunks.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hnewton
