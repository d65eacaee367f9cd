#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "orientmap/mapping.hpp"

namespace orientmap {

/// Runs `work(range, partial)` on contiguous slices of `whole`, one thread per
/// slice, and folds the partials left to right with `Partial::merge`. With
/// threads <= 1 everything runs on the calling thread.
template <typename Partial, typename Work>
Partial map_reduce_ranges(const MappingRange& whole, unsigned threads, Partial seed, Work work) {
  const auto slices = whole.split(threads == 0 ? 1 : threads);
  if (slices.size() <= 1) {
    for (const auto& s : slices) work(s, seed);
    return seed;
  }
  std::vector<Partial> partials(slices.size(), seed);
  std::vector<std::exception_ptr> errors(slices.size());
  {
    std::vector<std::jthread> pool;
    pool.reserve(slices.size());
    for (std::size_t i = 0; i < slices.size(); ++i) {
      pool.emplace_back([&, i] {
        try {
          work(slices[i], partials[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& p : partials) seed.merge(std::move(p));
  return seed;
}

}  // namespace orientmap
