// Copyright 2026 The PII Forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIIFORGE_PARALLEL_H_
#define PIIFORGE_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace piiforge {

// Applies fn to every item on up to `workers` threads and returns results in
// input order. Items are split into contiguous blocks, one per thread. If any
// call throws, the exception from the lowest failing index is rethrown after
// all threads join.
template <typename In, typename Fn>
auto parallel_map(std::span<const In> items, unsigned workers, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  using Out = std::invoke_result_t<Fn&, const In&>;
  const std::size_t n = items.size();
  std::vector<std::optional<Out>> slots(n);
  std::vector<std::exception_ptr> errors(n);

  auto run_block = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    run_block(0, n);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const std::size_t block = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(n, t * block);
      const std::size_t hi = std::min(n, lo + block);
      pool.emplace_back(run_block, lo, hi);
    }
  }

  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Out> out;
  out.reserve(n);
  for (std::optional<Out>& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace piiforge

#endif  // PIIFORGE_PARALLEL_H_
