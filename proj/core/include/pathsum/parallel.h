// Copyright 2026 The pathsum Authors
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

#ifndef PATHSUM_PARALLEL_H
#define PATHSUM_PARALLEL_H

#include <cstddef>
#include <functional>
#include <vector>

#include "pathsum/amplitude.h"

namespace pathsum {

/// Caps the number of worker threads used by parallel loops. 0 means hardware concurrency.
/// Results never depend on this value.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Splits [0, n) into chunks whose boundaries depend only on n and grain, and runs
/// body(begin, end) for each chunk, possibly concurrently. Exceptions from any chunk
/// are rethrown on the calling thread.
void parallel_for(std::size_t n, std::size_t grain,
                  const std::function<void(std::size_t begin, std::size_t end)> &body);

/// Deterministic sum of term(i) for i in [0, n): fixed chunks are summed in order,
/// then chunk partials are added in chunk order. Bit-identical at any thread count.
Amplitude parallel_sum(std::size_t n, const std::function<Amplitude(std::size_t)> &term,
                       std::size_t grain = 1 << 14);

}  // namespace pathsum

#endif
