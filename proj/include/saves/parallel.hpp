/*
 * Copyright 2026 The saves-bench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SAVES_PARALLEL_HPP_
#define SAVES_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace saves {

// Worker-pool width: SAVES_BENCH_THREADS when set (clamped to [1, 256]),
// otherwise the logical core count. Throws kInvalidArgument on an
// unparsable value.
int WorkerCount();

// Runs fn(0) .. fn(n-1) across the worker pool. Results must be written to
// per-index slots: ordering of output is then independent of scheduling.
// The first exception thrown by any worker is rethrown after all workers
// join.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace saves

#endif  // SAVES_PARALLEL_HPP_
