/*
 * Copyright 2026 The rashomon-surv Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RSURV_PARALLEL_HPP_
#define RSURV_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace rsurv {

// Worker count: hardware concurrency, capped by RASHOMON_SURV_THREADS.
std::size_t max_threads();

// Runs fn(i) for i in [0, n). Each index is processed exactly once; results
// must be written to per-index slots so output never depends on scheduling.
// If tasks throw, one of the exceptions is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rsurv

#endif  // RSURV_PARALLEL_HPP_
