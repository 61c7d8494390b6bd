// Copyright 2026 The svcnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVCNET_PARALLEL_H_
#define SVCNET_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace svcnet {

// Number of worker threads used by parallel loops. An explicit override
// (set_thread_cap) wins; otherwise SVCNET_THREADS, otherwise the hardware
// concurrency. Always >= 1.
std::size_t thread_cap();

// 0 clears the override.
void set_thread_cap(std::size_t threads);

// Runs body(i) for i in [0, count). Iterations must write only to slots they
// own; callers index results by i so the outcome is schedule independent.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace svcnet

#endif  // SVCNET_PARALLEL_H_
