/*
 * Copyright 2026 The MIMRF Authors.
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

#ifndef MIMRF_PARALLEL_H_
#define MIMRF_PARALLEL_H_

namespace mimrf {

// Thin wrapper over the OpenMP runtime so callers do not need omp.h. When
// the library is built without OpenMP every kernel runs on one thread.
int MaxThreads();

// Caps the number of worker threads used by the parallel kernels. Results
// never depend on this value.
void SetMaxThreads(int n);

bool ParallelEnabled();

}  // namespace mimrf

#endif  // MIMRF_PARALLEL_H_
