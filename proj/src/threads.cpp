// Copyright 2026 the skewdna authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewdna/detail/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewdna::detail {

namespace {
int read_cap() {
    const char* env = std::getenv("SKEWDNA_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        const int cap = std::stoi(env);
        return cap > 0 ? cap : 1;
    } catch (...) {
        return 0;
    }
}
}  // namespace

int worker_threads() {
    static const int cap = read_cap();
#ifdef _OPENMP
    const int available = omp_get_max_threads();
#else
    const int available = 1;
#endif
    if (cap > 0 && cap < available) return cap;
    return available;
}

}  // namespace skewdna::detail
