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

// Compares the OpenMP kernels against the serial reference implementations
// on the two hot loops: divisor scanning and component-distance enumeration.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "skewdna/detail/threads.hpp"
#include "skewdna/distance.hpp"
#include "skewdna/search.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-42s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "results match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::printf("threads: %d\n", skewdna::detail::worker_threads());
    std::printf("%-42s %13s %13s\n", "kernel", "serial ref", "openmp");

    {
        skewdna::SearchOptions opts;
        opts.force_exhaustive = true;
        skewdna::SearchResult ref, par;
        const double s = time_ms([&] {
            ref = skewdna::detail::search_divisors_serial(6, 3, skewdna::PolyClass::theta_palindromic,
                                                          opts);
        });
        const double p = time_ms([&] {
            par = skewdna::search_divisors(6, 3, skewdna::PolyClass::theta_palindromic, opts);
        });
        report("divisor scan, exhaustive 2^16 (deg 3)", s, p, ref.divisors == par.divisors);
    }

    {
        skewdna::SearchOptions opts;
        opts.budget = quick ? (1ull << 16) : (1ull << 20);
        opts.seed = 42;
        skewdna::SearchResult ref, par;
        const double s = time_ms([&] {
            ref = skewdna::detail::search_divisors_serial(6, 4, skewdna::PolyClass::palindromic, opts);
        });
        const double p =
            time_ms([&] { par = skewdna::search_divisors(6, 4, skewdna::PolyClass::palindromic, opts); });
        const std::string name = "divisor scan, sampled 2^" + std::to_string(quick ? 16 : 20) +
                                 " of 2^32 (deg 4)";
        report(name.c_str(), s, p, ref.divisors == par.divisors &&
                                       ref.candidates_tested == par.candidates_tested);
    }

    {
        // k = 5 code: four components of 16^5 = 1,048,576 words each.
        const auto code = skewdna::SkewCyclicCode::make(skewdna::SkewPoly::parse("1000,1000"), 6);
        const auto comps = code.component_codes();
        const std::uint64_t budget = 1ull << 24;
        int ref = 0, par = 0;
        const double s = time_ms([&] {
            for (const auto& c : comps)
                ref += skewdna::detail::component_min_weight_serial(c, budget);
        });
        const double p = time_ms([&] {
            for (const auto& c : comps) par += skewdna::component_min_weight(c, budget, true);
        });
        report("distance enumeration, 4 x 16^5 words", s, p, ref == par);
    }

    return 0;
}
