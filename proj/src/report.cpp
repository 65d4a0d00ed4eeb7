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

#include "skewdna/report.hpp"

#include <sstream>

#include <json.hpp>

namespace skewdna {

CodeReport analyze(const SkewCyclicCode& code, std::uint64_t samples, std::uint64_t seed,
                   std::uint64_t budget) {
    CodeReport report;
    report.n = code.length();
    report.k = code.rank();
    report.degree = code.generator().degree();
    report.generator = code.generator().to_string();
    report.palindromic = is_palindromic(code.generator());
    report.theta_palindromic = is_theta_palindromic(code.generator());
    const DistanceResult dist = min_distance(code, budget);
    report.d_r16 = dist.d_r16;
    report.d_gray_f16 = dist.d_gray_f16;
    report.component_dimensions = dist.component_dimensions;
    report.reversibility = verify_reversible(code, samples, seed);
    return report;
}

std::string report_to_json(const CodeReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["degree"] = report.degree;
    j["generator"] = report.generator;
    j["class"] = {{"palindromic", report.palindromic},
                  {"theta_palindromic", report.theta_palindromic}};
    j["d_r16"] = report.d_r16;
    j["d_gray_f16"] = report.d_gray_f16;
    j["component_dimensions"] = report.component_dimensions;
    j["reversibility"] = {{"checked", report.reversibility.checked},
                          {"samples", report.reversibility.samples},
                          {"pass", report.reversibility.pass}};
    if (!report.reversibility.pass)
        j["reversibility"]["witness"] = word_to_hex(report.reversibility.witness);
    return j.dump(2);
}

std::string report_to_text(const CodeReport& report) {
    std::ostringstream os;
    os << "generator " << report.generator << "  (degree " << report.degree << ")\n";
    os << "code [n=" << report.n << ", k=" << report.k << ", d=" << report.d_r16 << "]";
    os << "  gray-image d=" << report.d_gray_f16 << "\n";
    os << "class: palindromic=" << (report.palindromic ? "yes" : "no")
       << " theta-palindromic=" << (report.theta_palindromic ? "yes" : "no") << "\n";
    os << "component dimensions:";
    for (int d : report.component_dimensions) os << ' ' << d;
    os << "\n";
    os << "reversible: " << (report.reversibility.pass ? "pass" : "FAIL");
    os << " (basis";
    if (report.reversibility.samples) os << " + " << report.reversibility.samples << " samples";
    os << ")";
    if (!report.reversibility.pass)
        os << "\nwitness: " << word_to_hex(report.reversibility.witness);
    os << "\n";
    return os.str();
}

}  // namespace skewdna
