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

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewdna/dna.hpp"
#include "skewdna/errors.hpp"
#include "skewdna/report.hpp"
#include "skewdna/search.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string generator;
    std::string message;
    std::string codebook_path;
    int n = 0;
    int degree = 0;
    std::string cls = "theta-palindromic";
    std::uint64_t budget = 1ull << 24;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::string format = "text";
    bool allow_odd = false;
    bool exhaustive = false;
    bool all_spanning = false;
    std::string out_path;
};

// Writes to --out when given, else stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw skewdna::ValidationError("cannot open output path: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

skewdna::SkewCyclicCode make_code_checked(const Options& opt) {
    const skewdna::SkewPoly g = skewdna::SkewPoly::parse(opt.generator);
    auto code = skewdna::SkewCyclicCode::make(g, opt.n, opt.allow_odd);
    if (code.odd_length())
        std::cerr << "warning: odd length, the twisted shift acts as the plain cyclic shift\n";
    return code;
}

int cmd_table(const Options& opt) {
    Output out(opt.out_path);
    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : skewdna::tau_table()) {
            rows.push_back({{"power", row.power},
                            {"element", std::string(1, row.value.to_hex())},
                            {"pair", row.pair},
                            {"reverse_of", std::string(1, row.value.frob().to_hex())}});
        }
        out.stream() << rows.dump(2) << "\n";
        return kExitPass;
    }
    out.stream() << "element  power   pair  pairs-with(power)\n";
    for (const auto& row : skewdna::tau_table()) {
        const std::string power = row.power < 0 ? "0" : "a^" + std::to_string(row.power);
        const skewdna::Gf16 partner = row.value.frob();
        const int partner_power = partner.is_zero() ? -1 : partner.log();
        out.stream() << "   " << row.value.to_hex() << "     " << power;
        for (std::size_t pad = power.size(); pad < 6; ++pad) out.stream() << ' ';
        out.stream() << "  " << row.pair << "    "
                     << (partner_power < 0 ? "0" : "a^" + std::to_string(partner_power)) << "\n";
    }
    return kExitPass;
}

int cmd_analyze(const Options& opt) {
    const auto code = make_code_checked(opt);
    const auto report = skewdna::analyze(code, opt.samples, opt.seed, opt.budget);
    Output out(opt.out_path);
    out.stream() << (opt.format == "json" ? skewdna::report_to_json(report)
                                          : skewdna::report_to_text(report))
                 << (opt.format == "json" ? "\n" : "");
    return report.reversibility.pass ? kExitPass : kExitVerifyFail;
}

int cmd_search(const Options& opt) {
    skewdna::SearchOptions sopt;
    sopt.budget = opt.budget;
    sopt.seed = opt.seed;
    sopt.force_exhaustive = opt.exhaustive;
    const auto result =
        skewdna::search_divisors(opt.n, opt.degree, skewdna::poly_class_from_string(opt.cls), sopt);

    std::vector<skewdna::CodeReport> reports;
    reports.reserve(result.divisors.size());
    for (const auto& g : result.divisors) {
        const auto code = skewdna::SkewCyclicCode::make(g, opt.n);
        reports.push_back(skewdna::analyze(code, 0, opt.seed, opt.budget));
    }

    Output out(opt.out_path);
    if (opt.format == "json") {
        nlohmann::json j;
        j["n"] = opt.n;
        j["degree"] = opt.degree;
        j["class"] = opt.cls;
        j["exhaustive"] = result.exhaustive;
        j["candidates_tested"] = result.candidates_tested;
        j["divisors"] = nlohmann::json::array();
        for (const auto& r : reports) j["divisors"].push_back(nlohmann::json::parse(skewdna::report_to_json(r)));
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << "tested " << result.candidates_tested << " candidates ("
                     << (result.exhaustive ? "exhaustive" : "sampled") << "), found "
                     << reports.size() << " generator(s)\n";
        for (const auto& r : reports) {
            out.stream() << "  " << r.generator << "  [n=" << r.n << ", k=" << r.k
                         << ", d=" << r.d_r16 << "]"
                         << (r.reversibility.pass ? "  reversible" : "  NOT reversible") << "\n";
        }
    }
    return kExitPass;
}

int cmd_encode(const Options& opt) {
    const auto code = make_code_checked(opt);
    skewdna::Codebook book;
    book.n = code.length();
    book.k = code.rank();
    book.generator = code.generator().to_string();
    if (opt.all_spanning) {
        for (const auto& word : code.spanning_codewords())
            book.entries.push_back({word, skewdna::codeword_to_dna(word)});
    } else {
        if (opt.message.empty())
            throw skewdna::ValidationError("encode needs --message or --all-spanning");
        const auto word = code.encode(skewdna::SkewPoly::parse(opt.message));
        book.entries.push_back({word, skewdna::codeword_to_dna(word)});
    }
    Output out(opt.out_path);
    skewdna::write_codebook(out.stream(), book);
    return kExitPass;
}

int cmd_verify(const Options& opt) {
    std::ifstream in(opt.codebook_path);
    if (!in) throw skewdna::ValidationError("cannot open codebook: " + opt.codebook_path);
    const skewdna::Codebook book = skewdna::read_codebook(in);

    const auto code = make_code_checked(opt);
    if (book.n != code.length() || book.generator != code.generator().to_string())
        throw skewdna::ValidationError("codebook header does not match the given generator/length");

    for (const auto& entry : book.entries) {
        if (static_cast<int>(entry.word.size()) != code.length())
            throw skewdna::ValidationError("codebook line has the wrong number of words");
        if (skewdna::codeword_to_dna(entry.word) != entry.dna)
            throw skewdna::ValidationError("codebook DNA field does not match its codeword: " +
                                           skewdna::word_to_hex(entry.word));
    }

    const auto report = skewdna::verify_reversible(code, opt.samples, opt.seed);
    if (report.pass) {
        std::cout << "pass: " << book.entries.size() << " line(s) consistent, code is reversible\n";
        return kExitPass;
    }
    std::cout << "FAIL: witness " << skewdna::word_to_hex(report.witness) << " reverses outside the code\n";
    return kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible DNA codes from skew cyclic codes over F16+uF16+vF16+uvF16"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", opt.out_path, "write output to this path");
    };

    CLI::App* table = app.add_subcommand("table", "print the field <-> DNA pairing table");
    add_common(table);

    CLI::App* analyze = app.add_subcommand("analyze", "analyze one generator polynomial");
    analyze->add_option("generator", opt.generator, "comma-separated hex words, lowest degree first")
        ->required();
    analyze->add_option("--n", opt.n, "code length")->required();
    analyze->add_flag("--allow-odd", opt.allow_odd, "permit odd lengths");
    analyze->add_option("--samples", opt.samples, "extra random reversibility samples");
    analyze->add_option("--seed", opt.seed, "seed for sampled checks");
    analyze->add_option("--budget", opt.budget, "enumeration budget per component");
    add_common(analyze);

    CLI::App* search = app.add_subcommand("search", "search for generators of a given class");
    search->add_option("--n", opt.n, "code length")->required();
    search->add_option("--degree", opt.degree, "generator degree")->required();
    search->add_option("--class", opt.cls, "palindromic or theta-palindromic")->required();
    search->add_option("--budget", opt.budget, "candidate budget before sampling kicks in");
    search->add_option("--seed", opt.seed, "sampling seed");
    search->add_flag("--exhaustive", opt.exhaustive, "scan the whole space regardless of budget");
    add_common(search);

    CLI::App* encode = app.add_subcommand("encode", "encode messages into a codebook");
    encode->add_option("generator", opt.generator, "generator polynomial")->required();
    encode->add_option("--n", opt.n, "code length")->required();
    encode->add_option("--message", opt.message, "message polynomial, degree < k");
    encode->add_flag("--all-spanning", opt.all_spanning, "emit the 4k spanning codewords");
    encode->add_flag("--allow-odd", opt.allow_odd, "permit odd lengths");
    add_common(encode);

    CLI::App* verify = app.add_subcommand("verify", "verify a codebook and its code");
    verify->add_option("codebook", opt.codebook_path, "codebook file path")->required();
    verify->add_option("generator", opt.generator, "generator polynomial")->required();
    verify->add_option("--n", opt.n, "code length")->required();
    verify->add_option("--samples", opt.samples, "extra random reversibility samples");
    verify->add_option("--seed", opt.seed, "seed for sampled checks");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (table->parsed()) return cmd_table(opt);
        if (analyze->parsed()) return cmd_analyze(opt);
        if (search->parsed()) return cmd_search(opt);
        if (encode->parsed()) return cmd_encode(opt);
        return cmd_verify(opt);
    } catch (const skewdna::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const skewdna::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
