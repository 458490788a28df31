/*
   Copyright 2026 The mzvcf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: generate, verify and rank confluence relations.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "mzvcf/checks.hpp"
#include "mzvcf/confluence.hpp"
#include "mzvcf/golden.hpp"
#include "mzvcf/io.hpp"
#include "mzvcf/linalg.hpp"
#include "mzvcf/numeric.hpp"

using namespace mzvcf;

namespace {

constexpr int kUsageError = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<NCPoly> bodies(const std::vector<RelationRecord>& rs)
{
    std::vector<NCPoly> out;
    for (const auto& r : rs)
        out.push_back(r.body);
    return out;
}

std::vector<RelationRecord> family_records(const std::string& family, int k)
{
    if (family == "cf" || family == "confluence")
        return generate_confluence(k);
    if (family == "rds")
        return generate_rds(k);
    if (family == "duality")
        return generate_duality(k);
    throw Usage("unknown family '" + family + "'");
}

int cmd_gen(int k, const std::string& mode, bool nonzero, const std::string& format)
{
    if (k < 2)
        throw Usage("--weight must be at least 2");
    auto records = generate_confluence(k, mode == "stuffle" ? PhiMode::Stuffle : PhiMode::Shuffle);
    if (nonzero)
        std::erase_if(records, [](const RelationRecord& r) { return r.body.is_zero(); });
    if (format == "json")
        write_json_lines(std::cout, records);
    else if (format == "csv")
        write_csv(std::cout, records);
    else if (format == "tex")
        write_tex(std::cout, records);
    else
        write_zeta(std::cout, records);
    return 0;
}

int cmd_verify_table()
{
    const GoldenReport rep = verify_golden_table();
    for (const auto& line : rep.lines)
        std::cout << line << '\n';
    std::cout << rep.matched << "/" << rep.rows << " rows reproduced, " << rep.unexpected
              << " unexpected nonzero relations\n";
    return rep.passed() ? 0 : 1;
}

int cmd_rank(int k, const std::string& family)
{
    if (k < 2)
        throw Usage("--weight must be at least 2");
    const long d = conjectural_dimension(k);
    const long expected = expected_relation_rank(k);
    std::cout << "weight " << k << ": 2^(k-2) = " << (1L << (k - 2)) << ", conjectural dimension d_" << k << " = " << d
              << ", expected relation rank " << expected << '\n';
    bool ok = true;
    std::vector<NCPoly> all;
    for (const std::string f : {"cf", "rds", "duality"}) {
        if (family != "all" && family != f)
            continue;
        const auto b = bodies(family_records(f, k));
        const auto r = rank_of_bodies(b, k).rank;
        std::cout << "  " << f << ": " << b.size() << " generators, rank " << r;
        if (f == "cf") {
            const bool match = static_cast<long>(r) == expected;
            ok = ok && match;
            std::cout << (match ? " (matches 2^(k-2) - d_k)" : " (DIFFERS from 2^(k-2) - d_k)");
        }
        std::cout << '\n';
        all.insert(all.end(), b.begin(), b.end());
    }
    if (family == "all")
        std::cout << "  all families together: rank " << rank_of_bodies(all, k).rank << '\n';
    return ok ? 0 : 1;
}

int cmd_member(int k, const std::string& family)
{
    if (family != "rds" && family != "duality")
        throw Usage("--family must be rds or duality");
    if (k < 2)
        throw Usage("--weight must be at least 2");
    const RankResult cf = rank_of_bodies(bodies(generate_confluence(k)), k);
    std::size_t inside = 0, total = 0;
    for (const auto& r : family_records(family, k)) {
        ++total;
        if (in_span(r.body, cf.basis))
            ++inside;
        else
            std::cout << "NOT IN SPAN " << r.source << ": " << r.zeta_form << '\n';
    }
    std::cout << "weight " << k << ": " << inside << "/" << total << " " << family
              << " relations lie in the confluence span (rank " << cf.rank << ")\n";
    return inside == total ? 0 : 1;
}

int cmd_eval(const std::string& text, const std::optional<std::string>& z, int digits)
{
    const Word w = Word::parse(text);
    const auto cfg = PrecisionConfig::for_digits(digits);
    Real value(cfg.bits());
    if (!w.contains(Letter::Z)) {
        if (!word_in(w, Subspace::A0))
            throw Usage("word '" + text + "' is not a convergent {0,1}-word (first letter 1, last letter 0)");
        value = eval_mzv(w, cfg);
    }
    else {
        if (!z)
            throw Usage("--z is required for words containing z");
        if (!word_in(w, Subspace::Az0))
            throw Usage("word '" + text + "' does not start with 1 or z and end with 0 or z");
        value = eval_hyperlog(w, Real(*z, cfg.bits()), cfg);
    }
    std::cout << "L(" << w.str() << ")" << (z && w.contains(Letter::Z) ? " at z = " + *z : std::string()) << " = "
              << value.to_string(digits) << '\n';
    return 0;
}

int cmd_check(const std::string& suite, const SuiteOptions& opts)
{
    bool ok = true;
    for (const auto& r : run_suite(suite, opts)) {
        std::cout << r.summary() << '\n';
        ok = ok && r.passed();
    }
    std::cout << "suite " << suite << ": " << (ok ? "all checks passed" : "FAILURES") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mzvcf: confluence relations among multiple zeta values"};
    app.require_subcommand(1);

    int weight = 0;
    std::string mode = "shuffle", format = "json", family = "cf", word, suite;
    bool nonzero = false;
    std::optional<std::string> z;
    int digits = 30;
    SuiteOptions opts;
    std::optional<std::size_t> samples;

    auto* gen = app.add_subcommand("gen", "generate the confluence relations of one weight");
    gen->add_option("--weight", weight, "weight k >= 2")->required();
    gen->add_option("--mode", mode, "phi operator")->check(CLI::IsMember({"shuffle", "stuffle"}));
    gen->add_flag("--nonzero", nonzero, "drop zero bodies");
    gen->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "tex", "zeta"}));

    auto* table = app.add_subcommand("verify-table", "compare weights 3 and 4 against the reference table");

    auto* rank_cmd = app.add_subcommand("rank", "exact rank of a relation family");
    rank_cmd->add_option("--weight", weight)->required();
    rank_cmd->add_option("--family", family)->check(CLI::IsMember({"cf", "rds", "duality", "all"}));

    auto* member = app.add_subcommand("member", "span inclusion in the confluence relations");
    member->add_option("--weight", weight)->required();
    member->add_option("--family", family)->required()->check(CLI::IsMember({"rds", "duality"}));

    auto* eval = app.add_subcommand("eval", "numerical value of L(w)");
    eval->add_option("--word", word)->required();
    eval->add_option("--z", z, "real z > 1, required when the word contains z");
    eval->add_option("--digits", digits)->check(CLI::Range(10, 1000));

    auto* check = app.add_subcommand("check", "run a property suite");
    check->add_option("--suite", suite)->required()->check(CLI::IsMember({"algebra", "regularization", "phi", "numeric"}));
    check->add_option("--max-weight", opts.max_weight)->check(CLI::Range(3, 12));
    check->add_option("--samples", samples, "random samples per check (default 500, numeric 50)");
    check->add_option("--seed", opts.seed);
    check->add_option("--digits", opts.digits, "working digits for the numeric suite")->check(CLI::Range(15, 200));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*gen)
            return cmd_gen(weight, mode, nonzero, format);
        if (*table)
            return cmd_verify_table();
        if (*rank_cmd)
            return cmd_rank(weight, family);
        if (*member)
            return cmd_member(weight, family);
        if (*eval)
            return cmd_eval(word, z, digits);
        if (*check) {
            opts.samples = samples.value_or(suite == "numeric" ? 50 : 500);
            return cmd_check(suite, opts);
        }
    }
    catch (const Usage& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
