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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mzvcf/checks.hpp"
#include "mzvcf/confluence.hpp"
#include "mzvcf/golden.hpp"
#include "mzvcf/linalg.hpp"
#include "mzvcf/numeric.hpp"

using namespace mzvcf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        detail << "    " << (ok ? "ok   " : "FAIL ") << what << '\n';
    }
    void absorb(const CheckResult& r) { require(r.passed(), r.summary()); }
};

std::vector<NCPoly> bodies(const std::vector<RelationRecord>& rs)
{
    std::vector<NCPoly> out;
    for (const auto& r : rs)
        out.push_back(r.body);
    return out;
}

// Ordered compositions of k into parts 2 and 3, counted by enumeration.
long compositions(int k)
{
    if (k == 0)
        return 1;
    long n = 0;
    for (int part : {2, 3})
        if (part <= k)
            n += compositions(k - part);
    return n;
}

Outcome golden()
{
    Outcome o;
    const auto t0 = Clock::now();
    const GoldenReport rep = verify_golden_table();
    const double dt = seconds_since(t0);
    o.require(rep.passed(), std::to_string(rep.matched) + "/" + std::to_string(rep.rows) + " rows, " +
                                std::to_string(rep.unexpected) + " unexpected nonzero");
    o.require(rep.rows == 20, "3 rows at weight 3 and 17 at weight 4");
    o.require(confluence_relation(Word::parse("z10")).body == NCPoly::parse("-1*110 - 1*100"), "w = z10");
    o.require(confluence_relation(Word::parse("1z10")).body ==
                  NCPoly::parse("3*1000 + 5*1010 + 13*1100 + 4*1110"),
              "w = 1z10");
    o.require(dt < 1.0, "runtime " + std::to_string(dt) + " s < 1 s");
    return o;
}

Outcome counts()
{
    Outcome o;
    for (int k = 2; k <= 8; ++k) {
        long expected = 4;
        for (int i = 2; i < k; ++i)
            expected *= 3;
        const auto t0 = Clock::now();
        const auto n = generate_confluence(k).size();
        const double dt = seconds_since(t0);
        o.require(static_cast<long>(n) == expected,
                  "weight " + std::to_string(k) + ": " + std::to_string(n) + " records, expected " +
                      std::to_string(expected));
        if (k == 8)
            o.require(dt < 60.0, "weight 8 sweep " + std::to_string(dt) + " s < 60 s");
    }
    return o;
}

Outcome ranks()
{
    Outcome o;
    const std::vector<long> expected{0, 1, 3, 6, 14, 29, 60};
    for (int k = 2; k <= 8; ++k) {
        const long oracle = (1L << (k - 2)) - compositions(k);
        const auto r = static_cast<long>(rank_of_bodies(bodies(generate_confluence(k)), k).rank);
        o.require(r == oracle && oracle == expected[k - 2] && conjectural_dimension(k) == compositions(k),
                  "weight " + std::to_string(k) + ": rank " + std::to_string(r) + ", 2^(k-2) - d_k = " +
                      std::to_string(oracle));
    }
    return o;
}

Outcome inclusions()
{
    Outcome o;
    for (int k = 2; k <= 6; ++k) {
        const RankResult cf = rank_of_bodies(bodies(generate_confluence(k)), k);
        std::size_t rds_in = 0, rds_all = 0, dual_in = 0, dual_all = 0;
        for (const auto& r : generate_rds(k))
            ++rds_all, rds_in += in_span(r.body, cf.basis);
        for (const auto& r : generate_duality(k))
            ++dual_all, dual_in += in_span(r.body, cf.basis);
        o.require(rds_in == rds_all && dual_in == dual_all,
                  "weight " + std::to_string(k) + ": rds " + std::to_string(rds_in) + "/" + std::to_string(rds_all) +
                      ", duality " + std::to_string(dual_in) + "/" + std::to_string(dual_all));
    }
    return o;
}

Outcome zero_check()
{
    Outcome o;
    o.absorb(check_zero_relations(5, 30, 1e-10));
    const auto cfg = PrecisionConfig::for_digits(30);
    const double z2 = -eval_mzv(Word::parse("10"), cfg).to_double();
    const double z3 = -eval_mzv(Word::parse("100"), cfg).to_double();
    o.require(std::fabs(z2 - 1.6449340668) < 1e-10, "zeta(2) = " + std::to_string(z2));
    o.require(std::fabs(z3 - 1.2020569032) < 1e-10, "zeta(3) = " + std::to_string(z3));
    o.absorb(check_zeta_oracles(30));
    return o;
}

Outcome properties()
{
    Outcome o;
    o.absorb(check_derivation_sum(6));
    o.absorb(check_leibniz(5, 500, kDefaultSeed + 2));
    o.absorb(check_module_rule(5, 500, kDefaultSeed + 3));
    o.absorb(check_duality_conjugation(5));
    o.absorb(check_phi_tensor_invariance(5));
    o.absorb(check_standard_ideal(5));
    o.absorb(check_decompose_roundtrip(6));
    o.absorb(check_reg_z1_roundtrip(6));
    o.absorb(check_reg_zz_roundtrip(6));
    o.absorb(check_lambda_regularization(5));
    return o;
}

Outcome analytic()
{
    Outcome o;
    o.absorb(check_derivative_sample(4, 50, kDefaultSeed + 10, 30, 1e-6));
    o.absorb(check_product_identities(4, 30, 1e-8));
    o.absorb(check_duality_identity(4, 50, kDefaultSeed + 8, 30, 1e-8));
    o.absorb(check_asymptotic_sample(3, 20, kDefaultSeed + 11, 30));
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 golden table reproduction", golden},
        {"2 generator counts 4*3^(k-2), k = 2..8", counts},
        {"3 confluence ranks 2^(k-2) - d_k, k = 2..8", ranks},
        {"4 double shuffle and duality inside the confluence span, weight <= 6", inclusions},
        {"5 numeric zero check and zeta oracles", zero_check},
        {"6 exhaustive and sampled property suites", properties},
        {"7 derivative, product, duality and asymptotic checks", analytic},
    };
    int failed = 0;
    for (const auto& [label, run] : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = run();
        }
        catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << o.detail.str();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << label << "  (" << seconds_since(t0) << " s)\n"
                  << std::flush;
        failed += !o.pass;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
