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

#include "mzvcf/golden.hpp"

#include <array>
#include <map>

#include "mzvcf/confluence.hpp"
#include "mzvcf/notation.hpp"

namespace mzvcf {

namespace {

constexpr std::array<GoldenRow, 20> kTable{{
    {3, "e_{z}e_{1}e_{0}", "-e_{1}e_{0}^{2}-e_{1}^{2}e_{0}"},
    {3, "e_{1}e_{z}e_{0}", "2e_{1}e_{0}^{2}+2e_{1}^{2}e_{0}"},
    {3, "e_{1}e_{0}e_{z}", "-e_{1}e_{0}^{2}-e_{1}^{2}e_{0}"},
    {4, "e_{z}^{2}e_{1}e_{0}", "e_{1}e_{0}e_{1}e_{0}+e_{1}^{2}e_{0}^{2}+e_{1}^{3}e_{0}"},
    {4, "e_{z}e_{0}e_{1}e_{z}", "-4e_{1}^{2}e_{0}^{2}-e_{1}^{3}e_{0}"},
    {4, "e_{z}e_{0}e_{1}e_{0}", "-e_{1}e_{0}^{3}-4e_{1}^{2}e_{0}^{2}"},
    {4, "e_{z}e_{1}e_{z}e_{0}", "-2e_{1}e_{0}e_{1}e_{0}-6e_{1}^{2}e_{0}^{2}-3e_{1}^{3}e_{0}"},
    {4, "e_{z}e_{1}e_{0}e_{z}", "4e_{1}^{2}e_{0}^{2}+e_{1}^{3}e_{0}"},
    {4, "e_{z}e_{1}e_{0}^{2}", "-e_{1}e_{0}^{3}-e_{1}e_{0}e_{1}e_{0}-e_{1}^{2}e_{0}^{2}"},
    {4, "e_{z}e_{1}^{2}e_{0}", "-e_{1}e_{0}^{3}-2e_{1}e_{0}e_{1}e_{0}-6e_{1}^{2}e_{0}^{2}-2e_{1}^{3}e_{0}"},
    {4, "e_{1}e_{z}^{2}e_{0}", "2e_{1}e_{0}e_{1}e_{0}+6e_{1}^{2}e_{0}^{2}+3e_{1}^{3}e_{0}"},
    {4, "e_{1}e_{z}e_{0}e_{z}", "-2e_{1}e_{0}e_{1}e_{0}-6e_{1}^{2}e_{0}^{2}-3e_{1}^{3}e_{0}"},
    {4, "e_{1}e_{z}e_{0}^{2}", "3e_{1}e_{0}^{3}+2e_{1}e_{0}e_{1}e_{0}+6e_{1}^{2}e_{0}^{2}"},
    {4, "e_{1}e_{z}e_{1}e_{0}", "3e_{1}e_{0}^{3}+5e_{1}e_{0}e_{1}e_{0}+13e_{1}^{2}e_{0}^{2}+4e_{1}^{3}e_{0}"},
    {4, "e_{1}e_{0}e_{z}^{2}", "e_{1}e_{0}e_{1}e_{0}+e_{1}^{2}e_{0}^{2}+e_{1}^{3}e_{0}"},
    {4, "e_{1}e_{0}e_{z}e_{0}", "-3e_{1}e_{0}^{3}-2e_{1}e_{0}e_{1}e_{0}-6e_{1}^{2}e_{0}^{2}"},
    {4, "e_{1}e_{0}^{2}e_{z}", "e_{1}e_{0}^{3}+e_{1}e_{0}e_{1}e_{0}+e_{1}^{2}e_{0}^{2}"},
    {4, "e_{1}e_{0}e_{1}e_{z}", "e_{1}e_{0}^{3}+e_{1}e_{0}e_{1}e_{0}+e_{1}^{2}e_{0}^{2}"},
    {4, "e_{1}^{2}e_{z}e_{0}", "-3e_{1}e_{0}^{3}-2e_{1}e_{0}e_{1}e_{0}-6e_{1}^{2}e_{0}^{2}"},
    {4, "e_{1}^{2}e_{0}e_{z}", "e_{1}e_{0}^{3}-e_{1}e_{0}e_{1}e_{0}-e_{1}^{2}e_{0}^{2}-2e_{1}^{3}e_{0}"},
}};

}  // namespace

std::span<const GoldenRow> golden_table()
{
    return kTable;
}

GoldenReport verify_golden_table()
{
    // generated nonzero bodies keyed by the TeX form of their word
    std::map<std::string, std::pair<std::string, bool>> produced;
    std::vector<std::string> order;
    for (int k : {3, 4}) {
        for (const auto& r : generate_confluence(k)) {
            if (r.body.is_zero())
                continue;
            const std::string key = word_tex(Word::parse(r.source));
            produced[key] = {poly_tex(r.body), false};
            order.push_back(key);
        }
    }
    GoldenReport report;
    for (const GoldenRow& row : kTable) {
        ++report.rows;
        auto it = produced.find(std::string(row.word_tex));
        std::string line;
        if (it == produced.end()) {
            line = "FAIL " + std::to_string(row.weight) + " " + std::string(row.word_tex) + ": no relation produced";
        }
        else {
            it->second.second = true;
            if (it->second.first == row.body_tex) {
                ++report.matched;
                line = "ok   " + std::to_string(row.weight) + " " + std::string(row.word_tex) + " -> " + it->second.first;
            }
            else {
                line = "FAIL " + std::to_string(row.weight) + " " + std::string(row.word_tex) + ": got " +
                       it->second.first + ", expected " + std::string(row.body_tex);
            }
        }
        report.lines.push_back(std::move(line));
    }
    for (const auto& key : order) {
        if (!produced[key].second) {
            ++report.unexpected;
            report.lines.push_back("FAIL unexpected nonzero relation for " + key + ": " + produced[key].first);
        }
    }
    return report;
}

}  // namespace mzvcf
