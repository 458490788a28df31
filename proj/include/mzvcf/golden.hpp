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

#ifndef MZVCF_GOLDEN_HPP
#define MZVCF_GOLDEN_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzvcf {

/// A reference confluence relation: the word w and lambda(w - phi_shuffle(w)), both in TeX notation.
struct GoldenRow {
    int weight;
    std::string_view word_tex;
    std::string_view body_tex;
};

/// The nonzero relations of weights 3 and 4 (3 and 17 rows).
std::span<const GoldenRow> golden_table();

struct GoldenReport {
    /// One line per row plus one per unexpected nonzero relation, in table order.
    std::vector<std::string> lines;
    std::size_t rows = 0;
    std::size_t matched = 0;
    std::size_t unexpected = 0;
    bool passed() const { return matched == rows && unexpected == 0; }
};

/// Regenerates weights 3 and 4 and compares every body cell character by character.
GoldenReport verify_golden_table();

}  // namespace mzvcf

#endif  // MZVCF_GOLDEN_HPP
