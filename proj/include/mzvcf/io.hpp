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

#ifndef MZVCF_IO_HPP
#define MZVCF_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mzvcf/confluence.hpp"

namespace mzvcf {

/*
   One JSON object per line:
   {"family":"confluence","weight":3,"source":"z10",
    "terms":[{"word":"100","coeff":"-1"},...],"zeta":"-z(1,2)+z(3)"}
   Terms appear in canonical word order and coefficients are exact decimal
   rationals, so the output is byte-stable.
*/
std::string to_json_line(const RelationRecord& r);
RelationRecord record_from_json_line(const std::string& line);

void write_json_lines(std::ostream& out, const std::vector<RelationRecord>& records);
/// Blank lines are skipped; malformed lines throw ParseError naming the line number.
std::vector<RelationRecord> read_json_lines(std::istream& in);

/// family,weight,source,body,zeta with a header row.
void write_csv(std::ostream& out, const std::vector<RelationRecord>& records);
/// A two-column tabular of (w, body) cells in TeX word notation.
void write_tex(std::ostream& out, const std::vector<RelationRecord>& records);
/// "source: zeta = 0" per record.
void write_zeta(std::ostream& out, const std::vector<RelationRecord>& records);

}  // namespace mzvcf

#endif  // MZVCF_IO_HPP
