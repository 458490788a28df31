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

#include "mzvcf/io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "mzvcf/notation.hpp"

namespace mzvcf {

using nlohmann::ordered_json;

std::string to_json_line(const RelationRecord& r)
{
    ordered_json j;
    j["family"] = std::string(name(r.family));
    j["weight"] = r.weight;
    j["source"] = r.source;
    ordered_json terms = ordered_json::array();
    for (const auto& [w, c] : r.body.sorted_terms())
        terms.push_back({{"word", w.str()}, {"coeff", to_string(c)}});
    j["terms"] = std::move(terms);
    j["zeta"] = r.zeta_form;
    return j.dump();
}

RelationRecord record_from_json_line(const std::string& line)
{
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        RelationRecord r;
        r.family = family_from_name(j.at("family").get<std::string>());
        r.weight = j.at("weight").get<int>();
        r.source = j.at("source").get<std::string>();
        for (const auto& t : j.at("terms"))
            r.body.add(Word::parse(t.at("word").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
        r.zeta_form = j.at("zeta").get<std::string>();
        return r;
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed relation record: ") + e.what());
    }
}

void write_json_lines(std::ostream& out, const std::vector<RelationRecord>& records)
{
    for (const auto& r : records)
        out << to_json_line(r) << '\n';
}

std::vector<RelationRecord> read_json_lines(std::istream& in)
{
    std::vector<RelationRecord> out;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(record_from_json_line(line));
        }
        catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string source_tex(const RelationRecord& r)
{
    if (r.family != Family::Rds)
        return word_tex(Word::parse(r.source));
    const auto bar = r.source.find('|');
    return word_tex(Word::parse(r.source.substr(0, bar))) + "\\ast " +
           word_tex(Word::parse(r.source.substr(bar + 1)));
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<RelationRecord>& records)
{
    out << "family,weight,source,body,zeta\n";
    for (const auto& r : records)
        out << name(r.family) << ',' << r.weight << ',' << csv_field(r.source) << ',' << csv_field(r.body.str()) << ','
            << csv_field(r.zeta_form) << '\n';
}

void write_tex(std::ostream& out, const std::vector<RelationRecord>& records)
{
    out << "\\begin{tabular}{|c|c|c||c|c|c|}\n\\hline\n"
        << "weight & $w$ & body & weight & $w$ & body\\tabularnewline\n\\hline\n";
    auto cell = [](const RelationRecord& r) {
        return std::to_string(r.weight) + " & $" + source_tex(r) + "$ & $" + poly_tex(r.body) + "$";
    };
    for (std::size_t i = 0; i < records.size(); i += 2) {
        out << cell(records[i]) << " & ";
        out << (i + 1 < records.size() ? cell(records[i + 1]) : std::string(" & & ")) << "\\tabularnewline\n\\hline\n";
    }
    out << "\\end{tabular}\n";
}

void write_zeta(std::ostream& out, const std::vector<RelationRecord>& records)
{
    for (const auto& r : records)
        out << r.source << ": " << r.zeta_form << " = 0\n";
}

}  // namespace mzvcf
