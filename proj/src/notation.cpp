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

#include "mzvcf/notation.hpp"

#include "mzvcf/algebra.hpp"

namespace mzvcf {

ZetaIndex word_to_index(const Word& w, Letter lead)
{
    ZetaIndex k;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == lead)
            k.push_back(1);
        else if (w[i] == Letter::Zero && !k.empty())
            ++k.back();
        else
            throw PreconditionError("word '" + w.str() + "' has no block decoding with leading letter " +
                                    to_char(lead));
    }
    return k;
}

Word index_to_word(const ZetaIndex& k, Letter lead)
{
    Word w;
    for (int ki : k) {
        if (ki < 1)
            throw PreconditionError("index entries must be >= 1");
        w.push_back(lead);
        for (int j = 1; j < ki; ++j)
            w.push_back(Letter::Zero);
    }
    return w;
}

std::map<ZetaIndex, Rational> to_zeta_terms(const NCPoly& p)
{
    require(p, Subspace::A0, "to_zeta_string");
    std::map<ZetaIndex, Rational> out;
    for (const auto& [w, c] : p.terms()) {
        ZetaIndex k = word_to_index(w);
        Rational v = k.size() % 2 == 0 ? c : Rational(-c);
        auto [it, inserted] = out.try_emplace(std::move(k), v);
        if (!inserted)
            it->second += v;
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
}

namespace {

// Coefficient prefix for a term whose body follows immediately ("13", "(2/3)", "").
std::string coefficient_prefix(const Rational& mag, bool has_body)
{
    if (!has_body)
        return to_string(mag);
    if (mag == 1)
        return "";
    if (mag.get_den() != 1)
        return "(" + to_string(mag) + ")";
    return to_string(mag);
}

std::string signed_join(std::string& acc, const Rational& c, const std::string& body)
{
    Rational mag = abs(c);
    if (acc.empty())
        acc += c < 0 ? "-" : "";
    else
        acc += c < 0 ? "-" : "+";
    acc += coefficient_prefix(mag, !body.empty()) + body;
    return acc;
}

}  // namespace

std::string to_zeta_string(const NCPoly& p)
{
    std::string s;
    for (const auto& [k, c] : to_zeta_terms(p)) {
        std::string body;
        if (!k.empty()) {
            body = "z(";
            for (std::size_t i = 0; i < k.size(); ++i)
                body += (i ? "," : "") + std::to_string(k[i]);
            body += ")";
        }
        signed_join(s, c, body);
    }
    return s.empty() ? "0" : s;
}

std::string word_tex(const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        s += std::string("e_{") + to_char(w[i]) + "}";
        if (j - i > 1)
            s += "^{" + std::to_string(j - i) + "}";
        i = j;
    }
    return s;
}

std::string poly_tex(const NCPoly& p)
{
    std::string s;
    for (const auto& [w, c] : p.sorted_terms())
        signed_join(s, c, w.empty() ? std::string() : word_tex(w));
    return s.empty() ? "0" : s;
}

}  // namespace mzvcf
