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

#include "mzvcf/ncpoly.hpp"

#include <algorithm>
#include <cctype>

namespace mzvcf {

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw ParseError("empty coefficient");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '/' && !slash && i > start && i + 1 < s.size()) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("invalid coefficient '" + s + "'");
    }
    if (start == s.size())
        throw ParseError("invalid coefficient '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("invalid coefficient '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

NCPoly::NCPoly(const Word& w, const Rational& c)
{
    add(w, c);
}

NCPoly NCPoly::constant(const Rational& c)
{
    return NCPoly(Word{}, c);
}

void NCPoly::add(const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void NCPoly::add_scaled(const NCPoly& p, const Rational& c)
{
    if (c == 0)
        return;
    for (const auto& [w, d] : p.terms_)
        add(w, d * c);
}

std::optional<std::size_t> NCPoly::degree() const noexcept
{
    if (terms_.empty())
        return std::nullopt;
    std::size_t d = 0;
    for (const auto& [w, c] : terms_)
        d = std::max(d, w.size());
    return d;
}

bool NCPoly::is_homogeneous() const noexcept
{
    if (terms_.empty())
        return true;
    std::size_t d = terms_.begin()->first.size();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.size() == d; });
}

bool NCPoly::is_integral() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Rational NCPoly::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Word, Rational>> NCPoly::sorted_terms() const
{
    std::vector<std::pair<Word, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string NCPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        Rational mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        s += to_string(mag);
        if (!w.empty())
            s += "*" + w.str();
    }
    return s;
}

NCPoly NCPoly::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty polynomial");
    NCPoly p;
    if (s == "0")
        return p;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        else if (i != 0) {
            throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-')
            ++j;
        std::string_view term(s.data() + i, j - i);
        if (term.empty())
            throw ParseError("empty term in polynomial '" + s + "'");
        auto star = term.find('*');
        Rational c;
        Word w;
        if (star == std::string_view::npos) {
            c = parse_rational(term);
        }
        else {
            c = parse_rational(term.substr(0, star));
            w = Word::parse(term.substr(star + 1));
        }
        p.add(w, sign * c);
        i = j;
    }
    return p;
}

NCPoly& NCPoly::operator+=(const NCPoly& p)
{
    for (const auto& [w, c] : p.terms_)
        add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& p)
{
    for (const auto& [w, c] : p.terms_)
        add(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, d] : terms_)
        d *= c;
    return *this;
}

NCPoly concat(const NCPoly& p, const NCPoly& q)
{
    NCPoly out;
    for (const auto& [u, a] : p.terms_)
        for (const auto& [v, b] : q.terms_)
            out.add(u + v, a * b);
    return out;
}

NCPoly prepend(Letter a, const NCPoly& p)
{
    Word head{a};
    return p.map_words([&](const Word& w) { return head + w; });
}

}  // namespace mzvcf
