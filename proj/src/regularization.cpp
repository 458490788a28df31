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

#include "mzvcf/regularization.hpp"

#include "mzvcf/algebra.hpp"
#include "mzvcf/memo.hpp"

namespace mzvcf {

void TensorSum::add(const NCPoly& left, const Word& right, const Rational& c)
{
    if (c == 0 || left.is_zero())
        return;
    auto [it, inserted] = by_right_.try_emplace(right);
    it->second.add_scaled(left, c);
    if (it->second.is_zero())
        by_right_.erase(it);
}

void TensorSum::add_scaled(const TensorSum& t, const Rational& c)
{
    for (const auto& [right, left] : t.by_right_)
        add(left, right, c);
}

NCPoly TensorSum::left_of(const Word& right) const
{
    auto it = by_right_.find(right);
    return it == by_right_.end() ? NCPoly{} : it->second;
}

std::vector<std::pair<NCPoly, NCPoly>> TensorSum::pairs() const
{
    std::vector<std::pair<NCPoly, NCPoly>> out;
    out.reserve(by_right_.size());
    for (const auto& [right, left] : by_right_)
        out.emplace_back(left, NCPoly(right));
    return out;
}

NCPoly TensorSum::contract_shuffle() const
{
    NCPoly out;
    for (const auto& [right, left] : by_right_)
        out += shuffle(left, NCPoly(right));
    return out;
}

NCPoly TensorSum::contract_stuffle() const
{
    NCPoly out;
    for (const auto& [right, left] : by_right_)
        out += stuffle(left, NCPoly(right));
    return out;
}

std::string TensorSum::str() const
{
    if (by_right_.empty())
        return "0";
    std::string s;
    for (const auto& [right, left] : by_right_) {
        if (!s.empty())
            s += " + ";
        s += "(" + left.str() + ")(x)" + (right.empty() ? std::string("1") : right.str());
    }
    return s;
}

namespace {

detail::Memo<Word, std::vector<NCPoly>, WordHash>& decompose_cache()
{
    static detail::Memo<Word, std::vector<NCPoly>, WordHash> memo;
    return memo;
}

detail::Memo<Word, TensorSum, WordHash>& reg_z1_cache()
{
    static detail::Memo<Word, TensorSum, WordHash> memo;
    return memo;
}

detail::Memo<Word, TensorSum, WordHash>& reg_zz_cache()
{
    static detail::Memo<Word, TensorSum, WordHash> memo;
    return memo;
}

void accumulate(std::vector<NCPoly>& acc, const std::vector<NCPoly>& parts, const Rational& c)
{
    if (acc.size() < parts.size())
        acc.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        acc[i].add_scaled(parts[i], c);
}

void trim(std::vector<NCPoly>& parts)
{
    while (parts.size() > 1 && parts.back().is_zero())
        parts.pop_back();
}

std::vector<NCPoly> decompose_poly(const NCPoly& p);

std::vector<NCPoly> decompose_word(const Word& w)
{
    if (w.empty() || w.back() != Letter::One)
        return {NCPoly(w)};
    return decompose_cache().get_or_compute(w, [&] {
        // w = v e1 with s trailing ones in v:  v sh e1 = (s+1) w + R'
        const Word v = w.prefix(w.size() - 1);
        std::size_t s = 0;
        while (s < v.size() && v[v.size() - 1 - s] == Letter::One)
            ++s;
        NCPoly rest = shuffle(v, Word{Letter::One});
        rest.add(w, -Rational(static_cast<long>(s + 1)));

        std::vector<NCPoly> out;
        // (sum_i v_i sh e1^i) sh e1 = sum_i (i+1) v_i sh e1^{i+1}
        const std::vector<NCPoly> dv = decompose_word(v);
        out.resize(dv.size() + 1);
        for (std::size_t i = 0; i < dv.size(); ++i)
            out[i + 1].add_scaled(dv[i], static_cast<long>(i + 1));
        accumulate(out, decompose_poly(rest), -1);
        const Rational inv(1, static_cast<long>(s + 1));
        for (auto& part : out)
            part *= inv;
        trim(out);
        return out;
    });
}

std::vector<NCPoly> decompose_poly(const NCPoly& p)
{
    std::vector<NCPoly> acc(1);
    for (const auto& [w, c] : p.terms())
        accumulate(acc, decompose_word(w), c);
    trim(acc);
    return acc;
}

// Peel the maximal suffix over the letters accepted by `in_suffix`:
// reg(u s) = u (x) s - reg(u sh s - u s).
template <class InSuffix>
TensorSum peel(const Word& w, detail::Memo<Word, TensorSum, WordHash>& memo, InSuffix in_suffix);

template <class InSuffix>
TensorSum peel_poly(const NCPoly& p, detail::Memo<Word, TensorSum, WordHash>& memo, InSuffix in_suffix)
{
    TensorSum out;
    for (const auto& [w, c] : p.terms())
        out.add_scaled(peel(w, memo, in_suffix), c);
    return out;
}

template <class InSuffix>
TensorSum peel(const Word& w, detail::Memo<Word, TensorSum, WordHash>& memo, InSuffix in_suffix)
{
    std::size_t m = w.size();
    while (m > 0 && in_suffix(w[m - 1]))
        --m;
    if (m == w.size() || m == 0) {
        TensorSum t;
        t.add(NCPoly(w.prefix(m)), w.suffix_from(m));
        return t;
    }
    return memo.get_or_compute(w, [&] {
        const Word u = w.prefix(m);
        const Word s = w.suffix_from(m);
        NCPoly rest = shuffle(u, s);
        rest.add(w, -1);
        TensorSum t;
        t.add(NCPoly(u), s);
        t.add_scaled(peel_poly(rest, memo, in_suffix), -1);
        return t;
    });
}

}  // namespace

std::vector<NCPoly> decompose_e1(const NCPoly& p)
{
    require(p, Subspace::Az1, "decompose_e1");
    return decompose_poly(p);
}

NCPoly reg_shuffle(const NCPoly& p)
{
    return decompose_e1(p).front();
}

TensorSum reg_z1(const NCPoly& p)
{
    require(p, Subspace::Az0, "reg_z1");
    return peel_poly(p, reg_z1_cache(), [](Letter a) { return a != Letter::Zero; });
}

TensorSum reg_zz(const NCPoly& p)
{
    require(p, Subspace::AzM1, "reg_zz");
    return peel_poly(p, reg_zz_cache(), [](Letter a) { return a == Letter::Z; });
}

}  // namespace mzvcf
