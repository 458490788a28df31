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

#include "mzvcf/algebra.hpp"

#include <algorithm>
#include <string>

#include "mzvcf/memo.hpp"

namespace mzvcf {

namespace {

bool letters_within(const Word& w, Letter excluded) noexcept
{
    return !w.contains(excluded);
}

bool starts_in_1z(const Word& w) noexcept
{
    return w.front() == Letter::One || w.front() == Letter::Z;
}

bool is_azm2(const Word& w) noexcept
{
    if (w.empty())
        return true;
    return w.size() >= 2 && starts_in_1z(w) && w.back() == Letter::Zero;
}

struct WordPairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept
    {
        return p.first.hash() * 0x9e3779b97f4a7c15ull ^ p.second.hash();
    }
};

template <class Emit>
void interleave(const Word& u, const Word& v, std::vector<Letter>& buf, std::size_t i, std::size_t j,
                Emit& emit)
{
    if (i == u.size() && j == v.size()) {
        emit(Word(std::span<const Letter>(buf)));
        return;
    }
    std::size_t pos = i + j;
    if (i < u.size()) {
        buf[pos] = u[i];
        interleave(u, v, buf, i + 1, j, emit);
    }
    if (j < v.size()) {
        buf[pos] = v[j];
        interleave(u, v, buf, i, j + 1, emit);
    }
}

// Shuffles of two words are recomputed constantly across a weight sweep.
detail::Memo<std::pair<Word, Word>, NCPoly, WordPairHash>& shuffle_cache()
{
    static detail::Memo<std::pair<Word, Word>, NCPoly, WordPairHash> memo;
    return memo;
}

detail::Memo<std::pair<Word, Word>, NCPoly, WordPairHash>& stuffle_cache()
{
    static detail::Memo<std::pair<Word, Word>, NCPoly, WordPairHash> memo;
    return memo;
}

}  // namespace

std::string_view name(Subspace s) noexcept
{
    switch (s) {
        case Subspace::Az:
            return "Az";
        case Subspace::A:
            return "A";
        case Subspace::Az0:
            return "Az0";
        case Subspace::A0:
            return "A0";
        case Subspace::Az1:
            return "Az1";
        case Subspace::A1:
            return "A1";
        case Subspace::AzM2:
            return "AzM2";
        case Subspace::AzM1:
            return "AzM1";
        case Subspace::Z0z:
            return "Z0z";
        case Subspace::Z1z:
            return "Z1z";
    }
    return "?";
}

bool word_in(const Word& w, Subspace s) noexcept
{
    const std::size_t n = w.size();
    switch (s) {
        case Subspace::Az:
            return true;
        case Subspace::A:
            return letters_within(w, Letter::Z);
        case Subspace::Az0:
            if (n == 0)
                return true;
            if (n == 1)
                return w[0] == Letter::Z;
            return starts_in_1z(w) && (w.back() == Letter::Zero || w.back() == Letter::Z);
        case Subspace::A0:
            if (n == 0)
                return true;
            return n >= 2 && w.front() == Letter::One && w.back() == Letter::Zero &&
                   letters_within(w, Letter::Z);
        case Subspace::Az1:
            return n == 0 || starts_in_1z(w);
        case Subspace::A1:
            return n == 0 || (w.front() == Letter::One && letters_within(w, Letter::Z));
        case Subspace::AzM2:
            return is_azm2(w);
        case Subspace::AzM1: {
            std::size_t m = n;
            while (m > 0 && w[m - 1] == Letter::Z)
                --m;
            return is_azm2(w.prefix(m));
        }
        case Subspace::Z0z:
            return letters_within(w, Letter::One);
        case Subspace::Z1z:
            return letters_within(w, Letter::Zero);
    }
    return false;
}

bool subspace_check(const NCPoly& p, Subspace s)
{
    return std::all_of(p.terms().begin(), p.terms().end(), [s](const auto& t) { return word_in(t.first, s); });
}

void require(const NCPoly& p, Subspace s, std::string_view op)
{
    for (const auto& [w, c] : p.terms())
        if (!word_in(w, s))
            throw PreconditionError(std::string(op) + ": word '" + w.str() + "' is not in " + std::string(name(s)));
}

std::vector<Word> words_of_weight(std::size_t k, Subspace s)
{
    std::vector<Word> out;
    std::vector<Letter> buf(k, Letter::Zero);
    while (true) {
        Word w{std::span<const Letter>(buf)};
        if (word_in(w, s))
            out.push_back(std::move(w));
        // base-3 odometer, last letter fastest: canonical lexicographic order
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (buf[i] != Letter::Z) {
                buf[i] = static_cast<Letter>(static_cast<int>(buf[i]) + 1);
                break;
            }
            buf[i] = Letter::Zero;
            if (i == 0) {
                return out;
            }
        }
        if (k == 0)
            return out;
    }
}

NCPoly shuffle(const Word& u, const Word& v)
{
    if (u.empty())
        return NCPoly(v);
    if (v.empty())
        return NCPoly(u);
    // symmetric, so cache on the ordered pair
    const bool swap = v < u;
    std::pair<Word, Word> key = swap ? std::pair{v, u} : std::pair{u, v};
    return shuffle_cache().get_or_compute(key, [&] {
        NCPoly out;
        std::vector<Letter> buf(u.size() + v.size());
        auto emit = [&](const Word& w) { out.add(w, 1); };
        interleave(key.first, key.second, buf, 0, 0, emit);
        return out;
    });
}

NCPoly shuffle(const NCPoly& p, const NCPoly& q)
{
    NCPoly out;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms())
            out.add_scaled(shuffle(u, v), a * b);
    return out;
}

NCPoly stuffle(const Word& u, const Word& v)
{
    if (u.contains(Letter::Z))
        throw PreconditionError("stuffle: left factor '" + u.str() + "' contains the letter z");
    if (u.empty())
        return NCPoly(v);
    if (v.empty())
        return NCPoly(u);
    return stuffle_cache().get_or_compute({u, v}, [&] {
        const Word u1 = u.suffix_from(1);
        const Word v1 = v.suffix_from(1);
        NCPoly inner = stuffle(u1, v);
        inner += stuffle(u, v1);
        inner -= prepend(Letter::Zero, stuffle(u1, v1));
        // label product: 0 * x = 0, 1 * x = x
        const Letter label = u.front() == Letter::Zero ? Letter::Zero : v.front();
        return prepend(label, inner);
    });
}

NCPoly stuffle(const NCPoly& p, const NCPoly& q)
{
    require(p, Subspace::A, "stuffle (left factor)");
    NCPoly out;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms())
            out.add_scaled(stuffle(u, v), a * b);
    return out;
}

namespace {

// Image of a word under an anti-homomorphism given by letter images.
template <class Image>
NCPoly anti_morphism(const Word& w, Image&& image)
{
    NCPoly out = NCPoly::constant(1);
    for (std::size_t i = w.size(); i-- > 0;)
        out = concat(out, image(w[i]));
    return out;
}

}  // namespace

NCPoly tau_z(const NCPoly& p)
{
    static const NCPoly img0 = NCPoly::parse("1*z - 1*1");
    static const NCPoly img1 = NCPoly::parse("1*z - 1*0");
    static const NCPoly imgz = NCPoly::parse("1*z");
    auto image = [&](Letter a) -> const NCPoly& {
        return a == Letter::Zero ? img0 : a == Letter::One ? img1 : imgz;
    };
    NCPoly out;
    for (const auto& [w, c] : p.terms())
        out.add_scaled(anti_morphism(w, image), c);
    return out;
}

NCPoly tau_infinity(const NCPoly& p)
{
    require(p, Subspace::A, "tau_infinity");
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word img;
        for (std::size_t i = w.size(); i-- > 0;)
            img.push_back(w[i] == Letter::Zero ? Letter::One : Letter::Zero);
        out.add(img, w.size() % 2 == 0 ? c : Rational(-c));
    }
    return out;
}

NCPoly derivation(Letter alpha, Letter beta, const Word& w)
{
    const std::size_t n = w.size();
    // a_0 = 0, a_{n+1} = 1 (1-based positions as in the definition)
    auto at = [&](std::size_t i) {
        if (i == 0)
            return Letter::Zero;
        if (i == n + 1)
            return Letter::One;
        return w[i - 1];
    };
    // unordered comparison {x, y} == {alpha, beta} as sets
    auto pair_is = [&](Letter x, Letter y) { return (x == alpha && y == beta) || (x == beta && y == alpha); };
    NCPoly out;
    for (std::size_t i = 1; i <= n; ++i) {
        int c = int(pair_is(at(i), at(i + 1))) - int(pair_is(at(i - 1), at(i)));
        if (c != 0)
            out.add(w.erased(i - 1), c);
    }
    return out;
}

NCPoly derivation(Letter alpha, Letter beta, const NCPoly& p)
{
    NCPoly out;
    for (const auto& [w, c] : p.terms())
        out.add_scaled(derivation(alpha, beta, w), c);
    return out;
}

NCPoly const_proj(const NCPoly& p)
{
    NCPoly out;
    for (const auto& [w, c] : p.terms())
        if (!w.contains(Letter::Z))
            out.add(w, c);
    return out;
}

NCPoly substitute(const NCPoly& p, Letter a, Letter b)
{
    return p.map_words([&](Word w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == a)
                w.set(i, b);
        return w;
    });
}

}  // namespace mzvcf
