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

#include "mzvcf/confluence.hpp"

#include <array>

#include "mzvcf/algebra.hpp"
#include "mzvcf/memo.hpp"
#include "mzvcf/notation.hpp"
#include "mzvcf/parallel.hpp"

namespace mzvcf {

namespace {

constexpr std::array<Letter, 2> kPhiLabels{Letter::Zero, Letter::Z};

detail::Memo<Word, TensorSum, WordHash>& phi_tensor_cache()
{
    static detail::Memo<Word, TensorSum, WordHash> memo;
    return memo;
}

detail::Memo<Word, NCPoly, WordHash>& lambda_cache()
{
    static detail::Memo<Word, NCPoly, WordHash> memo;
    return memo;
}

// phi(w) = Const(w) (x) 1 + sum_b phi(d_{1,b} w) with e_b appended to every right factor.
TensorSum phi_tensor_word(const Word& w)
{
    if (w.empty())
        return [] {
            TensorSum t;
            t.add(NCPoly::constant(1), Word{});
            return t;
        }();
    return phi_tensor_cache().get_or_compute(w, [&] {
        TensorSum t;
        if (!w.contains(Letter::Z))
            t.add(NCPoly(w), Word{});
        for (Letter b : kPhiLabels) {
            const NCPoly d = derivation(Letter::One, b, w);
            for (const auto& [u, c] : d.terms()) {
                const TensorSum sub = phi_tensor_word(u);
                for (const auto& [right, left] : sub.by_right()) {
                    Word extended = right;
                    extended.push_back(b);
                    t.add(left, extended, c);
                }
            }
        }
        return t;
    });
}

NCPoly lambda_word(const Word& w)
{
    if (!w.contains(Letter::Z))
        return NCPoly(w);
    return lambda_cache().get_or_compute(w, [&] {
        const TensorSum t = reg_zz(n_map(NCPoly(w)));
        return substitute(t.left_of(Word{}), Letter::Z, Letter::One);
    });
}

NCPoly phi(const NCPoly& p, PhiMode mode)
{
    return mode == PhiMode::Shuffle ? phi_shuffle(p) : phi_stuffle(p);
}

}  // namespace

TensorSum phi_tensor(const NCPoly& p)
{
    require(p, Subspace::Az0, "phi_tensor");
    TensorSum t;
    for (const auto& [w, c] : p.terms())
        t.add_scaled(phi_tensor_word(w), c);
    return t;
}

NCPoly phi_shuffle(const NCPoly& p)
{
    return phi_tensor(p).contract_shuffle();
}

NCPoly phi_stuffle(const NCPoly& p)
{
    return phi_tensor(p).contract_stuffle();
}

bool in_standard_ideal(const NCPoly& p)
{
    require(p, Subspace::Az0, "in_standard_ideal");
    if (p.is_zero())
        return true;
    if (!const_proj(p).is_zero())
        return false;
    return in_standard_ideal(derivation(Letter::Z, Letter::Zero, p)) &&
           in_standard_ideal(derivation(Letter::Z, Letter::One, p));
}

NCPoly n_map(const NCPoly& p)
{
    NCPoly out;
    const TensorSum t = reg_z1(p);
    for (const auto& [right, left] : t.by_right())
        out += shuffle(left, tau_z(NCPoly(right)));
    return out;
}

NCPoly lambda_prime(const NCPoly& p)
{
    require(p, Subspace::AzM2, "lambda_prime");
    return substitute(p, Letter::Z, Letter::One);
}

NCPoly lambda_map(const NCPoly& p)
{
    require(p, Subspace::Az0, "lambda_map");
    NCPoly out;
    for (const auto& [w, c] : p.terms())
        out.add_scaled(lambda_word(w), c);
    return out;
}

std::vector<NCPoly> asymptotic_poly(const NCPoly& p)
{
    require(p, Subspace::Az0, "asymptotic_poly");
    const TensorSum t = reg_zz(n_map(p));
    std::size_t top = 0;
    for (const auto& [right, left] : t.by_right())
        top = std::max(top, right.size());
    std::vector<NCPoly> out;
    for (std::size_t k = 0; k <= top; ++k)
        out.push_back(lambda_prime(t.left_of(power(Letter::Z, k))));
    return out;
}

std::string_view name(Family f) noexcept
{
    switch (f) {
        case Family::Confluence:
            return "confluence";
        case Family::Rds:
            return "rds";
        case Family::Duality:
            return "duality";
    }
    return "?";
}

Family family_from_name(std::string_view s)
{
    if (s == "confluence" || s == "cf")
        return Family::Confluence;
    if (s == "rds")
        return Family::Rds;
    if (s == "duality")
        return Family::Duality;
    throw ParseError("unknown relation family '" + std::string(s) + "'");
}

RelationRecord make_record(Family family, std::string source, int weight, NCPoly body)
{
    RelationRecord r;
    r.family = family;
    r.source = std::move(source);
    r.weight = weight;
    r.zeta_form = to_zeta_string(body);
    r.body = std::move(body);
    return r;
}

RelationRecord confluence_relation(const Word& w, PhiMode mode)
{
    const NCPoly p(w);
    require(p, Subspace::Az0, "confluence_relation");
    NCPoly body = lambda_map(p - phi(p, mode));
    return make_record(Family::Confluence, w.str(), static_cast<int>(w.size()), std::move(body));
}

std::vector<RelationRecord> generate_confluence(int weight, PhiMode mode)
{
    if (weight < 2)
        throw PreconditionError("generate_confluence: weight must be >= 2");
    const auto words = words_of_weight(static_cast<std::size_t>(weight), Subspace::Az0);
    return detail::parallel_map(words, [mode](const Word& w) { return confluence_relation(w, mode); });
}

RelationRecord rds_relation(const Word& u, const Word& v)
{
    require(NCPoly(u), Subspace::A1, "rds_relation (u)");
    require(NCPoly(v), Subspace::A0, "rds_relation (v)");
    NCPoly body = reg_shuffle(shuffle(u, v) - stuffle(u, v));
    return make_record(Family::Rds, u.str() + "|" + v.str(), static_cast<int>(u.size() + v.size()),
                       std::move(body));
}

std::vector<RelationRecord> generate_rds(int weight)
{
    std::vector<std::pair<Word, Word>> pairs;
    for (int a = 1; a + 2 <= weight; ++a)
        for (const Word& u : words_of_weight(static_cast<std::size_t>(a), Subspace::A1))
            for (const Word& v : words_of_weight(static_cast<std::size_t>(weight - a), Subspace::A0))
                pairs.emplace_back(u, v);
    return detail::parallel_map(pairs, [](const auto& uv) { return rds_relation(uv.first, uv.second); });
}

RelationRecord duality_relation(const Word& w)
{
    const NCPoly p(w);
    require(p, Subspace::A0, "duality_relation");
    return make_record(Family::Duality, w.str(), static_cast<int>(w.size()), p - tau_infinity(p));
}

std::vector<RelationRecord> generate_duality(int weight)
{
    std::vector<RelationRecord> out;
    for (const Word& w : words_of_weight(static_cast<std::size_t>(weight), Subspace::A0))
        out.push_back(duality_relation(w));
    return out;
}

}  // namespace mzvcf
