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

#include "mzvcf/linalg.hpp"

#include <algorithm>
#include <string>

#include "mzvcf/algebra.hpp"

namespace mzvcf {

namespace {

void axpy(std::vector<Rational>& y, const Rational& a, const std::vector<Rational>& x)
{
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0)
            y[i] -= a * x[i];
}

std::size_t first_nonzero(const std::vector<Rational>& v, std::size_t limit)
{
    for (std::size_t i = 0; i < limit; ++i)
        if (v[i] != 0)
            return i;
    return limit;
}

}  // namespace

std::vector<Rational> RowEchelon::reduce(std::vector<Rational> v) const
{
    if (v.size() != dim_)
        throw PreconditionError("RowEchelon: vector of dimension " + std::to_string(v.size()) + ", expected " +
                                std::to_string(dim_));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p] != 0) {
            Rational f = v[p];
            axpy(v, f, rows_[r]);
        }
    }
    return v;
}

bool RowEchelon::contains(std::span<const Rational> v) const
{
    auto residual = reduce(std::vector<Rational>(v.begin(), v.end()));
    return first_nonzero(residual, dim_) == dim_;
}

bool RowEchelon::insert(std::vector<Rational> v)
{
    v = reduce(std::move(v));
    const std::size_t p = first_nonzero(v, dim_);
    if (p == dim_)
        return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v)
        x *= inv;
    for (auto& row : rows_) {
        if (row[p] != 0) {
            Rational f = row[p];
            axpy(row, f, v);
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::vector<std::vector<Rational>> left_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t dimension)
{
    const std::size_t m = rows.size();
    // augmented rows (v | combination) with pivots in the first `dimension` columns
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t j = 0; j < m; ++j) {
        if (rows[j].size() != dimension)
            throw PreconditionError("left_kernel: row dimension mismatch");
        std::vector<Rational> aug(dimension + m);
        std::copy(rows[j].begin(), rows[j].end(), aug.begin());
        aug[dimension + j] = 1;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (aug[pivots[r]] != 0) {
                Rational f = aug[pivots[r]] / basis[r][pivots[r]];
                axpy(aug, f, basis[r]);
            }
        }
        const std::size_t p = first_nonzero(aug, dimension);
        if (p == dimension) {
            kernel.emplace_back(aug.begin() + static_cast<long>(dimension), aug.end());
        }
        else {
            basis.push_back(std::move(aug));
            pivots.push_back(p);
        }
    }
    return kernel;
}

std::vector<Word> a0_basis(int weight)
{
    if (weight < 0)
        throw PreconditionError("a0_basis: negative weight");
    return words_of_weight(static_cast<std::size_t>(weight), Subspace::A0);
}

namespace {

std::size_t basis_dimension(int weight)
{
    if (weight == 0)
        return 1;
    if (weight == 1)
        return 0;
    return std::size_t{1} << (weight - 2);
}

// Position of an A0 word in a0_basis: the middle letters read as a binary number.
std::size_t coordinate(const Word& w)
{
    std::size_t idx = 0;
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        idx = 2 * idx + (w[i] == Letter::One);
    return idx;
}

}  // namespace

RelVector to_vector(const NCPoly& p, int weight)
{
    require(p, Subspace::A0, "to_vector");
    RelVector v{weight, std::vector<Rational>(basis_dimension(weight))};
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) != weight)
            throw PreconditionError("to_vector: word '" + w.str() + "' is not of weight " + std::to_string(weight));
        v.entries[coordinate(w)] = c;
    }
    return v;
}

NCPoly from_vector(const RelVector& v)
{
    NCPoly p;
    const auto words = a0_basis(v.weight);
    for (std::size_t i = 0; i < words.size() && i < v.entries.size(); ++i)
        p.add(words[i], v.entries[i]);
    return p;
}

EchelonBasis::EchelonBasis(int weight) : weight_(weight), echelon_(weight >= 0 ? basis_dimension(weight) : 0) {}

std::vector<RelVector> EchelonBasis::rows() const
{
    std::vector<RelVector> out;
    for (const auto& r : echelon_.rows())
        out.push_back({weight_, r});
    return out;
}

bool EchelonBasis::insert(const RelVector& v)
{
    if (v.weight != weight_)
        throw PreconditionError("EchelonBasis: weight " + std::to_string(v.weight) + " inserted into weight " +
                                std::to_string(weight_) + " basis");
    return echelon_.insert(v.entries);
}

RelVector EchelonBasis::reduce(const RelVector& v) const
{
    if (v.weight != weight_)
        throw PreconditionError("EchelonBasis: weight mismatch");
    return {weight_, echelon_.reduce(v.entries)};
}

RankResult rank(const std::vector<RelVector>& vectors)
{
    if (vectors.empty())
        return {};
    const int k = vectors.front().weight;
    RankResult out{0, EchelonBasis(k)};
    for (const auto& v : vectors) {
        if (v.weight != k)
            throw PreconditionError("rank: mixed weights " + std::to_string(k) + " and " + std::to_string(v.weight));
        out.basis.insert(v);
    }
    out.rank = out.basis.rank();
    return out;
}

RankResult rank_of_bodies(const std::vector<NCPoly>& bodies, int weight)
{
    RankResult out{0, EchelonBasis(weight)};
    for (const auto& b : bodies)
        out.basis.insert(to_vector(b, weight));
    out.rank = out.basis.rank();
    return out;
}

bool in_span(const NCPoly& p, const EchelonBasis& basis)
{
    const RelVector v = to_vector(p, basis.weight());
    return basis.echelon().contains(v.entries);
}

long conjectural_dimension(int weight)
{
    if (weight < 0)
        return 0;
    std::vector<long> d{1, 0, 1};
    while (static_cast<int>(d.size()) <= weight)
        d.push_back(d[d.size() - 2] + d[d.size() - 3]);
    return d[static_cast<std::size_t>(weight)];
}

long expected_relation_rank(int weight)
{
    if (weight < 2)
        return 0;
    return (long{1} << (weight - 2)) - conjectural_dimension(weight);
}

}  // namespace mzvcf
