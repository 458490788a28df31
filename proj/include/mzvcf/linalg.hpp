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

#ifndef MZVCF_LINALG_HPP
#define MZVCF_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mzvcf/ncpoly.hpp"

namespace mzvcf {

/*
   Reduced row-echelon set of dense rational vectors of a fixed dimension.
   Rows are kept sorted by pivot column, every pivot entry is 1 and every
   pivot column is zero in all other rows. Insertion order determines the
   basis, so elimination is reproducible.
*/
class RowEchelon {
   public:
    explicit RowEchelon(std::size_t dimension = 0) : dim_(dimension) {}

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Residual of v after elimination against the current rows.
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    bool contains(std::span<const Rational> v) const;
    /// Adds v if it is independent; returns whether the rank grew.
    bool insert(std::vector<Rational> v);

   private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis of { x : sum_j x_j rows[j] = 0 }, i.e. the left kernel of the matrix whose rows are given.
std::vector<std::vector<Rational>> left_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t dimension);

/// The weight-k words of A0 in canonical order: 1 x 0 for x in {0,1}^(k-2).
std::vector<Word> a0_basis(int weight);

/// Coordinates of a homogeneous A0 polynomial on a0_basis(weight).
struct RelVector {
    int weight = 0;
    std::vector<Rational> entries;

    friend bool operator==(const RelVector&, const RelVector&) = default;
};

RelVector to_vector(const NCPoly& p, int weight);
NCPoly from_vector(const RelVector& v);

/// Echelon basis of relation vectors of one weight.
class EchelonBasis {
   public:
    explicit EchelonBasis(int weight);

    int weight() const noexcept { return weight_; }
    std::size_t rank() const noexcept { return echelon_.rank(); }
    const RowEchelon& echelon() const noexcept { return echelon_; }
    std::vector<RelVector> rows() const;

    bool insert(const RelVector& v);
    RelVector reduce(const RelVector& v) const;

   private:
    int weight_;
    RowEchelon echelon_;
};

struct RankResult {
    std::size_t rank = 0;
    EchelonBasis basis{0};
};

/// Exact rank; throws PreconditionError on mixed weights. The empty list has rank 0.
RankResult rank(const std::vector<RelVector>& vectors);
RankResult rank_of_bodies(const std::vector<NCPoly>& bodies, int weight);

/// Whether p reduces to zero against the basis; throws on weight mismatch.
bool in_span(const NCPoly& p, const EchelonBasis& basis);

/// Conjectural dimension of weight-k MZVs: d_k = d_{k-2} + d_{k-3}, d_0 = 1, d_1 = 0, d_2 = 1.
long conjectural_dimension(int weight);
/// 2^(k-2) - d_k for k >= 2.
long expected_relation_rank(int weight);

}  // namespace mzvcf

#endif  // MZVCF_LINALG_HPP
