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

#ifndef MZVCF_REGULARIZATION_HPP
#define MZVCF_REGULARIZATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzvcf/ncpoly.hpp"

namespace mzvcf {

/*
   Sum of tensors  sum_i left_i (x) right_i  in normal form: the right factors
   are distinct words and each left factor collects everything paired with
   that word. Zero left factors are dropped.
*/
class TensorSum {
   public:
    void add(const NCPoly& left, const Word& right, const Rational& c = 1);
    void add_scaled(const TensorSum& t, const Rational& c);

    bool is_zero() const noexcept { return by_right_.empty(); }
    std::size_t size() const noexcept { return by_right_.size(); }

    /// Left factor paired with `right` (zero if absent).
    NCPoly left_of(const Word& right) const;
    const std::map<Word, NCPoly>& by_right() const noexcept { return by_right_; }
    std::vector<std::pair<NCPoly, NCPoly>> pairs() const;

    /// sum_i left_i (shuffle) right_i
    NCPoly contract_shuffle() const;
    /// sum_i left_i (stuffle) right_i; left factors must avoid z.
    NCPoly contract_stuffle() const;

    /// "(left) (x) right + ..." in canonical order.
    std::string str() const;

    friend bool operator==(const TensorSum& s, const TensorSum& t) = default;

   private:
    std::map<Word, NCPoly> by_right_;
};

/// The unique (w_0, ..., w_deg) in Az0 with p = sum_i w_i (shuffle) e1^i. Requires p in Az1.
std::vector<NCPoly> decompose_e1(const NCPoly& p);

/// Shuffle regularization: w_0 of decompose_e1. Requires p in Az1.
NCPoly reg_shuffle(const NCPoly& p);

/// Inverse of AzM2 (x) (Az0 n Z<e1,ez>) -> Az0, u (x) v -> u (shuffle) v.
TensorSum reg_z1(const NCPoly& p);

/// Inverse of AzM2 (x) Z<ez> -> AzM1, u (x) ez^k -> u (shuffle) ez^k.
TensorSum reg_zz(const NCPoly& p);

}  // namespace mzvcf

#endif  // MZVCF_REGULARIZATION_HPP
