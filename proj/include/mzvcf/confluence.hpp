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

#ifndef MZVCF_CONFLUENCE_HPP
#define MZVCF_CONFLUENCE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mzvcf/ncpoly.hpp"
#include "mzvcf/regularization.hpp"

namespace mzvcf {

// -- the phi operators ------------------------------------------------------

/*
   phi_tensor(w) = sum over r >= 0 and b_1..b_r in {0,z} of
       Const(d_{1,b_1} ... d_{1,b_r} w) (x) e_{b_1}...e_{b_r},
   where d_{1,b_r} is applied first. Requires w in Az0; the right factors are
   {0,z}-words in Az0 and the left factors lie in A0.
*/
TensorSum phi_tensor(const NCPoly& p);
NCPoly phi_shuffle(const NCPoly& p);
NCPoly phi_stuffle(const NCPoly& p);

/// Membership in the standard relations: Const(d_{z,a_1}...d_{z,a_r} p) = 0 for all r, a_i in {0,1}.
bool in_standard_ideal(const NCPoly& p);

// -- the confluence map -----------------------------------------------------

/// N(p) = sum left (shuffle) tau_z(right) over reg_z1(p); lands in AzM1.
NCPoly n_map(const NCPoly& p);
/// z -> 1 on AzM2.
NCPoly lambda_prime(const NCPoly& p);
/// lambda' of the ez^0 component of reg_zz(N(p)).
NCPoly lambda_map(const NCPoly& p);

/*
   (lambda'(w_0), lambda'(w_1), ...) where reg_zz(N(p)) = sum_k w_k (x) ez^k.
   The asymptotic polynomial is P(T) = sum_k L(lambda'(w_k)) T^k / k!, with
   T = log(z - 1) as z -> 1+.
*/
std::vector<NCPoly> asymptotic_poly(const NCPoly& p);

// -- relation records -------------------------------------------------------

enum class Family { Confluence, Rds, Duality };
std::string_view name(Family f) noexcept;
Family family_from_name(std::string_view s);

enum class PhiMode { Shuffle, Stuffle };

struct RelationRecord {
    Family family = Family::Confluence;
    /// The generating word, or "u|v" for a double shuffle pair.
    std::string source;
    int weight = 0;
    /// Element of A0, homogeneous of `weight`.
    NCPoly body;
    /// body written as a zeta combination ("-z(1,2)+z(3)").
    std::string zeta_form;

    friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

RelationRecord make_record(Family family, std::string source, int weight, NCPoly body);

/// body = lambda(w - phi(w)) for a word w in Az0.
RelationRecord confluence_relation(const Word& w, PhiMode mode = PhiMode::Shuffle);
/// One record per Az0 word of weight k (4 * 3^(k-2) records), in canonical word order.
std::vector<RelationRecord> generate_confluence(int weight, PhiMode mode = PhiMode::Shuffle);

/// body = reg_shuffle(u sh v - u * v) for u in A1, v in A0.
RelationRecord rds_relation(const Word& u, const Word& v);
/// All pairs with |u| >= 1, |v| >= 2, |u| + |v| = weight.
std::vector<RelationRecord> generate_rds(int weight);

/// body = w - tau_infinity(w) for w in A0.
RelationRecord duality_relation(const Word& w);
std::vector<RelationRecord> generate_duality(int weight);

}  // namespace mzvcf

#endif  // MZVCF_CONFLUENCE_HPP
