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

#ifndef MZVCF_ALGEBRA_HPP
#define MZVCF_ALGEBRA_HPP

#include <string_view>
#include <vector>

#include "mzvcf/ncpoly.hpp"
#include "mzvcf/word.hpp"

namespace mzvcf {

/*
   Subspaces of Q<e0,e1,ez> spanned by words. Membership is a property of
   each word in the support:

     Az    all words                     A     letters in {0,1}
     Az0   1, "z", or first in {1,z} and last in {0,z}
     A0    1, or first 1, last 0, letters in {0,1}
     Az1   1, or first in {1,z}          A1    1, or first 1 and letters in {0,1}
     AzM2  1, or n >= 2, first in {1,z}, last 0
     AzM1  AzM2 after stripping trailing z letters
     Z0z   letters in {0,z}              Z1z   letters in {1,z}
*/
enum class Subspace { Az, A, Az0, A0, Az1, A1, AzM2, AzM1, Z0z, Z1z };

std::string_view name(Subspace s) noexcept;
bool word_in(const Word& w, Subspace s) noexcept;
bool subspace_check(const NCPoly& p, Subspace s);
/// Throws PreconditionError naming `op` when p is not supported on s.
void require(const NCPoly& p, Subspace s, std::string_view op);

/// All words of length k in s, in canonical order.
std::vector<Word> words_of_weight(std::size_t k, Subspace s);

// -- products ---------------------------------------------------------------

NCPoly shuffle(const Word& u, const Word& v);
NCPoly shuffle(const NCPoly& p, const NCPoly& q);

/// Generalized stuffle product; the left factor must avoid the letter z.
NCPoly stuffle(const Word& u, const Word& v);
NCPoly stuffle(const NCPoly& p, const NCPoly& q);

// -- linear maps ------------------------------------------------------------

/// Anti-automorphism e0 -> ez - e1, e1 -> ez - e0, ez -> ez.
NCPoly tau_z(const NCPoly& p);
/// Anti-automorphism of Q<e0,e1>: e0 -> -e1, e1 -> -e0.
NCPoly tau_infinity(const NCPoly& p);

/// The derivation d_{alpha,beta}; boundary letters a_0 = 0, a_{n+1} = 1.
NCPoly derivation(Letter alpha, Letter beta, const Word& w);
NCPoly derivation(Letter alpha, Letter beta, const NCPoly& p);

/// Kills every word containing z.
NCPoly const_proj(const NCPoly& p);

/// Letter substitution a -> b.
NCPoly substitute(const NCPoly& p, Letter a, Letter b);

}  // namespace mzvcf

#endif  // MZVCF_ALGEBRA_HPP
