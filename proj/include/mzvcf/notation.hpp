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

#ifndef MZVCF_NOTATION_HPP
#define MZVCF_NOTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "mzvcf/ncpoly.hpp"

namespace mzvcf {

using ZetaIndex = std::vector<int>;

/// Block decoding  e_a e0^{k1-1} ... e_a e0^{kd-1} -> (k1, ..., kd)  for a word whose first letter is `lead`.
ZetaIndex word_to_index(const Word& w, Letter lead = Letter::One);
Word index_to_word(const ZetaIndex& k, Letter lead = Letter::One);

/*
   Applies L(e1 e0^{k1-1} ... e1 e0^{kd-1}) = (-1)^d zeta(k1, ..., kd) term by
   term. Keys are sorted lexicographically; the empty index stands for the
   constant 1.
*/
std::map<ZetaIndex, Rational> to_zeta_terms(const NCPoly& p);

/// "-z(1,2)+z(3)"; indices in lexicographic order, unit coefficients elided.
std::string to_zeta_string(const NCPoly& p);

/// e_{1}^{2}e_{0} style rendering of a word; "1" for the empty word.
std::string word_tex(const Word& w);
/// "-e_{1}e_{0}^{2}-e_{1}^{2}e_{0}" with terms in canonical word order.
std::string poly_tex(const NCPoly& p);

}  // namespace mzvcf

#endif  // MZVCF_NOTATION_HPP
