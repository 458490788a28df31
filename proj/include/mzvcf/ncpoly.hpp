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

#ifndef MZVCF_NCPOLY_HPP
#define MZVCF_NCPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mzvcf/word.hpp"

namespace mzvcf {

using Rational = mpq_class;

/// Exact decimal text of a rational ("3", "-2/5").
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/*
   Finitely supported map Word -> Rational: an element of Q<e0,e1,ez>.
   Zero coefficients are never stored, so structural equality is equality
   of polynomials.

   Text form: terms "c*w" joined by " + " / " - ", where w is the canonical
   word text. A term without '*' is a constant (coefficient of the empty
   word). Example: "3*1000 - 2/3*z10 + 1".
*/
class NCPoly {
   public:
    using TermMap = std::unordered_map<Word, Rational, WordHash>;

    NCPoly() = default;
    NCPoly(const Word& w, const Rational& c = 1);
    static NCPoly constant(const Rational& c);
    static NCPoly parse(std::string_view text);

    void add(const Word& w, const Rational& c);
    void add_scaled(const NCPoly& p, const Rational& c);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Largest word length in the support; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    bool is_homogeneous() const noexcept;
    bool is_integral() const noexcept;

    Rational coeff(const Word& w) const;
    const TermMap& terms() const noexcept { return terms_; }
    /// Terms in canonical (shortlex) word order.
    std::vector<std::pair<Word, Rational>> sorted_terms() const;

    std::string str() const;

    NCPoly& operator+=(const NCPoly& p);
    NCPoly& operator-=(const NCPoly& p);
    NCPoly& operator*=(const Rational& c);

    friend NCPoly operator+(NCPoly p, const NCPoly& q) { return p += q; }
    friend NCPoly operator-(NCPoly p, const NCPoly& q) { return p -= q; }
    friend NCPoly operator-(NCPoly p) { return p *= -1; }
    friend NCPoly operator*(NCPoly p, const Rational& c) { return p *= c; }
    friend NCPoly operator*(const Rational& c, NCPoly p) { return p *= c; }
    friend bool operator==(const NCPoly& p, const NCPoly& q) { return p.terms_ == q.terms_; }

    /// Concatenation product in the free algebra.
    friend NCPoly concat(const NCPoly& p, const NCPoly& q);

    template <class F>
    NCPoly map_words(F&& f) const
    {
        NCPoly out;
        for (const auto& [w, c] : terms_)
            out.add(f(w), c);
        return out;
    }

   private:
    TermMap terms_;
};

/// e_a * p (left multiplication by a letter).
NCPoly prepend(Letter a, const NCPoly& p);

}  // namespace mzvcf

#endif  // MZVCF_NCPOLY_HPP
