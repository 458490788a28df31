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

#ifndef MZVCF_REAL_HPP
#define MZVCF_REAL_HPP

#include <mpfr.h>

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace mzvcf {

/*
   Owning MPFR value with an explicit precision. Binary operations produce a
   result at the larger precision of their operands, so no global default
   precision is ever consulted.
*/
class Real {
   public:
    explicit Real(mpfr_prec_t bits = 128) { mpfr_init2(v_, bits), mpfr_set_zero(v_, 1); }
    Real(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits), mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits), mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const mpq_class& q, mpfr_prec_t bits) { mpfr_init2(v_, bits), mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    Real(const std::string& s, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw std::invalid_argument("not a decimal number: '" + s + "'");
        }
    }
    Real(const Real& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits) const;
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o) { return mpfr_add(v_, v_, o.v_, MPFR_RNDN), *this; }
    Real& operator-=(const Real& o) { return mpfr_sub(v_, v_, o.v_, MPFR_RNDN), *this; }
    Real& operator*=(const Real& o) { return mpfr_mul(v_, v_, o.v_, MPFR_RNDN), *this; }
    Real& operator/=(const Real& o) { return mpfr_div(v_, v_, o.v_, MPFR_RNDN), *this; }
    Real& operator*=(long c) { return mpfr_mul_si(v_, v_, c, MPFR_RNDN), *this; }
    Real& operator/=(long c) { return mpfr_div_si(v_, v_, c, MPFR_RNDN), *this; }
    Real& operator+=(long c) { return mpfr_add_si(v_, v_, c, MPFR_RNDN), *this; }
    Real& operator-=(long c) { return mpfr_sub_si(v_, v_, c, MPFR_RNDN), *this; }

    Real operator-() const
    {
        Real r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(Real a, const Real& b) { return a.widen(b) += b; }
    friend Real operator-(Real a, const Real& b) { return a.widen(b) -= b; }
    friend Real operator*(Real a, const Real& b) { return a.widen(b) *= b; }
    friend Real operator/(Real a, const Real& b) { return a.widen(b) /= b; }
    friend Real operator+(Real a, long c) { return a += c; }
    friend Real operator-(Real a, long c) { return a -= c; }
    friend Real operator*(Real a, long c) { return a *= c; }
    friend Real operator/(Real a, long c) { return a /= c; }
    friend Real operator-(long c, Real a)
    {
        mpfr_si_sub(a.v_, c, a.v_, MPFR_RNDN);
        return a;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

   private:
    Real& widen(const Real& o)
    {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
            mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
        return *this;
    }

    mpfr_t v_;
};

Real abs(Real x);
Real log(Real x);
Real exp(Real x);
Real sqrt(Real x);
Real pow(Real x, long n);
Real pi(mpfr_prec_t bits);
Real log2_const(mpfr_prec_t bits);
Real zeta_value(long s, mpfr_prec_t bits);

/// Bits needed for `digits` decimal digits plus a guard margin.
mpfr_prec_t bits_for_digits(int digits);

}  // namespace mzvcf

#endif  // MZVCF_REAL_HPP
