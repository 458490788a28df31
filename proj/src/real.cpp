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

#include "mzvcf/real.hpp"

#include <cmath>

namespace mzvcf {

std::string Real::to_string(int digits) const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real abs(Real x)
{
    mpfr_abs(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real log(Real x)
{
    mpfr_log(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real exp(Real x)
{
    mpfr_exp(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real sqrt(Real x)
{
    mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real pow(Real x, long n)
{
    mpfr_pow_si(x.get(), x.get(), n, MPFR_RNDN);
    return x;
}

Real pi(mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real log2_const(mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}

Real zeta_value(long s, mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_zeta_ui(r.get(), static_cast<unsigned long>(s), MPFR_RNDN);
    return r;
}

mpfr_prec_t bits_for_digits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

}  // namespace mzvcf
