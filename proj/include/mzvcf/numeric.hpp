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

#ifndef MZVCF_NUMERIC_HPP
#define MZVCF_NUMERIC_HPP

#include <string>
#include <vector>

#include "mzvcf/ncpoly.hpp"
#include "mzvcf/notation.hpp"
#include "mzvcf/real.hpp"

namespace mzvcf {

struct PrecisionConfig {
    int digits = 30;
    /// Absolute target; never below 10^-(digits-5).
    double tolerance = 1e-25;
    /// Fixed series length; 0 picks it from digits and the convergence ratio.
    long truncation = 0;

    static PrecisionConfig for_digits(int digits);
    mpfr_prec_t bits() const { return bits_for_digits(digits); }
    /// Throws PreconditionError when the fields are inconsistent.
    void validate() const;
};

struct Estimate {
    Real value;
    double error = 0;
};

/// Li_{k1..kd}(x) = sum_{0<m1<...<md} x^md / (m1^k1 ... md^kd) for 0 <= x < 1; the empty index gives 1.
Estimate eval_li(const ZetaIndex& index, const Real& x, const PrecisionConfig& cfg = {});

/// L(w) for w in A0 (so L(e1 e0) = -zeta(2)), by Hoelder convolution at 1/2.
Real eval_mzv(const Word& w, const PrecisionConfig& cfg = {});
Real eval_mzv(const NCPoly& p, const PrecisionConfig& cfg = {});

/*
   L(w) at real z > 1 for w in Az0. Words over {0,z} use the polylogarithm
   series at 1/z when z is comfortably above 1; everything else is computed
   as the nested integral over [0,1] on graded Gauss-Legendre panels.
*/
Real eval_hyperlog(const Word& w, const Real& z, const PrecisionConfig& cfg = {});
Real eval_hyperlog(const NCPoly& p, const Real& z, const PrecisionConfig& cfg = {});
/// Always uses the panel quadrature; exposed for cross-checks.
Real eval_hyperlog_quadrature(const NCPoly& p, const Real& z, const PrecisionConfig& cfg = {});

struct DerivativeReport {
    double finite_difference = 0;
    double symbolic = 0;
    double difference = 0;
    double tolerance = 0;
    bool passed = false;
};

/// Central difference of L(w) in z against (1/z) L(d_{z,0} w) + (1/(z-1)) L(d_{z,1} w).
DerivativeReport check_derivative(const Word& w, const Real& z, const PrecisionConfig& cfg = {}, double tolerance = 1e-6);

/// P_w(T) = sum_k L(coeffs[k]) T^k / k!  with coeffs from asymptotic_poly.
Real eval_asymptotic_poly(const std::vector<NCPoly>& coeffs, const Real& t, const PrecisionConfig& cfg = {});

struct AsymptoticReport {
    std::vector<double> epsilons;
    std::vector<double> residuals;
    /// R(eps) / (eps |log eps|^m)
    std::vector<double> scaled;
    int m = 0;
    bool decreasing = false;
    bool bounded = false;
    bool passed = false;
};

/*
   R(eps) = |L(w; 1+eps) - P_w(log eps)| over a decreasing ladder of eps.
   Residuals below the working-precision floor count as zero.
*/
AsymptoticReport check_asymptotic(const Word& w, const std::vector<double>& epsilons, const PrecisionConfig& cfg = {});

}  // namespace mzvcf

#endif  // MZVCF_NUMERIC_HPP
