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

#ifndef MZVCF_CHECKS_HPP
#define MZVCF_CHECKS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mzvcf/algebra.hpp"

namespace mzvcf {

/*
   Property checks over exhaustive word lists or seeded random samples.
   Every check reports how many cases it ran and the first failing case.
*/
struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    /// Largest numeric deviation seen, for the analytic checks.
    double max_error = 0;

    bool passed() const { return failures == 0 && cases > 0; }
    std::string summary() const;
};

inline constexpr std::uint64_t kDefaultSeed = 0x6d7a7663;

/// Uniform weight in [min_weight, max_weight], then a uniform word of that weight in s.
Word sample_word(std::mt19937_64& rng, Subspace s, int min_weight, int max_weight);

// algebra
CheckResult check_word_count(int max_weight);
CheckResult check_derivation_sum(int max_weight);
CheckResult check_derivation_closure(int max_weight);
CheckResult check_shuffle_laws(int max_weight, std::size_t samples, std::uint64_t seed);
CheckResult check_stuffle_laws(int max_weight, std::size_t samples, std::uint64_t seed);
CheckResult check_leibniz(int max_weight, std::size_t samples, std::uint64_t seed);
CheckResult check_module_rule(int max_weight, std::size_t samples, std::uint64_t seed);
CheckResult check_duality_conjugation(int max_weight);
CheckResult check_tau_involution(int max_weight);
CheckResult check_const_laws(int max_weight, std::size_t samples, std::uint64_t seed);

// regularization
CheckResult check_decompose_roundtrip(int max_weight);
CheckResult check_reg_z1_roundtrip(int max_weight);
CheckResult check_reg_zz_roundtrip(int max_weight);
CheckResult check_reg_shuffle_projection(int max_weight);
CheckResult check_reg_shuffle_multiplicative(int max_weight, std::size_t samples, std::uint64_t seed);
CheckResult check_reg_shuffle_derivation(int max_weight);

// phi and the confluence map
CheckResult check_phi_tensor_invariance(int max_weight);
CheckResult check_standard_ideal(int max_weight);
CheckResult check_phi_image(int max_weight);
CheckResult check_phi_shuffle_multiplicative(int max_weight, std::size_t samples, std::uint64_t seed);
CheckResult check_phi_stuffle_module(int max_weight, std::size_t samples, std::uint64_t seed);
CheckResult check_lambda_regularization(int max_weight);
CheckResult check_integral_bodies(int max_weight);
CheckResult check_mode_spans(int max_weight);

// numeric (digits is the working precision)
CheckResult check_zero_relations(int max_weight, int digits, double tolerance);
CheckResult check_zeta_oracles(int digits);
CheckResult check_mzv_against_quadrature(int max_weight, int digits, double tolerance);
CheckResult check_product_identities(int max_weight, int digits, double tolerance);
CheckResult check_duality_identity(int max_weight, std::size_t samples, std::uint64_t seed, int digits,
                                   double tolerance);
CheckResult check_n_invariance(int max_weight, std::size_t samples, std::uint64_t seed, int digits, double tolerance);
CheckResult check_derivative_sample(int max_weight, std::size_t samples, std::uint64_t seed, int digits,
                                    double tolerance);
CheckResult check_asymptotic_sample(int max_weight, std::size_t samples, std::uint64_t seed, int digits);
CheckResult check_const_limit(int max_weight, std::size_t samples, std::uint64_t seed, int digits);

struct SuiteOptions {
    int max_weight = 5;
    std::size_t samples = 500;
    std::uint64_t seed = kDefaultSeed;
    int digits = 30;
};

std::vector<std::string_view> suite_names();
/// Runs the named suite ("algebra", "regularization", "phi", "numeric"); unknown names throw ParseError.
std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& options);

}  // namespace mzvcf

#endif  // MZVCF_CHECKS_HPP
