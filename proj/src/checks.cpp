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

#include "mzvcf/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mzvcf/confluence.hpp"
#include "mzvcf/linalg.hpp"
#include "mzvcf/numeric.hpp"
#include "mzvcf/regularization.hpp"

namespace mzvcf {

std::string CheckResult::summary() const
{
    std::ostringstream s;
    s << name << ": " << (passed() ? "ok" : "FAILED") << " (" << cases << " cases";
    if (failures)
        s << ", " << failures << " failures";
    if (max_error > 0)
        s << ", max error " << max_error;
    s << ")";
    if (!first_failure.empty())
        s << " first failure: " << first_failure;
    return s.str();
}

namespace {

constexpr std::array<Letter, 2> kZeroOne{Letter::Zero, Letter::One};

std::vector<Word> words_up_to(int max_weight, Subspace s, int min_weight = 0)
{
    std::vector<Word> out;
    for (int k = std::max(min_weight, 0); k <= max_weight; ++k) {
        auto ws = words_of_weight(static_cast<std::size_t>(k), s);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

// The whole list when it is small enough, otherwise a seeded sample without replacement.
std::vector<Word> pick(std::vector<Word> words, std::size_t samples, std::uint64_t seed)
{
    if (words.size() <= samples)
        return words;
    std::mt19937_64 rng(seed);
    std::shuffle(words.begin(), words.end(), rng);
    words.resize(samples);
    return words;
}

class Tally {
   public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    void expect(bool ok, const std::string& what)
    {
        ++r_.cases;
        if (!ok) {
            if (r_.failures++ == 0)
                r_.first_failure = what;
        }
    }

    void expect_close(double err, double tolerance, const std::string& what)
    {
        r_.max_error = std::max(r_.max_error, err);
        expect(err < tolerance, what + " (error " + std::to_string(err) + ")");
    }

    // Runs f and records a thrown precondition as a failure of `what`.
    template <class F>
    void guard(const std::string& what, F&& f)
    {
        try {
            f();
        }
        catch (const std::exception& e) {
            expect(false, what + ": " + e.what());
        }
    }

    CheckResult result() const { return r_; }

   private:
    CheckResult r_;
};

std::string pair_str(const Word& u, const Word& v)
{
    return "(" + u.str() + ", " + v.str() + ")";
}

NCPoly P(const Word& w)
{
    return NCPoly(w);
}

}  // namespace

Word sample_word(std::mt19937_64& rng, Subspace s, int min_weight, int max_weight)
{
    max_weight = std::max(max_weight, min_weight);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<int> wd(min_weight, max_weight);
        const auto words = words_of_weight(static_cast<std::size_t>(wd(rng)), s);
        if (words.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
        return words[pick_word(rng)];
    }
    throw PreconditionError("sample_word: no words of " + std::string(name(s)) + " in the weight range");
}

// ---------------------------------------------------------------------------
// algebra

CheckResult check_word_count(int max_weight)
{
    Tally t("Az0 word count 4*3^(k-2)");
    long expected = 4;
    for (int k = 2; k <= max_weight; ++k, expected *= 3) {
        const auto n = static_cast<long>(words_of_weight(static_cast<std::size_t>(k), Subspace::Az0).size());
        t.expect(n == expected, "weight " + std::to_string(k) + ": " + std::to_string(n));
    }
    return t.result();
}

CheckResult check_derivation_sum(int max_weight)
{
    Tally t("d_{z,0} + d_{z,1} + d_{1,0} = 0 on Az0");
    for (const Word& w : words_up_to(max_weight, Subspace::Az0, 1)) {
        const NCPoly s = derivation(Letter::Z, Letter::Zero, w) + derivation(Letter::Z, Letter::One, w) +
                         derivation(Letter::One, Letter::Zero, w);
        t.expect(s.is_zero(), w.str() + " -> " + s.str());
    }
    return t.result();
}

CheckResult check_derivation_closure(int max_weight)
{
    Tally t("derivations preserve Az0");
    const std::array<std::pair<Letter, Letter>, 3> ops{
        {{Letter::Z, Letter::Zero}, {Letter::Z, Letter::One}, {Letter::One, Letter::Zero}}};
    for (const Word& w : words_up_to(max_weight, Subspace::Az0, 1))
        for (const auto& [a, b] : ops)
            t.expect(subspace_check(derivation(a, b, w), Subspace::Az0), w.str());
    return t.result();
}

CheckResult check_shuffle_laws(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("shuffle commutative and associative");
    std::mt19937_64 rng(seed);
    const int pair_max = std::max(1, max_weight / 2), triple_max = std::max(1, max_weight / 3);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::Az, 0, pair_max), v = sample_word(rng, Subspace::Az, 0, pair_max);
        t.expect(shuffle(u, v) == shuffle(v, u), "commutativity " + pair_str(u, v));
        const Word a = sample_word(rng, Subspace::Az, 0, triple_max), b = sample_word(rng, Subspace::Az, 0, triple_max),
                   c = sample_word(rng, Subspace::Az, 0, triple_max);
        t.expect(shuffle(shuffle(P(a), P(b)), P(c)) == shuffle(P(a), shuffle(P(b), P(c))),
                 "associativity " + a.str() + "," + b.str() + "," + c.str());
    }
    return t.result();
}

CheckResult check_stuffle_laws(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("stuffle on A commutative and associative");
    std::mt19937_64 rng(seed);
    const int pair_max = std::max(1, max_weight / 2), triple_max = std::max(1, max_weight / 3);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::A, 0, pair_max), v = sample_word(rng, Subspace::A, 0, pair_max);
        t.expect(stuffle(u, v) == stuffle(v, u), "commutativity " + pair_str(u, v));
        const Word a = sample_word(rng, Subspace::A, 0, triple_max), b = sample_word(rng, Subspace::A, 0, triple_max),
                   c = sample_word(rng, Subspace::A, 0, triple_max);
        t.expect(stuffle(stuffle(P(a), P(b)), P(c)) == stuffle(P(a), stuffle(P(b), P(c))),
                 "associativity " + a.str() + "," + b.str() + "," + c.str());
    }
    return t.result();
}

CheckResult check_leibniz(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("d_{z,c} is a shuffle derivation");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::Az0, 1, max_weight - 1);
        const Word v = sample_word(rng, Subspace::Az0, 1, max_weight - static_cast<int>(u.size()));
        for (Letter c : kZeroOne) {
            const NCPoly lhs = derivation(Letter::Z, c, shuffle(u, v));
            const NCPoly rhs = shuffle(derivation(Letter::Z, c, u), P(v)) + shuffle(P(u), derivation(Letter::Z, c, v));
            t.expect(lhs == rhs, pair_str(u, v) + " c=" + to_char(c));
        }
    }
    return t.result();
}

CheckResult check_module_rule(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("d_{z,c}(u * v) = u * d_{z,c}(v), u in A1");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::A1, 0, max_weight - 1);
        const Word v = sample_word(rng, Subspace::Az0, 1, max_weight - static_cast<int>(u.size()));
        for (Letter c : kZeroOne) {
            const NCPoly lhs = derivation(Letter::Z, c, stuffle(u, v));
            const NCPoly rhs = stuffle(P(u), derivation(Letter::Z, c, v));
            t.expect(lhs == rhs, pair_str(u, v) + " c=" + to_char(c));
        }
    }
    return t.result();
}

CheckResult check_duality_conjugation(int max_weight)
{
    Tally t("tau_z d_{z,c} tau_z = d_{z,c} on Az0");
    for (const Word& w : words_up_to(max_weight, Subspace::Az0, 1))
        for (Letter c : kZeroOne)
            t.expect(tau_z(derivation(Letter::Z, c, tau_z(P(w)))) == derivation(Letter::Z, c, w),
                     w.str() + " c=" + to_char(c));
    return t.result();
}

CheckResult check_tau_involution(int max_weight)
{
    Tally t("tau_z is an involution preserving Az0");
    for (const Word& w : words_up_to(max_weight, Subspace::Az)) {
        const NCPoly tw = tau_z(P(w));
        t.expect(tau_z(tw) == P(w), w.str());
        if (word_in(w, Subspace::Az0))
            t.expect(subspace_check(tw, Subspace::Az0), w.str() + " leaves Az0");
    }
    return t.result();
}

CheckResult check_const_laws(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("Const is a shuffle homomorphism and a stuffle module map");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::Az0, 0, max_weight - 1);
        const Word v = sample_word(rng, Subspace::Az0, 0, max_weight - static_cast<int>(u.size()));
        t.expect(const_proj(shuffle(u, v)) == shuffle(const_proj(P(u)), const_proj(P(v))), "shuffle " + pair_str(u, v));
        const Word a = sample_word(rng, Subspace::A, 0, max_weight - 1);
        const Word b = sample_word(rng, Subspace::Az0, 0, max_weight - static_cast<int>(a.size()));
        t.expect(const_proj(stuffle(a, b)) == stuffle(P(a), const_proj(P(b))), "stuffle " + pair_str(a, b));
    }
    return t.result();
}

// ---------------------------------------------------------------------------
// regularization

CheckResult check_decompose_roundtrip(int max_weight)
{
    Tally t("decompose_e1 round trip on Az1");
    for (const Word& w : words_up_to(max_weight, Subspace::Az1)) {
        t.guard(w.str(), [&] {
            const auto parts = decompose_e1(P(w));
            NCPoly back;
            bool in_az0 = true;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                back += shuffle(parts[i], P(power(Letter::One, i)));
                in_az0 = in_az0 && subspace_check(parts[i], Subspace::Az0);
            }
            t.expect(back == P(w) && in_az0, w.str());
        });
    }
    return t.result();
}

CheckResult check_reg_z1_roundtrip(int max_weight)
{
    Tally t("reg_z1 round trip on Az0");
    for (const Word& w : words_up_to(max_weight, Subspace::Az0)) {
        t.guard(w.str(), [&] {
            const TensorSum ts = reg_z1(P(w));
            bool factors = true;
            for (const auto& [right, left] : ts.by_right())
                factors = factors && subspace_check(left, Subspace::AzM2) && word_in(right, Subspace::Z1z) &&
                          word_in(right, Subspace::Az0);
            t.expect(ts.contract_shuffle() == P(w) && factors, w.str());
        });
    }
    return t.result();
}

CheckResult check_reg_zz_roundtrip(int max_weight)
{
    Tally t("reg_zz round trip on AzM1");
    for (const Word& w : words_up_to(max_weight, Subspace::AzM1)) {
        t.guard(w.str(), [&] {
            const TensorSum ts = reg_zz(P(w));
            bool factors = true;
            for (const auto& [right, left] : ts.by_right())
                factors = factors && subspace_check(left, Subspace::AzM2) && right == power(Letter::Z, right.size());
            t.expect(ts.contract_shuffle() == P(w) && factors, w.str());
        });
    }
    return t.result();
}

CheckResult check_reg_shuffle_projection(int max_weight)
{
    Tally t("reg_shuffle is idempotent and fixes Az0");
    for (const Word& w : words_up_to(max_weight, Subspace::Az1)) {
        const NCPoly r = reg_shuffle(P(w));
        t.expect(reg_shuffle(r) == r, "idempotence " + w.str());
        if (word_in(w, Subspace::Az0))
            t.expect(r == P(w), "identity " + w.str());
    }
    return t.result();
}

CheckResult check_reg_shuffle_multiplicative(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("reg_shuffle is a shuffle homomorphism on Az1");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::Az1, 0, max_weight - 1);
        const Word v = sample_word(rng, Subspace::Az1, 0, max_weight - static_cast<int>(u.size()));
        t.expect(reg_shuffle(shuffle(u, v)) == shuffle(reg_shuffle(P(u)), reg_shuffle(P(v))), pair_str(u, v));
    }
    return t.result();
}

CheckResult check_reg_shuffle_derivation(int max_weight)
{
    Tally t("d_{z,c} commutes with reg_shuffle");
    for (const Word& w : words_up_to(max_weight, Subspace::Az1, 1))
        for (Letter c : kZeroOne)
            t.guard(w.str(), [&] {
                t.expect(derivation(Letter::Z, c, reg_shuffle(P(w))) == reg_shuffle(derivation(Letter::Z, c, w)),
                         w.str() + " c=" + to_char(c));
            });
    return t.result();
}

// ---------------------------------------------------------------------------
// phi

CheckResult check_phi_tensor_invariance(int max_weight)
{
    Tally t("phi_tensor o phi_shuffle = phi_tensor o phi_stuffle = phi_tensor");
    for (const Word& w : words_up_to(max_weight, Subspace::Az0)) {
        const TensorSum base = phi_tensor(P(w));
        t.expect(phi_tensor(phi_shuffle(P(w))) == base, "shuffle " + w.str());
        t.expect(phi_tensor(phi_stuffle(P(w))) == base, "stuffle " + w.str());
    }
    return t.result();
}

CheckResult check_standard_ideal(int max_weight)
{
    Tally t("w - phi(w) is a standard relation");
    for (const Word& w : words_up_to(max_weight, Subspace::Az0)) {
        t.expect(in_standard_ideal(P(w) - phi_shuffle(P(w))), "shuffle " + w.str());
        t.expect(in_standard_ideal(P(w) - phi_stuffle(P(w))), "stuffle " + w.str());
    }
    return t.result();
}

CheckResult check_phi_image(int max_weight)
{
    Tally t("phi_shuffle lands in AzM1");
    for (const Word& w : words_up_to(max_weight, Subspace::Az0))
        t.expect(subspace_check(phi_shuffle(P(w)), Subspace::AzM1), w.str());
    return t.result();
}

CheckResult check_phi_shuffle_multiplicative(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("phi_shuffle is a shuffle homomorphism");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::Az0, 1, max_weight - 1);
        const Word v = sample_word(rng, Subspace::Az0, 1, max_weight - static_cast<int>(u.size()));
        t.expect(phi_shuffle(shuffle(u, v)) == shuffle(phi_shuffle(P(u)), phi_shuffle(P(v))), pair_str(u, v));
    }
    return t.result();
}

CheckResult check_phi_stuffle_module(int max_weight, std::size_t samples, std::uint64_t seed)
{
    Tally t("phi_stuffle(u * v) = u * phi_stuffle(v), u in A0");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word u = sample_word(rng, Subspace::A0, 2, std::max(2, max_weight - 1));
        const Word v = sample_word(rng, Subspace::Az0, 1, std::max(1, max_weight - static_cast<int>(u.size())));
        t.guard(pair_str(u, v), [&] {
            t.expect(phi_stuffle(stuffle(u, v)) == stuffle(P(u), phi_stuffle(P(v))), pair_str(u, v));
        });
    }
    return t.result();
}

CheckResult check_lambda_regularization(int max_weight)
{
    Tally t("lambda = reg_shuffle o (z -> 1) on AzM1");
    for (const Word& w : words_up_to(max_weight, Subspace::AzM1))
        t.expect(lambda_map(P(w)) == reg_shuffle(substitute(P(w), Letter::Z, Letter::One)), w.str());
    return t.result();
}

CheckResult check_integral_bodies(int max_weight)
{
    Tally t("confluence bodies have integer coefficients");
    for (int k = 2; k <= max_weight; ++k)
        for (const auto& r : generate_confluence(k))
            t.expect(r.body.is_integral(), r.source + " -> " + r.body.str());
    return t.result();
}

CheckResult check_mode_spans(int max_weight)
{
    Tally t("shuffle and stuffle generators span the same space");
    for (int k = 2; k <= max_weight; ++k) {
        std::vector<NCPoly> sh, st, both;
        for (const auto& r : generate_confluence(k, PhiMode::Shuffle))
            sh.push_back(r.body);
        for (const auto& r : generate_confluence(k, PhiMode::Stuffle))
            st.push_back(r.body);
        both = sh;
        both.insert(both.end(), st.begin(), st.end());
        const auto a = rank_of_bodies(sh, k).rank, b = rank_of_bodies(st, k).rank, c = rank_of_bodies(both, k).rank;
        t.expect(a == b && b == c,
                 "weight " + std::to_string(k) + ": ranks " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                     std::to_string(c));
    }
    return t.result();
}

// ---------------------------------------------------------------------------
// numeric

CheckResult check_zero_relations(int max_weight, int digits, double tolerance)
{
    Tally t("confluence relations evaluate to zero");
    const auto cfg = PrecisionConfig::for_digits(digits);
    for (int k = 2; k <= max_weight; ++k)
        for (const auto& r : generate_confluence(k))
            if (!r.body.is_zero())
                t.expect_close(abs(eval_mzv(r.body, cfg)).to_double(), tolerance, r.source);
    return t.result();
}

CheckResult check_zeta_oracles(int digits)
{
    Tally t("zeta(2), zeta(3) against closed forms");
    const auto cfg = PrecisionConfig::for_digits(digits);
    const mpfr_prec_t bits = cfg.bits();
    const Real z2 = -eval_mzv(Word::parse("10"), cfg), z3 = -eval_mzv(Word::parse("100"), cfg);
    const Real pi2 = pi(bits) * pi(bits) / 6L;
    t.expect_close(abs(z2 - pi2).to_double(), 1e-10, "zeta(2) vs pi^2/6");
    t.expect_close(abs(z3 - zeta_value(3, bits)).to_double(), 1e-10, "zeta(3) vs MPFR zeta");
    t.expect_close(std::fabs(z2.to_double() - 1.6449340668), 1e-10, "zeta(2) vs 1.6449340668");
    t.expect_close(std::fabs(z3.to_double() - 1.2020569032), 1e-10, "zeta(3) vs 1.2020569032");
    return t.result();
}

CheckResult check_mzv_against_quadrature(int max_weight, int digits, double tolerance)
{
    Tally t("Hoelder convolution agrees with panel quadrature on A0");
    const auto cfg = PrecisionConfig::for_digits(digits);
    const Real z(3L, cfg.bits());
    for (const Word& w : words_up_to(max_weight, Subspace::A0, 2))
        t.expect_close(abs(eval_mzv(w, cfg) - eval_hyperlog_quadrature(P(w), z, cfg)).to_double(), tolerance,
                       w.str());
    return t.result();
}

CheckResult check_product_identities(int max_weight, int digits, double tolerance)
{
    Tally t("L(u sh v) = L(u * v) = L(u) L(v) at z = 3");
    const auto cfg = PrecisionConfig::for_digits(digits);
    const Real z(3L, cfg.bits());
    for (const Word& u : words_up_to(max_weight - 1, Subspace::A0, 2)) {
        for (const Word& v : words_up_to(max_weight - static_cast<int>(u.size()), Subspace::Az0, 1)) {
            t.guard(pair_str(u, v), [&] {
                const Real prod = eval_mzv(u, cfg) * eval_hyperlog(v, z, cfg);
                t.expect_close(abs(eval_hyperlog(shuffle(u, v), z, cfg) - prod).to_double(), tolerance,
                               "shuffle " + pair_str(u, v));
                t.expect_close(abs(eval_hyperlog(stuffle(u, v), z, cfg) - prod).to_double(), tolerance,
                               "stuffle " + pair_str(u, v));
            });
        }
    }
    return t.result();
}

CheckResult check_duality_identity(int max_weight, std::size_t samples, std::uint64_t seed, int digits,
                                   double tolerance)
{
    Tally t("L(tau_z(w)) = L(w) at z = 3");
    const auto cfg = PrecisionConfig::for_digits(digits);
    const Real z(3L, cfg.bits());
    for (const Word& w : pick(words_up_to(max_weight, Subspace::Az0, 1), samples, seed))
        t.expect_close(abs(eval_hyperlog(tau_z(P(w)), z, cfg) - eval_hyperlog(w, z, cfg)).to_double(), tolerance,
                       w.str());
    return t.result();
}

CheckResult check_n_invariance(int max_weight, std::size_t samples, std::uint64_t seed, int digits, double tolerance)
{
    Tally t("L(N(w)) = L(w) at z = 3");
    const auto cfg = PrecisionConfig::for_digits(digits);
    const Real z(3L, cfg.bits());
    for (const Word& w : pick(words_up_to(max_weight, Subspace::Az0, 1), samples, seed))
        t.expect_close(abs(eval_hyperlog(n_map(P(w)), z, cfg) - eval_hyperlog(w, z, cfg)).to_double(), tolerance,
                       w.str());
    return t.result();
}

CheckResult check_derivative_sample(int max_weight, std::size_t samples, std::uint64_t seed, int digits,
                                    double tolerance)
{
    Tally t("finite difference in z matches the derivation formula at z = 3");
    const auto cfg = PrecisionConfig::for_digits(digits);
    const Real z(3L, cfg.bits());
    for (const Word& w : pick(words_up_to(max_weight, Subspace::Az0, 1), samples, seed)) {
        const auto rep = check_derivative(w, z, cfg, tolerance);
        t.expect_close(rep.difference, tolerance, w.str());
    }
    return t.result();
}

CheckResult check_asymptotic_sample(int max_weight, std::size_t samples, std::uint64_t seed, int digits)
{
    Tally t("|L(w; 1+eps) - P_w(log eps)| decreases along eps = 1e-2, 1e-3, 1e-4");
    const auto cfg = PrecisionConfig::for_digits(digits);
    for (const Word& w : pick(words_up_to(max_weight, Subspace::Az0, 1), samples, seed)) {
        const auto rep = check_asymptotic(w, {1e-2, 1e-3, 1e-4}, cfg);
        std::string what = w.str() + " residuals";
        for (double r : rep.residuals)
            what += " " + std::to_string(r);
        t.expect(rep.passed, what);
    }
    return t.result();
}

CheckResult check_const_limit(int max_weight, std::size_t samples, std::uint64_t seed, int digits)
{
    Tally t("L(w; Z) -> L(Const(w)) along Z = 1e2, 1e3, 1e4");
    const auto cfg = PrecisionConfig::for_digits(digits);
    const mpfr_prec_t bits = cfg.bits();
    for (const Word& w : pick(words_up_to(max_weight, Subspace::Az0, 1), samples, seed)) {
        const NCPoly c = const_proj(P(w));
        const Real limit = c.is_zero() ? Real(bits) : eval_mzv(c, cfg);
        std::vector<double> gaps;
        for (long zz : {100L, 1000L, 10000L})
            gaps.push_back(abs(eval_hyperlog(w, Real(zz, bits), cfg) - limit).to_double());
        const double floor = std::pow(10.0, -(digits - 8));
        const bool ok = (gaps[1] <= gaps[0] || gaps[1] < floor) && (gaps[2] <= gaps[1] || gaps[2] < floor) &&
                        gaps[2] < 1e-2;
        t.expect(ok, w.str() + " gaps " + std::to_string(gaps[0]) + " " + std::to_string(gaps[1]) + " " +
                         std::to_string(gaps[2]));
    }
    return t.result();
}

// ---------------------------------------------------------------------------
// suites

std::vector<std::string_view> suite_names()
{
    return {"algebra", "regularization", "phi", "numeric"};
}

std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& o)
{
    const int k = o.max_weight;
    const std::uint64_t s = o.seed;
    if (suite == "algebra")
        return {check_word_count(k),
                check_derivation_sum(k),
                check_derivation_closure(k),
                check_shuffle_laws(k, o.samples, s),
                check_stuffle_laws(k, o.samples, s + 1),
                check_leibniz(k, o.samples, s + 2),
                check_module_rule(k, o.samples, s + 3),
                check_duality_conjugation(k),
                check_tau_involution(k),
                check_const_laws(k, o.samples, s + 4)};
    if (suite == "regularization")
        return {check_decompose_roundtrip(k),
                check_reg_z1_roundtrip(k),
                check_reg_zz_roundtrip(k),
                check_reg_shuffle_projection(k),
                check_reg_shuffle_multiplicative(k, o.samples, s + 5),
                check_reg_shuffle_derivation(k)};
    if (suite == "phi")
        return {check_phi_tensor_invariance(k),
                check_standard_ideal(k),
                check_phi_image(k),
                check_phi_shuffle_multiplicative(k, o.samples, s + 6),
                check_phi_stuffle_module(k, o.samples, s + 7),
                check_lambda_regularization(k),
                check_integral_bodies(k),
                check_mode_spans(k)};
    if (suite == "numeric")
        return {check_zeta_oracles(o.digits),
                check_zero_relations(k, o.digits, 1e-10),
                check_mzv_against_quadrature(k, o.digits, 1e-10),
                check_product_identities(std::min(k, 4), o.digits, 1e-8),
                check_duality_identity(std::min(k, 4), o.samples, s + 8, o.digits, 1e-8),
                check_n_invariance(std::min(k, 4), o.samples, s + 9, o.digits, 1e-8),
                check_derivative_sample(std::min(k, 4), o.samples, s + 10, o.digits, 1e-6),
                check_asymptotic_sample(std::min(k, 3), o.samples, s + 11, o.digits),
                check_const_limit(std::min(k, 3), o.samples, s + 12, o.digits)};
    throw ParseError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace mzvcf
