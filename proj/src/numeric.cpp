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

#include "mzvcf/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "mzvcf/algebra.hpp"
#include "mzvcf/confluence.hpp"

namespace mzvcf {

PrecisionConfig PrecisionConfig::for_digits(int digits)
{
    PrecisionConfig cfg;
    cfg.digits = digits;
    cfg.tolerance = std::pow(10.0, -(digits - 5));
    return cfg;
}

void PrecisionConfig::validate() const
{
    if (digits < 6)
        throw PreconditionError("precision: at least 6 digits required");
    if (!(tolerance > 0))
        throw PreconditionError("precision: tolerance must be positive");
    if (tolerance < std::pow(10.0, -(digits - 5)) * (1 - 1e-9))
        throw PreconditionError("precision: tolerance " + std::to_string(tolerance) + " is finer than " +
                                std::to_string(digits) + " working digits allow");
    if (truncation < 0)
        throw PreconditionError("precision: negative truncation bound");
}

// ---------------------------------------------------------------------------
// polylogarithm series

Estimate eval_li(const ZetaIndex& index, const Real& x, const PrecisionConfig& cfg)
{
    cfg.validate();
    const mpfr_prec_t bits = cfg.bits();
    for (int k : index)
        if (k < 1)
            throw PreconditionError("eval_li: index entries must be >= 1");
    if (index.empty())
        return {Real(1L, bits), 0};
    const double ax = std::fabs(x.to_double());
    if (!(abs(x) < Real(1L, bits)))
        throw PreconditionError("eval_li: |x| must be < 1");
    if (x.is_zero())
        return {Real(bits), 0};

    const std::size_t d = index.size();
    // a[j] = sum over m1 < ... < mj <= n of prod 1/m_i^k_i
    std::vector<Real> a(d, Real(bits));
    a[0] = Real(1L, bits);
    Real sum(bits), xn(1L, bits), term(bits), inv(bits);
    const double target = cfg.tolerance / 10;
    double bound = 0;
    for (long n = 1;; ++n) {
        xn *= x;
        mpfr_ui_pow_ui(inv.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(index[d - 1]), MPFR_RNDN);
        term = xn * a[d - 1];
        term /= inv;
        sum += term;
        for (std::size_t j = d - 1; j >= 1; --j) {
            mpfr_ui_pow_ui(inv.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(index[j - 1]),
                           MPFR_RNDN);
            a[j] += a[j - 1] / inv;
        }
        // tail: a[d-1] grows at most like (1 + log n)^(d-1)
        bound = std::pow(1 + std::log(static_cast<double>(n)), static_cast<double>(d - 1)) *
                std::pow(ax, static_cast<double>(n + 1)) / (1 - ax);
        if (cfg.truncation > 0 ? n >= cfg.truncation : bound < target)
            break;
    }
    return {sum, bound};
}

// ---------------------------------------------------------------------------
// multiple zeta values

namespace {

bool is_zero_one_word(const Word& w)
{
    return !w.contains(Letter::Z);
}

// I(0; u; 1/2) for a {0,1}-word u that is empty or starts with 1.
class HalfIntegrals {
   public:
    explicit HalfIntegrals(const PrecisionConfig& cfg) : cfg_(cfg), half_(1L, cfg.bits())
    {
        half_ /= 2;
        cfg_.tolerance = std::max(cfg.tolerance / 100, std::pow(10.0, -(cfg.digits - 5)));
    }

    const Real& at(const Word& u)
    {
        auto it = cache_.find(u);
        if (it != cache_.end())
            return it->second;
        Real v(1L, cfg_.bits());
        if (!u.empty()) {
            const ZetaIndex k = word_to_index(u);
            v = eval_li(k, half_, cfg_).value;
            if (k.size() % 2)
                v = -v;
        }
        return cache_.emplace(u, std::move(v)).first->second;
    }

    // I(1/2; v; 1) = (-1)^|v| I(0; reversed complement of v; 1/2)
    Real upper(const Word& v)
    {
        Word r;
        for (std::size_t i = v.size(); i-- > 0;)
            r.push_back(v[i] == Letter::Zero ? Letter::One : Letter::Zero);
        Real x = at(r);
        return v.size() % 2 ? -x : x;
    }

   private:
    PrecisionConfig cfg_;
    Real half_;
    std::map<Word, Real> cache_;
};

Real mzv_word(const Word& w, HalfIntegrals& half)
{
    Real sum = half.at(Word{}) * half.upper(w);
    for (std::size_t k = 1; k <= w.size(); ++k)
        sum += half.at(w.prefix(k)) * half.upper(w.suffix_from(k));
    return sum;
}

}  // namespace

Real eval_mzv(const Word& w, const PrecisionConfig& cfg)
{
    return eval_mzv(NCPoly(w), cfg);
}

Real eval_mzv(const NCPoly& p, const PrecisionConfig& cfg)
{
    require(p, Subspace::A0, "eval_mzv");
    cfg.validate();
    HalfIntegrals half(cfg);
    Real sum(cfg.bits());
    for (const auto& [w, c] : p.sorted_terms()) {
        Real v = w.empty() ? Real(1L, cfg.bits()) : mzv_word(w, half);
        sum += v * Real(c, cfg.bits());
    }
    return sum;
}

// ---------------------------------------------------------------------------
// nested integrals on graded panels

namespace {

// Gauss-Legendre rule on [-1,1] with its spectral integration matrix:
// integral_{-1}^{x_i} f ~ sum_j s[i][j] f(x_j).
struct Rule {
    std::vector<Real> x, w;
    std::vector<std::vector<Real>> s;
};

std::shared_ptr<const Rule> make_rule(int q, mpfr_prec_t bits)
{
    auto rule = std::make_shared<Rule>();
    const double pi_d = 3.14159265358979323846;
    Real eps(1L, bits);
    mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(bits) + 8, MPFR_RNDN);
    Real p0(bits), p1(bits), p2(bits), dp(bits), dx(bits);
    auto legendre = [&](const Real& x) {
        // leaves P_q(x) in p1 and P_{q-1}(x) in p0
        p0 = Real(1L, bits);
        p1 = x;
        for (int n = 1; n < q; ++n) {
            p2 = (x * p1 * (2 * n + 1) - p0 * n) / (n + 1);
            p0 = std::move(p1);
            p1 = std::move(p2);
            p2 = Real(bits);
        }
    };
    for (int i = 0; i < q; ++i) {
        Real x(std::cos(pi_d * (i + 0.75) / (q + 0.5)), bits);
        for (int it = 0; it < 200; ++it) {
            legendre(x);
            dp = (x * p1 - p0) * q / (x * x - 1);
            dx = p1 / dp;
            x -= dx;
            if (abs(dx) < eps)
                break;
        }
        legendre(x);
        dp = (x * p1 - p0) * q / (x * x - 1);
        Real w = Real(2L, bits) / ((1L - x * x) * dp * dp);
        rule->x.push_back(x);
        rule->w.push_back(w);
    }
    // pl[n][j] = P_n(x_j), n = 0..q
    std::vector<std::vector<Real>> pl(q + 1, std::vector<Real>(q, Real(bits)));
    for (int j = 0; j < q; ++j) {
        pl[0][j] = Real(1L, bits);
        pl[1][j] = rule->x[j];
        for (int n = 1; n < q; ++n)
            pl[n + 1][j] = (rule->x[j] * pl[n][j] * (2 * n + 1) - pl[n - 1][j] * n) / (n + 1);
    }
    rule->s.assign(q, std::vector<Real>(q, Real(bits)));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            Real acc = (rule->x[i] + 1L) / 2;
            for (int n = 1; n < q; ++n)
                acc += pl[n][j] * (pl[n + 1][i] - pl[n - 1][i]) / 2;
            rule->s[i][j] = rule->w[j] * acc;
        }
    }
    return rule;
}

std::shared_ptr<const Rule> rule_for(int q, mpfr_prec_t bits)
{
    static std::mutex mutex;
    static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const Rule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{q, bits}];
    if (!slot)
        slot = make_rule(q, bits);
    return slot;
}

/*
   Panels in u = 1 - t: panel k covers u in [2^-(k+1), 2^-k] for k < K and
   the last one covers [0, 2^-K]. Each panel is half as long as its distance
   from the singular point t = 1, so the integrands stay analytic on an
   ellipse of fixed size around every panel.
*/
class PanelIntegrator {
   public:
    PanelIntegrator(const Real& z, const PrecisionConfig& cfg, std::size_t max_length)
        : bits_(cfg.bits())
    {
        const int q = static_cast<int>(std::ceil((cfg.digits + 6) / 0.9));
        const int panels = static_cast<int>(std::ceil((cfg.digits + 6) * 3.3219280948873623)) +
                           4 * static_cast<int>(max_length) + 4;
        rule_ = rule_for(q, bits_);
        const Real zm1 = z - 1L;
        for (int k = 0; k <= panels; ++k) {
            Panel p;
            Real lo(bits_), hi(1L, bits_);
            mpfr_mul_2si(hi.get(), hi.get(), -k, MPFR_RNDN);
            if (k < panels) {
                lo = hi / 2;
            }
            p.half = (hi - lo) / 2;
            const Real mid = (hi + lo) / 2;
            for (int i = 0; i < q; ++i) {
                // t increases as u decreases
                const Real u = mid - p.half * rule_->x[i];
                p.inv[0].push_back(Real(1L, bits_) / (1L - u));
                p.inv[1].push_back(-(Real(1L, bits_) / u));
                p.inv[2].push_back(-(Real(1L, bits_) / (zm1 + u)));
            }
            panels_.push_back(std::move(p));
        }
    }

    // Node values of g_i and the running value at the right end of [0,1].
    struct Level {
        std::vector<std::vector<Real>> nodes;
        Real end;
    };

    Level start() const
    {
        Level l{{}, Real(1L, bits_)};
        for (std::size_t p = 0; p < panels_.size(); ++p)
            l.nodes.emplace_back(rule_->x.size(), Real(1L, bits_));
        return l;
    }

    // g_i(t) = int_0^t g_{i-1}(s) ds / (s - a)
    Level step(const Level& prev, Letter a) const
    {
        const std::size_t q = rule_->x.size();
        const int slot = static_cast<int>(a);
        Level next{{}, Real(bits_)};
        Real left(bits_), acc(bits_), tmp(bits_);
        std::vector<Real> f(q, Real(bits_));
        for (std::size_t p = 0; p < panels_.size(); ++p) {
            const Panel& pan = panels_[p];
            for (std::size_t j = 0; j < q; ++j)
                mpfr_mul(f[j].get(), prev.nodes[p][j].get(), pan.inv[slot][j].get(), MPFR_RNDN);
            std::vector<Real> g(q, Real(bits_));
            for (std::size_t i = 0; i < q; ++i) {
                mpfr_set_zero(acc.get(), 1);
                for (std::size_t j = 0; j < q; ++j) {
                    mpfr_mul(tmp.get(), rule_->s[i][j].get(), f[j].get(), MPFR_RNDN);
                    mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
                }
                mpfr_mul(acc.get(), acc.get(), pan.half.get(), MPFR_RNDN);
                mpfr_add(g[i].get(), left.get(), acc.get(), MPFR_RNDN);
            }
            mpfr_set_zero(acc.get(), 1);
            for (std::size_t j = 0; j < q; ++j) {
                mpfr_mul(tmp.get(), rule_->w[j].get(), f[j].get(), MPFR_RNDN);
                mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
            }
            mpfr_mul(acc.get(), acc.get(), pan.half.get(), MPFR_RNDN);
            left += acc;
            next.nodes.push_back(std::move(g));
        }
        next.end = left;
        return next;
    }

   private:
    struct Panel {
        Real half;
        // 1/(t-0), 1/(t-1), 1/(t-z) at the nodes
        std::vector<Real> inv[3];
    };

    mpfr_prec_t bits_;
    std::shared_ptr<const Rule> rule_;
    std::vector<Panel> panels_;
};

// Depth-first walk over the words sorted by letters, sharing integration levels between common prefixes.
void integrate_trie(const PanelIntegrator& integ, const PanelIntegrator::Level& level, std::size_t depth,
                    std::vector<std::pair<Word, Rational>>::const_iterator first,
                    std::vector<std::pair<Word, Rational>>::const_iterator last, Real& sum)
{
    while (first != last && first->first.size() == depth) {
        sum += level.end * Real(first->second, sum.precision());
        ++first;
    }
    while (first != last) {
        const Letter a = first->first[depth];
        auto mid = std::find_if(first, last, [&](const auto& t) { return t.first[depth] != a; });
        integrate_trie(integ, integ.step(level, a), depth + 1, first, mid, sum);
        first = mid;
    }
}

void require_z(const Real& z, const PrecisionConfig& cfg)
{
    if (!(z > Real(1L, cfg.bits())))
        throw PreconditionError("eval_hyperlog: z must be real and > 1");
}

bool zero_z_word(const Word& w)
{
    return !w.contains(Letter::One) && w.contains(Letter::Z);
}

// Smallest z for which the series in 1/z is preferred over quadrature.
constexpr double kSeriesThreshold = 1.25;

}  // namespace

Real eval_hyperlog_quadrature(const NCPoly& p, const Real& z, const PrecisionConfig& cfg)
{
    require(p, Subspace::Az0, "eval_hyperlog");
    cfg.validate();
    require_z(z, cfg);
    auto terms = p.sorted_terms();
    // lexicographic letter order so that shared prefixes are adjacent
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const auto la = a.first.letters(), lb = b.first.letters();
        return la < lb;
    });
    std::size_t longest = 0;
    for (const auto& t : terms)
        longest = std::max(longest, t.first.size());
    Real sum(cfg.bits());
    if (terms.empty())
        return sum;
    PanelIntegrator integ(z, cfg, longest);
    integrate_trie(integ, integ.start(), 0, terms.cbegin(), terms.cend(), sum);
    return sum;
}

Real eval_hyperlog(const Word& w, const Real& z, const PrecisionConfig& cfg)
{
    return eval_hyperlog(NCPoly(w), z, cfg);
}

Real eval_hyperlog(const NCPoly& p, const Real& z, const PrecisionConfig& cfg)
{
    require(p, Subspace::Az0, "eval_hyperlog");
    cfg.validate();
    require_z(z, cfg);
    const mpfr_prec_t bits = cfg.bits();
    const bool series = z.to_double() >= kSeriesThreshold;
    NCPoly mzv, mixed;
    Real sum(bits);
    const Real x = Real(1L, bits) / z;
    for (const auto& [w, c] : p.terms()) {
        if (is_zero_one_word(w)) {
            mzv.add(w, c);
        }
        else if (series && zero_z_word(w)) {
            const ZetaIndex k = word_to_index(w, Letter::Z);
            Real v = eval_li(k, x, cfg).value;
            if (k.size() % 2)
                v = -v;
            sum += v * Real(c, bits);
        }
        else {
            mixed.add(w, c);
        }
    }
    if (!mzv.is_zero())
        sum += eval_mzv(mzv, cfg);
    if (!mixed.is_zero())
        sum += eval_hyperlog_quadrature(mixed, z, cfg);
    return sum;
}

// ---------------------------------------------------------------------------
// analytic checks

DerivativeReport check_derivative(const Word& w, const Real& z, const PrecisionConfig& cfg, double tolerance)
{
    const NCPoly p(w);
    require(p, Subspace::Az0, "check_derivative");
    cfg.validate();
    require_z(z, cfg);
    const mpfr_prec_t bits = cfg.bits();
    const double zd = z.to_double();
    const double h = std::pow(10.0, -cfg.digits / 3.0) * std::min(1.0, (zd - 1) / 2);
    const Real hr(h, bits);
    const Real fd = (eval_hyperlog(p, z + hr, cfg) - eval_hyperlog(p, z - hr, cfg)) / (hr * 2L);
    const Real sym = eval_hyperlog(derivation(Letter::Z, Letter::Zero, p), z, cfg) / z +
                     eval_hyperlog(derivation(Letter::Z, Letter::One, p), z, cfg) / (z - 1L);
    DerivativeReport r;
    r.finite_difference = fd.to_double();
    r.symbolic = sym.to_double();
    r.difference = abs(fd - sym).to_double();
    r.tolerance = tolerance;
    r.passed = r.difference < tolerance;
    return r;
}

Real eval_asymptotic_poly(const std::vector<NCPoly>& coeffs, const Real& t, const PrecisionConfig& cfg)
{
    const mpfr_prec_t bits = cfg.bits();
    Real sum(bits), power(1L, bits);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) {
            power *= t;
            power /= static_cast<long>(k);
        }
        if (!coeffs[k].is_zero())
            sum += eval_mzv(coeffs[k], cfg) * power;
    }
    return sum;
}

AsymptoticReport check_asymptotic(const Word& w, const std::vector<double>& epsilons, const PrecisionConfig& cfg)
{
    const NCPoly p(w);
    require(p, Subspace::Az0, "check_asymptotic");
    cfg.validate();
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0 && epsilons[i] < 1))
            throw PreconditionError("check_asymptotic: epsilons must lie in (0,1)");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw PreconditionError("check_asymptotic: epsilons must decrease");
    }
    const mpfr_prec_t bits = cfg.bits();
    const auto coeffs = asymptotic_poly(p);
    int degree = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero())
            degree = static_cast<int>(k);

    AsymptoticReport r;
    r.m = degree + static_cast<int>(w.size());
    const double floor = std::pow(10.0, -(cfg.digits - 8));
    for (double e : epsilons) {
        const Real eps(e, bits);
        const Real value = eval_hyperlog(p, eps + 1L, cfg);
        const Real model = eval_asymptotic_poly(coeffs, log(eps), cfg);
        double res = abs(value - model).to_double();
        if (res < floor)
            res = 0;
        r.epsilons.push_back(e);
        r.residuals.push_back(res);
        r.scaled.push_back(res / (e * std::pow(std::fabs(std::log(e)), r.m)));
    }
    r.decreasing = true;
    for (std::size_t i = 1; i < r.residuals.size(); ++i)
        if (r.residuals[i] > r.residuals[i - 1])
            r.decreasing = false;
    // bounded: the scaled residual may not grow by more than an order of magnitude along the ladder
    r.bounded = true;
    if (!r.scaled.empty()) {
        const double ref = std::max(r.scaled.front(), floor);
        for (double s : r.scaled)
            if (s > 10 * ref)
                r.bounded = false;
    }
    r.passed = r.decreasing && r.bounded;
    return r;
}

}  // namespace mzvcf
