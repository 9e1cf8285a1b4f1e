#include "coregame/branching.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coregame/poisson.hpp"

namespace coregame {

namespace {

constexpr double kFixedPointTol = 1e-12;
constexpr double kZeroBeta = 1e-10;
constexpr int kMaxFixedPointIters = 4'000'000;

double beta_limit_impl(int k, double c) {
    double x = 1.0;
    for (int it = 0; it < kMaxFixedPointIters; ++it) {
        double next = psi_ge(k - 1, c * x);
        if (std::abs(next - x) < kFixedPointTol) {
            x = next;
            break;
        }
        x = next;
        if (x < kZeroBeta) return 0.0;
    }
    return x < kZeroBeta ? 0.0 : x;
}

void check_kc(int k, double c) {
    if (k < 3) throw std::domain_error("branching: k must be >= 3");
    if (!(c > 0.0)) throw std::domain_error("branching: c must be positive");
}

}  // namespace

BranchingProfile beta_sequence(int k, double c, int t_max) {
    check_kc(k, c);
    if (t_max < 0) throw std::domain_error("beta_sequence: t_max must be nonnegative");
    BranchingProfile profile;
    profile.k = k;
    profile.c = c;
    profile.betas.reserve(t_max + 1);
    profile.betas.push_back(1.0);
    for (int t = 0; t < t_max; ++t) {
        profile.betas.push_back(psi_ge(k - 1, c * profile.betas.back()));
    }
    profile.beta_limit = beta_limit_impl(k, c);
    return profile;
}

double beta_limit(int k, double c) {
    check_kc(k, c);
    return beta_limit_impl(k, c);
}

double h_curve(int k, double mu) { return mu / psi_ge(k - 1, mu); }

double f_ratio(int k, double mu) { return psi_ge(k - 1, mu) / psi(k - 1, mu); }

double solve_mu_ck(int k) {
    if (k < 3) throw std::domain_error("solve_mu_ck: k must be >= 3");
    // h decreases then increases; golden-section search on a wide bracket.
    double a = 1e-9;
    double b = std::max(6.0 * k, 80.0);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = h_curve(k, x1);
    double f2 = h_curve(k, x2);
    while (b - a > 1e-12) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = h_curve(k, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = h_curve(k, x2);
        }
    }
    return 0.5 * (a + b);
}

double solve_ck(int k) { return h_curve(k, solve_mu_ck(k)); }

double solve_mu_c(int k, double c) {
    check_kc(k, c);
    double mu_ck = solve_mu_ck(k);
    double ck = h_curve(k, mu_ck);
    if (!(c > ck)) throw std::domain_error("solve_mu_c: subcritical: no k-core (c <= c_k)");
    // h is increasing on [mu_ck, inf); the maximal root lies in [mu_ck, c]
    // since mu_c = c beta <= c and h(c) >= c.
    double lo = mu_ck;
    double hi = c;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (h_curve(k, mid) < c ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CoreConstants core_constants(int k, double c) {
    check_kc(k, c);
    CoreConstants cc;
    cc.k = k;
    cc.c = c;
    cc.mu_ck = solve_mu_ck(k);
    cc.c_k = h_curve(k, cc.mu_ck);
    if (!(c > cc.c_k)) throw std::domain_error("core_constants: subcritical: no k-core (c <= c_k)");
    cc.mu_c = solve_mu_c(k, c);
    cc.beta = cc.mu_c / c;
    cc.delta = 0.5 * (1.0 - cc.c_k / c) * (k - 2) / static_cast<double>(k - 1);

    double target = cc.delta * cc.delta / (2.0 * cc.mu_c);
    cc.L = static_cast<long long>(std::ceil(std::log(target) / std::log(1.0 - cc.delta)));
    cc.C = (1.0 - cc.delta) * (1.0 - cc.delta) / (1.0 - 2.0 * cc.delta);
    cc.C_tree = 1.0 + std::pow(static_cast<double>(k), static_cast<double>(cc.L + 1));

    // Minimal d with C * Pr[Z_{k-1}(mu_c) > d-1] <= delta^2 / (2 mu_c).
    // The tail sum_{i>d} p_i equals Psi_{>=d}(mu_c) / Psi_{>=k-1}(mu_c) exactly.
    double denom = psi_ge(k - 1, cc.mu_c);
    int d = k;
    while (cc.C * psi_ge(d, cc.mu_c) / denom > target && d < 100000) ++d;
    cc.d0 = d;

    for (int i = 1; i < 4000; ++i) {
        double x = std::exp(-1.0) * std::pow(2.0, -i);
        if ((1.0 - cc.delta / 2.0) * std::pow(x, -4.0 * x) < 1.0 - cc.delta / 4.0) {
            cc.delta1 = x;
            break;
        }
    }

    double e2c = std::exp(2.0) * c;
    double cand1 = std::pow(e2c, -1.0 - 1.0 / cc.delta1);  // may underflow to 0 near c_k
    double cand2 = cc.delta / (2.0 - cc.delta);
    double cand3 = 1.0 / (1.0 + 2.0 * std::exp(4.0) * std::pow(static_cast<double>(k), 6.0));
    cc.eps1 = std::min(cand1, std::min(cand2, cand3));

    cc.nhat_frac = psi_ge(k, cc.mu_c);
    cc.mhat_frac = cc.mu_c * psi_ge(k - 1, cc.mu_c) / 2.0;
    cc.dhat = 2.0 * cc.mhat_frac / cc.nhat_frac;
    cc.eps = cc.eps1 * cc.nhat_frac / 2.0;
    return cc;
}

double HistogramPrediction::mass(int j) const {
    auto it = entries.find(j);
    double base = it == entries.end() ? 0.0 : it->second;
    return j == 0 ? base + d0_extra : base;
}

HistogramPrediction predicted_histogram(int k, double c, int t) {
    check_kc(k, c);
    if (t < 0) throw std::domain_error("predicted_histogram: t must be nonnegative");
    HistogramPrediction hp;
    hp.k = k;
    hp.c = c;
    hp.t = t;

    auto fill = [&](double lambda, double weight_tail_lambda, auto term) {
        // Cut where even the second-factorial-moment tail is negligible.
        int j = 0;
        while (true) {
            hp.entries[j] = term(j);
            ++j;
            if (j >= 2 && psi_ge(j - 2, lambda) * std::max(1.0, weight_tail_lambda) < 1e-13) break;
            if (j > lambda + 400) break;
        }
    };

    if (t == 0) {
        fill(c, c * c, [&](int j) { return psi(j, c); });
        hp.d0_extra = 0.0;
        return hp;
    }

    BranchingProfile bp = beta_sequence(k, c, t);
    double lam = c * bp.betas[t];
    double diff = std::max(0.0, c * bp.betas[t - 1] - c * bp.betas[t]);
    fill(lam, lam * lam, [&](int j) { return psi(j, lam) * psi_ge(k - j, diff); });
    hp.d0_extra = psi_lt(k, c * bp.betas[t - 1]);
    return hp;
}

double molloy_reed_q(const std::map<int, double>& histogram) {
    double total = 0.0;
    for (const auto& [j, frac] : histogram) {
        if (j < 0 || frac < -1e-12) throw std::domain_error("molloy_reed_q: malformed histogram");
        total += frac;
    }
    if (total > 1.0 + 1e-9) throw std::domain_error("molloy_reed_q: histogram mass exceeds 1");
    double q = 0.0;
    for (const auto& [j, frac] : histogram) q += static_cast<double>(j) * (j - 2) * frac;
    return q;
}

int find_t_dagger(int k, double c) {
    check_kc(k, c);
    if (!(c < solve_ck(k))) {
        throw std::domain_error("find_t_dagger: requires c < c_k (beta_t does not vanish otherwise)");
    }
    double beta_prev = 1.0;
    for (int t = 1; t < 1'000'000; ++t) {
        if (c * psi_ge(k - 2, c * beta_prev) < 1.0) return t;
        beta_prev = psi_ge(k - 1, c * beta_prev);
    }
    throw std::runtime_error("find_t_dagger: did not converge");
}

}  // namespace coregame
