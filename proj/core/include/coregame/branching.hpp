#pragma once

#include <map>
#include <vector>

namespace coregame {

// Survival probabilities of the "complete (k-1)-ary tree of height t" events
// in a Poisson(c) Galton-Watson process: beta_0 = 1, beta_{t+1} = Psi_{>=k-1}(c beta_t).
struct BranchingProfile {
    int k = 0;
    double c = 0.0;
    std::vector<double> betas;  // beta_0 .. beta_{t_max}
    double beta_limit = 0.0;    // maximum fixed point of x = Psi_{>=k-1}(cx)
};

BranchingProfile beta_sequence(int k, double c, int t_max);
double beta_limit(int k, double c);  // 0 below the threshold (iterates < 1e-10 declared 0)

// h(mu) = mu / Psi_{>=k-1}(mu); c_k = min_{mu>0} h(mu), mu_c = maximal root of h(mu) = c.
double h_curve(int k, double mu);
// F(mu) = Psi_{>=k-1}(mu) / Psi_{k-1}(mu) = 1 / Pr[Z_{k-1}(mu) = k-1]; increasing in mu.
double f_ratio(int k, double mu);

double solve_ck(int k);     // k-core appearance threshold in average degree
double solve_mu_ck(int k);  // argmin of h (where F(mu) = k-1)
double solve_mu_c(int k, double c);  // requires c > c_k, else std::domain_error

// Derived constants for a supercritical pair (k, c).
struct CoreConstants {
    int k = 0;
    double c = 0.0;
    double c_k = 0.0;
    double beta = 0.0;    // beta(c)
    double mu_c = 0.0;    // c * beta(c), maximal root of h(mu) = c
    double mu_ck = 0.0;   // minimizer of h
    double delta = 0.0;   // (1/2)(1 - c_k/c)(k-2)/(k-1), in (0, 1/2)
    long long L = 0;      // ceil(log_{1-delta}(delta^2 / (2 mu_c)))
    double C = 0.0;       // (1-delta)^2 / (1-2 delta)
    double C_tree = 0.0;  // 1 + k^{L+1}; +inf when it overflows a double
    int d0 = 0;           // minimal d with C * Pr[Z_{k-1}(mu_c) > d-1] <= delta^2/(2 mu_c)
    double delta1 = 0.0;  // largest grid value (1/e) 2^{-i}, i >= 1, with (1-delta/2) delta1^{-4 delta1} < 1-delta/4
    double eps1 = 0.0;    // min{(e^2 c)^{-1-1/delta1}, delta/(2-delta), 1/(1+2e^4 k^6)}
    double eps = 0.0;     // eps1 * Psi_{>=k}(mu_c) / 2
    double nhat_frac = 0.0;  // Psi_{>=k}(mu_c): core vertex fraction
    double mhat_frac = 0.0;  // mu_c Psi_{>=k-1}(mu_c) / 2: core edge fraction
    double dhat = 0.0;       // 2 mhat_frac / nhat_frac: average core degree
};

CoreConstants core_constants(int k, double c);

// Predicted degree histogram of G_t, the graph after t peeling rounds.
// entries[j] = Psi_j(c beta_t) Psi_{>=k-j}(c beta_{t-1} - c beta_t) for t >= 1;
// for t = 0 the plain Poisson(c) histogram. d0_extra is the additional
// degree-0 mass Psi_{<k}(c beta_{t-1}) from vertices that never had k
// neighbours surviving t-1 rounds.
struct HistogramPrediction {
    int k = 0;
    double c = 0.0;
    int t = 0;
    std::map<int, double> entries;
    double d0_extra = 0.0;

    double mass(int j) const;  // entries[j] plus the degree-0 correction at j = 0
};

HistogramPrediction predicted_histogram(int k, double c, int t);

// Q = sum_j j (j-2) fraction_j; a giant component exists iff Q > 0.
double molloy_reed_q(const std::map<int, double>& histogram);

// Least t with c Psi_{>=k-2}(c beta_{t-1}) < 1, the condition making
// Q_t = (c Psi_{>=k-2}(c beta_{t-1}) - 1) kappa_t negative. Requires c < c_k.
int find_t_dagger(int k, double c);

}  // namespace coregame
