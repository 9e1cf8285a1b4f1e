#include "coregame/poisson.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace coregame {

namespace {

constexpr double kTermCutoff = 1e-17;  // relative term size at which sums stop

void check_domain(int j, double lambda) {
    if (j < 0) throw std::domain_error("psi: j must be nonnegative");
    if (!(lambda >= 0.0)) throw std::domain_error("psi: lambda must be nonnegative");
}

// sum_{i >= j} Psi_i(lambda), valid branch for j > lambda (terms decreasing).
double tail_direct(int j, double lambda) {
    double term = psi(j, lambda);
    double sum = 0.0;
    for (int i = j; term > 0.0; ++i) {
        sum += term;
        term *= lambda / (i + 1);
        if (term < sum * kTermCutoff) break;
    }
    return sum;
}

// sum_{i < j} Psi_i(lambda), valid branch for j <= lambda (terms grow toward
// the boundary, so we sum downward from i = j-1).
double head_direct(int j, double lambda) {
    if (j <= 0) return 0.0;
    double term = psi(j - 1, lambda);
    double sum = 0.0;
    for (int i = j - 1; i >= 0 && term > 0.0; --i) {
        sum += term;
        term *= i / lambda;
        if (term < sum * kTermCutoff) break;
    }
    return sum;
}

}  // namespace

double psi(int j, double lambda) {
    check_domain(j, lambda);
    if (lambda == 0.0) return j == 0 ? 1.0 : 0.0;
    if (j == 0) return std::exp(-lambda);
    return std::exp(j * std::log(lambda) - lambda - std::lgamma(j + 1.0));
}

double psi_ge(int j, double lambda) {
    check_domain(j < 0 ? j : 0, lambda);
    if (j <= 0) return 1.0;
    if (lambda == 0.0) return 0.0;
    if (j > lambda) return tail_direct(j, lambda);
    return 1.0 - head_direct(j, lambda);
}

double psi_lt(int j, double lambda) {
    check_domain(j < 0 ? j : 0, lambda);
    if (j <= 0) return 0.0;
    if (lambda == 0.0) return 1.0;
    if (j > lambda) return 1.0 - tail_direct(j, lambda);
    return head_direct(j, lambda);
}

TruncatedPoisson::TruncatedPoisson(int ell_, double lambda_) : ell(ell_), lambda(lambda_) {
    if (ell < 1) throw std::domain_error("TruncatedPoisson: ell must be >= 1");
    if (!(lambda > 0.0)) throw std::domain_error("TruncatedPoisson: lambda must be positive");
}

double TruncatedPoisson::pmf(int j) const {
    if (j < ell) return 0.0;
    return psi(j, lambda) / psi_ge(ell, lambda);
}

double TruncatedPoisson::mean() const {
    return lambda * psi_ge(ell - 1, lambda) / psi_ge(ell, lambda);
}

int TruncatedPoisson::sample(Rng& rng) const {
    double u = rng.unit() * psi_ge(ell, lambda);
    double cum = 0.0;
    double p = psi(ell, lambda);
    int j = ell;
    int cap = ell + 64 + static_cast<int>(lambda + 16.0 * std::sqrt(lambda + 1.0));
    while (j < cap) {
        cum += p;
        if (u < cum) return j;
        p *= lambda / (j + 1);
        ++j;
    }
    return j;
}

double truncated_poisson_pmf(int ell, double lambda, int j) {
    return TruncatedPoisson(ell, lambda).pmf(j);
}

double truncated_poisson_mean(int ell, double lambda) {
    return TruncatedPoisson(ell, lambda).mean();
}

double truncated_poisson_solve_lambda(int ell, double target_mean) {
    if (ell < 1) throw std::domain_error("truncated_poisson_solve_lambda: ell must be >= 1");
    if (!(target_mean > ell)) {
        throw std::domain_error(
            "truncated_poisson_solve_lambda: no solution, target mean must exceed ell (mean -> ell as lambda -> 0)");
    }
    // mean(lambda) is increasing, mean(0+) = ell and mean(lambda) > lambda,
    // so [0, target] brackets the root.
    double lo = 0.0;
    double hi = target_mean;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= 0.0) break;
        double m = truncated_poisson_mean(ell, mid);
        if (std::abs(m - target_mean) <= 1e-11) return mid;
        (m < target_mean ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double falling_factorial(double n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

std::pair<double, double> poisson_convolution_check(double lambda, double mu, int k, int ell) {
    if (!(lambda >= 0.0) || !(mu >= lambda)) {
        throw std::domain_error("poisson_convolution_check: requires 0 <= lambda <= mu");
    }
    if (ell < 0 || k < ell) throw std::domain_error("poisson_convolution_check: requires 0 <= ell <= k");

    double rhs = (ell == 0 ? 1.0 : std::pow(lambda, ell)) * psi_ge(k - ell, mu);

    double lhs = 0.0;
    int jmax = k + ell + 64 + static_cast<int>(lambda + 16.0 * std::sqrt(lambda + 1.0));
    for (int j = ell; j <= jmax; ++j) {
        double pj = psi(j, lambda);
        lhs += falling_factorial(j, ell) * pj * psi_ge(k - j, mu - lambda);
    }
    return {lhs, rhs};
}

}  // namespace coregame
