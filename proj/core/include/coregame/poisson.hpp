#pragma once

#include <utility>

#include "coregame/rng.hpp"

namespace coregame {

// Poisson point mass Pr[Poisson(lambda) = j] = e^{-lambda} lambda^j / j!.
// Throws std::domain_error on j < 0 or lambda < 0.
double psi(int j, double lambda);

// Tail Pr[Poisson(lambda) >= j] and head Pr[Poisson(lambda) < j].
// The smaller side is summed directly starting from the boundary term,
// stopping once a term drops below 1e-17 of the running sum; the other
// side is its complement. This avoids cancellation for large lambda.
double psi_ge(int j, double lambda);
double psi_lt(int j, double lambda);

// Poisson(lambda) conditioned on being >= ell.
struct TruncatedPoisson {
    int ell;        // truncation point, >= 1
    double lambda;  // rate, > 0

    TruncatedPoisson(int ell_, double lambda_);

    double pmf(int j) const;
    double mean() const;  // lambda * psi_ge(ell-1) / psi_ge(ell), exact identity
    int sample(Rng& rng) const;
};

double truncated_poisson_pmf(int ell, double lambda, int j);
double truncated_poisson_mean(int ell, double lambda);

// Solves E[Z_ell(lambda)] = target_mean for lambda by bisection on the
// monotone mean; |mean(lambda*) - target| <= 1e-10.
// Throws std::domain_error if target_mean <= ell (no solution).
double truncated_poisson_solve_lambda(int ell, double target_mean);

// Both sides of the convolution identity
//   sum_j [j]_ell Psi_j(lambda) Psi_{>=k-j}(mu - lambda) = lambda^ell Psi_{>=k-ell}(mu)
// with the left side summed term by term (truncated at a negligible tail)
// and the right side evaluated in closed form. Requires 0 <= lambda <= mu
// and 0 <= ell <= k.
std::pair<double, double> poisson_convolution_check(double lambda, double mu, int k, int ell);

// Falling factorial [n]_k = n (n-1) ... (n-k+1).
double falling_factorial(double n, int k);

}  // namespace coregame
