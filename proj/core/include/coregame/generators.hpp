#pragma once

#include <cstdint>
#include <optional>

#include "coregame/graph.hpp"

namespace coregame {

// G(n, p): every unordered pair independently with probability p.
// Sparse generation by geometric index skipping over the ordered pair
// list, O(m) expected time. Identical (n, p, seed) -> identical graph.
Graph gen_gnp(int n, double p, uint64_t seed);

// G(n, m): m distinct uniform pairs (Floyd's sampling).
Graph gen_gnm(int n, long long m, uint64_t seed);

// Configuration model: a uniform random perfect matching of the labelled
// half-edges. May contain loops and parallel edges; loops count 2 toward
// degree. Throws std::domain_error on an odd degree sum.
Graph gen_configuration(const DegreeSequence& degrees, uint64_t seed);

// Rejection sampling: redraw configurations until simple. On failure the
// result carries the exhausted try count and no graph.
struct SimpleGraphResult {
    std::optional<Graph> graph;
    int tries = 0;
};

SimpleGraphResult gen_simple_from_sequence(const DegreeSequence& degrees, uint64_t seed,
                                           int max_tries);

// n_hat independent copies of the k-truncated Poisson Z_k(lambda); if the
// sum is odd the whole sequence is redrawn, preserving exchangeability.
DegreeSequence sample_core_like_sequence(long long n_hat, int k, double lambda, uint64_t seed);

}  // namespace coregame
