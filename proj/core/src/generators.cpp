#include "coregame/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "coregame/poisson.hpp"
#include "coregame/rng.hpp"

namespace coregame {

namespace {

// Decodes linear index i in [0, n(n-1)/2) to the pair (u, v), u < v,
// ordered (0,1),(0,2),(1,2),(0,3),... i.e. by v then u.
std::pair<int, int> pair_from_index(long long i) {
    long long v = static_cast<long long>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(i))) / 2.0);
    while (v * (v - 1) / 2 > i) --v;
    while ((v + 1) * v / 2 <= i) ++v;
    long long u = i - v * (v - 1) / 2;
    return {static_cast<int>(u), static_cast<int>(v)};
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    for (long long i = 0; i < total; ++i) edges.push_back(pair_from_index(i));
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

Graph gen_gnp(int n, double p, uint64_t seed) {
    if (n < 0) throw std::domain_error("gen_gnp: n must be nonnegative");
    if (!(p >= 0.0) || !(p <= 1.0)) throw std::domain_error("gen_gnp: p must lie in [0, 1]");
    if (p == 0.0 || n < 2) return Graph::from_edges(n, {});
    if (p == 1.0) return complete_graph(n);

    Rng rng(seed);
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    double log_q = std::log1p(-p);
    std::vector<std::pair<int, int>> edges;
    long long i = -1;
    while (true) {
        double u = rng.unit();
        double gap = std::floor(std::log1p(-u) / log_q);
        // Next index is i + 1 + gap; compare in double to dodge overflow on
        // the huge gaps tiny p can produce.
        if (gap >= static_cast<double>(total - 1 - i)) break;
        i += 1 + static_cast<long long>(gap);
        edges.push_back(pair_from_index(i));
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_gnm(int n, long long m, uint64_t seed) {
    if (n < 0 || m < 0) throw std::domain_error("gen_gnm: negative parameter");
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m > total) throw std::domain_error("gen_gnm: m exceeds n(n-1)/2");

    Rng rng(seed);
    std::unordered_set<long long> chosen;
    chosen.reserve(m * 2);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    // Floyd's sampling: uniform m-subset, one insertion per draw.
    for (long long j = total - m; j < total; ++j) {
        long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(j) + 1));
        long long pick = chosen.insert(r).second ? r : j;
        if (pick != r) chosen.insert(pick);
        edges.push_back(pair_from_index(pick));
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_configuration(const DegreeSequence& degrees, uint64_t seed) {
    if (degrees.sum() % 2 != 0) throw std::domain_error("gen_configuration: odd degree sum");
    Rng rng(seed);
    std::vector<int> half;
    half.reserve(degrees.sum());
    for (int v = 0; v < static_cast<int>(degrees.degrees.size()); ++v) {
        for (int i = 0; i < degrees.degrees[v]; ++i) half.push_back(v);
    }
    rng.shuffle(half);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(half.size() / 2);
    for (size_t i = 0; i + 1 < half.size(); i += 2) {
        int u = half[i];
        int v = half[i + 1];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph::from_edges(static_cast<int>(degrees.degrees.size()), std::move(edges));
}

SimpleGraphResult gen_simple_from_sequence(const DegreeSequence& degrees, uint64_t seed,
                                           int max_tries) {
    for (int t = 1; t <= max_tries; ++t) {
        Graph g = gen_configuration(degrees, mix_seed(seed, static_cast<uint64_t>(t)));
        if (g.simple) return {std::move(g), t};
    }
    return {std::nullopt, max_tries};
}

DegreeSequence sample_core_like_sequence(long long n_hat, int k, double lambda, uint64_t seed) {
    if (n_hat < 0) throw std::domain_error("sample_core_like_sequence: negative n_hat");
    TruncatedPoisson z(k, lambda);
    for (uint64_t attempt = 0;; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        DegreeSequence d;
        d.degrees.resize(n_hat);
        long long sum = 0;
        for (long long i = 0; i < n_hat; ++i) {
            d.degrees[i] = z.sample(rng);
            sum += d.degrees[i];
        }
        if (sum % 2 == 0) return d;
    }
}

}  // namespace coregame
