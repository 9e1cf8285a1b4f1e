#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "coregame/graph.hpp"

namespace coregame {

// Sentinel rank for vertices that survive every peeling round (k-core members).
constexpr int kInfiniteRank = std::numeric_limits<int>::max();

struct IterationStats {
    long long edges = 0;
    int largest_component = 0;  // over vertices with degree >= 1; 0 when edgeless
    int components = 0;         // edge-bearing components only
    std::map<int, long long> degree_histogram;  // filled only when requested
};

struct PeelOptions {
    std::optional<int> t_max;
    bool component_stats = true;
    bool capture_histograms = false;
};

// Parallel-round k-peeling: each round simultaneously deletes all edges
// incident to vertices of current degree < k. ranks[v] is the first round
// index at which v's degree drops below k (kInfiniteRank for core vertices).
// t_star = 0 when no vertex is ever deficient, else 1 + max finite rank;
// per_iteration holds stats of G_0 .. G_{t_star}.
struct PeelTrace {
    int k = 0;
    std::vector<int> ranks;
    int t_star = 0;
    std::vector<IterationStats> per_iteration;
    bool truncated = false;  // t_max reached before stabilization
};

PeelTrace peel(const Graph& g, int k, PeelOptions options = {});

// Induced subgraph on the infinite-rank vertices, renumbered into [0, nhat)
// preserving the original order. Isolated leftover vertices are excluded.
struct CoreResult {
    Graph core;
    std::vector<int> vertex_map;  // core id -> original id
    std::vector<int> edge_map;    // core edge id -> original edge id
    long long nhat = 0;
    long long mhat = 0;
};

CoreResult k_core(const Graph& g, int k);

// Sequential vertex-deleting 2-peeling of host[subset]: repeatedly removes
// the lowest-id vertex of degree <= 1 until minimum degree >= 2. excess and
// boundary (|dC| in the host) refer to the surviving 2-core.
struct TwoCoreReport {
    Graph two_core;
    std::vector<int> vertex_map;  // two-core id -> host id
    long long excess = 0;         // |E| - |V| of the 2-core (0 when empty)
    long long boundary = 0;
};

TwoCoreReport two_core_sequential(const Graph& host, const std::vector<int>& subset);

long long excess(const Graph& g);  // |E| - |V|
long long boundary(const Graph& host, const std::vector<int>& subset);

// BFS ball of radius t around v: vertex count and whether any non-tree edge
// appears among the explored vertices.
struct BallStats {
    long long volume = 0;
    bool has_cycle = false;
};

BallStats ball_stats(const Graph& g, int v, int t);

// Grows `trials` random connected subsets of size >= log n by randomized BFS
// and returns the worst |N(U)|/|U| observed. Diagnostic only.
double sampled_expansion_check(const Graph& g, double c, int trials, uint64_t seed);

}  // namespace coregame
