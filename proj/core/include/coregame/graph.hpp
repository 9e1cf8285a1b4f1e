#pragma once

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace coregame {

// Sparse undirected (multi)graph with stable integer vertex and edge ids.
// Edge ids are assigned in generation order and act as the canonical
// tie-breaking key everywhere downstream. Loops appear twice in their
// endpoint's incidence list, so degree(v) == adj[v].size() throughout.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;  // incident edge ids per vertex
    bool simple = true;

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    std::pair<int, int> endpoints(int e) const { return edges[e]; }
    int other(int e, int v) const {
        auto [a, b] = edges[e];
        return a == v ? b : a;
    }

    // Builds adjacency and detects loops/parallel edges to set `simple`.
    // Throws std::invalid_argument on endpoints outside [0, n).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
};

bool is_simple(const Graph& g);

// Plain text format: first line "n m", then m lines "u v" (0-based),
// loops as "u u"; edge order is id order.
void write_graph(const Graph& g, std::ostream& out);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

struct DegreeSequence {
    std::vector<int> degrees;

    long long sum() const;
    int max_degree() const;  // Delta(d)
    bool even_sum() const { return sum() % 2 == 0; }
};

struct DegreeHistogram {
    std::map<int, long long> counts;  // j -> number of vertices of degree j
    long long n = 0;
};

DegreeHistogram degree_histogram(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);

// lambda(d) = (1/2) sum [d_i]_2 / sum d_i; throws on zero degree sum.
double lambda_of_sequence(const DegreeSequence& d);

// Sizes of all connected components (singletons included), ascending.
std::vector<int> component_sizes(const Graph& g);

}  // namespace coregame
