#include "coregame/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "coregame/union_find.hpp"

namespace coregame {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    std::unordered_set<long long> seen;
    seen.reserve(g.edges.size() * 2);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("Graph::from_edges: endpoint out of range");
        }
        g.adj[u].push_back(e);
        g.adj[v].push_back(e);  // loops listed twice, degree counts them twice
        long long key = static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
        if (u == v || !seen.insert(key).second) g.simple = false;
    }
    return g;
}

bool is_simple(const Graph& g) { return g.simple; }

void write_graph(const Graph& g, std::ostream& out) {
    out << g.n << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) throw std::runtime_error("read_graph: bad header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("read_graph: truncated edge list");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_graph(g, out);
}

long long DegreeSequence::sum() const {
    long long s = 0;
    for (int d : degrees) s += d;
    return s;
}

int DegreeSequence::max_degree() const {
    int mx = 0;
    for (int d : degrees) mx = std::max(mx, d);
    return mx;
}

DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram h;
    h.n = g.n;
    for (int v = 0; v < g.n; ++v) ++h.counts[g.degree(v)];
    return h;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d;
    d.degrees.resize(g.n);
    for (int v = 0; v < g.n; ++v) d.degrees[v] = g.degree(v);
    return d;
}

double lambda_of_sequence(const DegreeSequence& d) {
    double sum = 0.0;
    double sum2 = 0.0;
    for (int di : d.degrees) {
        sum += di;
        sum2 += static_cast<double>(di) * (di - 1);
    }
    if (sum == 0.0) throw std::domain_error("lambda_of_sequence: zero degree sum");
    return 0.5 * sum2 / sum;
}

std::vector<int> component_sizes(const Graph& g) {
    UnionFind uf(g.n);
    for (const auto& [u, v] : g.edges) uf.unite(u, v);
    std::vector<int> sizes;
    for (int v = 0; v < g.n; ++v) {
        if (uf.find(v) == v) sizes.push_back(uf.set_size(v));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace coregame
