#include "coregame/peeling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "coregame/rng.hpp"
#include "coregame/union_find.hpp"

namespace coregame {

namespace {

IterationStats snapshot(const Graph& g, const std::vector<char>& edge_alive,
                        const std::vector<int>& deg, long long alive_edges,
                        const PeelOptions& options) {
    IterationStats st;
    st.edges = alive_edges;
    if (options.component_stats) {
        UnionFind uf(g.n);
        for (int e = 0; e < g.m(); ++e) {
            if (edge_alive[e]) uf.unite(g.edges[e].first, g.edges[e].second);
        }
        for (int v = 0; v < g.n; ++v) {
            if (deg[v] > 0 && uf.find(v) == v) {
                ++st.components;
                st.largest_component = std::max(st.largest_component, uf.set_size(v));
            }
        }
    }
    if (options.capture_histograms) {
        for (int v = 0; v < g.n; ++v) ++st.degree_histogram[deg[v]];
    }
    return st;
}

}  // namespace

PeelTrace peel(const Graph& g, int k, PeelOptions options) {
    if (k < 1) throw std::domain_error("peel: k must be >= 1");
    PeelTrace trace;
    trace.k = k;
    trace.ranks.assign(g.n, kInfiniteRank);

    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<char> edge_alive(g.m(), 1);
    long long alive_edges = g.m();

    trace.per_iteration.push_back(snapshot(g, edge_alive, deg, alive_edges, options));

    std::vector<int> frontier;
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] < k) {
            trace.ranks[v] = 0;
            frontier.push_back(v);
        }
    }

    int t = 0;
    while (!frontier.empty()) {
        if (options.t_max && t >= *options.t_max) {
            trace.truncated = true;
            break;
        }
        std::vector<int> next;
        for (int v : frontier) {
            for (int e : g.adj[v]) {
                if (!edge_alive[e]) continue;
                edge_alive[e] = 0;
                --alive_edges;
                auto [a, b] = g.edges[e];
                --deg[a];
                --deg[b];
            }
        }
        ++t;
        for (int v : frontier) {
            for (int e : g.adj[v]) {
                int u = g.other(e, v);
                if (deg[u] < k && trace.ranks[u] == kInfiniteRank) {
                    trace.ranks[u] = t;
                    next.push_back(u);
                }
            }
        }
        trace.per_iteration.push_back(snapshot(g, edge_alive, deg, alive_edges, options));
        frontier = std::move(next);
    }
    trace.t_star = t;
    return trace;
}

CoreResult k_core(const Graph& g, int k) {
    PeelOptions opts;
    opts.component_stats = false;
    PeelTrace trace = peel(g, k, opts);

    CoreResult result;
    std::vector<int> new_id(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (trace.ranks[v] == kInfiniteRank) {
            new_id[v] = static_cast<int>(result.vertex_map.size());
            result.vertex_map.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        if (new_id[u] >= 0 && new_id[v] >= 0) {
            edges.emplace_back(new_id[u], new_id[v]);
            result.edge_map.push_back(e);
        }
    }
    result.core = Graph::from_edges(static_cast<int>(result.vertex_map.size()), std::move(edges));
    result.nhat = result.core.n;
    result.mhat = result.core.m();
    return result;
}

TwoCoreReport two_core_sequential(const Graph& host, const std::vector<int>& subset) {
    std::vector<int> verts = subset;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) {
        if (v < 0 || v >= host.n) throw std::invalid_argument("two_core_sequential: vertex outside host");
    }

    std::vector<int> local(host.n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;

    // Induced edges, deduplicated by host edge id.
    std::vector<int> induced_edges;
    std::vector<char> edge_seen(host.m(), 0);
    for (int v : verts) {
        for (int e : host.adj[v]) {
            if (edge_seen[e]) continue;
            auto [a, b] = host.edges[e];
            if (local[a] >= 0 && local[b] >= 0) {
                edge_seen[e] = 1;
                induced_edges.push_back(e);
            }
        }
    }

    int nv = static_cast<int>(verts.size());
    std::vector<std::vector<std::pair<int, int>>> ladj(nv);  // (local neighbour, induced edge idx)
    std::vector<char> ealive(induced_edges.size(), 1);
    std::vector<int> deg(nv, 0);
    for (int i = 0; i < static_cast<int>(induced_edges.size()); ++i) {
        auto [a, b] = host.edges[induced_edges[i]];
        int la = local[a], lb = local[b];
        ladj[la].emplace_back(lb, i);
        ladj[lb].emplace_back(la, i);
        if (la == lb) {
            deg[la] += 2;
        } else {
            ++deg[la];
            ++deg[lb];
        }
    }

    std::vector<char> valive(nv, 1);
    // Local ids are in ascending host-id order, so "lowest id first" is the
    // smallest local id among degree <= 1 vertices. Duplicate heap entries
    // are skipped via the stale check.
    std::vector<int> pending;
    auto push = [&](int v) {
        pending.push_back(v);
        std::push_heap(pending.begin(), pending.end(), std::greater<>());
    };
    for (int i = 0; i < nv; ++i) {
        if (deg[i] <= 1) push(i);
    }
    while (!pending.empty()) {
        std::pop_heap(pending.begin(), pending.end(), std::greater<>());
        int v = pending.back();
        pending.pop_back();
        if (!valive[v] || deg[v] > 1) continue;
        valive[v] = 0;
        for (auto [u, ei] : ladj[v]) {
            if (!ealive[ei]) continue;
            ealive[ei] = 0;
            --deg[v];
            --deg[u];
            if (valive[u] && deg[u] <= 1) push(u);
        }
    }

    TwoCoreReport report;
    std::vector<int> core_id(nv, -1);
    for (int i = 0; i < nv; ++i) {
        if (valive[i]) {
            core_id[i] = static_cast<int>(report.vertex_map.size());
            report.vertex_map.push_back(verts[i]);
        }
    }
    std::vector<std::pair<int, int>> core_edges;
    for (int i = 0; i < static_cast<int>(induced_edges.size()); ++i) {
        if (!ealive[i]) continue;
        auto [a, b] = host.edges[induced_edges[i]];
        core_edges.emplace_back(core_id[local[a]], core_id[local[b]]);
    }
    report.two_core =
        Graph::from_edges(static_cast<int>(report.vertex_map.size()), std::move(core_edges));
    report.excess = report.two_core.n == 0 ? 0 : excess(report.two_core);
    report.boundary = boundary(host, report.vertex_map);
    return report;
}

long long excess(const Graph& g) { return static_cast<long long>(g.m()) - g.n; }

long long boundary(const Graph& host, const std::vector<int>& subset) {
    std::vector<char> in(host.n, 0);
    for (int v : subset) {
        if (v < 0 || v >= host.n) throw std::invalid_argument("boundary: vertex outside host");
        in[v] = 1;
    }
    long long count = 0;
    for (const auto& [u, v] : host.edges) {
        if (in[u] != in[v]) ++count;
    }
    return count;
}

BallStats ball_stats(const Graph& g, int v, int t) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("ball_stats: vertex out of range");
    if (t < 1) throw std::domain_error("ball_stats: t must be >= 1");
    std::vector<int> dist(g.n, -1);
    std::deque<int> queue;
    dist[v] = 0;
    queue.push_back(v);
    std::vector<int> visited{v};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == t) continue;
        for (int e : g.adj[u]) {
            int w = g.other(e, u);
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                visited.push_back(w);
                queue.push_back(w);
            }
        }
    }
    BallStats st;
    st.volume = static_cast<long long>(visited.size());
    long long inside_edges = 0;
    for (int u : visited) {
        for (int e : g.adj[u]) {
            auto [a, b] = g.edges[e];
            if (dist[a] >= 0 && dist[b] >= 0) ++inside_edges;  // counted from both ends
        }
    }
    inside_edges /= 2;
    st.has_cycle = inside_edges > st.volume - 1;
    return st;
}

double sampled_expansion_check(const Graph& g, double c, int trials, uint64_t seed) {
    (void)c;  // density parameter of the generator; kept for report context
    if (g.n == 0 || trials <= 0) return 0.0;
    Rng rng(seed);
    size_t target = static_cast<size_t>(std::max(1.0, std::ceil(std::log(std::max(2, g.n)))));
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        int start = static_cast<int>(rng.below(g.n));
        std::vector<char> in_set(g.n, 0);
        std::vector<int> members;
        std::vector<int> frontier;
        in_set[start] = 1;
        members.push_back(start);
        frontier.push_back(start);
        while (members.size() < target && !frontier.empty()) {
            size_t pick = static_cast<size_t>(rng.below(frontier.size()));
            std::swap(frontier[pick], frontier.back());
            int u = frontier.back();
            frontier.pop_back();
            for (int e : g.adj[u]) {
                int w = g.other(e, u);
                if (!in_set[w] && members.size() < target) {
                    in_set[w] = 1;
                    members.push_back(w);
                    frontier.push_back(w);
                }
            }
        }
        std::vector<char> seen(g.n, 0);
        long long nbrs = 0;
        for (int u : members) {
            for (int e : g.adj[u]) {
                int w = g.other(e, u);
                if (!in_set[w] && !seen[w]) {
                    seen[w] = 1;
                    ++nbrs;
                }
            }
        }
        worst = std::max(worst, static_cast<double>(nbrs) / static_cast<double>(members.size()));
    }
    return worst;
}

}  // namespace coregame
