#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "degcond/degree_sequence.hpp"
#include "degcond/errors.hpp"

namespace degcond {

// Small simple graph on at most 31 vertices, adjacency stored as bitmask rows.
class graph {
  public:
    explicit graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0u) {
        if (n < 0 || n > 31) throw error("graph: vertex count out of range");
    }

    static graph complete(int n) {
        graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    static graph empty_graph(int n) { return graph(n); }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw error("graph: loop edge");
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }
    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= ~(1u << v);
        adj_[v] &= ~(1u << u);
    }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

    std::uint32_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::uint32_t full_mask() const { return n_ == 0 ? 0u : ((n_ == 31) ? 0x7fffffffu : ((1u << n_) - 1u)); }

    degree_sequence degrees() const {
        std::vector<int> d;
        d.reserve(n_);
        for (int v = 0; v < n_; ++v) d.push_back(degree(v));
        return degree_sequence(std::move(d));
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;  // lexicographic by construction
    }

    graph complement() const {
        graph g(n_);
        for (int v = 0; v < n_; ++v) g.adj_[v] = full_mask() & ~adj_[v] & ~(1u << v);
        return g;
    }

    // induced subgraph on the vertices of `mask`, relabeled compactly in order
    graph induced(std::uint32_t mask) const {
        std::vector<int> ids;
        for (int v = 0; v < n_; ++v)
            if ((mask >> v) & 1u) ids.push_back(v);
        graph g(static_cast<int>(ids.size()));
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b)
                if (has_edge(ids[a], ids[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        return g;
    }

    // union of neighbor sets over S (not automatically including S)
    std::uint32_t neighbor_set(std::uint32_t s) const {
        std::uint32_t out = 0;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out |= adj_[v];
        }
        return out;
    }

    // number of connected components of the subgraph induced on `keep`
    int component_count(std::uint32_t keep) const {
        std::uint32_t todo = keep;
        int comps = 0;
        while (todo) {
            ++comps;
            std::uint32_t frontier = todo & (~todo + 1);  // lowest bit
            std::uint32_t seen = 0;
            while (frontier) {
                seen |= frontier;
                std::uint32_t next = 0;
                std::uint32_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj_[v] & keep;
                }
                frontier = next & ~seen;
            }
            todo &= ~seen;
        }
        return comps;
    }

    bool connected() const { return n_ <= 1 || component_count(full_mask()) == 1; }

    friend bool operator==(const graph& a, const graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["n"] = n_;
        auto e = nlohmann::ordered_json::array();
        for (auto [u, v] : edges()) e.push_back({u, v});
        j["edges"] = std::move(e);
        return j;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw error("graph: vertex out of range");
    }

    int n_;
    std::vector<std::uint32_t> adj_;
};

// Havel-Hakimi realization: repeatedly satisfy the vertex with the largest
// residual degree (ties to the lowest index), connecting it to the
// next-highest residual vertices, ties again to the lowest index.
inline graph realize(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("realize: " + pi.compact() + " is not graphical");
    int n = pi.n();
    graph g(n);
    std::vector<int> residual(pi.degrees());
    for (;;) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (residual[v] > 0 && (u == -1 || residual[v] > residual[u])) u = v;
        if (u == -1) break;
        int need = residual[u];
        residual[u] = 0;
        std::vector<int> order;
        for (int v = 0; v < n; ++v)
            if (v != u && !g.has_edge(u, v)) order.push_back(v);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return residual[a] > residual[b]; });
        for (int t = 0; t < need; ++t) {
            int v = order[static_cast<size_t>(t)];
            g.add_edge(u, v);
            --residual[v];
        }
    }
    return g;
}

}  // namespace degcond
