// Test-only independent oracles. These deliberately use different algorithms
// from the library so agreement is meaningful double-entry bookkeeping.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include <degcond/graph.hpp>
#include <degcond/rational.hpp>

namespace testutil {

using degcond::graph;
using degcond::rational;

// visit every labeled simple graph on n vertices (2^C(n,2) of them)
inline void all_graphs(int n, const std::function<void(const graph&)>& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::uint64_t total = 1ull << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        graph g(n);
        for (size_t e = 0; e < slots.size(); ++e)
            if ((mask >> e) & 1ull) g.add_edge(slots[e].first, slots[e].second);
        fn(g);
    }
}

// sorted degree vectors realized by at least one labeled graph
inline std::set<std::vector<int>> brute_graphical_set(int n) {
    std::set<std::vector<int>> out;
    all_graphs(n, [&](const graph& g) {
        std::vector<int> d;
        for (int v = 0; v < n; ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        out.insert(std::move(d));
    });
    return out;
}

// binding number by recursive subset construction (vs the library's mask scan)
inline rational naive_binding(const graph& g) {
    int n = g.n();
    std::uint32_t full = g.full_mask();
    bool have = false;
    rational best(0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int next) -> void {
        if (!chosen.empty()) {
            std::uint32_t ns = 0;
            for (int v : chosen) ns |= g.neighbors(v);
            if (ns != full) {
                rational ratio(std::popcount(ns), static_cast<long long>(chosen.size()));
                if (!have || ratio < best) {
                    have = true;
                    best = ratio;
                }
            }
        }
        for (int v = next; v < n; ++v) {
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return have ? best : rational(n - 1);
}

// toughness by recursive cutset construction
inline rational naive_toughness(const graph& g) {
    int n = g.n();
    std::uint32_t full = g.full_mask();
    bool have = false;
    rational best(0);
    std::vector<int> cut;
    auto consider = [&]() {
        std::uint32_t removed = 0;
        for (int v : cut) removed |= 1u << v;
        std::uint32_t keep = full & ~removed;
        int comps = g.component_count(keep);
        if (comps >= 2) {
            rational ratio(static_cast<long long>(cut.size()), comps);
            if (!have || ratio < best) {
                have = true;
                best = ratio;
            }
        }
    };
    auto rec = [&](auto&& self, int next) -> void {
        consider();
        for (int v = next; v < n; ++v) {
            cut.push_back(v);
            self(self, v + 1);
            cut.pop_back();
        }
    };
    rec(rec, 0);
    return have ? best : rational(n - 1);
}

// maximum matching by recursion over the edge list
inline int naive_matching(const graph& g) {
    auto es = g.edges();
    int best = 0;
    auto rec = [&](auto&& self, size_t idx, std::uint32_t used, int size) -> void {
        best = std::max(best, size);
        for (size_t e = idx; e < es.size(); ++e) {
            auto [u, v] = es[e];
            if ((used >> u) & 1u || (used >> v) & 1u) continue;
            self(self, e + 1, used | (1u << u) | (1u << v), size + 1);
        }
    };
    rec(rec, 0, 0u, 0);
    return best;
}

// hamiltonicity by scanning vertex permutations
inline bool perm_hamiltonian(const graph& g) {
    int n = g.n();
    if (n < 3) return false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (!g.has_edge(order[i], order[(i + 1) % n])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

// chromatic number as the best greedy coloring over all vertex orderings
// (attains chi for some ordering)
inline int greedy_orderings_chromatic(const graph& g) {
    int n = g.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<int> color(n, -1);
        int used = 0;
        for (int v : order) {
            std::uint32_t taken = 0;
            std::uint32_t nb = g.neighbors(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[w] >= 0) taken |= 1u << color[w];
            }
            int c = std::countr_zero(~taken);
            color[v] = c;
            used = std::max(used, c + 1);
        }
        best = std::min(best, used);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// partition function via Euler's pentagonal-number recurrence, independent of
// the library's largest-part DP
inline long long pentagonal_partition_count(long long r) {
    std::vector<long long> p(static_cast<size_t>(r) + 1, 0);
    p[0] = 1;
    for (long long m = 1; m <= r; ++m) {
        long long total = 0;
        for (long long k = 1;; ++k) {
            long long g1 = k * (3 * k - 1) / 2;
            long long g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * p[static_cast<size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<size_t>(m - g2)];
        }
        p[static_cast<size_t>(m)] = total;
    }
    return p[static_cast<size_t>(r)];
}

// partition count by explicit enumeration (third route for small r)
inline long long enumerated_partition_count(long long r) {
    long long count = 0;
    auto rec = [&](auto&& self, long long rest, long long maxpart) -> void {
        if (rest == 0) {
            ++count;
            return;
        }
        for (long long part = std::min(rest, maxpart); part >= 1; --part)
            self(self, rest - part, part);
    };
    rec(rec, r, r == 0 ? 1 : r);
    return count;
}

}  // namespace testutil
