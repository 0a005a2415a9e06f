#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "degcond/graph.hpp"
#include "degcond/rational.hpp"

namespace degcond {

// Soft limits for the exhaustive oracles; override_limits lifts them.
struct scale_limits {
    int realization_n = 8;     // realization enumeration / forcibly
    int cycle_oracle_n = 10;   // subset-DP cycle and path searches
    int partition_oracle_n = 8;  // chromatic / arboricity partition searches
    int sink_n = 7;            // full poset classification (forcibly per sequence)
    bool override_limits = false;
};

enum class prop_kind {
    hamiltonian,
    traceable,
    k_connected,
    k_edge_connected,
    b_binding,
    t_tough,
    beta_deficient,
    has_2_factor,
    has_k_factor,
    k_hamiltonian,
    k_path_coverable,
    hamiltonian_connected,
    k_edge_hamiltonian,
    pancyclic,
    alpha_le,
    alpha_ge,
    omega_ge,
    chi_le,
    chi_ge,
    arboricity_le,
};

struct property {
    prop_kind kind;
    long long k = 0;  // integer parameter (k or beta)
    rational q;       // rational parameter (b or t)

    static property simple(prop_kind pk) { return property{pk, 0, rational()}; }
    static property with_k(prop_kind pk, long long k) { return property{pk, k, rational()}; }
    static property with_q(prop_kind pk, rational q) { return property{pk, 0, q}; }

    // adding edges preserves increasing properties; deleting preserves decreasing ones
    bool increasing() const {
        switch (kind) {
            case prop_kind::alpha_ge:
            case prop_kind::chi_le:
            case prop_kind::arboricity_le:
                return false;
            default:
                return true;
        }
    }

    std::string name() const {
        switch (kind) {
            case prop_kind::hamiltonian: return "hamiltonian";
            case prop_kind::traceable: return "traceable";
            case prop_kind::k_connected: return "k-connected";
            case prop_kind::k_edge_connected: return "k-edge-connected";
            case prop_kind::b_binding: return "binding";
            case prop_kind::t_tough: return "tough";
            case prop_kind::beta_deficient: return "deficient";
            case prop_kind::has_2_factor: return "2-factor";
            case prop_kind::has_k_factor: return "k-factor";
            case prop_kind::k_hamiltonian: return "k-hamiltonian";
            case prop_kind::k_path_coverable: return "k-path-coverable";
            case prop_kind::hamiltonian_connected: return "hamiltonian-connected";
            case prop_kind::k_edge_hamiltonian: return "k-edge-hamiltonian";
            case prop_kind::pancyclic: return "pancyclic";
            case prop_kind::alpha_le: return "alpha-le";
            case prop_kind::alpha_ge: return "alpha-ge";
            case prop_kind::omega_ge: return "omega-ge";
            case prop_kind::chi_le: return "chi-le";
            case prop_kind::chi_ge: return "chi-ge";
            case prop_kind::arboricity_le: return "arboricity-le";
        }
        return "?";
    }

    bool has_int_param() const {
        switch (kind) {
            case prop_kind::k_connected:
            case prop_kind::k_edge_connected:
            case prop_kind::beta_deficient:
            case prop_kind::has_k_factor:
            case prop_kind::k_hamiltonian:
            case prop_kind::k_path_coverable:
            case prop_kind::k_edge_hamiltonian:
            case prop_kind::alpha_le:
            case prop_kind::alpha_ge:
            case prop_kind::omega_ge:
            case prop_kind::chi_le:
            case prop_kind::chi_ge:
            case prop_kind::arboricity_le:
                return true;
            default:
                return false;
        }
    }
    bool has_rat_param() const {
        return kind == prop_kind::b_binding || kind == prop_kind::t_tough;
    }

    std::string display() const {
        if (has_int_param()) return name() + "(" + std::to_string(k) + ")";
        if (has_rat_param()) return name() + "(" + q.str() + ")";
        return name();
    }

    friend bool operator==(const property& a, const property& b) {
        return a.kind == b.kind && a.k == b.k && a.q == b.q;
    }
    friend bool operator<(const property& a, const property& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.k != b.k) return a.k < b.k;
        return a.q < b.q;
    }
};

// ---------------------------------------------------------------------------
// subset-DP path and cycle machinery

namespace detail {

// For every vertex subset S, the set of v such that some path covering
// exactly S ends at v and starts at the lowest vertex of S.
inline std::vector<std::uint32_t> anchored_path_dp(const graph& g) {
    int n = g.n();
    std::vector<std::uint32_t> dp(static_cast<size_t>(1) << n, 0u);
    for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;
    for (std::uint32_t s = 1; s < dp.size(); ++s) {
        if (std::popcount(s) < 2) continue;
        int anchor = std::countr_zero(s);
        std::uint32_t rest = s & ~(1u << anchor);
        std::uint32_t ends = 0;
        std::uint32_t cand = rest;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (dp[s & ~(1u << v)] & g.neighbors(v)) ends |= 1u << v;
        }
        dp[s] = ends;
    }
    return dp;
}

// As above but paths may start anywhere in S.
inline std::vector<std::uint32_t> free_path_dp(const graph& g) {
    int n = g.n();
    std::vector<std::uint32_t> dp(static_cast<size_t>(1) << n, 0u);
    for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;
    for (std::uint32_t s = 1; s < dp.size(); ++s) {
        if (std::popcount(s) < 2) continue;
        std::uint32_t ends = 0;
        std::uint32_t cand = s;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (dp[s & ~(1u << v)] & g.neighbors(v)) ends |= 1u << v;
        }
        dp[s] = ends;
    }
    return dp;
}

// Paths anchored at a chosen start vertex.
inline std::vector<std::uint32_t> start_path_dp(const graph& g, int start) {
    int n = g.n();
    std::vector<std::uint32_t> dp(static_cast<size_t>(1) << n, 0u);
    dp[1u << start] = 1u << start;
    for (std::uint32_t s = 1; s < dp.size(); ++s) {
        if (!((s >> start) & 1u) || std::popcount(s) < 2) continue;
        std::uint32_t ends = 0;
        std::uint32_t cand = s & ~(1u << start);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (dp[s & ~(1u << v)] & g.neighbors(v)) ends |= 1u << v;
        }
        dp[s] = ends;
    }
    return dp;
}

}  // namespace detail

// Bit l set iff the graph contains a cycle of length l (l >= 3).
inline std::uint32_t cycle_length_set(const graph& g) {
    auto dp = detail::anchored_path_dp(g);
    std::uint32_t lengths = 0;
    for (std::uint32_t s = 1; s < dp.size(); ++s) {
        int len = std::popcount(s);
        if (len < 3 || ((lengths >> len) & 1u)) continue;
        int anchor = std::countr_zero(s);
        if (dp[s] & ~(1u << anchor) & g.neighbors(anchor)) lengths |= 1u << len;
    }
    return lengths;
}

inline bool is_hamiltonian(const graph& g) {
    if (g.n() < 3) return false;
    return (cycle_length_set(g) >> g.n()) & 1u;
}

inline bool is_traceable(const graph& g) {
    if (g.n() == 1) return true;
    auto dp = detail::free_path_dp(g);
    return dp[g.full_mask()] != 0;
}

inline bool is_pancyclic(const graph& g) {
    if (g.n() < 3) return false;
    std::uint32_t lengths = cycle_length_set(g);
    for (int l = 3; l <= g.n(); ++l)
        if (!((lengths >> l) & 1u)) return false;
    return true;
}

inline bool is_hamiltonian_connected(const graph& g) {
    int n = g.n();
    for (int u = 0; u < n; ++u) {
        auto dp = detail::start_path_dp(g, u);
        std::uint32_t ends = dp[g.full_mask()];
        for (int v = u + 1; v < n; ++v)
            if (!((ends >> v) & 1u)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// connectivity

inline bool is_k_connected(const graph& g, long long k) {
    if (k <= 0) return true;
    int n = g.n();
    if (n <= k) return false;
    std::uint32_t full = g.full_mask();
    for (std::uint32_t x = 0; x <= full; ++x) {
        if (std::popcount(x) >= k) continue;
        std::uint32_t keep = full & ~x;
        if (std::popcount(keep) >= 2 && g.component_count(keep) > 1) return false;
    }
    return true;
}

inline int edge_connectivity(const graph& g) {
    int n = g.n();
    if (n <= 1) return 0;
    if (!g.connected()) return 0;
    int best = n;  // beats max possible cut n-1
    std::uint32_t half = 1u << (n - 1);
    for (std::uint32_t side = 1; side < half; ++side) {
        // vertex 0 always on the complement side
        std::uint32_t s = side << 1;
        if (s == 0) continue;
        int cut = 0;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cut += std::popcount(g.neighbors(v) & ~s);
        }
        best = std::min(best, cut);
    }
    return best;
}

inline bool is_k_edge_connected(const graph& g, long long k) {
    if (k <= 0) return true;
    return edge_connectivity(g) >= k;
}

// ---------------------------------------------------------------------------
// binding number and toughness (exact rationals, full subset enumeration)

struct binding_result {
    rational value;
    std::uint32_t witness_set;  // a binding set; 0 when none exists (never at n >= 1)
};

inline binding_result binding_number(const graph& g) {
    int n = g.n();
    std::uint32_t full = g.full_mask();
    bool have = false;
    rational best;
    std::uint32_t best_set = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t ns = g.neighbor_set(s);
        if (ns == full) continue;
        rational ratio(std::popcount(ns), std::popcount(s));
        if (!have || ratio < best) {
            have = true;
            best = ratio;
            best_set = s;
        }
    }
    if (!have) return {rational(n - 1), 0};  // unreachable for simple graphs
    return {best, best_set};
}

struct toughness_result {
    rational value;
    std::optional<std::uint32_t> cutset;  // empty for complete graphs (tau = n-1)
};

inline toughness_result toughness(const graph& g) {
    int n = g.n();
    std::uint32_t full = g.full_mask();
    bool have = false;
    rational best;
    std::uint32_t best_cut = 0;
    for (std::uint32_t x = 0; x <= full; ++x) {
        std::uint32_t keep = full & ~x;
        int comp = g.component_count(keep);
        if (comp < 2) continue;
        rational ratio(std::popcount(x), comp);
        if (!have || ratio < best) {
            have = true;
            best = ratio;
            best_cut = x;
        }
    }
    if (!have) return {rational(n - 1), std::nullopt};  // complete graph convention
    return {best, best_cut};
}

// ---------------------------------------------------------------------------
// matching, factors, degree-constrained subgraphs

namespace detail {

inline int max_matching_size(const graph& g) {
    int n = g.n();
    std::vector<int> memo(static_cast<size_t>(1) << n, -1);
    auto rec = [&](auto&& self, std::uint32_t mask) -> int {
        if (mask == 0) return 0;
        int& m = memo[mask];
        if (m >= 0) return m;
        int v = std::countr_zero(mask);
        // v unmatched
        int best = self(self, mask & ~(1u << v));
        std::uint32_t cand = g.neighbors(v) & mask & ~(1u << v);
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            best = std::max(best, 1 + self(self, mask & ~(1u << v) & ~(1u << w)));
        }
        return m = best;
    };
    return rec(rec, g.full_mask());
}

// Does `host` contain a spanning subgraph with exactly the given vertex degrees?
// Backtracking row by row with availability pruning. Also used for the
// Rao-style independent-set decision.
inline bool has_spanning_subgraph_with_degrees(const graph& host, std::vector<int> target) {
    int n = host.n();
    for (int v = 0; v < n; ++v)
        if (target[v] < 0 || target[v] > host.degree(v)) return false;
    long long sum = 0;
    for (int v = 0; v < n; ++v) sum += target[v];
    if (sum % 2 != 0) return false;

    // forward[v]: host neighbors of v with index > current frontier
    std::vector<int> picked;
    auto rec = [&](auto&& self, int u, std::vector<int>& res) -> bool {
        while (u < n && res[u] == 0) ++u;
        if (u == n) return true;
        // candidates for u: higher-indexed host neighbors with residual demand
        std::vector<int> cand;
        for (int v = u + 1; v < n; ++v)
            if (host.has_edge(u, v) && res[v] > 0) cand.push_back(v);
        int need = res[u];
        if (static_cast<int>(cand.size()) < need) return false;
        // choose `need` of cand (lexicographic), recurse
        std::vector<int> idx;
        auto choose = [&](auto&& self2, int pos, int taken) -> bool {
            if (taken == need) {
                std::vector<int> res2 = res;
                res2[u] = 0;
                for (int v : idx) --res2[v];
                // cheap feasibility: every remaining vertex must have enough partners
                for (int w = u + 1; w < n; ++w) {
                    if (res2[w] == 0) continue;
                    int avail = 0;
                    for (int v = u + 1; v < n; ++v)
                        if (v != w && host.has_edge(w, v) && res2[v] > 0) ++avail;
                    if (avail < res2[w]) return false;
                }
                return self(self, u + 1, res2);
            }
            if (pos == static_cast<int>(cand.size())) return false;
            if (static_cast<int>(cand.size()) - pos < need - taken) return false;
            idx.push_back(cand[pos]);
            if (self2(self2, pos + 1, taken + 1)) return true;
            idx.pop_back();
            return self2(self2, pos + 1, taken);
        };
        return choose(choose, 0, 0);
    };
    std::vector<int> res = target;
    return rec(rec, 0, res);
}

}  // namespace detail

inline int deficiency(const graph& g) { return g.n() - 2 * detail::max_matching_size(g); }

inline bool has_k_factor(const graph& g, long long k) {
    if (k < 0) return false;
    return detail::has_spanning_subgraph_with_degrees(g, std::vector<int>(g.n(), static_cast<int>(k)));
}

// ---------------------------------------------------------------------------
// alpha / chromatic / arboricity

inline int independence_number(const graph& g) {
    int best = 0;
    auto rec = [&](auto&& self, std::uint32_t cand, int size) -> void {
        if (size + std::popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        int v = std::countr_zero(cand);
        self(self, cand & ~(1u << v) & ~g.neighbors(v), size + 1);  // take v
        self(self, cand & ~(1u << v), size);                        // skip v
    };
    rec(rec, g.full_mask(), 0);
    return best;
}

inline int clique_number(const graph& g) { return independence_number(g.complement()); }

inline bool is_k_colorable(const graph& g, long long k) {
    if (k < 0) return false;
    int n = g.n();
    if (k >= n) return true;
    if (k == 0) return n == 0;
    std::vector<int> color(static_cast<size_t>(n), -1);
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        int cap = std::min<long long>(used + 1, k);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            std::uint32_t nb = g.neighbors(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (w < v && color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

inline int chromatic_number(const graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n(); ++k)
        if (is_k_colorable(g, k)) return k;
    return g.n();
}

namespace detail {

inline bool mask_induces_forest(const graph& g, std::uint32_t mask) {
    // forest iff edges == vertices - components
    int edges = 0;
    std::uint32_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        edges += std::popcount(g.neighbors(v) & mask);
    }
    edges /= 2;
    return edges == std::popcount(mask) - g.component_count(mask);
}

}  // namespace detail

// vertex arboricity: partition V into parts each inducing a forest
inline bool vertex_arboricity_le(const graph& g, long long k) {
    if (k <= 0) return g.n() == 0;
    int n = g.n();
    if (k >= n) return true;
    std::vector<std::uint32_t> classes(static_cast<size_t>(k), 0u);
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        int cap = std::min<long long>(used + 1, k);
        for (int c = 0; c < cap; ++c) {
            std::uint32_t with_v = classes[c] | (1u << v);
            // adding v keeps the class a forest?
            if (std::popcount(g.neighbors(v) & classes[c]) >= 2 &&
                !detail::mask_induces_forest(g, with_v))
                continue;
            classes[c] |= 1u << v;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            classes[c] &= ~(1u << v);
        }
        return false;
    };
    return rec(rec, 0, 0);
}

inline int vertex_arboricity(const graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n(); ++k)
        if (vertex_arboricity_le(g, k)) return k;
    return g.n();
}

// ---------------------------------------------------------------------------
// hamiltonicity variants with side constraints

inline bool is_k_hamiltonian(const graph& g, long long k) {
    if (k < 0) return false;
    int n = g.n();
    if (n - k < 3) return false;
    std::uint32_t full = g.full_mask();
    for (std::uint32_t x = 0; x <= full; ++x) {
        if (std::popcount(x) > k) continue;
        if (!is_hamiltonian(g.induced(full & ~x))) return false;
    }
    return true;
}

inline bool is_k_path_coverable(const graph& g, long long k) {
    if (k <= 0) return false;
    int n = g.n();
    if (k >= n) return true;
    auto dp = detail::free_path_dp(g);
    std::vector<int> cover(static_cast<size_t>(1) << n, -1);
    cover[0] = 0;
    auto rec = [&](auto&& self, std::uint32_t s) -> int {
        if (cover[s] >= 0) return cover[s];
        int low = std::countr_zero(s);
        int best = n + 1;
        // iterate submasks of s containing `low` that carry a spanning path
        std::uint32_t rest = s & ~(1u << low);
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t part = sub | (1u << low);
            if (dp[part] != 0) best = std::min(best, 1 + self(self, s & ~part));
            if (sub == 0) break;
        }
        return cover[s] = best;
    };
    return rec(rec, g.full_mask()) <= k;
}

namespace detail {

// Is there a Hamilton cycle containing every edge of `forced` (a linear forest)?
inline bool ham_cycle_containing(const graph& g, const std::vector<std::pair<int, int>>& forced) {
    int n = g.n();
    if (n < 3) return false;
    std::vector<std::uint32_t> fadj(static_cast<size_t>(n), 0u);
    for (auto [u, v] : forced) {
        fadj[u] |= 1u << v;
        fadj[v] |= 1u << u;
    }
    // build cycle 0, x1, ..., x_{n-1}; when leaving u toward w, u's cycle
    // neighborhood {prev,w} must contain all forced edges at u; vertex 0 is
    // checked at closing time.
    std::vector<int> seq{0};
    auto rec = [&](auto&& self, std::uint32_t visited, int u, int prev) -> bool {
        if (std::popcount(visited) == n) {
            if (!g.has_edge(u, 0)) return false;
            std::uint32_t u_nbhd = (1u << prev) | 1u;
            if (fadj[u] & ~u_nbhd) return false;
            std::uint32_t zero_nbhd = (1u << seq[1]) | (1u << u);
            return (fadj[0] & ~zero_nbhd) == 0;
        }
        std::uint32_t cand = g.neighbors(u) & ~visited;
        // forced edges at u must be used while passing through u
        if (u != 0) {
            std::uint32_t must = fadj[u] & ~(1u << prev);
            if (std::popcount(must) > 1) return false;
            if (must) {
                if (must & visited) return false;  // forced partner no longer reachable from u
                cand &= must;
            }
        }
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            seq.push_back(w);
            if (self(self, visited | (1u << w), w, u)) return true;
            seq.pop_back();
        }
        return false;
    };
    return rec(rec, 1u, 0, -1);
}

}  // namespace detail

inline bool is_k_edge_hamiltonian(const graph& g, long long k) {
    if (k < 0) return false;
    if (!is_hamiltonian(g)) return false;
    if (k == 0) return true;
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    std::vector<int> pick;
    auto forest_ok = [&](const std::vector<std::pair<int, int>>& f) {
        graph h(g.n());
        for (auto [u, v] : f) {
            if (h.degree(u) >= 2 || h.degree(v) >= 2) return false;
            h.add_edge(u, v);
        }
        // acyclic: edges == n - components on touched vertices
        std::uint32_t touched = 0;
        for (auto [u, v] : f) touched |= (1u << u) | (1u << v);
        return static_cast<int>(f.size()) ==
               std::popcount(touched) - h.component_count(touched);
    };
    auto rec = [&](auto&& self, int from, int count) -> bool {
        if (count > 0) {
            std::vector<std::pair<int, int>> f;
            for (int i : pick) f.push_back(es[static_cast<size_t>(i)]);
            if (forest_ok(f) && !detail::ham_cycle_containing(g, f)) return false;
        }
        if (count == k) return true;
        for (int i = from; i < m; ++i) {
            pick.push_back(i);
            if (!self(self, i + 1, count + 1)) return false;
            pick.pop_back();
        }
        return true;
    };
    return rec(rec, 0, 0);
}

// ---------------------------------------------------------------------------
// dispatch

inline void check_scale(const property& p, int n, const scale_limits& lim) {
    if (lim.override_limits) return;
    int cap;
    switch (p.kind) {
        case prop_kind::chi_le:
        case prop_kind::chi_ge:
        case prop_kind::arboricity_le:
            cap = lim.partition_oracle_n;
            break;
        default:
            cap = lim.cycle_oracle_n;
            break;
    }
    if (n > cap)
        throw scale_exceeded("oracle " + p.display() + " limited to n <= " + std::to_string(cap) +
                             " (override to lift)");
}

inline bool has_property(const property& p, const graph& g, const scale_limits& lim = {}) {
    check_scale(p, g.n(), lim);
    switch (p.kind) {
        case prop_kind::hamiltonian: return is_hamiltonian(g);
        case prop_kind::traceable: return is_traceable(g);
        case prop_kind::k_connected: return is_k_connected(g, p.k);
        case prop_kind::k_edge_connected: return is_k_edge_connected(g, p.k);
        case prop_kind::b_binding: return binding_number(g).value >= p.q;
        case prop_kind::t_tough: return toughness(g).value >= p.q;
        case prop_kind::beta_deficient: return deficiency(g) <= p.k;
        case prop_kind::has_2_factor: return has_k_factor(g, 2);
        case prop_kind::has_k_factor: return has_k_factor(g, p.k);
        case prop_kind::k_hamiltonian: return is_k_hamiltonian(g, p.k);
        case prop_kind::k_path_coverable: return is_k_path_coverable(g, p.k);
        case prop_kind::hamiltonian_connected: return is_hamiltonian_connected(g);
        case prop_kind::k_edge_hamiltonian: return is_k_edge_hamiltonian(g, p.k);
        case prop_kind::pancyclic: return is_pancyclic(g);
        case prop_kind::alpha_le: return independence_number(g) <= p.k;
        case prop_kind::alpha_ge: return independence_number(g) >= p.k;
        case prop_kind::omega_ge: return clique_number(g) >= p.k;
        case prop_kind::chi_le: return chromatic_number(g) <= p.k;
        case prop_kind::chi_ge: return chromatic_number(g) >= p.k;
        case prop_kind::arboricity_le: return vertex_arboricity(g) <= p.k;
    }
    throw error("has_property: unknown property");
}

// ---------------------------------------------------------------------------
// realization enumeration (labeled) and the forcibly oracle

// Visits every labeled simple graph whose sorted degree vector equals pi,
// exactly once, in a fixed order: degree assignments in lexicographic order,
// then row-by-row neighbor choices in lexicographic order. The visitor
// returns false to stop early.
inline void enumerate_realizations(const degree_sequence& pi, const scale_limits& lim,
                                   const std::function<bool(const graph&)>& visit) {
    int n = pi.n();
    if (n > lim.realization_n && !lim.override_limits)
        throw scale_exceeded("realization enumeration limited to n <= " +
                             std::to_string(lim.realization_n) + " (override to lift)");
    if (!is_graphical(pi))
        throw not_graphical("enumerate_realizations: " + pi.compact() + " is not graphical");

    std::vector<int> assign(pi.degrees());  // ascending start = lexicographic minimum
    bool stopped = false;

    auto residual_graphical = [](std::vector<int> r) {
        std::sort(r.begin(), r.end());
        long long sum = 0;
        for (int v : r) sum += v;
        if (sum % 2 != 0) return false;
        int m = static_cast<int>(r.size());
        long long lhs = 0;
        for (int k = 1; k <= m; ++k) {
            lhs += r[m - k];
            long long rhs = static_cast<long long>(k) * (k - 1);
            for (int i = k; i < m; ++i) rhs += std::min(r[m - 1 - i], k);
            if (lhs > rhs) return false;
        }
        return true;
    };

    graph g(n);
    std::vector<int> res(n);
    auto fill = [&](auto&& self, int u) -> void {
        if (stopped) return;
        if (u == n) {
            if (!visit(g)) stopped = true;
            return;
        }
        // choose res[u] neighbors among higher vertices, lexicographically
        std::vector<int> cand;
        for (int v = u + 1; v < n; ++v)
            if (res[v] > 0) cand.push_back(v);
        int need = res[u];
        if (need > static_cast<int>(cand.size())) return;
        auto choose = [&](auto&& self2, int pos, int taken) -> void {
            if (stopped) return;
            if (taken == need) {
                std::vector<int> rest;
                for (int v = u + 1; v < n; ++v) rest.push_back(res[v]);
                if (residual_graphical(rest)) self(self, u + 1);
                return;
            }
            if (pos == static_cast<int>(cand.size())) return;
            if (static_cast<int>(cand.size()) - pos < need - taken) return;
            int v = cand[pos];
            g.add_edge(u, v);
            --res[v];
            self2(self2, pos + 1, taken + 1);
            ++res[v];
            g.remove_edge(u, v);
            self2(self2, pos + 1, taken);
        };
        int saved = res[u];
        res[u] = 0;
        choose(choose, 0, 0);
        res[u] = saved;
    };

    do {
        res = assign;
        fill(fill, 0);
        if (stopped) return;
    } while (std::next_permutation(assign.begin(), assign.end()));
}

inline std::vector<graph> all_realizations(const degree_sequence& pi, const scale_limits& lim = {}) {
    std::vector<graph> out;
    enumerate_realizations(pi, lim, [&](const graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

struct forcibly_result {
    bool holds = true;
    std::optional<graph> counterexample;  // least in enumeration order
    long long checked = 0;

    explicit operator bool() const { return holds; }
};

inline forcibly_result forcibly(const property& p, const degree_sequence& pi,
                                const scale_limits& lim = {}) {
    forcibly_result out;
    enumerate_realizations(pi, lim, [&](const graph& g) {
        ++out.checked;
        if (!has_property(p, g, lim)) {
            out.holds = false;
            out.counterexample = g;
            return false;
        }
        return true;
    });
    return out;
}

// every realization with p1 also has p2
inline forcibly_result conditionally_forcibly(const property& p1, const property& p2,
                                              const degree_sequence& pi,
                                              const scale_limits& lim = {}) {
    forcibly_result out;
    enumerate_realizations(pi, lim, [&](const graph& g) {
        ++out.checked;
        if (has_property(p1, g, lim) && !has_property(p2, g, lim)) {
            out.holds = false;
            out.counterexample = g;
            return false;
        }
        return true;
    });
    return out;
}

// Rao-style exact decision: pi has a realization with alpha >= m iff the
// join of an independent m-set (carrying the m smallest degrees) with a
// clique on the rest contains a spanning subgraph with degrees pi. The
// f-factor reduction is replaced by a direct subgraph search.
inline bool has_realization_with_alpha_ge(const degree_sequence& pi, int m) {
    int n = pi.n();
    if (m <= 1) return m <= 0 ? true : n >= 1;
    if (m > n) return false;
    graph host(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u >= m || v >= m) host.add_edge(u, v);
    return detail::has_spanning_subgraph_with_degrees(host, pi.degrees());
}

inline bool forcibly_alpha_le_rao(const degree_sequence& pi, int k) {
    if (!is_graphical(pi))
        throw not_graphical("forcibly_alpha_le_rao: not graphical");
    return !has_realization_with_alpha_ge(pi, k + 1);
}

}  // namespace degcond
