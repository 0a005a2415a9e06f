#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "degcond/degree_sequence.hpp"
#include "degcond/oracles.hpp"
#include "degcond/rational.hpp"

namespace degcond {

enum class cond {
    ham,
    kconn,
    edge2,
    edge3,
    edgek,
    bindlo,
    bindhi,
    tough,
    toughlo,
    defic,
    factor2,
    kham,
    kpath,
    hamconn,
    kedgeham,
    pancyc,
    alpha_le,
    chi_le,
    arb_le,
    trace_ham,
    conn2_ham,
    bind1_ham,
    bind1_1f,
    f2_tough1,
    jung,
    hoang,
    hoang_cor,
    tough1_f2,
    dirac,
};

struct params {
    std::optional<long long> k;
    std::optional<long long> beta;
    std::optional<rational> b;
    std::optional<rational> t;

    static params none() { return {}; }
    static params with_k(long long k) {
        params p;
        p.k = k;
        return p;
    }
    static params with_beta(long long beta) {
        params p;
        p.beta = beta;
        return p;
    }
    static params with_b(rational b) {
        params p;
        p.b = b;
        return p;
    }
    static params with_t(rational t) {
        params p;
        p.t = t;
        return p;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        if (k) j["k"] = *k;
        if (beta) j["beta"] = *beta;
        if (b) j["b"] = b->str();
        if (t) j["t"] = t->str();
        return j;
    }
    std::string display() const {
        std::string s;
        auto add = [&](const std::string& piece) {
            if (!s.empty()) s += ",";
            s += piece;
        };
        if (k) add("k=" + std::to_string(*k));
        if (beta) add("beta=" + std::to_string(*beta));
        if (b) add("b=" + b->str());
        if (t) add("t=" + t->str());
        return s;
    }
};

// One atomic comparison d_{i1} (+ d_{i2}) >= c or <= c. Index 0 and below is
// the d0 = 0 sentinel; an index above n makes a >=-atom vacuously true and a
// <=-atom false (such atoms only ever occur inside unsatisfiable antecedents).
struct atom {
    long long idx = 0;
    long long idx2 = 0;  // second summand index, 0 when unused
    bool ge = true;
    long long bound = 0;

    static atom le(long long i, long long c) { return atom{i, 0, false, c}; }
    static atom ge_(long long i, long long c) { return atom{i, 0, true, c}; }
    static atom sum_ge(long long i, long long j, long long c) { return atom{i, j, true, c}; }

    bool holds(const degree_sequence& pi) const {
        int n = pi.n();
        auto val = [&](long long i) -> std::optional<long long> {
            if (i <= 0) return 0;
            if (i > n) return std::nullopt;  // "beyond the sequence"
            return pi.at(i);
        };
        auto a = val(idx);
        if (!a) return ge;
        long long total = *a;
        if (idx2 != 0) {
            auto b2 = val(idx2);
            if (!b2) return ge;
            total += *b2;
        }
        return ge ? total >= bound : total <= bound;
    }

    // true when no degree sequence of length n can satisfy this atom
    bool unsatisfiable(int n) const {
        if (!ge) return bound < 0 || idx > n;
        if (idx <= 0 && idx2 <= 0) return bound > 0;
        return false;
    }
    // true when every degree sequence of length n satisfies it
    bool tautological(int n) const {
        if (ge) return bound <= 0 || idx > n;
        long long max_total = (idx2 != 0) ? 2LL * (n - 1) : (n - 1);
        if (idx <= 0) max_total = (idx2 > 0) ? (n - 1) : 0;
        return bound >= max_total;
    }

    std::string str() const {
        std::string lhs = "d" + std::to_string(idx);
        if (idx2 != 0) lhs += "+d" + std::to_string(idx2);
        return lhs + (ge ? " >= " : " <= ") + std::to_string(bound);
    }
};

// A fully instantiated clause: conjunction of antecedent atoms implies the
// disjunction of consequent atoms.
struct clause_check {
    int clause_pos = 0;
    std::string clause_id;
    std::optional<long long> i;
    std::optional<long long> j;
    std::vector<atom> antecedent;  // empty = true
    std::vector<atom> consequent;

    bool antecedent_holds(const degree_sequence& pi) const {
        for (const auto& a : antecedent)
            if (!a.holds(pi)) return false;
        return true;
    }
    bool consequent_holds(const degree_sequence& pi) const {
        for (const auto& a : consequent)
            if (a.holds(pi)) return true;
        return false;
    }
    bool violated_by(const degree_sequence& pi) const {
        return antecedent_holds(pi) && !consequent_holds(pi);
    }
    // can any length-n sequence violate this instantiation?
    bool failable(int n) const {
        for (const auto& a : antecedent)
            if (a.unsatisfiable(n)) return false;
        for (const auto& a : consequent)
            if (a.tautological(n)) return false;
        return true;
    }
};

struct failing_clause {
    std::string clause;
    std::optional<long long> i;
    std::optional<long long> j;
};

struct clause_eval {
    std::string clause;
    std::optional<long long> i;
    std::optional<long long> j;
    bool antecedent_true = false;
    bool consequent_true = false;
    bool violated = false;
};

struct verdict {
    cond id;
    params p;
    bool declared = true;
    std::optional<failing_clause> failing;
    std::vector<clause_eval> trace;

    nlohmann::ordered_json to_json() const;
};

// ---------------------------------------------------------------------------
// registry metadata

struct row_info {
    cond id;
    std::string name;       // CLI identifier
    std::string citation;   // original literature
    std::string param;      // "", "k", "b", "t", "beta"
    std::string domain;     // human-readable parameter/length domain
    bool best_monotone = false;
    bool sufficient_only = false;
    bool structural_min_degree = false;
    bool implication = false;
};

inline const std::vector<row_info>& registry() {
    static const std::vector<row_info> rows = {
        {cond::ham, "ham", "Chvatal 1972", "", "n >= 3", true, false, false, false},
        {cond::kconn, "kconn", "Bondy 1969 / Boesch 1974", "k", "n >= 2, 1 <= k <= n-1", true,
         false, false, false},
        {cond::edge2, "edge2", "Bauer, Hakimi, Kahl, Schmeichel 2009", "", "n >= 1", true, false,
         false, false},
        {cond::edge3, "edge3", "Kriesell 2007 / Yin, Guo", "", "n >= 1", true, false, false,
         false},
        {cond::edgek, "edgek", "Bauer, Hakimi, Kahl, Schmeichel 2009", "k", "k >= 1", false, true,
         false, false},
        {cond::bindlo, "bindlo", "Bauer, Kahl, Schmeichel, Yatauro 2011", "b",
         "0 < b <= 1, n >= 2", true, false, false, false},
        {cond::bindhi, "bindhi", "Bauer, Kahl, Schmeichel, Yatauro 2011", "b",
         "b >= 1, n >= ceil(b+1)", true, false, false, false},
        {cond::tough, "tough", "Bauer, Broersma, van den Heuvel, Kahl, Schmeichel 2013", "t",
         "t >= 1, n >= ceil(t)+2", true, false, false, false},
        {cond::toughlo, "toughlo", "Bauer, Broersma, van den Heuvel, Kahl, Schmeichel 2013", "t",
         "0 < t < 1, n >= floor(1/t)+2", false, true, false, false},
        {cond::defic, "defic", "Las Vergnas 1972", "beta", "0 <= beta <= n, n = beta (mod 2)",
         true, false, false, false},
        {cond::factor2, "factor2", "Bauer, Broersma, van den Heuvel, Kahl, Schmeichel 2012", "",
         "n >= 3", true, false, false, false},
        {cond::kham, "kham", "Chvatal 1972", "k", "n >= 3, 0 <= k <= n-3", true, false, false,
         false},
        {cond::kpath, "kpath", "Bondy, Chvatal 1976 / Lesniak 1976", "k", "k >= 1", true, false,
         false, false},
        {cond::hamconn, "hamconn", "Berge 1973", "", "n >= 4", true, false, false, false},
        {cond::kedgeham, "kedgeham", "Kronk 1969", "k", "n >= 3, 0 <= k <= n-3", true, false,
         false, false},
        {cond::pancyc, "pancyc", "Bauer, Schmeichel 1990", "", "n >= 3", true, false, false,
         false},
        {cond::alpha_le, "alpha-le", "folklore / Rao 1979", "k", "k >= 1", true, false, false,
         false},
        {cond::chi_le, "chi-le", "Welsh, Powell 1967", "k", "1 <= k <= n", true, false, false,
         false},
        {cond::arb_le, "arb-le", "Hakimi, Schmeichel 1989", "k", "1 <= k <= n/2", true, false,
         false, false},
        {cond::trace_ham, "trace-ham", "Chvatal 1972 corollary", "", "n >= 3", true, false, false,
         true},
        {cond::conn2_ham, "conn2-ham", "Chvatal 1972 corollary", "", "n >= 3", true, false, false,
         true},
        {cond::bind1_ham, "bind1-ham", "Bauer, Kahl, Schmeichel, Woodall, Yatauro", "", "n >= 3",
         true, false, false, true},
        {cond::bind1_1f, "bind1-1f", "Bauer, Nevo, Schmeichel", "", "n even", true, false, false,
         true},
        {cond::f2_tough1, "f2-tough1", "Bauer, Nevo, Schmeichel", "", "n >= 3", true, false,
         false, true},
        {cond::jung, "jung", "Jung 1978", "", "n >= 11", false, true, true, true},
        {cond::hoang, "hoang", "Hoang 1995", "", "n >= 3", false, true, false, true},
        {cond::hoang_cor, "hoang-cor", "Hoang 1995 corollary", "", "n >= 3", false, true, false,
         true},
        {cond::tough1_f2, "tough1-f2", "Bauer, Nevo, Schmeichel", "", "n >= 3", true, false,
         false, true},
        {cond::dirac, "dirac", "Dirac 1952", "", "n >= 3", false, true, true, false},
    };
    return rows;
}

inline const row_info& row(cond c) {
    for (const auto& r : registry())
        if (r.id == c) return r;
    throw error("unknown condition");
}

inline cond cond_by_name(const std::string& name) {
    for (const auto& r : registry())
        if (r.name == name) return r.id;
    throw param_out_of_domain("unknown condition '" + name + "'");
}

// the property verified by the forcibly oracle (P2 for implication rows)
inline property row_property(cond c, const params& p) {
    switch (c) {
        case cond::ham: return property::simple(prop_kind::hamiltonian);
        case cond::kconn: return property::with_k(prop_kind::k_connected, *p.k);
        case cond::edge2: return property::with_k(prop_kind::k_edge_connected, 2);
        case cond::edge3: return property::with_k(prop_kind::k_edge_connected, 3);
        case cond::edgek: return property::with_k(prop_kind::k_edge_connected, *p.k);
        case cond::bindlo: return property::with_q(prop_kind::b_binding, *p.b);
        case cond::bindhi: return property::with_q(prop_kind::b_binding, *p.b);
        case cond::tough: return property::with_q(prop_kind::t_tough, *p.t);
        case cond::toughlo: return property::with_q(prop_kind::t_tough, *p.t);
        case cond::defic: return property::with_k(prop_kind::beta_deficient, *p.beta);
        case cond::factor2: return property::simple(prop_kind::has_2_factor);
        case cond::kham: return property::with_k(prop_kind::k_hamiltonian, *p.k);
        case cond::kpath: return property::with_k(prop_kind::k_path_coverable, *p.k);
        case cond::hamconn: return property::simple(prop_kind::hamiltonian_connected);
        case cond::kedgeham: return property::with_k(prop_kind::k_edge_hamiltonian, *p.k);
        case cond::pancyc: return property::simple(prop_kind::pancyclic);
        case cond::alpha_le: return property::with_k(prop_kind::alpha_le, *p.k);
        case cond::chi_le: return property::with_k(prop_kind::chi_le, *p.k);
        case cond::arb_le: return property::with_k(prop_kind::arboricity_le, *p.k);
        case cond::trace_ham: return property::simple(prop_kind::hamiltonian);
        case cond::conn2_ham: return property::simple(prop_kind::hamiltonian);
        case cond::bind1_ham: return property::simple(prop_kind::hamiltonian);
        case cond::bind1_1f: return property::with_k(prop_kind::beta_deficient, 0);
        case cond::f2_tough1: return property::with_q(prop_kind::t_tough, rational(1));
        case cond::jung: return property::simple(prop_kind::hamiltonian);
        case cond::hoang: return property::simple(prop_kind::hamiltonian);
        case cond::hoang_cor: return property::simple(prop_kind::hamiltonian);
        case cond::tough1_f2: return property::simple(prop_kind::has_2_factor);
        case cond::dirac: return property::simple(prop_kind::hamiltonian);
    }
    throw error("row_property: unknown condition");
}

// P1 for implication rows (every P1-realization has P2)
inline std::optional<property> row_hypothesis(cond c, const params&) {
    switch (c) {
        case cond::trace_ham: return property::simple(prop_kind::traceable);
        case cond::conn2_ham: return property::with_k(prop_kind::k_connected, 2);
        case cond::bind1_ham: return property::with_q(prop_kind::b_binding, rational(1));
        case cond::bind1_1f: return property::with_q(prop_kind::b_binding, rational(1));
        case cond::f2_tough1: return property::simple(prop_kind::has_2_factor);
        case cond::jung: return property::with_q(prop_kind::t_tough, rational(1));
        case cond::hoang: return property::with_q(prop_kind::t_tough, rational(1));
        case cond::hoang_cor: return property::with_q(prop_kind::t_tough, rational(1));
        case cond::tough1_f2: return property::with_q(prop_kind::t_tough, rational(1));
        default: return std::nullopt;
    }
}

// decreasing-property rows use minorization in place of majorization
inline bool row_decreasing(cond c) { return c == cond::chi_le || c == cond::arb_le; }

// ---------------------------------------------------------------------------
// clause instantiation

namespace detail {

struct irange {
    long long lo, hi;  // inclusive; empty when lo > hi
};

inline long long floor_half(long long x) {  // floor(x/2) for possibly negative x
    return x >= 0 ? x / 2 : -((-x + 1) / 2);
}
inline long long ceil_half(long long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

// integers in [lo, strict hi): hi exclusive given as rational
inline long long strict_upper(const rational& r) { return r.ceil() - 1; }

}  // namespace detail

inline void validate(cond c, const params& p, int n) {
    using detail::irange;
    auto need_k = [&]() {
        if (!p.k) throw param_out_of_domain(row(c).name + ": missing parameter k");
        return *p.k;
    };
    auto need_b = [&]() {
        if (!p.b) throw param_out_of_domain(row(c).name + ": missing parameter b");
        return *p.b;
    };
    auto need_t = [&]() {
        if (!p.t) throw param_out_of_domain(row(c).name + ": missing parameter t");
        return *p.t;
    };
    auto need_beta = [&]() {
        if (!p.beta) throw param_out_of_domain(row(c).name + ": missing parameter beta");
        return *p.beta;
    };
    auto min_n = [&](int m) {
        if (n < m)
            throw sequence_too_short(row(c).name + ": requires n >= " + std::to_string(m) +
                                     ", got n = " + std::to_string(n));
    };
    switch (c) {
        case cond::ham: min_n(3); break;
        case cond::kconn: {
            long long k = need_k();
            min_n(2);
            if (k < 1 || k > n - 1)
                throw param_out_of_domain("kconn: requires 1 <= k <= n-1");
            break;
        }
        case cond::edge2:
        case cond::edge3: min_n(1); break;
        case cond::edgek: {
            long long k = need_k();
            if (k < 1) throw param_out_of_domain("edgek: requires k >= 1");
            break;
        }
        case cond::bindlo: {
            rational b = need_b();
            if (!(rational(0) < b && b <= rational(1)))
                throw param_out_of_domain("bindlo: requires 0 < b <= 1");
            min_n(2);
            break;
        }
        case cond::bindhi: {
            rational b = need_b();
            if (b < rational(1)) throw param_out_of_domain("bindhi: requires b >= 1");
            min_n(static_cast<int>((b + rational(1)).ceil()));
            break;
        }
        case cond::tough: {
            rational t = need_t();
            if (t < rational(1)) throw param_out_of_domain("tough: requires t >= 1");
            min_n(static_cast<int>(t.ceil() + 2));
            break;
        }
        case cond::toughlo: {
            rational t = need_t();
            if (!(rational(0) < t && t < rational(1)))
                throw param_out_of_domain("toughlo: requires 0 < t < 1");
            min_n(static_cast<int>((rational(1) / t).floor() + 2));
            break;
        }
        case cond::defic: {
            long long beta = need_beta();
            if (beta < 0 || beta > n) throw param_out_of_domain("defic: requires 0 <= beta <= n");
            if ((n - beta) % 2 != 0)
                throw param_out_of_domain("defic: requires n = beta (mod 2)");
            break;
        }
        case cond::factor2: min_n(3); break;
        case cond::kham: {
            long long k = need_k();
            min_n(3);
            if (k < 0 || k > n - 3) throw param_out_of_domain("kham: requires 0 <= k <= n-3");
            break;
        }
        case cond::kpath: {
            long long k = need_k();
            if (k < 1) throw param_out_of_domain("kpath: requires k >= 1");
            break;
        }
        case cond::hamconn: min_n(4); break;
        case cond::kedgeham: {
            long long k = need_k();
            min_n(3);
            if (k < 0 || k > n - 3) throw param_out_of_domain("kedgeham: requires 0 <= k <= n-3");
            break;
        }
        case cond::pancyc: min_n(3); break;
        case cond::alpha_le: {
            long long k = need_k();
            if (k < 1) throw param_out_of_domain("alpha-le: requires k >= 1");
            break;
        }
        case cond::chi_le: {
            long long k = need_k();
            if (k < 1 || k > n) throw param_out_of_domain("chi-le: requires 1 <= k <= n");
            break;
        }
        case cond::arb_le: {
            long long k = need_k();
            if (k < 1 || 2 * k > n) throw param_out_of_domain("arb-le: requires 1 <= k <= n/2");
            break;
        }
        case cond::trace_ham:
        case cond::conn2_ham:
        case cond::bind1_ham: min_n(3); break;
        case cond::bind1_1f:
            if (n % 2 != 0) throw sequence_too_short("bind1-1f: requires even n");
            break;
        case cond::f2_tough1: min_n(3); break;
        case cond::jung: min_n(11); break;
        case cond::hoang:
        case cond::hoang_cor: min_n(3); break;
        case cond::tough1_f2: min_n(3); break;
        case cond::dirac: min_n(3); break;
    }
}

// All clause instantiations of the row, in printed order; clause index ranges
// quantify over the integers inside the printed (possibly real) bounds.
inline std::vector<clause_check> instantiate(cond c, const params& p, int n) {
    validate(c, p, n);
    using detail::floor_half;
    using detail::strict_upper;
    std::vector<clause_check> out;
    auto add0 = [&](int pos, const std::string& id, std::vector<atom> ante, std::vector<atom> cons) {
        out.push_back({pos, id, std::nullopt, std::nullopt, std::move(ante), std::move(cons)});
    };
    auto add_i = [&](int pos, const std::string& id, long long i, std::vector<atom> ante,
                     std::vector<atom> cons) {
        out.push_back({pos, id, i, std::nullopt, std::move(ante), std::move(cons)});
    };
    auto add_ij = [&](int pos, const std::string& id, long long i, long long j,
                      std::vector<atom> ante, std::vector<atom> cons) {
        out.push_back({pos, id, i, j, std::move(ante), std::move(cons)});
    };

    switch (c) {
        case cond::ham:
            for (long long i = 1; i <= floor_half(n - 1); ++i)
                add_i(0, "1.1", i, {atom::le(i, i)}, {atom::ge_(n - i, n - i)});
            break;

        case cond::kconn: {
            long long k = *p.k;
            for (long long i = 1; i <= floor_half(n - k + 1); ++i)
                add_i(0, "1.2", i, {atom::le(i, i + k - 2)}, {atom::ge_(n - k + 1, n - i)});
            break;
        }

        case cond::edge2:
            add0(0, "3.1a", {}, {atom::ge_(1, 2)});
            for (long long i = 3; i <= strict_upper(rational(n, 2)); ++i)
                add_i(1, "3.1b", i, {atom::le(i - 1, i - 1), atom::le(i, i)},
                      {atom::ge_(n - 1, n - i), atom::ge_(n, n - i + 1)});
            if (n % 2 == 0)
                add0(2, "3.1c", {atom::le(n / 2, n / 2 - 1)},
                     {atom::ge_(n - 2, n / 2), atom::ge_(n, n / 2 + 1)});
            break;

        case cond::edge3:
            add0(0, "3.2a", {}, {atom::ge_(1, 3)});
            for (long long i = 4; i <= strict_upper(rational(n, 2)); ++i)
                add_i(1, "3.2b", i, {atom::le(i - 2, i - 1), atom::le(i, i)},
                      {atom::ge_(n - 2, n - i), atom::ge_(n, n - i + 1)});
            for (long long i = 4; i <= strict_upper(rational(n - 1, 2)); ++i)
                add_i(2, "3.2c", i, {atom::le(i - 1, i - 1), atom::le(i, i + 1)},
                      {atom::ge_(n - 2, n - i), atom::ge_(n, n - i + 1)});
            for (long long i = 4; i <= strict_upper(rational(n, 2)); ++i)
                add_i(3, "3.2d", i, {atom::le(i - 2, i - 1), atom::le(i, i)},
                      {atom::ge_(n - 1, n - i), atom::ge_(n, n - i + 2)});
            if (n % 2 == 0)
                add0(4, "3.2e", {atom::le(n / 2, n / 2 - 1)},
                     {atom::ge_(n - 4, n / 2), atom::ge_(n, n / 2 + 1)});
            if (n % 2 == 1)
                add0(5, "3.2f", {atom::le((n - 3) / 2, (n - 3) / 2)},
                     {atom::ge_(n - 3, (n + 1) / 2), atom::ge_(n, (n + 3) / 2)});
            if (n % 2 == 0)
                add0(6, "3.2g", {atom::le(n / 2, n / 2 - 1)},
                     {atom::ge_(n - 3, n / 2), atom::ge_(n - 1, n / 2 + 1),
                      atom::ge_(n, n / 2 + 2)});
            break;

        case cond::edgek: {
            long long k = *p.k;
            add0(0, "3.11a", {}, {atom::ge_(1, k)});
            for (long long i = k + 1; i <= n / 2; ++i)
                add_i(1, "3.11b", i, {atom::le(i - k + 1, i - 1), atom::le(i, i + k - 2)},
                      {atom::ge_(n, n - i + k - 1)});
            break;
        }

        case cond::bindlo: {
            rational b = *p.b;
            long long q = (rational(n) / (b + rational(1))).floor();
            for (long long i = 1; i <= q; ++i) {
                long long cbi = (b * rational(i)).ceil();
                add_i(0, "3.2.1", i, {atom::le(i, cbi - 1)}, {atom::ge_(n - cbi + 1, n - i)});
            }
            add0(1, "3.2.2", {}, {atom::ge_(q + 1, n - q)});
            break;
        }

        case cond::bindhi: {
            rational b = *p.b;
            long long q = (rational(n) / (b + rational(1))).floor();
            for (long long i = 1; i <= q; ++i) {
                long long Q = (rational(n - i) / b).floor();
                add_i(0, "3.2.3", i, {atom::le(i, n - Q - 1)}, {atom::ge_(Q + 1, n - i)});
            }
            add0(1, "3.2.4", {}, {atom::ge_(q + 1, n - q)});
            break;
        }

        case cond::tough: {
            rational t = *p.t;
            long long lo = t.ceil();
            long long hi = strict_upper(t * rational(n) / (t + rational(1)));
            for (long long i = lo; i <= hi; ++i) {
                long long F = (rational(i) / t).floor();
                add_i(0, "3.3.1", i, {atom::le(F, i)}, {atom::ge_(n - i, n - F)});
            }
            break;
        }

        case cond::toughlo: {
            rational t = *p.t;
            long long r = (rational(1) / t).floor();
            for (long long i = r; i <= strict_upper(rational(n + r - 1, 2)); ++i)
                add_i(0, "3.3.2", i, {atom::le(i, i - r + 1)}, {atom::ge_(n - i + r - 1, n - i)});
            for (long long i = 1; i <= n / 2; ++i)
                add_i(1, "3.3.3", i, {atom::le(i, i - 1)}, {atom::ge_(n, n - i)});
            break;
        }

        case cond::defic: {
            // the i = 0 instantiation (d_1 <= -beta => d_{n+beta} >= n-1) is
            // required to block isolated-vertex sinks such as (0,2,2,2) at
            // beta = 0; it is vacuous for beta >= 1
            long long beta = *p.beta;
            for (long long i = 0; i <= floor_half(n + beta - 2); ++i)
                add_i(0, "3.4.1", i, {atom::le(i + 1, i - beta)},
                      {atom::ge_(n + beta - i, n - i - 1)});
            break;
        }

        case cond::factor2:
            if (n % 2 == 1) add0(0, "3.4.2", {}, {atom::ge_((n + 1) / 2, (n + 1) / 2)});
            if (n % 2 == 0)
                add0(1, "3.4.3", {}, {atom::ge_(n / 2 - 1, n / 2), atom::ge_(n / 2 + 1, n / 2 + 1)});
            for (long long i = 0; i <= floor_half(n - 2); ++i)
                add_i(2, "3.4.4", i, {atom::le(i, i), atom::le(i + 1, i + 1)},
                      {atom::ge_(n - i - 1, n - i - 1), atom::ge_(n - i, n - i)});
            for (long long i = 1; i <= floor_half(n - 5); ++i)
                add_i(3, "3.4.5", i, {atom::le(i - 1, i), atom::le(i + 2, i + 1)},
                      {atom::ge_(n - i - 3, n - i - 2), atom::ge_(n - i, n - i - 1)});
            break;

        case cond::kham: {
            long long k = *p.k;
            for (long long i = 1; i <= strict_upper(rational(n - k, 2)); ++i)
                add_i(0, "3.5.1", i, {atom::le(i, i + k)}, {atom::ge_(n - i - k, n - i)});
            break;
        }

        case cond::kpath: {
            // i starts at 0: d_k <= 0 => d_n >= n-k blocks sequences with k
            // isolated vertices (witness: k isolated vertices plus a clique)
            long long k = *p.k;
            for (long long i = 0; i <= strict_upper(rational(n - k, 2)); ++i)
                add_i(0, "3.5.2", i, {atom::le(i + k, i)}, {atom::ge_(n - i, n - i - k)});
            break;
        }

        case cond::hamconn:
            for (long long i = 2; i <= strict_upper(rational(n + 1, 2)); ++i)
                add_i(0, "3.5.3", i, {atom::le(i - 1, i)}, {atom::ge_(n - i, n - i + 1)});
            break;

        case cond::kedgeham: {
            long long k = *p.k;
            for (long long i = k + 1; i <= strict_upper(rational(n + k, 2)); ++i)
                add_i(0, "3.5.4", i, {atom::le(i - k, i)}, {atom::ge_(n - i, n - i + k)});
            break;
        }

        case cond::pancyc:
            for (long long i = 1; i <= strict_upper(rational(n, 2)); ++i)
                add_i(0, "3.5.5", i, {atom::le(i, i)}, {atom::ge_(n - i, n - i)});
            if (n % 2 == 0) add0(1, "3.5.6", {}, {atom::ge_(n, n / 2 + 1)});
            break;

        case cond::alpha_le: {
            long long k = *p.k;
            add0(0, "3.6.1", {}, {atom::ge_(k + 1, n - k)});
            break;
        }

        case cond::chi_le: {
            long long k = *p.k;
            add0(0, "3.6.2", {}, {atom::le(n - k, k - 1)});
            break;
        }

        case cond::arb_le: {
            long long k = *p.k;
            add0(0, "3.6.3", {}, {atom::le(n - 2 * k, 2 * k - 1)});
            break;
        }

        case cond::trace_ham:
            for (long long i = 1; i <= floor_half(n - 1); ++i)
                add_i(0, "4.1", i, {atom::le(i, i)}, {atom::ge_(n - i, n - i)});
            break;

        case cond::conn2_ham:
            for (long long i = 2; i <= floor_half(n - 1); ++i)
                add_i(0, "4.2", i, {atom::le(i, i)}, {atom::ge_(n - i, n - i)});
            break;

        case cond::bind1_ham:
            // the first clause stops at (n-2)/2, not (n-1)/2: at i = (n-1)/2
            // (n odd) the family member K_i + complement(K_{i+1}) has binding
            // number i/(i+1) < 1, and the sequences failing only there are
            // vacuously forced; the odd-n boundary belongs to clause 4.4's
            // two-clique family
            for (long long i = 1; i <= floor_half(n - 2); ++i)
                add_i(0, "4.3", i, {atom::le(i, i)}, {atom::ge_(n - i, n - i)});
            if (n % 2 == 1)
                for (long long i = 1; i <= floor_half(n - 3); ++i)
                    add_i(1, "4.4", i, {atom::le(i - 1, i)}, {atom::ge_(n - i, (n + 1) / 2)});
            break;

        case cond::bind1_1f:
            // i starts at 0 (this is where the stated d_0 = 0 convention
            // bites): d_0 <= 0 and d_{2j+1} <= 2j must force d_n >= n-2j-1,
            // else two disjoint odd cliques give a 1-binding realization
            // without a 1-factor (e.g. 2K_3 against (2,2,2,2,2,2))
            for (long long i = 0; i <= floor_half(n - 6); ++i)
                for (long long j = 1; j <= (n - 2 * i - 2) / 4; ++j)
                    add_ij(0, "4.5", i, j, {atom::le(i, i), atom::le(i + 2 * j + 1, i + 2 * j)},
                           {atom::ge_(n - i, n - (i + 2 * j + 1))});
            if (n >= 10)
                add0(1, "4.6", {},
                     {atom::ge_(n / 2 - 5, n / 2 - 3), atom::ge_(n / 2 + 4, n / 2 - 1)});
            break;

        case cond::f2_tough1:
            for (long long i = 1; i <= floor_half(n - 3); ++i)
                add_i(0, "4.7", i, {atom::le(i, i)}, {atom::ge_(n - i, n - i)});
            if (n % 2 == 1)
                for (long long i = 1; i <= floor_half(n - 5); ++i)
                    add_i(1, "4.8", i, {atom::le(i - 1, i)}, {atom::ge_(n - i, (n + 1) / 2)});
            if (n % 2 == 0)
                for (long long i = 1; i <= floor_half(n - 4); ++i)
                    add_i(2, "4.9", i, {atom::le(i - 1, i)},
                          {atom::ge_(n / 2 - 1, n / 2), atom::ge_(n - i, n / 2 + 1)});
            break;

        case cond::jung:
            add0(0, "jung", {}, {atom::ge_(1, detail::ceil_half(n - 4))});
            break;

        case cond::hoang: {
            long long half = detail::ceil_half(n);
            for (long long i = 1; i < half; ++i)
                for (long long j = i + 1; j <= half; ++j)
                    add_ij(0, "4.8", i, j, {atom::le(i, i), atom::le(n - i + 1, n - i - 1)},
                           {atom::sum_ge(j, n - j + 1, n)});
            break;
        }

        case cond::hoang_cor:
            for (long long i = 1; i <= floor_half(n - 1); ++i)
                add_i(0, "4.9", i, {atom::le(i, i)}, {atom::ge_(n - i + 1, n - i)});
            break;

        case cond::tough1_f2:
            for (long long i = 0; i <= floor_half(n - 7); ++i)
                for (long long j = 1; j <= (n - 2 * i - 2) / 5; ++j)
                    add_ij(0, "4.10", i, j,
                           {atom::le(i, i + j), atom::le(i + 2 * j + 1, i + j + 1)},
                           {atom::ge_(n - i - 3 * j - 1, n - i - 2 * j - 1),
                            atom::ge_(n - i - j, n - i - 2 * j)});
            if (n >= 18 && n % 2 == 0)
                for (long long i = 0; i <= floor_half(n - 18); ++i)
                    add_i(1, "4.11", i, {atom::le(i, i + 2), atom::le(i + 4, i + 3)},
                          {atom::ge_(n - i - 6, n / 2 - 1), atom::ge_(n - i - 2, n / 2)});
            if (n >= 16 && n % 2 == 0)
                for (long long i = 0; i <= floor_half(n - 16); ++i)
                    add_i(2, "4.12", i,
                          {atom::le(i, i + 1), atom::le(i + 2, i + 2), atom::le(i + 3, i + 3)},
                          {atom::ge_(n - i - 5, n / 2 - 1), atom::ge_(n - i - 1, n / 2)});
            if (n >= 10 && n % 2 == 0)
                add0(3, "4.13", {},
                     {atom::ge_(n / 2 - 5, n / 2 - 2), atom::ge_(n / 2, n / 2 - 1),
                      atom::ge_(n / 2 + 3, n / 2 + 1)});
            break;

        case cond::dirac:
            add0(0, "dirac", {}, {atom::ge_(1, detail::ceil_half(n))});
            break;
    }
    return out;
}

inline verdict evaluate(cond c, const params& p, const degree_sequence& pi) {
    if (!is_graphical(pi))
        throw not_graphical("evaluate: " + pi.compact() + " is not graphical");
    auto checks = instantiate(c, p, pi.n());
    verdict v;
    v.id = c;
    v.p = p;
    for (const auto& chk : checks) {
        clause_eval ev;
        ev.clause = chk.clause_id;
        ev.i = chk.i;
        ev.j = chk.j;
        ev.antecedent_true = chk.antecedent_holds(pi);
        ev.consequent_true = chk.consequent_holds(pi);
        ev.violated = ev.antecedent_true && !ev.consequent_true;
        if (ev.violated && v.declared) {
            v.declared = false;
            v.failing = failing_clause{chk.clause_id, chk.i, chk.j};
        }
        v.trace.push_back(std::move(ev));
    }
    return v;
}

inline nlohmann::ordered_json verdict::to_json() const {
    nlohmann::ordered_json out;
    out["condition"] = row(id).name;
    out["params"] = p.to_json();
    out["declared"] = declared;
    if (failing) {
        nlohmann::ordered_json f;
        f["clause"] = failing->clause;
        f["i"] = failing->i ? nlohmann::ordered_json(*failing->i) : nlohmann::ordered_json(nullptr);
        f["j"] = failing->j ? nlohmann::ordered_json(*failing->j) : nlohmann::ordered_json(nullptr);
        out["failing_clause"] = std::move(f);
    } else {
        out["failing_clause"] = nullptr;
    }
    return out;
}

// default parameter grid for sweeps (tests and CLI)
inline std::vector<params> default_param_grid(cond c) {
    switch (c) {
        case cond::kconn:
        case cond::edgek:
            return {params::with_k(1), params::with_k(2), params::with_k(3), params::with_k(4)};
        case cond::kham:
        case cond::kedgeham:
            return {params::with_k(0), params::with_k(1), params::with_k(2), params::with_k(3),
                    params::with_k(4)};
        case cond::kpath:
        case cond::alpha_le:
        case cond::chi_le:
        case cond::arb_le:
            return {params::with_k(1), params::with_k(2), params::with_k(3), params::with_k(4)};
        case cond::bindlo:
            return {params::with_b(rational(1, 2)), params::with_b(rational(1))};
        case cond::bindhi:
            return {params::with_b(rational(1)), params::with_b(rational(3, 2)),
                    params::with_b(rational(2)), params::with_b(rational(5, 2))};
        case cond::tough:
            return {params::with_t(rational(1)), params::with_t(rational(3, 2)),
                    params::with_t(rational(2))};
        case cond::toughlo:
            // this row's domain is 0 < t < 1, so it gets its own grid
            return {params::with_t(rational(1, 2)), params::with_t(rational(1, 3))};
        case cond::defic:
            return {params::with_beta(0), params::with_beta(1), params::with_beta(2)};
        default:
            return {params::none()};
    }
}

}  // namespace degcond
