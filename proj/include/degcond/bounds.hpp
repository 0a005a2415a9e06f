#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "degcond/degree_sequence.hpp"
#include "degcond/rational.hpp"

namespace degcond {

struct bound_result {
    rational exact;
    long long rounded;  // ceiling for lower bounds, exact for integral quantities
};

// forcibly alpha(G) >= sum 1/(d_j + 1), exact rational with ceiling
inline bound_result caro_wei(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("caro_wei: not graphical");
    rational total(0);
    for (int d : pi.degrees()) total = total + rational(1, d + 1);
    return {total, total.ceil()};
}

// f(1) = d_1; if f(i) = d_j then f(i+1) = d_{j + f(i) + 1} while that index
// stays within the sequence. `finite` holds the values before the first
// infinity; the trace always ends with that infinity.
struct murphy_trace {
    std::vector<int> finite;

    std::string str() const {
        std::string out = "(";
        for (int v : finite) out += std::to_string(v) + ", ";
        return out + "inf)";
    }
};

inline murphy_trace murphy_f_trace(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("murphy_f_trace: not graphical");
    murphy_trace tr;
    long long j = 1;
    while (j <= pi.n()) {
        int f = pi.at(j);
        tr.finite.push_back(f);
        j = j + f + 1;
    }
    return tr;
}

// forcibly alpha(G) >= max{ i : f(i) < infinity }
inline bound_result murphy_alpha(const degree_sequence& pi) {
    long long count = static_cast<long long>(murphy_f_trace(pi).finite.size());
    return {rational(count), count};
}

// h(pi) = g(complement(pi)); simultaneous lower bound for omega and chi
inline bound_result clique_chromatic_lower(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("clique_chromatic_lower: not graphical");
    return murphy_alpha(complement(pi));
}

// forcibly chi(G) <= max_j min{ n-j+1, d_j+1 }
inline bound_result welsh_powell_chi_upper(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("welsh_powell_chi_upper: not graphical");
    int n = pi.n();
    long long best = 0;
    for (long long j = 1; j <= n; ++j)
        best = std::max(best, std::min<long long>(n - j + 1, pi.at(j) + 1));
    return {rational(best), best};
}

// forcibly chi(G) <= d_n + 1
inline bound_result chi_upper_trivial(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("chi_upper_trivial: not graphical");
    long long v = pi.at(pi.n()) + 1;
    return {rational(v), v};
}

// forcibly a(G) <= floor(d_n / 2) + 1
inline bound_result arboricity_upper_trivial(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("arboricity_upper_trivial: not graphical");
    long long v = pi.at(pi.n()) / 2 + 1;
    return {rational(v), v};
}

// forcibly a(G) <= max_j min{ ceil((n-j+1)/2), ceil((d_j+1)/2) }
inline bound_result arboricity_upper(const degree_sequence& pi) {
    if (!is_graphical(pi)) throw not_graphical("arboricity_upper: not graphical");
    int n = pi.n();
    long long best = 0;
    for (long long j = 1; j <= n; ++j) {
        long long a = (n - j + 1 + 1) / 2;
        long long b = (pi.at(j) + 1 + 1) / 2;
        best = std::max(best, std::min(a, b));
    }
    return {rational(best), best};
}

// Piecewise sharp lower bound on toughness given bind(G) = b >= 2:
//   3/2                 at b = 2
//   2                   at b = 9/4 and at b = 2 + 1/(2m-1), m >= 2
//   2 + 1/m             at b = 2 + 2/(2m-1), m >= 2
//   b                   otherwise
inline rational binding_toughness_bound(const rational& b) {
    if (b < rational(2)) throw param_out_of_domain("binding_toughness_bound: requires b >= 2");
    if (b == rational(2)) return rational(3, 2);
    if (b == rational(9, 4)) return rational(2);
    rational x = b - rational(2);  // positive
    if (x.num() == 1 && x.den() % 2 == 1 && x.den() >= 3) return rational(2);  // 1/(2m-1)
    if (x.num() == 2 && x.den() % 2 == 1 && x.den() >= 3) {
        long long m = (x.den() + 1) / 2;
        return rational(2) + rational(1, m);
    }
    return b;
}

}  // namespace degcond
