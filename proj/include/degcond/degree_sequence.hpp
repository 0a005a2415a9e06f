#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "degcond/errors.hpp"

namespace degcond {

// A degree sequence in canonical form: nondecreasing, 1-based indexing in all
// condition formulas. d(0) is a virtual sentinel with value 0.
class degree_sequence {
  public:
    explicit degree_sequence(std::vector<int> degrees) : d_(std::move(degrees)) {
        if (d_.empty()) throw parse_error("degree sequence must be nonempty");
        for (int v : d_)
            if (v < 0) throw parse_error("negative degree");
        std::sort(d_.begin(), d_.end());
    }

    int n() const { return static_cast<int>(d_.size()); }

    // 1-based; at(0) = 0 (the d0 = 0 convention), out of range above n throws
    int at(long long i) const {
        if (i <= 0) return 0;
        if (i > n()) throw degree_out_of_range("index " + std::to_string(i) + " > n");
        return d_[static_cast<size_t>(i - 1)];
    }

    const std::vector<int>& degrees() const { return d_; }
    long long degree_sum() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }

    friend bool operator==(const degree_sequence& a, const degree_sequence& b) {
        return a.d_ == b.d_;
    }
    friend bool operator!=(const degree_sequence& a, const degree_sequence& b) {
        return !(a == b);
    }
    friend bool operator<(const degree_sequence& a, const degree_sequence& b) {
        return a.d_ < b.d_;
    }

    // Accepts either run-length tokens "v^m v^m ..." (bare "v" means v^1) or a
    // comma-separated integer list. The result is canonicalized by sorting.
    static degree_sequence parse(const std::string& text);

    // Run-length rendering with ascending values, e.g. "1^5 4^2 6^2 7^3".
    std::string render() const {
        std::string out;
        size_t i = 0;
        while (i < d_.size()) {
            size_t j = i;
            while (j < d_.size() && d_[j] == d_[i]) ++j;
            if (!out.empty()) out += ' ';
            out += std::to_string(d_[i]) + "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }

    std::string compact() const {  // "(1,2,2,3)" for reports
        std::string out = "(";
        for (size_t i = 0; i < d_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(d_[i]);
        }
        return out + ")";
    }

    nlohmann::ordered_json to_json() const { return nlohmann::ordered_json(d_); }

  private:
    std::vector<int> d_;
};

inline degree_sequence degree_sequence::parse(const std::string& text) {
    auto is_blank = [](const std::string& s) {
        return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    };
    if (is_blank(text)) throw parse_error("empty degree sequence");

    auto to_int = [](const std::string& tok) {
        size_t used = 0;
        long long v;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw parse_error("malformed token: '" + tok + "'");
        }
        if (used != tok.size()) throw parse_error("malformed token: '" + tok + "'");
        if (v < 0) throw parse_error("negative degree in '" + tok + "'");
        return static_cast<int>(v);
    };

    std::vector<int> out;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            size_t a = item.find_first_not_of(" \t");
            size_t b = item.find_last_not_of(" \t");
            if (a == std::string::npos) throw parse_error("empty item in comma list");
            out.push_back(to_int(item.substr(a, b - a + 1)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos >= text.size()) break;
            size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
            std::string tok = text.substr(pos, end - pos);
            pos = end;
            auto caret = tok.find('^');
            if (caret == std::string::npos) {
                out.push_back(to_int(tok));
            } else {
                int value = to_int(tok.substr(0, caret));
                int mult = to_int(tok.substr(caret + 1));
                if (mult < 1) throw parse_error("multiplicity must be >= 1 in '" + tok + "'");
                for (int i = 0; i < mult; ++i) out.push_back(value);
            }
        }
        if (out.empty()) throw parse_error("empty degree sequence");
    }
    return degree_sequence(std::move(out));
}

// Erdos-Gallai test with even-sum precheck. Out-of-range degrees (d > n-1)
// fail the k=1 inequality, so no separate bound check is needed.
inline bool is_graphical(const degree_sequence& pi) {
    const auto& d = pi.degrees();
    int n = pi.n();
    if (pi.degree_sum() % 2 != 0) return false;
    // work in nonincreasing order: dd[i] = d[n-1-i]
    long long lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += d[n - k];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[n - 1 - i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

// a majorizes b: a_i >= b_i for all i (both canonical)
inline bool majorizes(const degree_sequence& a, const degree_sequence& b) {
    if (a.n() != b.n()) throw length_mismatch("majorizes: lengths differ");
    for (int i = 0; i < a.n(); ++i)
        if (a.degrees()[i] < b.degrees()[i]) return false;
    return true;
}

inline bool comparable(const degree_sequence& a, const degree_sequence& b) {
    return majorizes(a, b) || majorizes(b, a);
}

inline degree_sequence complement(const degree_sequence& pi) {
    int n = pi.n();
    std::vector<int> out;
    out.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        int d = pi.degrees()[i];
        if (d > n - 1) throw degree_out_of_range("complement: degree exceeds n-1");
        out.push_back(n - 1 - d);
    }
    return degree_sequence(std::move(out));
}

// Every graphical sequence of length n, in lexicographic order.
inline std::vector<degree_sequence> enumerate_graphical(int n) {
    if (n < 1) throw error("enumerate_graphical: n must be >= 1");
    std::vector<degree_sequence> out;
    std::vector<int> cur(n);
    // nondecreasing sequences with entries in [0, n-1]
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == n) {
            degree_sequence pi(cur);
            if (is_graphical(pi)) out.push_back(std::move(pi));
            return;
        }
        for (int v = low; v <= n - 1; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// The weakest monotone degree condition blocking pi:
//   d_1 >= a_1 + 1  or ... or  d_n >= a_n + 1.
struct blocking_condition {
    std::vector<int> thresholds;  // a_i + 1 per position, canonical order
    degree_sequence source;

    bool satisfied_by(const degree_sequence& other) const {
        if (other.n() != static_cast<int>(thresholds.size()))
            throw length_mismatch("blocking_condition: lengths differ");
        for (size_t i = 0; i < thresholds.size(); ++i)
            if (other.degrees()[i] >= thresholds[i]) return true;
        return false;
    }
};

inline blocking_condition make_blocking_condition(const degree_sequence& pi) {
    std::vector<int> thr;
    thr.reserve(pi.n());
    for (int d : pi.degrees()) thr.push_back(d + 1);
    return blocking_condition{std::move(thr), pi};
}

}  // namespace degcond
