#pragma once

#include <numeric>
#include <string>

#include "degcond/errors.hpp"

namespace degcond {

// Exact rational arithmetic on int64. All quantities in this library are tiny
// (numerators and denominators bounded by small multiples of n), so overflow
// is not a practical concern at desk scale.
class rational {
  public:
    rational() = default;
    rational(long long value) : num_(value), den_(1) {}
    rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw error("rational: zero denominator");
        reduce();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw error("rational: division by zero");
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    // "p/q" or a plain integer; anything else (in particular decimals) is rejected
    static rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                size_t used = 0;
                long long v = std::stoll(text, &used);
                if (used != text.size()) throw parse_error("bad rational: " + text);
                return rational(v);
            }
            size_t used_n = 0, used_d = 0;
            long long p = std::stoll(text.substr(0, slash), &used_n);
            long long q = std::stoll(text.substr(slash + 1), &used_d);
            if (used_n != slash || used_d != text.size() - slash - 1)
                throw parse_error("bad rational: " + text);
            return rational(p, q);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad rational: " + text);
        } catch (const std::out_of_range&) {
            throw parse_error("bad rational: " + text);
        }
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace degcond
