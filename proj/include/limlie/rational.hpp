#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <ostream>

namespace limlie {

/// Exact rational arithmetic on 64-bit words. Always normalized:
/// denominator positive, gcd(|num|, den) == 1. Intermediate products go
/// through 128-bit and are range-checked on narrowing.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_nonneg_integer() const { return den_ == 1 && num_ >= 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        // cross-reduce before multiplying
        long long g1 = std::gcd(a.num_, b.den_);
        long long g2 = std::gcd(b.num_, a.den_);
        return from128(i128(a.num_ / g1) * (b.num_ / g2),
                       i128(a.den_ / g2) * (b.den_ / g1));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        Rat inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        if (inv.den_ < 0) { inv.num_ = -inv.num_; inv.den_ = -inv.den_; }
        return a * inv;
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// "p" or "p/q".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p" or "p/q" with optional sign; throws std::invalid_argument.
    static Rat parse(std::string_view s) {
        auto bad = [&] { throw std::invalid_argument("Rat: bad literal '" + std::string(s) + "'"); };
        if (s.empty()) bad();
        std::size_t slash = s.find('/');
        auto to_ll = [&](std::string_view t) -> long long {
            if (t.empty()) bad();
            std::size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(std::string(t), &pos);
            } catch (...) {
                bad();
            }
            if (pos != t.size()) bad();
            return v;
        };
        if (slash == std::string_view::npos) return Rat(to_ll(s));
        return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    using i128 = __int128;

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static long long narrow(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: overflow");
        return static_cast<long long>(v);
    }

    static Rat from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rat r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace limlie
