#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "limlie/rational.hpp"
#include "limlie/root.hpp"

namespace limlie {

/// An eventually-constant rational sequence λ = (λ^1, λ^2, …): a finite
/// override map plus the tail value taken by every later (and every
/// unlisted) coordinate. Overrides never store the tail value itself.
class Weight {
public:
    Weight() = default;
    explicit Weight(Rat tail) : tail_(tail) {}
    Weight(std::map<int, Rat> overrides, Rat tail) : tail_(tail) {
        for (auto& [i, v] : overrides) {
            if (i < 1) throw std::invalid_argument("Weight: index must be >= 1");
            if (v != tail_) overrides_.emplace(i, v);
        }
    }

    static Weight basis(int i, Rat c = Rat(1)) {
        Weight w;
        w.set(i, c);
        return w;
    }

    const Rat& tail() const { return tail_; }
    const std::map<int, Rat>& overrides() const { return overrides_; }

    Rat at(int i) const {
        auto it = overrides_.find(i);
        return it == overrides_.end() ? tail_ : it->second;
    }

    void set(int i, const Rat& v) {
        if (i < 1) throw std::invalid_argument("Weight: index must be >= 1");
        if (v == tail_)
            overrides_.erase(i);
        else
            overrides_[i] = v;
    }

    /// Largest overridden index (0 when none).
    int max_index() const { return overrides_.empty() ? 0 : overrides_.rbegin()->first; }

    bool is_zero() const { return tail_.is_zero() && overrides_.empty(); }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r(a.tail_ + b.tail_);
        auto touched = a.overrides_;
        for (auto& [i, v] : b.overrides_) touched.try_emplace(i, a.tail_);
        for (auto& [i, v] : touched) r.set(i, a.at(i) + b.at(i));
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }
    Weight operator-() const {
        Weight r(-tail_);
        for (auto& [i, v] : overrides_) r.overrides_.emplace(i, -v);
        return r;
    }
    friend Weight operator*(const Rat& c, const Weight& w) {
        Weight r(c * w.tail_);
        if (c.is_zero()) return r;
        for (auto& [i, v] : w.overrides_) r.overrides_.emplace(i, c * v);
        return r;
    }

    /// λ + c·α.
    Weight plus_root(const Root& alpha, const Rat& c = Rat(1)) const {
        Weight r = *this;
        for (int k = 0; k < alpha.term_count(); ++k) {
            const auto& t = alpha.term(k);
            r.set(t.index, r.at(t.index) + c * Rat(t.coeff));
        }
        return r;
    }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.tail_ == b.tail_ && a.overrides_ == b.overrides_;
    }
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (auto c = a.tail_ <=> b.tail_; c != 0) return c;
        auto ia = a.overrides_.begin(), ib = b.overrides_.begin();
        for (; ia != a.overrides_.end() && ib != b.overrides_.end(); ++ia, ++ib) {
            if (auto c = ia->first <=> ib->first; c != 0) return c;
            if (auto c = ia->second <=> ib->second; c != 0) return c;
        }
        if (ia != a.overrides_.end()) return std::strong_ordering::greater;
        if (ib != b.overrides_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    /// Renders coordinates 1..n: "(1, 0, -1/2)".
    std::string str(int n = 0) const {
        if (n == 0) n = max_index();
        std::string s = "(";
        for (int i = 1; i <= n; ++i) {
            if (i > 1) s += ", ";
            s += at(i).str();
        }
        if (!(tail_.is_zero()))
            s += n ? ", tail " + tail_.str() : "tail " + tail_.str();
        s += ")";
        return s;
    }

private:
    std::map<int, Rat> overrides_;
    Rat tail_;
};

inline Weight weight_of_root(const Root& alpha) {
    Weight w;
    for (int k = 0; k < alpha.term_count(); ++k)
        w.set(alpha.term(k).index, Rat(alpha.term(k).coeff));
    return w;
}

/// (λ, α) under (ε_i, ε_j) = δ^{ij}; finite because α has finite support.
inline Rat bilinear(const Weight& lambda, const Root& alpha) {
    Rat s;
    for (int k = 0; k < alpha.term_count(); ++k)
        s += lambda.at(alpha.term(k).index) * Rat(alpha.term(k).coeff);
    return s;
}

/// (μ, ν) for finitely-supported μ, ν (both tails must be zero).
inline Rat bilinear(const Weight& mu, const Weight& nu) {
    if (!mu.tail().is_zero() || !nu.tail().is_zero())
        throw std::domain_error("bilinear: weights must have zero tail");
    Rat s;
    for (auto& [i, v] : mu.overrides()) s += v * nu.at(i);
    return s;
}

/// ⟨λ, α⟩ := 2(λ, α)/(α, α).
inline Rat pairing(const Weight& lambda, const Root& alpha) {
    return Rat(2) * bilinear(lambda, alpha) / Rat(alpha.norm2());
}

/// σ_α(λ) = λ − ⟨λ, α⟩ α.
inline Weight reflect(const Weight& lambda, const Root& alpha) {
    return lambda.plus_root(alpha, -pairing(lambda, alpha));
}

} // namespace limlie
