#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace limlie {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    throw std::logic_error("family_letter");
}

inline std::optional<Family> family_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
    }
    return std::nullopt;
}

/// Smallest truncation rank a family supports.
inline int min_rank(Family f) { return f == Family::D ? 4 : 2; }

/// A root: a signed sparse combination of at most two coordinate functions
/// ε_i. Terms are kept sorted by index, coefficients nonzero.
class Root {
public:
    struct Term {
        int index;  // 1-based
        int coeff;
        friend auto operator<=>(const Term&, const Term&) = default;
    };

    Root(Term a) : terms_{a, Term{0, 0}}, size_(1) { check_basic(); }
    Root(Term a, Term b) : terms_{a, b}, size_(2) {
        if (terms_[0].index > terms_[1].index) std::swap(terms_[0], terms_[1]);
        check_basic();
    }

    /// Validates the coefficient pattern against a family's root list.
    static bool shape_ok(Family f, const Root& r) {
        if (r.size_ == 1) {
            int c = r.terms_[0].coeff;
            if (f == Family::B) return c == 1 || c == -1;
            if (f == Family::C) return c == 2 || c == -2;
            return false;  // A and D have no single-index roots
        }
        int c0 = r.terms_[0].coeff, c1 = r.terms_[1].coeff;
        if (std::abs(c0) != 1 || std::abs(c1) != 1) return false;
        if (f == Family::A) return c0 + c1 == 0;
        return true;  // B, C, D allow all four sign patterns
    }

    static Root checked(Family f, Term a) {
        Root r(a);
        if (!shape_ok(f, r)) throw std::invalid_argument("Root: not a " + std::string(1, family_letter(f)) + "-root: " + r.str());
        return r;
    }
    static Root checked(Family f, Term a, Term b) {
        Root r(a, b);
        if (!shape_ok(f, r)) throw std::invalid_argument("Root: not a " + std::string(1, family_letter(f)) + "-root: " + r.str());
        return r;
    }

    int term_count() const { return size_; }
    const Term& term(int k) const { return terms_[static_cast<std::size_t>(k)]; }

    int coeff(int index) const {
        for (int k = 0; k < size_; ++k)
            if (terms_[static_cast<std::size_t>(k)].index == index) return terms_[static_cast<std::size_t>(k)].coeff;
        return 0;
    }

    int max_index() const { return terms_[static_cast<std::size_t>(size_ - 1)].index; }

    /// (α, α) under (ε_i, ε_j) = δ^{ij}.
    int norm2() const {
        int s = 0;
        for (int k = 0; k < size_; ++k) s += terms_[static_cast<std::size_t>(k)].coeff * terms_[static_cast<std::size_t>(k)].coeff;
        return s;
    }

    Root operator-() const {
        Root r = *this;
        for (int k = 0; k < size_; ++k) r.terms_[static_cast<std::size_t>(k)].coeff = -r.terms_[static_cast<std::size_t>(k)].coeff;
        return r;
    }

    std::map<int, int> coords() const {
        std::map<int, int> m;
        for (int k = 0; k < size_; ++k) m[terms_[static_cast<std::size_t>(k)].index] = terms_[static_cast<std::size_t>(k)].coeff;
        return m;
    }

    friend bool operator==(const Root& a, const Root& b) {
        return a.size_ == b.size_ && a.terms_ == b.terms_;
    }
    /// Canonical ordering: by index list, then coefficients.
    friend std::strong_ordering operator<=>(const Root& a, const Root& b) {
        if (auto c = a.terms_[0].index <=> b.terms_[0].index; c != 0) return c;
        int ai = a.size_ == 2 ? a.terms_[1].index : 0;
        int bi = b.size_ == 2 ? b.terms_[1].index : 0;
        if (auto c = ai <=> bi; c != 0) return c;
        if (auto c = a.terms_[0].coeff <=> b.terms_[0].coeff; c != 0) return c;
        int ac = a.size_ == 2 ? a.terms_[1].coeff : 0;
        int bc = b.size_ == 2 ? b.terms_[1].coeff : 0;
        return ac <=> bc;
    }

    /// Text form: "e1-e3", "-e2", "2e4", "e2+e5".
    std::string str() const {
        std::string s;
        for (int k = 0; k < size_; ++k) {
            const Term& t = terms_[static_cast<std::size_t>(k)];
            if (t.coeff < 0)
                s += '-';
            else if (k > 0)
                s += '+';
            if (std::abs(t.coeff) != 1) s += std::to_string(std::abs(t.coeff));
            s += 'e';
            s += std::to_string(t.index);
        }
        return s;
    }

    /// Parses the text form above; family-checked.
    static Root parse(Family f, std::string_view s) {
        auto bad = [&] { throw std::invalid_argument("Root: bad literal '" + std::string(s) + "'"); };
        std::vector<Term> terms;
        std::size_t i = 0;
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+') { ++i; }
            else if (s[i] == '-') { sign = -1; ++i; }
            else if (!terms.empty()) bad();
            int mag = 1;
            if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                mag = 0;
                while (i < s.size() && s[i] >= '0' && s[i] <= '9') mag = mag * 10 + (s[i++] - '0');
            }
            if (i >= s.size() || s[i] != 'e') bad();
            ++i;
            if (i >= s.size() || s[i] < '0' || s[i] > '9') bad();
            int idx = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') idx = idx * 10 + (s[i++] - '0');
            if (idx < 1) bad();
            terms.push_back(Term{idx, sign * mag});
        }
        if (terms.size() == 1) return checked(f, terms[0]);
        if (terms.size() == 2) {
            if (terms[0].index == terms[1].index) bad();
            return checked(f, terms[0], terms[1]);
        }
        bad();
        throw std::logic_error("unreachable");
    }

private:
    void check_basic() const {
        for (int k = 0; k < size_; ++k) {
            if (terms_[static_cast<std::size_t>(k)].index < 1) throw std::invalid_argument("Root: index must be >= 1");
            if (terms_[static_cast<std::size_t>(k)].coeff == 0) throw std::invalid_argument("Root: zero coefficient");
        }
        if (size_ == 2 && terms_[0].index == terms_[1].index)
            throw std::invalid_argument("Root: repeated index");
    }

    std::array<Term, 2> terms_;
    int size_;
};

/// Is the given sparse integer vector a root of the family?
inline bool is_root(Family f, const std::map<int, int>& coords) {
    std::vector<Root::Term> terms;
    for (auto& [i, c] : coords)
        if (c != 0) terms.push_back(Root::Term{i, c});
    if (terms.empty() || terms.size() > 2) return false;
    if (terms.size() == 1) return Root::shape_ok(f, Root(terms[0]));
    return Root::shape_ok(f, Root(terms[0], terms[1]));
}

/// α + β as a sparse vector (not necessarily a root).
inline std::map<int, int> add_coords(const Root& a, const Root& b) {
    std::map<int, int> m = a.coords();
    for (auto& [i, c] : b.coords()) {
        m[i] += c;
        if (m[i] == 0) m.erase(i);
    }
    return m;
}

/// α + β when it is again a root of the family.
inline std::optional<Root> root_sum(Family f, const Root& a, const Root& b) {
    auto m = add_coords(a, b);
    if (!is_root(f, m)) return std::nullopt;
    std::vector<Root::Term> terms;
    for (auto& [i, c] : m) terms.push_back(Root::Term{i, c});
    if (terms.size() == 1) return Root(terms[0]);
    return Root(terms[0], terms[1]);
}

} // namespace limlie
