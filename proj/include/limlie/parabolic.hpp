#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "limlie/borel.hpp"
#include "limlie/keymap.hpp"
#include "limlie/root_system.hpp"

namespace limlie {

/// A parabolic subalgebra as a key map with ties (Prop 2.4: total preorders;
/// ties encode incomparability). ℤ₂-linearity holds by construction.
struct ParabolicSpec : KeySpec {
    ParabolicSpec() = default;
    ParabolicSpec(Family f, KeyGenerator g, std::map<int, Rat> ov = {}) {
        family = f;
        gen = std::move(g);
        overrides = std::move(ov);
    }
    static ParabolicSpec of_borel(const BorelSpec& b) {
        return ParabolicSpec(b.family, b.gen, b.overrides);
    }
};

/// Prop 2.4 D-condition: an index not comparable with 0 (key 0) never comes
/// alone. Report carries the witness index.
inline ValidationReport validate_parabolic(const ParabolicSpec& s) {
    ValidationReport rep;
    if (s.family != Family::D) return rep;
    if (s.gen.kind == GenKind::Constant && s.gen.value.is_zero()) return rep;  // cofinitely many zeros
    std::vector<int> zero_indices;
    for (auto& [i, v] : detail::finite_part(s))
        if (v.is_zero()) zero_indices.push_back(i);
    if (zero_indices.size() == 1)
        rep.violations.push_back({"ε_i not comparable with 0 requires a second such index",
                                  "e" + std::to_string(zero_indices.front())});
    return rep;
}

inline void require_valid_parabolic(const ParabolicSpec& s) {
    auto rep = validate_parabolic(s);
    if (!rep.ok()) throw std::invalid_argument("invalid parabolic spec: " + rep.summary());
}

/// Δ = Δ⁻ ⊔ Δ⁰ ⊔ Δ⁺ by the sign of the total key; the parabolic subalgebra
/// corresponds to Δ⁰ ∪ Δ⁺.
struct RootSplit {
    std::vector<Root> zero, plus, minus;
};

inline RootSplit split_roots(const ParabolicSpec& s, int n) {
    check_rank(s.family, n);
    s.require_rank(n);
    RootSplit out;
    for (const Root& a : roots_at_rank(s.family, n)) {
        Rat k = s.root_key(a);
        if (k.is_zero())
            out.zero.push_back(a);
        else
            (k > Rat(0) ? out.plus : out.minus).push_back(a);
    }
    return out;
}

/// One semisimple factor of the Levi part: gl-type (from a class paired with
/// its negative) or the ambient family's type (the zero class).
struct LeviComponent {
    enum class Type { GL, B, C, D } type = Type::GL;
    std::vector<int> indices;  // indices ≤ the materialized rank
    bool infinite = false;     // the generator assigns this key cofinitely often

    static Type ambient(Family f) {
        switch (f) {
            case Family::B: return Type::B;
            case Family::C: return Type::C;
            case Family::D: return Type::D;
            case Family::A: break;
        }
        throw std::logic_error("LeviComponent::ambient");
    }
    std::string type_name() const {
        switch (type) {
            case Type::GL: return "gl";
            case Type::B: return "B";
            case Type::C: return "C";
            case Type::D: return "D";
        }
        throw std::logic_error("LeviComponent::type_name");
    }
};

/// Key-value classes at rank n (families B/C/D identify the classes of v and
/// −v, so classes are keyed by |v|; the 0 class is the unique possibly
/// non-gl component). Classes contributing no roots in the limit (single
/// index, gl type, finite) are dropped.
inline std::vector<LeviComponent> levi_components(const ParabolicSpec& s, int n) {
    check_rank(s.family, n);
    s.require_rank(n);
    std::map<Rat, std::vector<int>> classes;
    for (int i = 1; i <= n; ++i) {
        Rat v = s.key(i);
        classes[s.family == Family::A ? v : v.abs()].push_back(i);
    }
    Rat tail_class = s.gen.value;
    bool has_tail = s.gen.kind == GenKind::Constant;
    if (has_tail && s.family != Family::A) tail_class = tail_class.abs();
    if (has_tail) classes[tail_class];  // the tail class exists even with no index ≤ n

    std::vector<LeviComponent> out;
    for (auto& [v, idx] : classes) {
        LeviComponent c;
        c.indices = idx;
        c.infinite = has_tail && v == tail_class;
        bool zero_class = s.family != Family::A && v.is_zero();
        c.type = zero_class ? LeviComponent::ambient(s.family) : LeviComponent::Type::GL;
        bool has_roots;
        if (zero_class)
            has_roots = s.family == Family::D ? (idx.size() >= 2 || c.infinite) : true;
        else
            has_roots = idx.size() >= 2 || c.infinite;
        if (has_roots) out.push_back(std::move(c));
    }
    return out;
}

/// True iff every b-positive root at rank n lies in Δ⁰ ∪ Δ⁺ of p.
inline bool contains_borel(const ParabolicSpec& p, const BorelSpec& b, int n) {
    if (p.family != b.family) throw std::invalid_argument("contains_borel: family mismatch");
    require_valid_parabolic(p);
    require_valid_borel(b);
    for (const Root& a : positive_roots(b, n))
        if (p.root_key(a) < Rat(0)) return false;
    return true;
}

/// Pointwise key compatibility on symbols up to `range`: whenever b orders
/// s above t, p does not order them oppositely. Implies contains_borel at
/// every rank ≤ range.
inline bool keymap_compatible(const ParabolicSpec& p, const BorelSpec& b, int range) {
    std::vector<Sym> syms;
    if (b.family == Family::A) {
        for (int i = 1; i <= range; ++i) syms.push_back(Sym{i, 1});
    } else {
        syms.push_back(Sym{0, 0});
        for (int i = 1; i <= range; ++i) {
            syms.push_back(Sym{i, 1});
            syms.push_back(Sym{i, -1});
        }
    }
    for (const Sym& x : syms)
        for (const Sym& y : syms)
            if (b.sym_key(x) > b.sym_key(y) && p.sym_key(x) < p.sym_key(y)) return false;
    return true;
}

} // namespace limlie
