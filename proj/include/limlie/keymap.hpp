#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "limlie/rational.hpp"
#include "limlie/root.hpp"

namespace limlie {

/// Catalogue of key-generating rules. Each entry defines key(ε_i) for every
/// index i (Explicit only up to its stated range), so limit-level predicates
/// can be decided in closed form per entry.
enum class GenKind {
    Descending,            // key(ε_i) = −i
    Ascending,             // key(ε_i) = i
    ToZero,                // key(ε_i) = 1/i
    AlternatingInterleave, // key(ε_{2k−1}) = −k, key(ε_{2k}) = k
    AlternatingToZero,     // key(ε_{2k−1}) = 1/k, key(ε_{2k}) = −1/k
    Constant,              // key(ε_i) = c
    Explicit,              // finite table for a stated rank
};

inline std::string gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Descending: return "descending";
        case GenKind::Ascending: return "ascending";
        case GenKind::ToZero: return "tozero";
        case GenKind::AlternatingInterleave: return "alternating";
        case GenKind::AlternatingToZero: return "alternating-tozero";
        case GenKind::Constant: return "constant";
        case GenKind::Explicit: return "explicit";
    }
    throw std::logic_error("gen_kind_name");
}

inline std::optional<GenKind> gen_kind_from_name(const std::string& s) {
    for (GenKind k : {GenKind::Descending, GenKind::Ascending, GenKind::ToZero,
                      GenKind::AlternatingInterleave, GenKind::AlternatingToZero,
                      GenKind::Constant, GenKind::Explicit})
        if (gen_kind_name(k) == s) return k;
    return std::nullopt;
}

struct KeyGenerator {
    GenKind kind = GenKind::Descending;
    Rat value;                // Constant only
    std::map<int, Rat> table; // Explicit only; indices 1..range all present

    static KeyGenerator descending() { return {GenKind::Descending, Rat(), {}}; }
    static KeyGenerator ascending() { return {GenKind::Ascending, Rat(), {}}; }
    static KeyGenerator tozero() { return {GenKind::ToZero, Rat(), {}}; }
    static KeyGenerator alternating() { return {GenKind::AlternatingInterleave, Rat(), {}}; }
    static KeyGenerator alternating_tozero() { return {GenKind::AlternatingToZero, Rat(), {}}; }
    static KeyGenerator constant(Rat c) { return {GenKind::Constant, c, {}}; }
    static KeyGenerator explicit_table(std::map<int, Rat> t) {
        KeyGenerator g{GenKind::Explicit, Rat(), std::move(t)};
        int expect = 1;
        for (auto& [i, v] : g.table)
            if (i != expect++)
                throw std::invalid_argument("explicit key table must cover indices 1..range");
        return g;
    }

    /// Stated range for Explicit, otherwise unbounded (0 = no bound).
    int range() const { return kind == GenKind::Explicit ? static_cast<int>(table.size()) : 0; }

    Rat key(int i) const {
        if (i < 1) throw std::invalid_argument("key index must be >= 1");
        switch (kind) {
            case GenKind::Descending: return Rat(-i);
            case GenKind::Ascending: return Rat(i);
            case GenKind::ToZero: return Rat(1, i);
            case GenKind::AlternatingInterleave: return i % 2 ? Rat(-(i + 1) / 2) : Rat(i / 2);
            case GenKind::AlternatingToZero: return i % 2 ? Rat(1, (i + 1) / 2) : Rat(-1, i / 2);
            case GenKind::Constant: return value;
            case GenKind::Explicit: {
                auto it = table.find(i);
                if (it == table.end())
                    throw std::domain_error("explicit key table has no index " + std::to_string(i) +
                                            " (stated range " + std::to_string(range()) + ")");
                return it->second;
            }
        }
        throw std::logic_error("KeyGenerator::key");
    }

    /// The index with generator key v, when one exists. For Constant a match
    /// means every index matches; the caller must handle that separately.
    std::optional<int> preimage(const Rat& v) const {
        switch (kind) {
            case GenKind::Descending:
                return (v < Rat(0) && v.is_integer()) ? std::optional<int>(static_cast<int>(-v.num())) : std::nullopt;
            case GenKind::Ascending:
                return (v > Rat(0) && v.is_integer()) ? std::optional<int>(static_cast<int>(v.num())) : std::nullopt;
            case GenKind::ToZero:
                return (v.num() == 1) ? std::optional<int>(static_cast<int>(v.den())) : std::nullopt;
            case GenKind::AlternatingInterleave:
                if (v.is_integer() && v.num() > 0) return static_cast<int>(2 * v.num());
                if (v.is_integer() && v.num() < 0) return static_cast<int>(-2 * v.num() - 1);
                return std::nullopt;
            case GenKind::AlternatingToZero:
                if (v.num() == 1) return static_cast<int>(2 * v.den() - 1);
                if (v.num() == -1) return static_cast<int>(2 * v.den());
                return std::nullopt;
            case GenKind::Constant:
                return std::nullopt;  // handled by caller via `value`
            case GenKind::Explicit:
                for (auto& [i, w] : table)
                    if (w == v) return i;
                return std::nullopt;
        }
        throw std::logic_error("KeyGenerator::preimage");
    }
};

/// A symbol of the ordered set: ε_i (sign +1), −ε_i (sign −1), or 0
/// (index 0, sign 0). Families B/C/D order {0} ∪ {±ε_i}; family A only {ε_i}.
struct Sym {
    int index = 0;
    int sign = 0;
    std::string str() const {
        if (sign == 0) return "0";
        return (sign < 0 ? "-e" : "e") + std::to_string(index);
    }
    friend auto operator<=>(const Sym&, const Sym&) = default;
};

/// Key map encoding an order (injective keys: Borel) or a total preorder
/// (ties: parabolic) via key(ε_i) ∈ ℚ; key(0) = 0 and key(−ε_i) = −key(ε_i)
/// make it ℤ₂-linear by construction.
struct KeySpec {
    Family family = Family::A;
    KeyGenerator gen;
    std::map<int, Rat> overrides;

    Rat key(int i) const {
        auto it = overrides.find(i);
        return it == overrides.end() ? gen.key(i) : it->second;
    }

    Rat sym_key(const Sym& s) const {
        if (s.sign == 0) return Rat(0);
        return s.sign > 0 ? key(s.index) : -key(s.index);
    }

    /// Σ coeff · key(index); the functional φ evaluated on a root.
    Rat root_key(const Root& alpha) const {
        Rat s;
        for (int k = 0; k < alpha.term_count(); ++k)
            s += Rat(alpha.term(k).coeff) * key(alpha.term(k).index);
        return s;
    }

    bool overridden(int i) const { return overrides.count(i) != 0; }

    /// Largest rank the spec is defined for (0 = unbounded). Overrides
    /// immediately past an explicit table extend its range.
    int defined_range() const {
        if (gen.kind != GenKind::Explicit) return 0;
        int r = gen.range();
        while (overrides.count(r + 1)) ++r;
        return r;
    }

    void require_rank(int n) const {
        int r = defined_range();
        if (r && n > r)
            throw std::domain_error("spec defined only up to rank " + std::to_string(r) +
                                    ", requested rank " + std::to_string(n));
    }
};

struct Violation {
    std::string clause;
    std::string witness;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const {
        if (ok()) return "ok";
        std::string s;
        for (auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.clause + " (witness: " + v.witness + ")";
        }
        return s;
    }
};

} // namespace limlie
