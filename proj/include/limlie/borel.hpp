#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "limlie/keymap.hpp"
#include "limlie/root_system.hpp"
#include "limlie/weight.hpp"

namespace limlie {

/// A Borel subalgebra as an injective key map (Prop 2.3 reading: orders on
/// {ε_i} for A, ℤ₂-linear orders on {0} ∪ {±ε_i} for B/C/D, with the
/// D-condition on the minimal positive element).
struct BorelSpec : KeySpec {
    BorelSpec() = default;
    BorelSpec(Family f, KeyGenerator g, std::map<int, Rat> ov = {}) {
        family = f;
        gen = std::move(g);
        overrides = std::move(ov);
    }
};

namespace detail {

/// Finite key assignments that differ from the plain catalogue rule:
/// overrides plus, for Explicit, the whole table (with overrides applied).
inline std::map<int, Rat> finite_part(const KeySpec& s) {
    std::map<int, Rat> m;
    if (s.gen.kind == GenKind::Explicit) m = s.gen.table;
    for (auto& [i, v] : s.overrides) m[i] = v;
    return m;
}

/// Indices where the infinite catalogue rule still applies.
inline bool rule_applies(const KeySpec& s, int i) {
    if (s.gen.kind == GenKind::Explicit) return false;
    return !s.overridden(i);
}

/// Smallest free (non-overridden) index satisfying a predicate on indices.
template <typename Pred>
int first_free_index(const KeySpec& s, Pred&& p) {
    for (int i = 1;; ++i)
        if (rule_applies(s, i) && p(i)) return i;
}

/// Minimal positive symbol analysis. Outcome: either "no minimal positive
/// element exists" (ToZero-style unattained infimum), or the symbol
/// attaining the minimum.
struct MinPositive {
    bool exists = false;
    Sym sym;
};

inline MinPositive minimal_positive_symbol(const KeySpec& s) {
    // Candidates from the finite part.
    std::optional<std::pair<Rat, Sym>> best;
    auto offer = [&](const Rat& value, Sym sym) {
        if (value <= Rat(0)) return;
        if (!best || value < best->first) best = {value, sym};
    };
    for (auto& [i, v] : finite_part(s)) {
        if (v > Rat(0)) offer(v, Sym{i, 1});
        if (v < Rat(0)) offer(-v, Sym{i, -1});
    }
    // Contribution of the infinite catalogue rule on free indices.
    switch (s.gen.kind) {
        case GenKind::Explicit:
            break;
        case GenKind::ToZero:
        case GenKind::AlternatingToZero:
            return {};  // infimum 0 over free indices, never attained
        case GenKind::Descending: {
            int i = first_free_index(s, [](int) { return true; });
            offer(Rat(i), Sym{i, -1});
            break;
        }
        case GenKind::Ascending: {
            int i = first_free_index(s, [](int) { return true; });
            offer(Rat(i), Sym{i, 1});
            break;
        }
        case GenKind::AlternatingInterleave: {
            int even = first_free_index(s, [](int i) { return i % 2 == 0; });
            offer(Rat(even / 2), Sym{even, 1});
            int odd = first_free_index(s, [](int i) { return i % 2 == 1; });
            offer(Rat((odd + 1) / 2), Sym{odd, -1});
            break;
        }
        case GenKind::Constant: {
            int i = first_free_index(s, [](int) { return true; });
            if (s.gen.value > Rat(0)) offer(s.gen.value, Sym{i, 1});
            if (s.gen.value < Rat(0)) offer(-s.gen.value, Sym{i, -1});
            break;
        }
    }
    if (!best) return {};
    return {true, best->second};
}

} // namespace detail

/// Injectivity of the key map on the family's symbol set ({ε_i} for A;
/// {0} ∪ {±ε_i} for B/C/D, i.e. |keys| pairwise distinct and nonzero) plus
/// the Prop 2.3 D-condition. Violations carry a witness pair.
inline ValidationReport validate_borel(const BorelSpec& s) {
    ValidationReport rep;
    bool abs = s.family != Family::A;
    auto fin = detail::finite_part(s);

    auto collide = [&](const Rat& a, const Rat& b) {
        return abs ? a.abs() == b.abs() : a == b;
    };

    if (abs)
        for (auto& [i, v] : fin)
            if (v.is_zero())
                rep.violations.push_back({"key must be nonzero on symbols ±ε_i", "e" + std::to_string(i)});

    // finite part pairwise
    for (auto it = fin.begin(); it != fin.end(); ++it) {
        auto jt = it;
        for (++jt; jt != fin.end(); ++jt)
            if (collide(it->second, jt->second))
                rep.violations.push_back({"not injective", "e" + std::to_string(it->first) + ", e" + std::to_string(jt->first)});
    }

    // finite part against the infinite rule
    if (s.gen.kind != GenKind::Explicit) {
        for (auto& [i, v] : fin) {
            auto check_val = [&](const Rat& v2) {
                if (s.gen.kind == GenKind::Constant) {
                    if (v2 == s.gen.value) {
                        int j = detail::first_free_index(s, [&](int jj) { return jj != i; });
                        rep.violations.push_back({"not injective", "e" + std::to_string(i) + ", e" + std::to_string(j)});
                    }
                    return;
                }
                auto j = s.gen.preimage(v2);
                if (j && *j != i && detail::rule_applies(s, *j))
                    rep.violations.push_back({"not injective", "e" + std::to_string(i) + ", e" + std::to_string(*j)});
            };
            check_val(v);
            if (abs && !v.is_zero()) check_val(-v);
        }
        // infinite rule against itself
        switch (s.gen.kind) {
            case GenKind::Constant: {
                int i = detail::first_free_index(s, [](int) { return true; });
                int j = detail::first_free_index(s, [&](int jj) { return jj != i; });
                rep.violations.push_back({"not injective (constant generator)", "e" + std::to_string(i) + ", e" + std::to_string(j)});
                break;
            }
            case GenKind::AlternatingInterleave:
            case GenKind::AlternatingToZero:
                if (abs) {
                    // |key(ε_{2k−1})| = |key(ε_{2k})| for every k
                    for (int k = 1;; ++k) {
                        int a = 2 * k - 1, b = 2 * k;
                        if (detail::rule_applies(s, a) && detail::rule_applies(s, b)) {
                            rep.violations.push_back({"not injective on {0} ∪ {±ε_i}", "e" + std::to_string(a) + ", -e" + std::to_string(b)});
                            break;
                        }
                    }
                }
                break;
            default:
                break;  // Descending/Ascending/ToZero are injective with distinct |keys|
        }
    }

    if (s.family == Family::D && rep.ok()) {
        auto mp = detail::minimal_positive_symbol(s);
        if (mp.exists && mp.sym.sign < 0)
            rep.violations.push_back({"minimal positive element must be of the form ε_i", mp.sym.str()});
    }
    return rep;
}

inline void require_valid_borel(const BorelSpec& s) {
    auto rep = validate_borel(s);
    if (!rep.ok()) throw std::invalid_argument("invalid Borel spec: " + rep.summary());
}

/// Roots of positive total key at rank n; the complement is exactly the
/// negatives (a triangular decomposition). Throws when a root keys to 0.
inline std::vector<Root> positive_roots(const BorelSpec& s, int n) {
    check_rank(s.family, n);
    s.require_rank(n);
    std::vector<Root> out;
    for (const Root& a : roots_at_rank(s.family, n)) {
        Rat k = s.root_key(a);
        if (k.is_zero())
            throw std::domain_error("root " + a.str() + " has key 0 (key map not injective)");
        if (k > Rat(0)) out.push_back(a);
    }
    return out;
}

struct BasisVerdict {
    bool admits = false;
    std::optional<std::pair<Sym, Sym>> witness;  // a pair with infinitely many symbols between
};

/// Whether the limit Borel admits a basis: between every two symbols only
/// finitely many symbols lie (§4 criterion). Decided per catalogue entry;
/// finite overrides never change the verdict.
inline BasisVerdict admits_basis(const BorelSpec& s) {
    require_valid_borel(s);
    bool symbols_pm = s.family != Family::A;
    switch (s.gen.kind) {
        case GenKind::Explicit:
            return {true, std::nullopt};
        case GenKind::Descending:
        case GenKind::Ascending:
        case GenKind::AlternatingInterleave:
            // integer keys: every rational interval holds finitely many
            return {true, std::nullopt};
        case GenKind::ToZero: {
            if (!symbols_pm) return {true, std::nullopt};
            // between −ε_i and 0 lie all −ε_m with m > i
            int i = detail::first_free_index(s, [](int) { return true; });
            return {false, std::make_pair(Sym{i, -1}, Sym{0, 0})};
        }
        case GenKind::AlternatingToZero: {
            // between ε_{2k} (key −1/k) and ε_{2k−1} (key 1/k) lie all later ramp symbols
            for (int k = 1;; ++k) {
                int a = 2 * k - 1, b = 2 * k;
                if (detail::rule_applies(s, a) && detail::rule_applies(s, b))
                    return {false, std::make_pair(Sym{b, 1}, Sym{a, 1})};
            }
        }
        case GenKind::Constant:
            throw std::logic_error("constant generator cannot be a valid Borel");
    }
    throw std::logic_error("admits_basis");
}

struct BasisData {
    std::vector<Root> simples;  // positive roots not a sum of two positives
    Weight rho;                 // ⟨rho, α⟩ = 1 for every simple α
};

/// Simple roots of the rank-n truncation plus ρ_b = half-sum of positives
/// (which pairs to 1 with every simple root; tail coordinates 0).
inline BasisData basis_data(const BorelSpec& s, int n) {
    std::vector<Root> pos = positive_roots(s, n);
    std::set<Root> pos_set(pos.begin(), pos.end());
    BasisData out;
    for (const Root& a : pos) {
        bool decomposable = false;
        for (const Root& b : pos) {
            if (decomposable) break;
            if (b == a) continue;
            auto rest = add_coords(a, -b);
            if (is_root(s.family, rest)) {
                std::vector<Root::Term> terms;
                for (auto& [i, c] : rest) terms.push_back({i, c});
                Root r = terms.size() == 1 ? Root(terms[0]) : Root(terms[0], terms[1]);
                if (pos_set.count(r)) decomposable = true;
            }
        }
        if (!decomposable) out.simples.push_back(a);
    }
    Weight half;
    for (const Root& a : pos) half = half.plus_root(a, Rat(1, 2));
    out.rho = half;
    return out;
}

/// Builds the Explicit Borel spec of a linear functional φ given by
/// key(ε_i) = φ(ε_i) on indices 1..range. Rejects non-regular functionals
/// (some root keyed to 0).
inline BorelSpec borel_from_functional(Family f, const std::map<int, Rat>& coefficients) {
    if (coefficients.empty()) throw std::invalid_argument("borel_from_functional: empty coefficient map");
    BorelSpec s(f, KeyGenerator::explicit_table(coefficients));
    int range = s.gen.range();
    if (range >= min_rank(f))
        for (const Root& a : roots_at_rank(f, range))
            if (s.root_key(a).is_zero())
                throw std::invalid_argument("non-regular functional: root " + a.str() + " has key 0");
    require_valid_borel(s);
    return s;
}

} // namespace limlie
