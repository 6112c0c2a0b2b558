#pragma once

#include <map>
#include <optional>
#include <vector>

#include "limlie/root_system.hpp"
#include "limlie/weight.hpp"

namespace limlie {

/// Family A weights are defined up to an additive constant; the canonical
/// representative shifts the tail to 0. Other families: identity.
inline Weight canonicalize(Family f, const Weight& raw) {
    if (f != Family::A || raw.tail().is_zero()) return raw;
    Weight shift(-raw.tail());
    return raw + shift;
}

/// True iff ⟨λ, α⟩ ∈ ℤ for every root α of the limit system. Decidable from
/// finitely many roots: every pairing value already occurs among roots on
/// indices ≤ max override + 2 (two tail indices are then present).
inline bool is_integral(Family f, const Weight& lambda) {
    int n = std::max(min_rank(f), lambda.max_index() + 2);
    for (const Root& a : roots_at_rank(f, n))
        if (!pairing(lambda, a).is_integer()) return false;
    return true;
}

/// λ is b-dominant at rank n for the positive system given as a root list.
inline bool is_dominant(const Weight& lambda, const std::vector<Root>& positives) {
    for (const Root& a : positives)
        if (pairing(lambda, a) < Rat(0)) return false;
    return true;
}

/// Witness for μ ∈ ⟨lattice⟩_ℤ + ⟨cone⟩_ℤ₊ with all |coefficients| ≤ bound.
struct LatticeConeWitness {
    std::map<Root, long long> lattice;  // integer coefficients
    std::map<Root, long long> cone;     // non-negative integer coefficients
};

namespace detail {

struct GenRange {
    // per-coordinate achievable range of the remaining suffix of generators
    std::map<int, Rat> lo, hi;
};

inline bool lcm_dfs(const Weight& residual, const std::vector<Root>& gens,
                    const std::vector<bool>& two_sided, long long bound,
                    std::size_t k, const std::vector<GenRange>& suffix,
                    std::vector<long long>& coeffs) {
    if (residual.is_zero() && k == gens.size()) return true;
    if (k == gens.size()) return false;
    // prune: residual must be reachable coordinate-wise by the suffix
    for (auto& [i, v] : residual.overrides()) {
        auto lo = suffix[k].lo.find(i);
        Rat l = lo == suffix[k].lo.end() ? Rat(0) : lo->second;
        auto hi = suffix[k].hi.find(i);
        Rat h = hi == suffix[k].hi.end() ? Rat(0) : hi->second;
        if (v < l || v > h) return false;
    }
    auto try_c = [&](long long c) {
        coeffs[k] = c;
        Weight next = residual;
        for (int t = 0; t < gens[k].term_count(); ++t) {
            auto term = gens[k].term(t);
            next.set(term.index, next.at(term.index) - Rat(c) * Rat(term.coeff));
        }
        return lcm_dfs(next, gens, two_sided, bound, k + 1, suffix, coeffs);
    };
    for (long long c = 0; c <= bound; ++c) {
        if (try_c(c)) return true;
        if (two_sided[k] && c > 0 && try_c(-c)) return true;
    }
    coeffs[k] = 0;
    return false;
}

} // namespace detail

/// Bounded exhaustive search for μ = Σ a_g g (g lattice, a ∈ ℤ) + Σ b_h h
/// (h cone, b ∈ ℤ₊) with all |coefficients| ≤ bound. Exhaustive within the
/// bound; absence within the bound is a value, not an error.
inline std::optional<LatticeConeWitness> lattice_cone_member(
    const Weight& mu, const std::vector<Root>& lattice_gens,
    const std::vector<Root>& cone_gens, long long bound) {
    if (!mu.tail().is_zero()) return std::nullopt;
    std::vector<Root> gens;
    std::vector<bool> two_sided;
    for (const Root& g : lattice_gens) { gens.push_back(g); two_sided.push_back(true); }
    for (const Root& g : cone_gens) { gens.push_back(g); two_sided.push_back(false); }

    std::vector<detail::GenRange> suffix(gens.size() + 1);
    for (std::size_t k = gens.size(); k-- > 0;) {
        suffix[k] = suffix[k + 1];
        for (int t = 0; t < gens[k].term_count(); ++t) {
            auto term = gens[k].term(t);
            Rat up = Rat(bound) * Rat(std::abs(term.coeff));
            Rat lo = two_sided[k] ? -up : (term.coeff < 0 ? -up : Rat(0));
            Rat hi = two_sided[k] ? up : (term.coeff > 0 ? up : Rat(0));
            suffix[k].lo[term.index] += lo;
            suffix[k].hi[term.index] += hi;
        }
    }

    std::vector<long long> coeffs(gens.size(), 0);
    if (!detail::lcm_dfs(mu, gens, two_sided, bound, 0, suffix, coeffs)) return std::nullopt;

    LatticeConeWitness w;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (two_sided[k])
            w.lattice[gens[k]] += coeffs[k];
        else
            w.cone[gens[k]] += coeffs[k];
    }
    return w;
}

/// The Prop 2.2(iii) lift: given μ_ss = π(λ) + Σ c_i π(α_i) (the projection
/// to semisimple weights, i.e. canonical-form equality), returns the full
/// weight λ + Σ c_i α_i. Throws when the path is inconsistent with μ_ss.
inline Weight lift_weight(Family f, const Weight& mu_ss, const Weight& lambda,
                          const std::map<Root, Rat>& path) {
    Weight lifted = lambda;
    for (auto& [alpha, c] : path) lifted = lifted.plus_root(alpha, c);
    if (canonicalize(f, lifted) != canonicalize(f, mu_ss))
        throw std::invalid_argument("lift_weight: path inconsistent with the projected weight");
    return lifted;
}

} // namespace limlie
