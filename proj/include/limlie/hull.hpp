#pragma once

#include <optional>
#include <set>
#include <vector>

#include "limlie/charfm.hpp"
#include "limlie/linalg.hpp"
#include "limlie/root_system.hpp"
#include "limlie/weight_ops.hpp"

namespace limlie {

namespace detail {

/// λ − μ as a ℚ₊-combination of the given (independent) simple roots?
/// Solves the unique decomposition and checks signs.
inline bool dominance_below(const Weight& lambda, const Weight& mu, const std::vector<Root>& simples) {
    Weight diff = lambda - mu;
    if (!diff.tail().is_zero()) return false;
    // express diff over the simples by eliminating coordinates greedily
    std::vector<QVec> cols;
    int maxidx = diff.max_index();
    for (const Root& s : simples) maxidx = std::max(maxidx, s.max_index());
    for (const Root& s : simples) {
        QVec col(static_cast<std::size_t>(maxidx));
        for (int k = 0; k < s.term_count(); ++k) col[static_cast<std::size_t>(s.term(k).index - 1)] = Rat(s.term(k).coeff);
        cols.push_back(col);
    }
    QVec rhs(static_cast<std::size_t>(maxidx));
    for (auto& [i, v] : diff.overrides()) rhs[static_cast<std::size_t>(i - 1)] = v;
    auto coeffs = solve_in_span(cols, rhs);
    if (!coeffs) return false;
    for (auto& c : *coeffs)
        if (c < Rat(0)) return false;
    return true;
}

} // namespace detail

/// μ ∈ conv(W_n · λ) ∩ (λ + ⟨Δ_n⟩_ℝ): exact rational test via the dominant
/// representatives — true iff λ⁺ − μ⁺ is a ℚ₊-combination of the standard
/// simple roots (and μ lies in the right affine subspace).
inline bool hull_support_contains(Family f, int n, const Weight& lambda, const Weight& mu) {
    check_rank(f, n);
    Weight diff = mu - lambda;
    if (!diff.tail().is_zero() || diff.max_index() > n) return false;
    if (f == Family::A) {
        Rat sum;
        for (auto& [i, v] : diff.overrides()) sum += v;
        if (!sum.is_zero()) return false;
    }
    auto simples = standard_simples(f, n);
    Weight lam_plus = dominant_rep(truncate(lambda, n), simples);
    Weight mu_plus = dominant_rep(truncate(mu, n), simples);
    return detail::dominance_below(lam_plus, mu_plus, simples);
}

namespace detail {

/// Root directions γ with [v⁺, σ_γ v⁺] an edge of conv(W_n·λ) at the
/// dominant vertex: the Stab(λ⁺)-orbit of the simples active on λ⁺.
inline std::vector<Root> edge_directions_at_dominant(Family f, int n, const Weight& lam_plus) {
    auto simples = standard_simples(f, n);
    std::vector<Root> zero_simples, active;
    for (const Root& s : simples)
        (pairing(lam_plus, s).is_zero() ? zero_simples : active).push_back(s);
    std::set<Root> gamma(active.begin(), active.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Root& g : std::set<Root>(gamma)) {
            for (const Root& s : zero_simples) {
                Weight img = reflect(weight_of_root(g), s);
                // reflected root: coefficients stay integral
                std::map<int, int> coords;
                for (auto& [i, v] : img.overrides()) coords[i] = static_cast<int>(v.num());
                std::vector<Root::Term> terms;
                for (auto& [i, c] : coords) terms.push_back({i, c});
                Root r = terms.size() == 1 ? Root(terms[0]) : Root(terms[0], terms[1]);
                if (gamma.insert(r).second) grew = true;
            }
        }
    }
    return {gamma.begin(), gamma.end()};
}

} // namespace detail

/// All 1-faces of conv(W_n · λ), as vertex pairs. Every edge is
/// w·[λ⁺, σ_γ λ⁺] for γ in the stabilizer closure of the active simples.
inline std::set<std::pair<Weight, Weight>> hull_edges(Family f, int n, const Weight& lambda) {
    auto simples = standard_simples(f, n);
    Weight lam_plus = dominant_rep(truncate(lambda, n), simples);
    auto gammas = detail::edge_directions_at_dominant(f, n, lam_plus);
    auto orbit = weyl_orbit(f, n, lam_plus);
    std::set<std::pair<Weight, Weight>> edges;
    for (const Weight& v : orbit) {
        std::vector<Root> word;
        dominant_rep_with_word(v, simples, word);
        for (const Root& g : gammas) {
            Weight a = lam_plus, bw = reflect(lam_plus, g);
            for (const Root& r : word) {
                a = reflect(a, r);
                bw = reflect(bw, r);
            }
            if (bw < a) std::swap(a, bw);
            if (!(a == bw)) edges.insert({a, bw});
        }
    }
    return edges;
}

/// μ on the segment [a, b] (inclusive)?
inline bool on_segment(const Weight& a, const Weight& b, const Weight& mu) {
    Weight dir = b - a;
    Weight off = mu - a;
    if (off.is_zero()) return true;
    // find t with off = t · dir, 0 ≤ t ≤ 1
    std::optional<Rat> t;
    for (auto& [i, v] : dir.overrides()) {
        Rat ratio = off.at(i) / v;
        if (t && !(*t == ratio)) return false;
        t = ratio;
    }
    if (!dir.tail().is_zero()) {
        Rat ratio = off.tail() / dir.tail();
        if (t && !(*t == ratio)) return false;
        t = ratio;
    } else if (!off.tail().is_zero())
        return false;
    if (!t) return false;
    if (*t < Rat(0) || *t > Rat(1)) return false;
    return (*t * dir) == off;
}

/// λ_inner on a 1-dimensional face (or vertex) of conv(W_{n}·λ_outer)?
inline bool edge_test(Family f, int n, const Weight& lambda_outer, const Weight& lambda_inner) {
    check_rank(f, n);
    Weight diff = lambda_inner - lambda_outer;
    if (!diff.tail().is_zero() || diff.max_index() > n) return false;
    if (f == Family::A) {
        Rat sum;
        for (auto& [i, v] : diff.overrides()) sum += v;
        if (!sum.is_zero()) return false;
    }
    Weight inner = truncate(lambda_inner, n);
    auto simples = standard_simples(f, n);
    Weight lam_plus = dominant_rep(truncate(lambda_outer, n), simples);
    if (weyl_orbit(f, n, lam_plus).count(inner)) return true;  // vertices lie on edges
    for (auto& [a, b] : hull_edges(f, n, lambda_outer))
        if (on_segment(a, b, inner)) return true;
    return false;
}

} // namespace limlie
