#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "limlie/borel.hpp"
#include "limlie/root_system.hpp"
#include "limlie/weight_ops.hpp"

namespace limlie {

/// Finite character at a fixed rank: weight → multiplicity, highest weight
/// included with multiplicity 1.
struct FormalCharacter {
    Family family = Family::A;
    int rank = 0;
    Weight highest;
    std::map<Weight, long long> mults;

    long long mult(const Weight& mu) const {
        auto it = mults.find(mu);
        return it == mults.end() ? 0 : it->second;
    }
    long long dim() const {
        long long d = 0;
        for (auto& [w, m] : mults) d += m;
        return d;
    }
    std::set<Weight> support() const {
        std::set<Weight> s;
        for (auto& [w, m] : mults) s.insert(w);
        return s;
    }
};

/// Restriction to the rank-n coordinates (indices beyond n dropped to 0).
inline Weight truncate(const Weight& lambda, int n) {
    Weight w;
    for (int i = 1; i <= n; ++i) w.set(i, lambda.at(i));
    return w;
}

namespace detail {

struct PositiveSystem {
    std::vector<Root> positives;
    std::vector<Root> simples;
    Weight rho;  // half-sum of positives
};

inline PositiveSystem system_of(const BorelSpec& b, int n) {
    PositiveSystem s;
    auto bd = basis_data(b, n);
    s.positives = positive_roots(b, n);
    s.simples = bd.simples;
    s.rho = bd.rho;
    return s;
}

} // namespace detail

/// Weight multiplicities of the finite-dimensional irreducible with highest
/// weight λ over the given positive system, by the Freudenthal recursion.
/// λ must be integral and dominant for the system at rank n.
inline FormalCharacter freudenthal_character(Family family, int n, const BorelSpec& b, const Weight& lambda) {
    auto sys = detail::system_of(b, n);
    Weight lam = truncate(lambda, n);
    for (const Root& a : sys.positives) {
        Rat p = pairing(lam, a);
        if (!p.is_integer())
            throw std::invalid_argument("freudenthal_character: non-integral pairing " + p.str() +
                                        " with root " + a.str());
        if (p < Rat(0))
            throw std::invalid_argument("freudenthal_character: weight not dominant (root " + a.str() + ")");
    }

    FormalCharacter ch;
    ch.family = family;
    ch.rank = n;
    ch.highest = lambda;

    const Weight rho = sys.rho;
    const Rat top_norm = bilinear(lam + rho, lam + rho);

    std::map<Weight, long long> mults{{lam, 1}};
    std::vector<Weight> level{lam};
    for (long long depth = 1; !level.empty(); ++depth) {
        std::set<Weight> candidates;
        for (const Weight& mu : level)
            for (const Root& a : sys.simples) {
                Weight nu = mu.plus_root(a, Rat(-1));
                if (!mults.count(nu)) candidates.insert(nu);
            }
        std::vector<Weight> next;
        for (const Weight& mu : candidates) {
            Rat numerator;
            for (const Root& a : sys.positives) {
                // every positive root has height >= 1, so the string above μ
                // stays within `depth` simple-subtraction steps; gaps below
                // the support contribute nothing but must not stop the walk
                for (long long k = 1; k <= depth; ++k) {
                    Weight up = mu.plus_root(a, Rat(k));
                    auto it = mults.find(up);
                    if (it == mults.end()) continue;
                    numerator += Rat(2) * Rat(it->second) * bilinear(up, a);
                }
            }
            if (numerator.is_zero()) continue;
            Rat denominator = top_norm - bilinear(mu + rho, mu + rho);
            if (denominator.is_zero())
                throw std::logic_error("freudenthal_character: zero denominator at a support weight");
            Rat m = numerator / denominator;
            if (!m.is_integer() || m < Rat(0))
                throw std::logic_error("freudenthal_character: non-integral multiplicity");
            if (m.is_zero()) continue;
            mults[mu] = m.num();
            next.push_back(mu);
        }
        level = std::move(next);
    }

    // re-attach the coordinates of λ beyond rank n
    Weight offset = lambda - lam;
    for (auto& [mu, m] : mults) ch.mults[mu + offset] = m;
    return ch;
}

namespace detail {

/// Positive functional on the root set: the half-sum pairs strictly
/// positively with every member of a genuine positive system.
inline Weight positivity_functional(const std::vector<Root>& positives) {
    Weight rho;
    for (const Root& a : positives) rho = rho.plus_root(a, Rat(1, 2));
    for (const Root& a : positives)
        if (!(bilinear(rho, a) > Rat(0)))
            throw std::invalid_argument("kostant_partition: root set is not a positive system");
    return rho;
}

inline long long kostant_rec(const std::vector<Root>& roots, const std::vector<Rat>& heights,
                             const Weight& nu, const Rat& nu_height, std::size_t k,
                             std::map<std::pair<std::size_t, Weight>, long long>& memo) {
    if (nu.is_zero()) return 1;
    if (k == roots.size() || nu_height < Rat(0)) return 0;
    auto key = std::make_pair(k, nu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    // coefficient c for roots[k]: heights bound it by nu_height / heights[k]
    Weight residual = nu;
    Rat res_height = nu_height;
    for (long long c = 0;; ++c) {
        if (res_height < Rat(0)) break;
        total += kostant_rec(roots, heights, residual, res_height, k + 1, memo);
        residual = residual.plus_root(roots[k], Rat(-1));
        res_height -= heights[k];
    }
    memo[key] = total;
    return total;
}

} // namespace detail

/// Number of ways to write ν as a ℤ₊-combination of the given positive
/// roots (the Kostant partition function for that system). 0 when ν is
/// outside the cone.
inline long long kostant_partition(const std::vector<Root>& positives, const Weight& nu) {
    if (!nu.tail().is_zero()) return 0;
    if (nu.is_zero()) return 1;
    Weight functional = detail::positivity_functional(positives);
    std::vector<Rat> heights;
    for (const Root& a : positives) heights.push_back(bilinear(functional, a));
    Rat nu_height = [&] {
        Rat s;
        for (auto& [i, v] : nu.overrides()) s += v * functional.at(i);
        return s;
    }();
    if (nu_height < Rat(0)) return 0;
    std::map<std::pair<std::size_t, Weight>, long long> memo;
    return detail::kostant_rec(positives, heights, nu, nu_height, 0, memo);
}

/// Elements of W_n as (images of λ+ρ, sign) pairs is all Eq. (eqW) needs;
/// enumerate W_n by BFS over simple reflections, tracking word-length parity.
inline std::vector<std::pair<Weight, int>> signed_orbit(Family f, int n, const Weight& v) {
    auto gens = standard_simples(f, n);
    std::map<Weight, int> sign_of{{truncate(v, n), 1}};
    std::vector<Weight> frontier{truncate(v, n)};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier) {
            int s = sign_of.at(w);
            for (const Root& a : gens) {
                Weight r = reflect(w, a);
                if (r == w) continue;  // stabilized: the reflection fixes it
                auto [it, fresh] = sign_of.emplace(r, -s);
                if (fresh) next.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    return {sign_of.begin(), sign_of.end()};
}

/// Eq. (eqW) read at a single weight: multiplicity of μ in V_{b_n}(λ) as
/// Σ_w sgn(w) · K(w(λ+ρ) − ρ − μ) over the b-positive system.
inline long long weyl_multiplicity(Family family, int n, const BorelSpec& b, const Weight& lambda,
                                   const Weight& mu) {
    auto sys = detail::system_of(b, n);
    Weight lam = truncate(lambda, n);
    for (const Root& a : sys.positives) {
        Rat p = pairing(lam, a);
        if (!p.is_integer()) throw std::invalid_argument("weyl_multiplicity: non-integral weight");
        if (p < Rat(0)) throw std::invalid_argument("weyl_multiplicity: weight not dominant");
    }
    Weight diff = mu - lambda;
    if (!diff.tail().is_zero() || diff.max_index() > n) return 0;  // μ outside the rank-n coset
    Weight mu_t = truncate(mu - (lambda - lam), n);  // align μ to the truncated coordinates

    long long total = 0;
    for (auto& [image, sign] : signed_orbit(family, n, lam + sys.rho)) {
        Weight arg = image - sys.rho - mu_t;
        total += sign * kostant_partition(sys.positives, arg);
    }
    return total;
}

/// Weyl dimension: Π ⟨λ+ρ, α⟩ / ⟨ρ, α⟩ over the positive system.
inline long long weyl_dimension(const BorelSpec& b, int n, const Weight& lambda) {
    auto sys = detail::system_of(b, n);
    Weight lam = truncate(lambda, n);
    Rat product(1);
    for (const Root& a : sys.positives)
        product *= bilinear(lam + sys.rho, a) / bilinear(sys.rho, a);
    if (!product.is_integer())
        throw std::logic_error("weyl_dimension: non-integral product");
    return product.num();
}

/// Stabilization check behind Thm 4.20(iv): the multiplicity of μ in
/// V_{b_n}(λ|_{h_n}) is the same at every probed rank (≥ the rank where
/// λ−μ lies in the root lattice and the simple roots nest).
struct StableMultiplicity {
    long long value = 0;
    std::map<int, long long> per_rank;
    bool stable = false;
    std::string note;
};

inline StableMultiplicity stable_multiplicity(Family family, const BorelSpec& b, const Weight& lambda,
                                              const Weight& mu, const std::vector<int>& ranks) {
    if (ranks.empty()) throw std::invalid_argument("stable_multiplicity: no ranks to probe");
    if (!admits_basis(b).admits)
        throw std::invalid_argument("stable_multiplicity: Borel does not admit a basis");
    StableMultiplicity out;

    // λ − μ must be finitely supported inside the smallest probed rank
    Weight diff = lambda - mu;
    if (!diff.tail().is_zero())
        throw std::invalid_argument("stable_multiplicity: λ − μ is not in a finite-rank root span");
    int n0 = ranks.front();
    if (diff.max_index() > n0)
        throw std::invalid_argument("stable_multiplicity: λ − μ needs rank " + std::to_string(diff.max_index()));
    if (family == Family::A) {
        Rat sum;
        for (auto& [i, v] : diff.overrides()) sum += v;
        if (!sum.is_zero())
            throw std::invalid_argument("stable_multiplicity: λ − μ outside the family-A root lattice");
    }

    // simple roots must nest across the probed ranks
    for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
        auto small = basis_data(b, ranks[k]).simples;
        auto big = basis_data(b, ranks[k + 1]).simples;
        std::set<Root> big_set(big.begin(), big.end());
        for (const Root& s : small)
            if (!big_set.count(s)) {
                out.note = "simple root " + s.str() + " of rank " + std::to_string(ranks[k]) +
                           " is not simple at rank " + std::to_string(ranks[k + 1]);
                out.stable = false;
                return out;
            }
    }

    for (int n : ranks) {
        auto ch = freudenthal_character(family, n, b, lambda);
        out.per_rank[n] = ch.mult(mu);
    }
    out.value = out.per_rank.begin()->second;
    out.stable = true;
    for (auto& [n, v] : out.per_rank)
        if (v != out.value) {
            out.stable = false;
            out.note = "multiplicity varies across probed ranks";
        }
    return out;
}

} // namespace limlie
