#pragma once

#include <map>
#include <utility>
#include <vector>

#include "limlie/borel.hpp"
#include "limlie/linalg.hpp"
#include "limlie/root_system.hpp"
#include "limlie/weight.hpp"

namespace limlie::testing {

/// A weight with the prescribed pairings against the simple roots of b at
/// rank n (free coordinates zero).
inline Weight weight_from_simple_pairings(const BorelSpec& b, int n, const std::vector<long long>& a) {
    auto simples = basis_data(b, n).simples;
    if (simples.size() != a.size()) throw std::invalid_argument("pairing vector size mismatch");
    std::vector<QVec> cols(static_cast<std::size_t>(n), QVec(simples.size()));
    for (std::size_t i = 0; i < simples.size(); ++i) {
        Rat scale = Rat(2) / Rat(simples[i].norm2());
        for (int j = 1; j <= n; ++j)
            cols[static_cast<std::size_t>(j - 1)][i] = scale * Rat(simples[i].coeff(j));
    }
    QVec rhs(simples.size());
    for (std::size_t i = 0; i < a.size(); ++i) rhs[i] = Rat(a[i]);
    auto x = solve_in_span(cols, rhs);
    if (!x) throw std::logic_error("weight_from_simple_pairings: inconsistent system");
    Weight w;
    for (int j = 1; j <= n; ++j) w.set(j, (*x)[static_cast<std::size_t>(j - 1)]);
    return w;
}

/// All dominant integral weights for b at rank n whose simple-root pairings
/// are non-negative integers summing to at most `bound`.
inline std::vector<Weight> dominant_sweep(const BorelSpec& b, int n, long long bound) {
    auto simples = basis_data(b, n).simples;
    std::vector<Weight> out;
    std::vector<long long> a(simples.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, long long left) -> void {
        if (k == a.size()) {
            out.push_back(weight_from_simple_pairings(b, n, a));
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            a[k] = v;
            self(self, k + 1, left - v);
        }
        a[k] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

/// Exhaustive-with-pruning search for a nontrivial c ∈ {0..maxCoeff}^roots
/// with Σ c_i α_i = 0. A triangular decomposition's positive part admits
/// none (its cone contains no vector subspace).
inline bool has_nontrivial_nonneg_relation(const std::vector<Root>& roots, int maxCoeff) {
    std::vector<std::map<int, int>> coords;
    for (auto& r : roots) coords.push_back(r.coords());
    // per-coordinate achievable range of each suffix of generators
    std::vector<std::map<int, std::pair<int, int>>> range(roots.size() + 1);
    for (std::size_t k = roots.size(); k-- > 0;) {
        range[k] = range[k + 1];
        for (auto& [i, c] : coords[k]) {
            auto& [lo, hi] = range[k][i];
            if (c > 0)
                hi += maxCoeff * c;
            else
                lo += maxCoeff * c;
        }
    }
    auto dfs = [&](auto&& self, std::size_t k, std::map<int, int> res, bool nz) -> bool {
        if (k == roots.size()) return nz && res.empty();
        for (auto& [i, v] : res) {
            auto it = range[k].find(i);
            int lo = 0, hi = 0;
            if (it != range[k].end()) { lo = it->second.first; hi = it->second.second; }
            if (-v < lo || -v > hi) return false;  // suffix must cancel v
        }
        for (int c = 0; c <= maxCoeff; ++c) {
            std::map<int, int> next = res;
            for (auto& [i, cf] : coords[k]) {
                next[i] += c * cf;
                if (next[i] == 0) next.erase(i);
            }
            if (self(self, k + 1, std::move(next), nz || c > 0)) return true;
        }
        return false;
    };
    return dfs(dfs, 0, {}, false);
}

} // namespace limlie::testing
