#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "limlie/root.hpp"
#include "limlie/weight.hpp"

namespace limlie {

inline void check_rank(Family f, int n) {
    if (n < min_rank(f))
        throw std::invalid_argument(std::string("rank ") + std::to_string(n) + " below minimum for family " + family_letter(f));
}

/// All roots of the rank-n classical system on indices {1..n}.
/// Counts: n(n−1) for A, 2n² for B and C, 2n(n−1) for D.
inline std::vector<Root> roots_at_rank(Family f, int n) {
    check_rank(f, n);
    std::vector<Root> out;
    if (f == Family::B)
        for (int i = 1; i <= n; ++i)
            for (int s : {1, -1}) out.push_back(Root(Root::Term{i, s}));
    if (f == Family::C)
        for (int i = 1; i <= n; ++i)
            for (int s : {2, -2}) out.push_back(Root(Root::Term{i, s}));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(Root(Root::Term{i, 1}, Root::Term{j, -1}));
            out.push_back(Root(Root::Term{i, -1}, Root::Term{j, 1}));
            if (f != Family::A) {
                out.push_back(Root(Root::Term{i, 1}, Root::Term{j, 1}));
                out.push_back(Root(Root::Term{i, -1}, Root::Term{j, -1}));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Simple roots of the standard positive system at rank n.
inline std::vector<Root> standard_simples(Family f, int n) {
    check_rank(f, n);
    std::vector<Root> s;
    for (int i = 1; i < n; ++i) s.push_back(Root(Root::Term{i, 1}, Root::Term{i + 1, -1}));
    if (f == Family::B) s.push_back(Root(Root::Term{n, 1}));
    if (f == Family::C) s.push_back(Root(Root::Term{n, 2}));
    if (f == Family::D) s.push_back(Root(Root::Term{n - 1, 1}, Root::Term{n, 1}));
    return s;
}

/// Orbit of λ under W_n (permutations for A; signed permutations for B, C;
/// evenly-signed permutations for D), coordinates beyond n untouched.
inline std::set<Weight> weyl_orbit(Family f, int n, const Weight& lambda) {
    check_rank(f, n);
    auto gens = standard_simples(f, n);
    std::set<Weight> orbit{lambda};
    std::vector<Weight> frontier{lambda};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier)
            for (const Root& a : gens) {
                Weight r = reflect(w, a);
                if (orbit.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    return orbit;
}

/// Dominant representative of λ w.r.t. the given simple system: repeatedly
/// applies a simple reflection with negative pairing.
inline Weight dominant_rep(const Weight& lambda, const std::vector<Root>& simples) {
    Weight w = lambda;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const Root& a : simples)
            if (pairing(w, a) < Rat(0)) {
                w = reflect(w, a);
                moved = true;
            }
    }
    return w;
}

/// Like dominant_rep but also produces a word of simple reflections such
/// that applying them to the dominant representative, in word order,
/// recovers λ.
inline Weight dominant_rep_with_word(const Weight& lambda, const std::vector<Root>& simples,
                                     std::vector<Root>& word) {
    word.clear();
    Weight w = lambda;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const Root& a : simples)
            if (pairing(w, a) < Rat(0)) {
                w = reflect(w, a);
                word.push_back(a);
                moved = true;
            }
    }
    std::reverse(word.begin(), word.end());
    return w;
}

} // namespace limlie
