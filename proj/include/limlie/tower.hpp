#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limlie/charfm.hpp"
#include "limlie/hull.hpp"
#include "limlie/parabolic.hpp"

namespace limlie {

/// Eventual-stabilization verdicts: yes carries the stabilization index,
/// negative and undetermined verdicts carry the probe bound.
struct Verdict {
    enum class Kind { Yes, NoUpTo, UndeterminedUpTo } kind = Kind::UndeterminedUpTo;
    int index = 0;

    static Verdict yes(int n0) { return {Kind::Yes, n0}; }
    static Verdict no_up_to(int N) { return {Kind::NoUpTo, N}; }
    static Verdict undetermined(int N) { return {Kind::UndeterminedUpTo, N}; }

    std::string str() const {
        switch (kind) {
            case Kind::Yes: return "yes(" + std::to_string(index) + ")";
            case Kind::NoUpTo: return "no-up-to(" + std::to_string(index) + ")";
            case Kind::UndeterminedUpTo: return "undetermined-up-to(" + std::to_string(index) + ")";
        }
        throw std::logic_error("Verdict::str");
    }
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// A coherent sequence of finite-rank highest-weight data presenting a
/// direct-limit module. Rules are closed-form so any rank materializes.
struct Tower {
    enum class Class { Integrable, VermaLike };
    enum class Rule { Example3, Example4, Example5, Cuspidal, Table };

    Family family = Family::A;
    Class cls = Class::Integrable;
    Rule rule = Rule::Table;
    int start_rank = 2;
    std::optional<BorelSpec> fixed_borel;  // all rules except Cuspidal
    std::map<int, Weight> table;           // Table rule only

    static Tower example3() {
        Tower t;
        t.rule = Rule::Example3;
        t.cls = Class::Integrable;
        t.start_rank = 2;
        t.fixed_borel = BorelSpec(Family::A, KeyGenerator::descending());
        return t;
    }
    static Tower example4() {
        Tower t;
        t.rule = Rule::Example4;
        t.cls = Class::Integrable;
        t.start_rank = 3;
        t.fixed_borel = BorelSpec(Family::A, KeyGenerator::descending());
        return t;
    }
    static Tower example5() {
        Tower t;
        t.rule = Rule::Example5;
        t.cls = Class::VermaLike;
        t.start_rank = 3;
        t.fixed_borel = BorelSpec(Family::A, KeyGenerator::descending());
        return t;
    }
    static Tower cuspidal() {
        Tower t;
        t.rule = Rule::Cuspidal;
        t.cls = Class::Integrable;
        t.start_rank = 2;
        return t;
    }
    static Tower from_table(Family f, BorelSpec b, Class c, std::map<int, Weight> entries) {
        Tower t;
        t.family = f;
        t.rule = Rule::Table;
        t.cls = c;
        t.fixed_borel = std::move(b);
        t.table = std::move(entries);
        t.start_rank = t.table.empty() ? 2 : t.table.begin()->first;
        return t;
    }

    BorelSpec borel_at(int n) const {
        if (rule == Rule::Cuspidal) {
            // the order ε_2 < ε_3 < … < ε_n < ε_1
            std::map<int, Rat> keys{{1, Rat(n)}};
            for (int j = 2; j <= n; ++j) keys[j] = Rat(j - 1);
            return BorelSpec(Family::A, KeyGenerator::explicit_table(keys));
        }
        if (!fixed_borel) throw std::logic_error("tower has no Borel rule");
        return *fixed_borel;
    }

    Weight lambda_at(int n) const {
        if (n < start_rank) throw std::invalid_argument("tower starts at rank " + std::to_string(start_rank));
        switch (rule) {
            case Rule::Example3: {
                // ε_1 + … + ε_{n−1} − (n−1) ε_n
                Weight w;
                for (int i = 1; i < n; ++i) w.set(i, Rat(1));
                w.set(n, Rat(-(n - 1)));
                return w;
            }
            case Rule::Example4: {
                Weight w;
                w.set(1, Rat(1));
                w.set(n, Rat(-1));
                return w;
            }
            case Rule::Example5: {
                // coordinates 3^{−i}: every pairing at rank n avoids ℤ
                Weight w;
                long long p = 1;
                for (int i = 1; i <= n; ++i) {
                    p *= 3;
                    w.set(i, Rat(1, p));
                }
                return w;
            }
            case Rule::Cuspidal: {
                Weight w;
                w.set(1, Rat(n));
                w.set(2, Rat(-n));
                return w;
            }
            case Rule::Table: {
                auto it = table.find(n);
                if (it == table.end())
                    throw std::invalid_argument("tower table has no entry for rank " + std::to_string(n));
                return it->second;
            }
        }
        throw std::logic_error("Tower::lambda_at");
    }

    std::string rule_name() const {
        switch (rule) {
            case Rule::Example3: return "example3";
            case Rule::Example4: return "example4";
            case Rule::Example5: return "example5";
            case Rule::Cuspidal: return "cuspidal";
            case Rule::Table: return "table";
        }
        throw std::logic_error("Tower::rule_name");
    }
};

struct TowerReport {
    struct Finding {
        int rank;
        std::string what;
    };
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
};

/// Checks the class invariant at each rank ≤ N and, for integrable towers,
/// the Thm 4.1(iii) edge condition λ_n ∈ edge(conv(W_{n+1}·λ_{n+1})).
inline TowerReport validate_tower(const Tower& t, int N) {
    TowerReport rep;
    for (int n = t.start_rank; n <= N; ++n) {
        Weight lam = t.lambda_at(n);
        BorelSpec b = t.borel_at(n);
        if (t.cls == Tower::Class::Integrable) {
            if (!is_integral(t.family, lam))
                rep.findings.push_back({n, "lambda_" + std::to_string(n) + " is not an integral weight"});
            if (!is_dominant(truncate(lam, n), positive_roots(b, n)))
                rep.findings.push_back({n, "lambda_" + std::to_string(n) + " is not dominant for the rank-" + std::to_string(n) + " Borel"});
            if (n < N && !edge_test(t.family, n + 1, t.lambda_at(n + 1), lam))
                rep.findings.push_back({n, "lambda_" + std::to_string(n) + " is not on an edge of the rank-" + std::to_string(n + 1) + " hull"});
        } else {
            for (const Root& a : roots_at_rank(t.family, n))
                if (pairing(lam, a).is_integer()) {
                    rep.findings.push_back({n, "lambda_" + std::to_string(n) + " pairs integrally with " + a.str()});
                    break;
                }
        }
    }
    return rep;
}

/// Thm 4.2(ii) membership: μ ∈ ∪_{n ≤ N} C^{λ_n}, monotone in N.
inline bool tower_support_contains(const Tower& t, const Weight& mu, int N) {
    if (t.cls != Tower::Class::Integrable)
        throw std::invalid_argument("tower_support_contains: hull law applies to integrable towers only");
    for (int n = t.start_rank; n <= N; ++n)
        if (hull_support_contains(t.family, n, t.lambda_at(n), mu)) return true;
    return false;
}

/// Closed-form W-orbit equality of g-weights. Family A compares override
/// multisets after tail normalization; B/C compare |value| multisets with
/// the tail class handled; D additionally constrains sign-change parity.
inline bool orbit_equivalent(Family f, const Weight& lambda, const Weight& mu) {
    if (f == Family::A) {
        Weight a = canonicalize(f, lambda), b = canonicalize(f, mu);
        std::multiset<Rat> ma, mb;
        for (auto& [i, v] : a.overrides()) ma.insert(v);
        for (auto& [i, v] : b.overrides()) mb.insert(v);
        return ma == mb;
    }
    if (!(lambda.tail() == mu.tail())) return false;
    const Rat t = lambda.tail();
    std::multiset<Rat> ma, mb;
    for (auto& [i, v] : lambda.overrides())
        if (!(v == -t)) ma.insert(v.abs());
    for (auto& [i, v] : mu.overrides())
        if (!(v == -t)) mb.insert(v.abs());
    if (ma != mb) return false;
    if (f != Family::D) return true;
    // parity of the sign flips is free when a zero coordinate exists
    if (t.is_zero()) return true;
    for (auto& [i, v] : lambda.overrides())
        if (v.is_zero()) return true;
    long long flips = 0;
    auto count_neg = [&](const Weight& w, const Rat& rep) {
        long long c = 0;
        for (auto& [i, v] : w.overrides())
            if (v == rep) ++c;
        return c;
    };
    std::set<Rat> classes;
    for (auto& [i, v] : lambda.overrides()) classes.insert(v.abs());
    for (auto& [i, v] : mu.overrides()) classes.insert(v.abs());
    for (const Rat& c : classes) {
        Rat rep = (c == t.abs()) ? -t : -c;  // the representative a flip creates or removes
        flips += count_neg(lambda, rep) - count_neg(mu, rep);
    }
    return flips % 2 == 0;
}

/// Thm 4.2(iii): the tower presents a highest weight module iff the λ_n
/// eventually stay in one W-orbit. yes(n₀) needs the whole window [n₀, N]
/// to sit in the orbit of λ_{n₀} with n₀ < N.
inline Verdict hw_equivalence(const Tower& t, int N) {
    if (t.cls != Tower::Class::Integrable)
        throw std::invalid_argument("hw_equivalence: integrable towers only");
    if (N <= t.start_rank) return Verdict::undetermined(N);
    for (int n0 = t.start_rank; n0 < N; ++n0) {
        bool all = true;
        for (int n = n0 + 1; n <= N; ++n)
            if (!orbit_equivalent(t.family, t.lambda_at(n), t.lambda_at(n0))) {
                all = false;
                break;
            }
        if (all) return Verdict::yes(n0);
    }
    return Verdict::no_up_to(N);
}

/// Thm 4.2(iv): isomorphism is eventual equality of the λ_n.
inline Verdict towers_isomorphic(const Tower& t1, const Tower& t2, int N) {
    if (t1.family != t2.family) throw std::invalid_argument("towers_isomorphic: family mismatch");
    int start = std::max(t1.start_rank, t2.start_rank);
    if (N < start) return Verdict::undetermined(N);
    std::optional<int> n0;
    for (int n = N; n >= start; --n) {
        Weight a = canonicalize(t1.family, t1.lambda_at(n));
        Weight b = canonicalize(t1.family, t2.lambda_at(n));
        if (a == b)
            n0 = n;
        else
            break;
    }
    if (n0) return Verdict::yes(*n0);
    return Verdict::no_up_to(N);
}

/// Thm 4.20(ii): the maximal parabolic p_λ ⊃ b along which the highest
/// weight line stays one-dimensional — the key classes merge exactly the
/// symbols connected by simple roots with ⟨λ, α⟩ = 0. Each merged class is
/// an interval of the symbol order; its key becomes the interval midpoint.
inline ParabolicSpec highest_weight_parabolic(const BorelSpec& b, const Weight& lambda, int n) {
    check_rank(b.family, n);
    auto bd = basis_data(b, n);
    Weight lam = truncate(lambda, n);
    if (!is_dominant(lam, positive_roots(b, n)))
        throw std::invalid_argument("highest_weight_parabolic: weight not dominant");

    // symbols and union-find over them
    std::vector<Sym> syms;
    if (b.family == Family::A)
        for (int i = 1; i <= n; ++i) syms.push_back(Sym{i, 1});
    else {
        syms.push_back(Sym{0, 0});
        for (int i = 1; i <= n; ++i) {
            syms.push_back(Sym{i, 1});
            syms.push_back(Sym{i, -1});
        }
    }
    std::map<Sym, Sym> parent;
    for (auto& s : syms) parent[s] = s;
    std::function<Sym(Sym)> find = [&](Sym s) {
        while (!(parent[s] == s)) s = parent[s] = parent[parent[s]];
        return s;
    };
    auto unite = [&](Sym a, Sym c) { parent[find(a)] = find(c); };

    auto neg = [](Sym s) { return Sym{s.index, -s.sign}; };
    for (const Root& alpha : bd.simples) {
        if (!pairing(lam, alpha).is_zero()) continue;
        // α as a difference of two symbols
        std::vector<std::pair<Sym, Sym>> merges;
        if (alpha.term_count() == 1) {
            auto t0 = alpha.term(0);
            if (std::abs(t0.coeff) == 1)
                merges.push_back({Sym{t0.index, t0.coeff}, Sym{0, 0}});  // ±ε_i = ±ε_i − 0
            else
                merges.push_back({Sym{t0.index, t0.coeff / 2}, Sym{t0.index, -t0.coeff / 2}});  // ±2ε_i
        } else {
            auto t0 = alpha.term(0), t1 = alpha.term(1);
            merges.push_back({Sym{t0.index, t0.coeff}, Sym{t1.index, -t1.coeff}});
        }
        for (auto& [x, y] : merges) {
            unite(x, y);
            if (b.family != Family::A) unite(neg(x), neg(y));
        }
    }
    if (b.family != Family::A)
        for (auto& s : syms)
            if (s.sign == 1 && find(s) == find(neg(s))) unite(s, Sym{0, 0});

    // interval midpoints as the new keys
    std::map<Sym, std::pair<Rat, Rat>> extent;  // class rep → (min, max) of original keys
    for (auto& s : syms) {
        Rat k = b.sym_key(s);
        Sym r = find(s);
        auto it = extent.find(r);
        if (it == extent.end())
            extent[r] = {k, k};
        else {
            if (k < it->second.first) it->second.first = k;
            if (k > it->second.second) it->second.second = k;
        }
    }
    std::map<int, Rat> keys;
    for (int i = 1; i <= n; ++i) {
        auto [lo, hi] = extent.at(find(Sym{i, 1}));
        keys[i] = (lo + hi) / Rat(2);
    }
    ParabolicSpec p(b.family, KeyGenerator::explicit_table(keys));
    require_valid_parabolic(p);
    return p;
}

} // namespace limlie
