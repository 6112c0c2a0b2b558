#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "limlie/charfm.hpp"
#include "limlie/parabolic.hpp"
#include "limlie/tower.hpp"

namespace limlie {

/// Four disjoint root predicates materialized at a rank: F (strings bounded
/// both ways), I (unbounded both ways), plus/minus (one-sided).
struct ShadowSets {
    std::set<Root> F, I, plus, minus;

    bool contains_all(Family fam, int n) const {
        auto all = roots_at_rank(fam, n);
        std::size_t total = F.size() + I.size() + plus.size() + minus.size();
        if (total != all.size()) return false;
        for (auto& r : all)
            if (!F.count(r) && !I.count(r) && !plus.count(r) && !minus.count(r)) return false;
        return true;
    }
};

/// The single-root integrability test used on M-simple roots δ; the default
/// is ⟨λ, −δ⟩ ∈ ℤ₊ (validated against the small-rank character oracles).
using IntegrabilityPredicate = std::function<bool(const Weight&, const Root&)>;

inline IntegrabilityPredicate default_integrability() {
    return [](const Weight& lambda, const Root& delta) {
        return pairing(lambda, -delta).is_nonneg_integer();
    };
}

/// b-negative roots at rank n that are M-simple for M = V_b(λ): every
/// decomposition α = β + γ into b-negatives has ⟨λ, β⟩ = 0 or ⟨λ, γ⟩ = 0.
inline std::vector<Root> msimple_roots(const BorelSpec& b, const Weight& lambda, int n) {
    auto pos = positive_roots(b, n);
    std::vector<Root> negatives;
    for (auto& p : pos) negatives.push_back(-p);
    std::set<Root> neg_set(negatives.begin(), negatives.end());
    std::vector<Root> out;
    for (const Root& alpha : negatives) {
        bool simple = true;
        for (const Root& beta : negatives) {
            auto rest = add_coords(alpha, -beta);
            if (!is_root(b.family, rest)) continue;
            std::vector<Root::Term> terms;
            for (auto& [i, c] : rest) terms.push_back({i, c});
            Root gamma = terms.size() == 1 ? Root(terms[0]) : Root(terms[0], terms[1]);
            if (!neg_set.count(gamma)) continue;
            if (!pairing(lambda, beta).is_zero() && !pairing(lambda, gamma).is_zero()) {
                simple = false;
                break;
            }
        }
        if (simple) out.push_back(alpha);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// target ∈ ℤ₊-span of gens, decided exactly with the strictly positive
/// height functional (every candidate coefficient is height-bounded).
inline bool in_nonneg_span(const std::vector<Root>& gens, const std::vector<Rat>& heights,
                           const Weight& target, const Rat& target_height) {
    if (target.is_zero()) return true;
    if (target_height < Rat(0) || gens.empty()) return false;
    std::function<bool(const Weight&, const Rat&, std::size_t)> rec =
        [&](const Weight& residual, const Rat& h, std::size_t k) -> bool {
        if (residual.is_zero()) return true;
        if (k == gens.size() || h < Rat(0)) return false;
        Weight r = residual;
        Rat rh = h;
        while (true) {
            if (rec(r, rh, k + 1)) return true;
            r = r.plus_root(gens[k], Rat(-1));
            rh -= heights[k];
            if (rh < Rat(0)) return false;
            if (r.is_zero()) return true;
        }
    };
    return rec(target, target_height, 0);
}

} // namespace detail

/// Prop 5.2: Σ^int = M-simple roots passing the integrability predicate;
/// the integrable b-negative directions are exactly ⟨Σ^int⟩_ℤ₊ ∩ Δ⁻.
inline std::vector<Root> integrable_negatives(const BorelSpec& b, const Weight& lambda, int n,
                                              const IntegrabilityPredicate& pred = default_integrability()) {
    std::vector<Root> sigma;
    for (const Root& delta : msimple_roots(b, lambda, n))
        if (pred(lambda, delta)) sigma.push_back(delta);
    // heights: the Borel key is strictly negative on Δ⁻; use its negation
    std::vector<Rat> heights;
    for (const Root& d : sigma) heights.push_back(-b.root_key(d));
    std::vector<Root> out;
    for (const Root& p : positive_roots(b, n)) {
        Root alpha = -p;
        Weight target = weight_of_root(alpha);
        if (detail::in_nonneg_span(sigma, heights, target, -b.root_key(alpha))) out.push_back(alpha);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A shadow partition with a rank materializer and provenance.
class ShadowPartition {
public:
    enum class Provenance { FromHw, FromTower, Declared };

    static ShadowPartition from_hw(BorelSpec b, Weight lambda,
                                   IntegrabilityPredicate pred = default_integrability()) {
        ShadowPartition s;
        s.family_ = b.family;
        s.prov_ = Provenance::FromHw;
        s.hw_ = std::make_pair(std::move(b), std::move(lambda));
        s.pred_ = std::move(pred);
        return s;
    }

    static ShadowPartition declared(Family f, std::map<int, ShadowSets> sets) {
        ShadowPartition s;
        s.family_ = f;
        s.prov_ = Provenance::Declared;
        s.stored_ = std::move(sets);
        return s;
    }

    static ShadowPartition from_tower_sets(Family f, std::map<int, ShadowSets> sets) {
        ShadowPartition s;
        s.family_ = f;
        s.prov_ = Provenance::FromTower;
        s.stored_ = std::move(sets);
        return s;
    }

    Family family() const { return family_; }
    Provenance provenance() const { return prov_; }
    const std::optional<std::pair<BorelSpec, Weight>>& hw_data() const { return hw_; }
    const std::map<int, ShadowSets>& stored() const { return stored_; }

    ShadowSets at(int n) const {
        if (prov_ == Provenance::FromHw) {
            const auto& [b, lam] = *hw_;
            ShadowSets out;
            auto integrable = integrable_negatives(b, lam, n, pred_);
            out.F.insert(integrable.begin(), integrable.end());
            for (auto& a : integrable) out.F.insert(-a);
            for (auto& p : positive_roots(b, n)) {
                if (out.F.count(p)) continue;
                out.plus.insert(p);
                out.minus.insert(-p);
            }
            return out;
        }
        auto it = stored_.find(n);
        if (it == stored_.end())
            throw std::invalid_argument("shadow not materialized at rank " + std::to_string(n));
        return it->second;
    }

private:
    Family family_ = Family::A;
    Provenance prov_ = Provenance::Declared;
    std::optional<std::pair<BorelSpec, Weight>> hw_;
    IntegrabilityPredicate pred_;
    std::map<int, ShadowSets> stored_;
};

/// Thm 3.2 closure axioms at rank n; the report lists each violated clause.
struct AxiomReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline AxiomReport check_shadow_axioms(const ShadowPartition& s, int n) {
    AxiomReport rep;
    ShadowSets sets = s.at(n);
    Family fam = s.family();

    if (!sets.contains_all(fam, n)) rep.violations.push_back("the four sets do not partition the rank-" + std::to_string(n) + " roots");
    auto symmetric = [&](const std::set<Root>& xs, const std::set<Root>& ys, const std::string& what) {
        for (auto& a : xs)
            if (!ys.count(-a)) rep.violations.push_back(what + " (root " + a.str() + ")");
    };
    symmetric(sets.F, sets.F, "F is not symmetric");
    symmetric(sets.I, sets.I, "I is not symmetric");
    symmetric(sets.plus, sets.minus, "minus is not the negative of plus");
    symmetric(sets.minus, sets.plus, "plus is not the negative of minus");

    auto sum_of = [&](const Root& a, const Root& b) { return root_sum(fam, a, b); };

    for (auto& a : sets.F)
        for (auto& b : sets.F)
            if (auto c = sum_of(a, b); c && !sets.F.count(*c))
                rep.violations.push_back("F not closed: " + a.str() + " + " + b.str() + " = " + c->str());
    for (auto& a : sets.I)
        for (auto& b : sets.I)
            if (auto c = sum_of(a, b); c && !sets.I.count(*c))
                rep.violations.push_back("I not closed: " + a.str() + " + " + b.str() + " = " + c->str());
    for (auto& a : sets.F)
        for (auto& b : sets.I)
            if (auto c = sum_of(a, b))
                rep.violations.push_back("F + I meets the roots: " + a.str() + " + " + b.str() + " = " + c->str());
    for (auto& a : sets.plus)
        for (auto& b : sets.plus)
            if (auto c = sum_of(a, b); c && !sets.plus.count(*c))
                rep.violations.push_back("plus not closed: " + a.str() + " + " + b.str() + " = " + c->str());
    std::set<Root> fi;
    fi.insert(sets.F.begin(), sets.F.end());
    fi.insert(sets.I.begin(), sets.I.end());
    for (auto& a : fi) {
        for (auto& b : sets.plus)
            if (auto c = sum_of(a, b); c && !sets.plus.count(*c))
                rep.violations.push_back("plus is not an FI-module: " + a.str() + " + " + b.str() + " = " + c->str());
        for (auto& b : sets.minus)
            if (auto c = sum_of(a, b); c && !sets.minus.count(*c))
                rep.violations.push_back("minus is not an FI-module: " + a.str() + " + " + b.str() + " = " + c->str());
    }
    return rep;
}

/// Thm 3.2(iv) and §3: the parabolic p_M = g_M^{FI} ⊕ g_M^+ as a root
/// split, with the cuspidality flag (I = Δ) and the Prop 5.1(ii) note for
/// highest-weight provenance (p_M^int = p_M since I = ∅).
struct ShadowParabolic {
    RootSplit p;
    bool cuspidal = false;
    std::string p_int_note;
};

inline ShadowParabolic shadow_parabolic(const ShadowPartition& s, int n) {
    auto axioms = check_shadow_axioms(s, n);
    if (!axioms.ok())
        throw std::invalid_argument("shadow_parabolic: axiom failure: " + axioms.violations.front());
    ShadowSets sets = s.at(n);
    ShadowParabolic out;
    for (auto& a : sets.F) out.p.zero.push_back(a);
    for (auto& a : sets.I) out.p.zero.push_back(a);
    for (auto& a : sets.plus) out.p.plus.push_back(a);
    for (auto& a : sets.minus) out.p.minus.push_back(a);
    std::sort(out.p.zero.begin(), out.p.zero.end());
    std::sort(out.p.plus.begin(), out.p.plus.end());
    std::sort(out.p.minus.begin(), out.p.minus.end());
    out.cuspidal = sets.I.size() == roots_at_rank(s.family(), n).size();
    if (s.provenance() == ShadowPartition::Provenance::FromHw)
        out.p_int_note = "p_int = p_M (pseudo highest weight: I is empty)";
    return out;
}

/// One root's string-extent record across the probed ranks.
struct StringClassification {
    Root root;
    enum class Type { F, I, Plus, Minus } type = Type::F;
    int stable_window = 0;      // terminal run of equal extents (both sides)
    bool consistent = true;     // identical classification across all sampled bases
    std::string detail;
};

struct TowerShadowReport {
    std::vector<StringClassification> classifications;  // for roots at the base rank
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

namespace detail {

struct Extent {
    std::optional<long long> up, down;  // nullopt = unbounded at this rank
};

/// α-string extents through μ inside the rank-n support of the tower level.
class TowerSupport {
public:
    TowerSupport(const Tower& t, int n) : tower_(t), n_(n), borel_(t.borel_at(n)) {
        lambda_ = t.lambda_at(n);
        positives_ = positive_roots(borel_, n);
        if (t.cls == Tower::Class::Integrable) {
            character_ = freudenthal_character(t.family, n, borel_, lambda_).support();
        } else {
            for (auto& p : positives_) heights_.push_back(bilinear(rho(), p));
        }
    }

    const Weight& lambda() const { return lambda_; }

    bool contains(const Weight& mu) const {
        if (tower_.cls == Tower::Class::Integrable) return character_.count(mu) != 0;
        Weight diff = lambda_ - mu;
        if (!diff.tail().is_zero() || diff.max_index() > n_) return false;
        Rat h;
        for (auto& [i, v] : diff.overrides()) h += v * rho().at(i);
        return in_nonneg_span(positives_, heights_, diff, h);
    }

    Extent string_extent(const Weight& mu, const Root& alpha) const {
        Extent e;
        e.up = walk(mu, alpha);
        e.down = walk(mu, -alpha);
        return e;
    }

private:
    Weight rho() const {
        Weight r;
        for (auto& p : positives_) r = r.plus_root(p, Rat(1, 2));
        return r;
    }

    std::optional<long long> walk(const Weight& mu, const Root& alpha) const {
        if (tower_.cls == Tower::Class::VermaLike) {
            // Verma support is λ − ℤ₊Δ⁺; the string is unbounded exactly in
            // the b-negative directions
            bool negative_dir = borel_.root_key(alpha) < Rat(0);
            if (negative_dir && contains(mu)) return std::nullopt;
        }
        long long k = 0;
        Weight w = mu.plus_root(alpha, Rat(1));
        while (contains(w)) {
            ++k;
            w = w.plus_root(alpha, Rat(1));
            if (k > 10000) throw std::logic_error("string walk runaway");
        }
        return k;
    }

    const Tower& tower_;
    int n_;
    BorelSpec borel_;
    Weight lambda_;
    std::vector<Root> positives_;
    std::set<Weight> character_;
    std::vector<Rat> heights_;
};

} // namespace detail

/// Thm 3.1 at desk scale: classify every base-rank root by string-extent
/// growth across the probed ranks, re-probing from several base weights.
/// Integrable towers sample absolute base weights from the base-rank
/// support (supports nest); verma-like towers sample bases anchored to λ_n
/// (λ_n − δ for fixed small δ).
inline std::pair<ShadowPartition, TowerShadowReport> shadow_of_tower(const Tower& t, int rank_from,
                                                                     int rank_to, int sample_count = 5) {
    if (rank_from < t.start_rank) rank_from = t.start_rank;
    if (rank_to < rank_from + 1)
        throw std::invalid_argument("shadow_of_tower: need at least two probed ranks");
    TowerShadowReport report;

    std::map<int, detail::TowerSupport> supports;
    for (int n = rank_from; n <= rank_to; ++n) supports.emplace(n, detail::TowerSupport(t, n));

    // sample offsets δ: 0 and small ℤ₊-combinations of base-rank positives
    std::vector<Weight> deltas{Weight{}};
    {
        auto base_pos = positive_roots(t.borel_at(rank_from), rank_from);
        for (std::size_t i = 0; i < base_pos.size() && deltas.size() < std::size_t(sample_count); ++i)
            deltas.push_back(weight_of_root(base_pos[i]));
        for (std::size_t i = 0; i + 1 < base_pos.size() && deltas.size() < std::size_t(sample_count); ++i)
            deltas.push_back(weight_of_root(base_pos[i]) + weight_of_root(base_pos[i + 1]));
    }

    bool absolute = t.cls == Tower::Class::Integrable;

    std::map<int, ShadowSets> materialized;
    for (int m = rank_from; m < rank_to; ++m) {
        ShadowSets sets;
        for (const Root& alpha : roots_at_rank(t.family, m)) {
            std::optional<StringClassification::Type> agreed;
            bool consistent = true;
            int window = 0;
            for (const Weight& delta : deltas) {
                std::vector<detail::Extent> extents;
                bool usable = true;
                for (int n = std::max(m, rank_from); n <= rank_to; ++n) {
                    Weight base = absolute ? supports.at(std::max(m, rank_from)).lambda() - delta
                                           : supports.at(n).lambda() - delta;
                    if (!supports.at(n).contains(base)) {
                        usable = false;
                        break;
                    }
                    extents.push_back(supports.at(n).string_extent(base, alpha));
                }
                if (!usable) continue;
                auto side = [&](bool up) {
                    long long prev = -1;
                    int run = 1;
                    bool infinite = false, decreased = false;
                    for (auto& e : extents) {
                        auto v = up ? e.up : e.down;
                        if (!v) {
                            infinite = true;
                            break;
                        }
                        if (prev >= 0) {
                            if (*v == prev)
                                ++run;
                            else
                                run = 1;
                            if (*v < prev) decreased = true;
                        }
                        prev = *v;
                    }
                    struct SideVerdict {
                        bool bounded;
                        int run;
                        bool decreased;
                    };
                    return SideVerdict{!infinite && run >= 2, run, decreased};
                };
                auto u = side(true), d = side(false);
                if (u.decreased || d.decreased)
                    report.problems.push_back("string extents decreased with rank for root " + alpha.str());
                StringClassification::Type ty;
                if (u.bounded && d.bounded)
                    ty = StringClassification::Type::F;
                else if (!u.bounded && !d.bounded)
                    ty = StringClassification::Type::I;
                else if (u.bounded)
                    ty = StringClassification::Type::Plus;  // bounded above, unbounded below
                else
                    ty = StringClassification::Type::Minus;
                if (!agreed)
                    agreed = ty;
                else if (*agreed != ty)
                    consistent = false;
                window = std::max(window, std::min(u.run, d.run));
            }
            if (!agreed) {
                report.problems.push_back("no usable base weight for root " + alpha.str() + " at rank " +
                                          std::to_string(m));
                continue;
            }
            if (!consistent)
                report.problems.push_back("classification of " + alpha.str() +
                                          " depends on the base weight (Thm 3.1 violation)");
            switch (*agreed) {
                case StringClassification::Type::F: sets.F.insert(alpha); break;
                case StringClassification::Type::I: sets.I.insert(alpha); break;
                case StringClassification::Type::Plus: sets.plus.insert(alpha); break;
                case StringClassification::Type::Minus: sets.minus.insert(alpha); break;
            }
            if (m == rank_from)
                report.classifications.push_back({alpha, *agreed, window, consistent, ""});
        }
        materialized[m] = std::move(sets);
    }
    return {ShadowPartition::from_tower_sets(t.family, std::move(materialized)), std::move(report)};
}

} // namespace limlie
