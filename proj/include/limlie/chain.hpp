#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "limlie/linalg.hpp"
#include "limlie/parabolic.hpp"
#include "limlie/root_system.hpp"

namespace limlie {

/// A chain of subspaces of ℚ^d from 0 to ℚ^d, each stored as a reduced
/// row-echelon basis; strictly increasing.
class Flag {
public:
    Flag(std::size_t dim, std::vector<std::vector<QVec>> member_bases) : dim_(dim) {
        for (auto& basis : member_bases) {
            RowSpace s(dim);
            for (auto& v : basis)
                if (!s.insert(v) && !qvec_is_zero(v))
                    throw std::invalid_argument("Flag: dependent basis vector supplied");
            members_.push_back(std::move(s));
        }
        for (std::size_t k = 0; k + 1 < members_.size(); ++k) {
            if (members_[k].dim() >= members_[k + 1].dim() ||
                !members_[k + 1].contains_space(members_[k]))
                throw std::invalid_argument("Flag: members must strictly increase");
        }
        if (members_.empty() || members_.front().dim() != 0 || members_.back().dim() != dim_)
            throw std::invalid_argument("Flag: chain must run from 0 to the full space");
    }

    static Flag complete_from_ordered_basis(const std::vector<QVec>& basis) {
        // subspaces spanned by suffixes of the basis
        std::size_t d = basis.size();
        std::vector<std::vector<QVec>> members(d + 1);
        for (std::size_t k = 0; k <= d; ++k)
            for (std::size_t j = d - k; j < d; ++j) members[k].push_back(basis[j]);
        return Flag(d, members);
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return members_.size(); }
    const RowSpace& member(std::size_t k) const { return members_[k]; }

    /// Every consecutive gap has codimension one (and the chain runs 0..ℚ^d),
    /// i.e. the chain is maximal; at finite dimension this is also exactly
    /// what it takes to be basic.
    bool is_complete() const {
        if (members_.size() != dim_ + 1) return false;
        for (std::size_t k = 0; k < members_.size(); ++k)
            if (members_[k].dim() != k) return false;
        return true;
    }

    friend bool operator==(const Flag& a, const Flag& b) {
        if (a.dim_ != b.dim_ || a.members_.size() != b.members_.size()) return false;
        for (std::size_t k = 0; k < a.members_.size(); ++k)
            if (!(a.members_[k] == b.members_[k])) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<RowSpace> members_;
};

/// One sign vector per codimension-1 gap: a vector of the larger subspace
/// outside the smaller, declaring the positive half-space.
struct Orientation {
    std::vector<QVec> signs;
};

inline void check_orientation(const Flag& f, const Orientation& o) {
    if (!f.is_complete()) throw std::invalid_argument("orientation applies to maximal chains");
    if (o.signs.size() != f.dim()) throw std::invalid_argument("orientation: one sign vector per gap");
    for (std::size_t k = 0; k < f.dim(); ++k) {
        if (!f.member(k + 1).contains(o.signs[k]) || f.member(k).contains(o.signs[k]))
            throw std::invalid_argument("orientation: sign vector " + std::to_string(k) +
                                        " must lie in the gap it labels");
    }
}

/// Lemma A1 direction 1: the unique basic subchain of a maximal chain. At
/// finite dimension maximal chains are complete flags and every consecutive
/// pair already has codimension one, so the subchain is the chain itself.
inline Flag basic_subchain(const Flag& f) {
    if (!f.is_complete()) throw std::invalid_argument("basic_subchain: chain is not maximal");
    return f;
}

/// Lemma A1 direction 2: the unique maximal chain containing a basic chain
/// (identity on complete flags; anything else is not basic at finite
/// dimension, e.g. 0 ⊂ ℚ² has a gap of codimension two).
inline Flag maximal_from_basic(const Flag& f) {
    if (!f.is_complete()) throw std::invalid_argument("maximal_from_basic: chain is not basic");
    return f;
}

/// Sign of v under the ℝ-linear order induced by an oriented maximal chain:
/// 0 for v = 0, otherwise the sign of v against the sign vector of the
/// unique gap containing v.
inline int order_sign(const Flag& f, const Orientation& o, const QVec& v) {
    check_orientation(f, o);
    if (qvec_is_zero(v)) return 0;
    std::size_t k = 0;
    while (!f.member(k + 1).contains(v)) ++k;
    // v ≡ c · signs[k] modulo member(k); sign of c decides
    QVec r = f.member(k).reduce(v);
    QVec s = f.member(k).reduce(o.signs[k]);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!s[i].is_zero()) {
            Rat c = r[i] / s[i];
            return c.sign();
        }
    throw std::logic_error("order_sign: gap sign vector reduced to zero");
}

/// The oriented maximal flag whose induced order is the lexicographic order
/// of the given basis, first vector most significant: subspaces are suffix
/// spans, sign vectors the basis vectors themselves.
inline std::pair<Flag, Orientation> flag_from_lex_order(const std::vector<QVec>& basis) {
    if (basis.empty()) throw std::invalid_argument("flag_from_lex_order: empty basis");
    std::size_t d = basis[0].size();
    if (basis.size() != d) throw std::invalid_argument("flag_from_lex_order: need d vectors in dimension d");
    RowSpace all(d, basis);
    if (all.dim() != d) throw std::invalid_argument("flag_from_lex_order: vectors do not form a basis");
    Flag f = Flag::complete_from_ordered_basis(basis);
    Orientation o;
    for (std::size_t k = 0; k < d; ++k) o.signs.push_back(basis[d - 1 - k]);
    return {std::move(f), std::move(o)};
}

/// Default identification of ⟨Δ_n⟩_ℝ with ℚ^d: consecutive differences for
/// family A (d = n−1), coordinate vectors otherwise (d = n).
inline std::vector<Weight> span_basis(Family f, int n) {
    std::vector<Weight> basis;
    if (f == Family::A)
        for (int i = 1; i < n; ++i) basis.push_back(Weight::basis(i) - Weight::basis(i + 1));
    else
        for (int i = 1; i <= n; ++i) basis.push_back(Weight::basis(i));
    return basis;
}

inline std::size_t span_dim(Family f, int n) { return f == Family::A ? std::size_t(n - 1) : std::size_t(n); }

/// Coordinates of a root in the default span basis.
inline QVec root_coords_in_span(Family f, int n, const Root& alpha) {
    if (f != Family::A) {
        QVec v(static_cast<std::size_t>(n));
        for (int k = 0; k < alpha.term_count(); ++k) {
            if (alpha.term(k).index > n) throw std::invalid_argument("root outside the rank");
            v[std::size_t(alpha.term(k).index - 1)] = Rat(alpha.term(k).coeff);
        }
        return v;
    }
    // ε_i − ε_j = Σ_{k=i}^{j−1} (ε_k − ε_{k+1}) for i < j; coefficients are
    // prefix sums of the coordinates
    QVec v(std::size_t(n - 1));
    Rat acc;
    for (int k = 1; k < n; ++k) {
        acc += Rat(alpha.coeff(k));
        v[std::size_t(k - 1)] = acc;
    }
    if ((acc + Rat(alpha.coeff(n))) != Rat(0) || alpha.max_index() > n)
        throw std::invalid_argument("root outside the rank");
    return v;
}

/// Prop A1 route: an oriented maximal chain in ⟨Δ_n⟩_ℝ signs every root,
/// yielding a triangular decomposition (Δ⁰ empty).
inline RootSplit triangular_from_flag(const Flag& f, const Orientation& o, Family fam, int n) {
    check_rank(fam, n);
    if (f.dim() != span_dim(fam, n))
        throw std::invalid_argument("triangular_from_flag: flag dimension does not match the root span");
    RootSplit out;
    for (const Root& a : roots_at_rank(fam, n)) {
        int s = order_sign(f, o, root_coords_in_span(fam, n, a));
        if (s == 0) throw std::logic_error("maximal flag signed a root to 0");
        (s > 0 ? out.plus : out.minus).push_back(a);
    }
    return out;
}

/// Thm Ap10 route: a V′-maximal oriented chain (given by the quotient flag
/// in canonical quotient coordinates) yields a parabolic decomposition with
/// Δ⁰ = Δ ∩ V′.
inline RootSplit parabolic_from_partial_flag(const std::vector<QVec>& vprime_basis,
                                             const Flag& quotient_flag, const Orientation& o,
                                             Family fam, int n) {
    check_rank(fam, n);
    std::size_t d = span_dim(fam, n);
    RowSpace vprime(d, vprime_basis);
    if (quotient_flag.dim() != d - vprime.dim())
        throw std::invalid_argument("parabolic_from_partial_flag: quotient flag dimension mismatch");
    RootSplit out;
    for (const Root& a : roots_at_rank(fam, n)) {
        QVec coords = root_coords_in_span(fam, n, a);
        if (vprime.contains(coords)) {
            out.zero.push_back(a);
            continue;
        }
        QVec image = vprime.quotient_coords(coords);
        int s = order_sign(quotient_flag, o, image);
        if (s == 0)
            throw std::invalid_argument("chain is not V'-maximal for the root system: root " +
                                        a.str() + " has zero image sign");
        (s > 0 ? out.plus : out.minus).push_back(a);
    }
    return out;
}

} // namespace limlie
