#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "limlie/rational.hpp"

namespace limlie {

using QVec = std::vector<Rat>;

inline QVec qvec_zero(std::size_t d) { return QVec(d); }

inline bool qvec_is_zero(const QVec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec operator*(const Rat& c, const QVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

/// A subspace of ℚ^d stored as a reduced row-echelon basis, which makes
/// equality of subspaces plain row-list equality.
class RowSpace {
public:
    explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}
    RowSpace(std::size_t ambient, const std::vector<QVec>& vectors) : ambient_(ambient) {
        for (auto& v : vectors) insert(v);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduces v by the basis; the remainder is 0 iff v lies in the space.
    QVec reduce(QVec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("RowSpace: dimension mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = v[pivots_[r]];
            if (!c.is_zero()) v = v - c * rows_[r];
        }
        return v;
    }

    bool contains(const QVec& v) const { return qvec_is_zero(reduce(v)); }

    /// Adds v to the spanning set; returns true when the dimension grew.
    bool insert(const QVec& v) {
        QVec red = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && red[p].is_zero()) ++p;
        if (p == ambient_) return false;
        red = (Rat(1) / red[p]) * red;
        // re-reduce existing rows by the new one
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = rows_[r][p];
            if (!c.is_zero()) rows_[r] = rows_[r] - c * red;
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), red);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    bool contains_space(const RowSpace& other) const {
        for (auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const RowSpace& a, const RowSpace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

    /// Coordinates of v at the non-pivot columns after reduction: the
    /// canonical coordinates of v + this space in the quotient ℚ^d / space.
    QVec quotient_coords(const QVec& v) const {
        QVec red = reduce(v);
        QVec out;
        std::size_t r = 0;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (r < pivots_.size() && pivots_[r] == c) {
                ++r;
                continue;
            }
            out.push_back(red[c]);
        }
        return out;
    }

private:
    std::size_t ambient_;
    std::vector<QVec> rows_;         // RREF, unit pivots, sorted by pivot column
    std::vector<std::size_t> pivots_;
};

/// Coefficients expressing v over the given (independent) vectors, when v
/// lies in their span.
inline std::optional<QVec> solve_in_span(const std::vector<QVec>& basis, const QVec& v) {
    if (basis.empty()) return qvec_is_zero(v) ? std::optional<QVec>(QVec{}) : std::nullopt;
    std::size_t d = basis[0].size();
    // Gaussian elimination on the augmented system [basisᵀ | v]
    std::size_t m = basis.size();
    std::vector<QVec> aug(d, QVec(m + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = basis[j][i];
        aug[i][m] = v[i];
    }
    std::vector<std::optional<std::size_t>> pivot_row(m);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < d; ++col) {
        std::size_t sel = row;
        while (sel < d && aug[sel][col].is_zero()) ++sel;
        if (sel == d) continue;
        std::swap(aug[sel], aug[row]);
        Rat inv = Rat(1) / aug[row][col];
        aug[row] = inv * aug[row];
        for (std::size_t r = 0; r < d; ++r)
            if (r != row && !aug[r][col].is_zero()) aug[r] = aug[r] - aug[r][col] * aug[row];
        pivot_row[col] = row++;
    }
    QVec coeff(m);
    for (std::size_t j = 0; j < m; ++j) coeff[j] = pivot_row[j] ? aug[*pivot_row[j]][m] : Rat(0);
    // consistency: rows beyond the pivots must have zero rhs
    for (std::size_t r = row; r < d; ++r)
        if (!aug[r][m].is_zero()) return std::nullopt;
    // free columns mean dependent "basis"; verify the combination reproduces v
    QVec check(d);
    for (std::size_t j = 0; j < m; ++j) check = check + coeff[j] * basis[j];
    if (check != v) return std::nullopt;
    return coeff;
}

} // namespace limlie
