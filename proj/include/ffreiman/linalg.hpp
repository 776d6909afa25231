#pragma once

// Exact echelon algebra: an incremental reduced echelon basis of polynomials
// (pivoting on the leading coefficient) and small dense nullspace solves.

#include <map>
#include <optional>
#include <vector>

#include "poly.hpp"

namespace ffreiman {

/// Reduced row echelon basis of a finite-dimensional subspace of K[x].
/// Each row has leading coefficient 1 at its pivot degree, and every pivot
/// degree appears in no other row.
template <class F>
class PolyEchelon {
   public:
    using P = Poly<F>;
    using T = typename F::value_type;

    PolyEchelon() = default;
    explicit PolyEchelon(F field) : field_(std::move(field)) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    const F& field() const noexcept { return field_; }

    /// Remainder of v after eliminating every pivot.
    P reduce(P v) const {
        for (int d = v.degree(); d >= 0 && !v.is_zero(); --d) {
            const T c = v.coeff(d);
            if (c.is_zero()) continue;
            auto it = rows_.find(d);
            if (it != rows_.end()) v -= it->second * c;
        }
        return v;
    }

    bool contains(const P& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span; returns false when v was already dependent.
    bool insert(const P& v) {
        P r = reduce(v);
        if (r.is_zero()) return false;
        r = r.monic();
        const int d = r.degree();
        for (auto& [deg, row] : rows_) {
            const T c = row.coeff(d);
            if (!c.is_zero()) row -= r * c;
        }
        rows_.emplace(d, std::move(r));
        return true;
    }

    /// Rows ordered by strictly decreasing pivot degree.
    std::vector<P> rows_descending() const {
        std::vector<P> out;
        out.reserve(rows_.size());
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.push_back(it->second);
        return out;
    }

    std::vector<int> pivots_ascending() const {
        std::vector<int> out;
        for (const auto& [d, row] : rows_) out.push_back(d);
        return out;
    }

   private:
    F field_{};
    std::map<int, P> rows_;
};

/// Dense matrix over F with row reduction helpers.
template <class F>
class Matrix {
   public:
    using T = typename F::value_type;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
            const T inv = at(r, c).inverse();
            for (std::size_t k = c; k < cols_; ++k) at(r, k) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                const T f = at(i, c);
                for (std::size_t k = c; k < cols_; ++k) at(i, k) -= f * at(r, k);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    /// Basis of {v : A v = 0}.
    std::vector<std::vector<T>> nullspace() const {
        Matrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<T>> out;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<T> v(cols_, field_.zero());
            v[free] = field_.one();
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
            out.push_back(std::move(v));
        }
        return out;
    }

   private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

}  // namespace ffreiman
