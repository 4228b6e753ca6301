#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "qharm/errors.hpp"
#include "qharm/ratfunc.hpp"

namespace qharm {

// Rescale a row of Q(q) entries to reduced integer polynomials: multiply by
// the lcm of the denominators, then strip the common polynomial factor and
// integer content of the numerators. A pure row operation.
inline void normalize_ratfunc_row(RatFuncQ* row, size_t len) {
    QPoly lcm(Int(1));
    bool any = false;
    for (size_t j = 0; j < len; ++j) {
        if (row[j].is_zero()) continue;
        any = true;
        const QPoly& d = row[j].den();
        if (d.degree() == 0 && d.coeff(0) == 1) continue;
        lcm = qpoly_div_exact(lcm * d, qpoly_gcd(lcm, d));
    }
    if (!any) return;
    if (!(lcm.degree() == 0 && lcm.coeff(0) == 1)) {
        RatFuncQ scale{lcm, QPoly(Int(1))};
        for (size_t j = 0; j < len; ++j)
            if (!row[j].is_zero()) row[j] = row[j] * scale;
    }
    QPoly g;
    for (size_t j = 0; j < len; ++j) {
        if (row[j].is_zero()) continue;
        g = g.is_zero() ? row[j].num() : qpoly_gcd(g, row[j].num());
        if (g.degree() == 0 && g.coeff(0) == 1) return;
    }
    if (g.is_zero() || (g.degree() == 0 && g.coeff(0) == 1)) return;
    RatFuncQ inv{QPoly(Int(1)), g};
    for (size_t j = 0; j < len; ++j)
        if (!row[j].is_zero()) row[j] = row[j] * inv;
}

template <class F>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, F{}) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    F& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const F& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    // append the rows of `other` below
    void stack(const ExactMatrix& other) {
        if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
        if (other.cols_ != cols_) throw ShapeMismatch("stack: column count mismatch");
        e_.insert(e_.end(), other.e_.begin(), other.e_.end());
        rows_ += other.rows_;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw ShapeMismatch("apply: size mismatch");
        std::vector<F> out(rows_, F{});
        for (size_t i = 0; i < rows_; ++i) {
            F acc{};
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    // In-place reduction to reduced row echelon form. Pivot choice: first
    // nonzero entry in column order, lowest row index. Returns pivot columns.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t prow = 0;
        for (size_t col = 0; col < cols_ && prow < rows_; ++col) {
            size_t sel = rows_;
            for (size_t i = prow; i < rows_; ++i)
                if (!at(i, col).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == rows_) continue;
            if (sel != prow)
                for (size_t j = 0; j < cols_; ++j) std::swap(e_[sel * cols_ + j], e_[prow * cols_ + j]);
            for (size_t i = 0; i < rows_; ++i) {
                if (i == prow) continue;
                const F& f = at(i, col);
                if (f.is_zero()) continue;
                F ratio = f / at(prow, col);
                for (size_t j = col; j < cols_; ++j)
                    if (!at(prow, j).is_zero()) at(i, j) = at(i, j) - ratio * at(prow, j);
                normalize_row(i);
            }
            pivots.push_back(col);
            ++prow;
        }
        // scale pivot rows so pivots are exactly 1
        for (size_t r = 0; r < pivots.size(); ++r) {
            F p = at(r, pivots[r]);
            if (p == F{1}) continue;
            F inv = F{1} / p;
            for (size_t j = pivots[r]; j < cols_; ++j)
                if (!at(r, j).is_zero()) at(r, j) = at(r, j) * inv;
        }
        return pivots;
    }

    size_t rank() const {
        ExactMatrix copy = *this;
        return copy.rref().size();
    }

private:
    size_t rows_, cols_;
    std::vector<F> e_;

    void normalize_row(size_t i) {
        if constexpr (std::is_same_v<F, RatFuncQ>) normalize_ratfunc_row(&e_[i * cols_], cols_);
    }
};

// Basis of the right kernel {v : M v = 0}. Canonical: the basis matrix
// (vectors as rows) is itself in reduced echelon form w.r.t. column order.
template <class F>
std::vector<std::vector<F>> nullspace(ExactMatrix<F> m) {
    std::vector<size_t> pivots = m.rref();
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(n, F{});
        v[f] = F{1};
        for (size_t r = 0; r < pivots.size(); ++r) {
            const F& x = m.at(r, f);
            if (!x.is_zero()) v[pivots[r]] = F{} - x;
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    ExactMatrix<F> b(basis.size(), n);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < n; ++j) b.at(i, j) = std::move(basis[i][j]);
    b.rref();
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < n; ++j) basis[i][j] = b.at(i, j);
    return basis;
}

// Solve B x = y for each column y of `rhs`, where the columns of `basismat`
// span the admissible space. Throws NotStable on an inconsistent system.
template <class F>
std::vector<std::vector<F>> solve_in_span(const ExactMatrix<F>& basismat, const ExactMatrix<F>& rhs) {
    if (basismat.rows() != rhs.rows()) throw ShapeMismatch("solve_in_span: row mismatch");
    size_t n = basismat.rows(), k = basismat.cols(), t = rhs.cols();
    ExactMatrix<F> aug(n, k + t);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) aug.at(i, j) = basismat.at(i, j);
        for (size_t j = 0; j < t; ++j) aug.at(i, k + j) = rhs.at(i, j);
    }
    std::vector<size_t> pivots = aug.rref();
    for (size_t p : pivots)
        if (p >= k) throw NotStable("solve_in_span: inconsistent system");
    std::vector<std::vector<F>> sols(t, std::vector<F>(k, F{}));
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < t; ++j) sols[j][pivots[r]] = aug.at(r, k + j);
    return sols;
}

}  // namespace qharm
