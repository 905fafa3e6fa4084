// matrix.hpp — small dense matrices over a Scalar domain (0-based indices).

#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace nfa {

class Matrix {
public:
    Matrix(int rows, int cols, const Domain& dom)
        : rows_(rows), cols_(cols), dom_(dom), a_(size_t(rows) * cols, Scalar::zero(dom)) {
        if (rows < 1 || cols < 1) fail(ErrorCode::invalid_argument, "bad matrix shape");
    }

    static Matrix identity(int n, const Domain& dom) {
        Matrix m(n, n, dom);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(dom);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Domain& domain() const { return dom_; }

    Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && dom_ == o.dom_ && a_ == o.a_;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) fail(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
        Matrix r(x.rows_, y.cols_, x.dom_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Scalar& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const Scalar& ykj = y.at(k, j);
                    if (ykj.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + xik * ykj;
                }
            }
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (int(v.size()) != cols_) fail(ErrorCode::dimension_mismatch, "matrix apply shape mismatch");
        std::vector<Scalar> r(size_t(rows_), Scalar::zero(dom_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero() || v[size_t(j)].is_zero()) continue;
                r[size_t(i)] = r[size_t(i)] + at(i, j) * v[size_t(j)];
            }
        return r;
    }

    // Gauss-Jordan inverse; nullopt when singular. Needs a field domain.
    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        Matrix a = *this;
        Matrix inv = identity(rows_, dom_);
        for (int col = 0; col < cols_; ++col) {
            int pivot = -1;
            for (int r = col; r < rows_; ++r)
                if (!a.at(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) return std::nullopt;
            if (pivot != col) {
                for (int c = 0; c < cols_; ++c) {
                    std::swap(a.at(pivot, c), a.at(col, c));
                    std::swap(inv.at(pivot, c), inv.at(col, c));
                }
            }
            Scalar d = a.at(col, col);
            for (int c = 0; c < cols_; ++c) {
                a.at(col, c) = a.at(col, c) / d;
                inv.at(col, c) = inv.at(col, c) / d;
            }
            for (int r = 0; r < rows_; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                Scalar f = a.at(r, col);
                for (int c = 0; c < cols_; ++c) {
                    a.at(r, c) = a.at(r, c) - f * a.at(col, c);
                    inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
                }
            }
        }
        return inv;
    }

private:
    int rows_, cols_;
    Domain dom_;
    std::vector<Scalar> a_;
};

}  // namespace nfa
