#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pba/field.hpp"

namespace pba {

/// Dense matrix over an exact scalar type (GF(p) or rationals).
///
/// All entries share one field tag; elimination is exact.
template <class K>
class Matrix {
public:
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    Matrix() : rows_(0), cols_(0), tag_() {}
    Matrix(int rows, int cols, Tag tag)
        : rows_(rows), cols_(cols), tag_(tag), data_(static_cast<size_t>(rows) * cols, Ops::zero(tag)) {}

    static Matrix identity(int n, Tag tag) {
        Matrix m(n, n, tag);
        for (int i = 0; i < n; ++i) m.at(i, i) = Ops::one(tag);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Tag tag() const { return tag_; }

    K& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix c = a;
        for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] + b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix c = a;
        for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] - b.data_[i];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix c(a.rows_, b.cols_, a.tag_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (Ops::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const K& bkj = b.at(k, j);
                    if (Ops::is_zero(bkj)) continue;
                    c.at(i, j) = c.at(i, j) + aik * bkj;
                }
            }
        return c;
    }
    Matrix operator*(const K& s) const {
        Matrix c = *this;
        for (auto& x : c.data_) x = x * s;
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, tag_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
        std::vector<K> out(rows_, Ops::zero(tag_));
        for (int i = 0; i < rows_; ++i) {
            K acc = Ops::zero(tag_);
            for (int j = 0; j < cols_; ++j)
                if (!Ops::is_zero(at(i, j)) && !Ops::is_zero(v[j])) acc = acc + at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!Ops::is_zero(x)) return false;
        return true;
    }

    struct RrefResult {
        Matrix reduced;
        std::vector<int> pivots;
        int rank = 0;
    };

    /// Reduced row echelon form; the input is left untouched.
    RrefResult rref() const {
        Matrix m = *this;
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int sel = -1;
            for (int i = row; i < rows_; ++i)
                if (!Ops::is_zero(m.at(i, col))) { sel = i; break; }
            if (sel < 0) continue;
            m.swap_rows(sel, row);
            K piv_inv = Ops::inv(m.at(row, col));
            for (int j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * piv_inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const K f = m.at(i, col);
                if (Ops::is_zero(f)) continue;
                for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return RrefResult{std::move(m), std::move(pivots), row};
    }

    int rank() const { return rref().rank; }

    /// Basis of the right null space, one vector per non-pivot column.
    std::vector<std::vector<K>> kernel() const {
        RrefResult r = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : r.pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, Ops::zero(tag_));
            v[free] = Ops::one(tag_);
            for (size_t pi = 0; pi < r.pivots.size(); ++pi)
                v[r.pivots[pi]] = -K(r.reduced.at(static_cast<int>(pi), free));
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void check_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    int rows_, cols_;
    Tag tag_;
    std::vector<K> data_;
};

/// One-time factorization of A for repeated exact solves of A x = b.
///
/// Stores rref([A | I]); solving is a recorded-elimination matvec plus a
/// consistency check on the non-pivot rows.
template <class K>
class LinSolver {
public:
    using Ops = FieldOps<K>;
    using Tag = typename Ops::Tag;

    explicit LinSolver(const Matrix<K>& a) : rows_(a.rows()), cols_(a.cols()), tag_(a.tag()) {
        Matrix<K> aug(rows_, cols_ + rows_, tag_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = a.at(i, j);
            aug.at(i, cols_ + i) = Ops::one(tag_);
        }
        auto r = aug.rref();
        // rref of the augmented block is driven by A's columns first, so the
        // pivots within the first `cols_` columns are exactly A's pivots.
        red_ = std::move(r.reduced);
        for (int p : r.pivots)
            if (p < cols_) pivots_.push_back(p);
        rank_ = static_cast<int>(pivots_.size());
    }

    int rank() const { return rank_; }

    /// Solves A x = b exactly; returns nullopt when inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("LinSolver: rhs length mismatch");
        // y = E b where E is the recorded row transform
        std::vector<K> y(rows_, Ops::zero(tag_));
        for (int i = 0; i < rows_; ++i) {
            K acc = Ops::zero(tag_);
            for (int j = 0; j < rows_; ++j) {
                const K& e = red_.at(i, cols_ + j);
                if (!Ops::is_zero(e) && !Ops::is_zero(b[j])) acc = acc + e * b[j];
            }
            y[i] = acc;
        }
        std::vector<K> x(cols_, Ops::zero(tag_));
        for (int i = 0; i < rank_; ++i) x[pivots_[i]] = y[i];
        // consistency: rows past the rank must vanish, and the reconstructed
        // combination must reproduce b on non-pivot structure as well
        for (int i = rank_; i < rows_; ++i)
            if (!Ops::is_zero(y[i])) return std::nullopt;
        // x currently expresses b in terms of pivot columns assuming free
        // variables are 0; verify rows of rref: row i says x[piv_i] + sum over
        // free columns = y[i], free vars are zero so this is exact.
        return x;
    }

private:
    int rows_, cols_, rank_ = 0;
    Tag tag_;
    Matrix<K> red_;
    std::vector<int> pivots_;
};

} // namespace pba
