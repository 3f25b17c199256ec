#ifndef MQ_MATRIX_HPP
#define MQ_MATRIX_HPP

#include <vector>

#include "mq/rational.hpp"

namespace mq {

/// Dense rational matrix, row major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rational(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw validation_error("matrix product shape mismatch");
        Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    out(i, j) += a * o(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw validation_error("matrix sum shape mismatch");
        Matrix out(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }

    Matrix operator*(const Rational& s) const {
        Matrix out(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
        return out;
    }

    Rational trace() const {
        if (rows_ != cols_) throw validation_error("trace of non-square matrix");
        Rational t = 0;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Fraction-free (Bareiss) determinant. Denominators are cleared per row
    /// first so the elimination runs over integers.
    Rational determinant() const {
        if (rows_ != cols_) throw validation_error("determinant of non-square matrix");
        const int n = rows_;
        if (n == 0) return 1;
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        Integer scale = 1;
        for (int i = 0; i < n; ++i) {
            Integer lcm = 1;
            for (int j = 0; j < n; ++j) {
                Integer den = (*this)(i, j).get_den();
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            }
            for (int j = 0; j < n; ++j) {
                Rational v = (*this)(i, j) * Rational(lcm);
                a[i][j] = v.get_num();
            }
            scale *= lcm;
        }
        Integer prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (a[k][k] == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a[i][k] != 0) { p = i; break; }
                if (p < 0) return 0;
                std::swap(a[k], a[p]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) {
                    Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                    mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
            prev = a[k][k];
        }
        Rational det(a[n - 1][n - 1] * sign, scale);
        det.canonicalize();
        return det;
    }

    /// Exact inverse via Gauss-Jordan; throws on a singular matrix.
    Matrix inverse() const {
        if (rows_ != cols_) throw validation_error("inverse of non-square matrix");
        const int n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int p = -1;
            for (int i = col; i < n; ++i)
                if (a(i, col) != 0) { p = i; break; }
            if (p < 0) throw validation_error("singular matrix");
            if (p != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(a(col, j), a(p, j));
                    std::swap(inv(col, j), inv(p, j));
                }
            Rational piv = a(col, col);
            for (int j = 0; j < n; ++j) {
                a(col, j) /= piv;
                inv(col, j) /= piv;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || a(i, col) == 0) continue;
                Rational f = a(i, col);
                for (int j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

} // namespace mq

#endif
