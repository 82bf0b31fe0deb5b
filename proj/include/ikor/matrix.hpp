#pragma once

// Dense matrices over an arbitrary coefficient ring.

#include "ikor/field.hpp"

#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ikor {

template <class S>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1L);
        return m;
    }
    static Mat unit(int n, int i, int j) {  // matrix unit E_{ij}, zero-based
        Mat m(n, n);
        m(i, j) = S(1L);
        return m;
    }
    /// permutation P(x (x) y) = y (x) x on C^n (x) C^n
    static Mat permutation(int n) {
        Mat m(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i * n + j, j * n + i) = S(1L);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Mat operator-() const {
        Mat r(*this);
        for (auto& e : r.a_) e = -e;
        return r;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Mat r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Mat r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix size mismatch");
        Mat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const S& xv = x(i, k);
                if (xv.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const S& yv = y(k, j);
                    if (yv.is_zero()) continue;
                    r(i, j) += xv * yv;
                }
            }
        return r;
    }
    friend Mat operator*(const S& c, Mat m) {
        for (auto& e : m.a_) e = c * e;
        return m;
    }
    friend Mat operator*(Mat m, const S& c) { return c * m; }
    Mat& operator+=(const Mat& o) { return *this = *this + o; }
    Mat& operator-=(const Mat& o) { return *this = *this - o; }
    Mat& operator*=(const Mat& o) { return *this = *this * o; }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Mat kron(const Mat& x, const Mat& y) {
        Mat r(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) {
                if (x(i, j).is_zero()) continue;
                for (int k = 0; k < y.rows_; ++k)
                    for (int l = 0; l < y.cols_; ++l) {
                        if (y(k, l).is_zero()) continue;
                        r(i * y.rows_ + k, j * y.cols_ + l) = x(i, j) * y(k, l);
                    }
            }
        return r;
    }

    S trace() const {
        S t(0L);
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    int nonzero_count() const {
        int n = 0;
        for (auto& e : a_)
            if (!e.is_zero()) ++n;
        return n;
    }

    /// largest entry magnitude (residual reporting)
    double max_norm() const {
        double m = 0;
        for (auto& e : a_) m = std::max(m, magnitude(e));
        return m;
    }

    template <class T, class Fn>
    Mat<T> map(Fn&& fn) const {
        Mat<T> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

    /// Gauss-Jordan inverse; requires a field scalar
    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        int n = rows_;
        Mat a(*this), r = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            if constexpr (is_exact_v<S>) {
                for (int i = col; i < n; ++i)
                    if (!a(i, col).is_zero()) {
                        piv = i;
                        break;
                    }
            } else {
                double best = 0;
                for (int i = col; i < n; ++i) {
                    double m = magnitude(a(i, col));
                    if (m > best) {
                        best = m;
                        piv = i;
                    }
                }
            }
            if (piv < 0) throw std::domain_error("singular matrix");
            if (piv != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(r(piv, j), r(col, j));
                }
            }
            S inv = a(col, col).inverse();
            for (int j = 0; j < n; ++j) {
                a(col, j) *= inv;
                r(col, j) *= inv;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || a(i, col).is_zero()) continue;
                S f = a(i, col);
                for (int j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    r(i, j) -= f * r(col, j);
                }
            }
        }
        return r;
    }

  private:
    int rows_, cols_;
    std::vector<S> a_;
};

/// Omega_n on exact matrices: transpose combined with the coefficient
/// anti-involution q -> q^{-1}, zeta -> zeta^{-1}.
inline Mat<Exact> omega(const Mat<Exact>& m) {
    Mat<Exact> r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).omega();
    return r;
}

/// Omega_9 on a two-site exact matrix: E_{ij} (x) E_{mn} -> E_{ji} (x) E_{nm}
/// with the coefficient anti-involution.  For row-major Kronecker indexing
/// this is exactly the full transpose, so omega() already implements it.
inline Mat<Exact> omega9(const Mat<Exact>& m) { return omega(m); }

/// q-exponential exp_b(x) = sum_n x^n / (n)_b! for a nilpotent matrix.
/// Throws if x fails to become zero within max_power steps.
template <class S>
Mat<S> qexp(const Mat<S>& x, const S& base, int max_power = 16) {
    Mat<S> term = Mat<S>::identity(x.rows());
    Mat<S> sum = term;
    for (int n = 1; n <= max_power; ++n) {
        term = term * x;
        if (term.is_zero()) return sum;
        S f = paren_factorial(base, n).inverse();
        sum += f * term;
    }
    throw std::domain_error("qexp: matrix not nilpotent within max_power");
}

/// embed an operator acting on the tensor legs `legs` (each of dimension
/// dims[k]) into the full product-space operator
template <class S>
Mat<S> embed(const Mat<S>& op, const std::vector<int>& dims, const std::vector<int>& legs) {
    int total = 1;
    for (int d : dims) total *= d;
    int sub = 1;
    for (int l : legs) sub *= dims[static_cast<std::size_t>(l)];
    if (op.rows() != sub || op.cols() != sub)
        throw std::invalid_argument("embed: operator/leg dimension mismatch");

    int nlegs = static_cast<int>(dims.size());
    std::vector<int> stride(dims.size());
    {
        int acc = 1;
        for (int k = nlegs - 1; k >= 0; --k) {
            stride[static_cast<std::size_t>(k)] = acc;
            acc *= dims[static_cast<std::size_t>(k)];
        }
    }
    std::vector<bool> on(dims.size(), false);
    for (int l : legs) on[static_cast<std::size_t>(l)] = true;

    Mat<S> r(total, total);
    std::vector<int> idx(dims.size());
    for (int col = 0; col < total; ++col) {
        int rem = col;
        for (int k = 0; k < nlegs; ++k) {
            idx[static_cast<std::size_t>(k)] = rem / stride[static_cast<std::size_t>(k)];
            rem %= stride[static_cast<std::size_t>(k)];
        }
        int subcol = 0;
        for (int l : legs) subcol = subcol * dims[static_cast<std::size_t>(l)] + idx[static_cast<std::size_t>(l)];
        for (int subrow = 0; subrow < sub; ++subrow) {
            const S& val = op(subrow, subcol);
            if (val.is_zero()) continue;
            int row = col, rr = subrow;
            std::vector<int> sidx(legs.size());
            for (int k = static_cast<int>(legs.size()) - 1; k >= 0; --k) {
                int d = dims[static_cast<std::size_t>(legs[static_cast<std::size_t>(k)])];
                sidx[static_cast<std::size_t>(k)] = rr % d;
                rr /= d;
            }
            for (std::size_t k = 0; k < legs.size(); ++k) {
                int leg = legs[k];
                row += (sidx[k] - idx[static_cast<std::size_t>(leg)]) *
                       stride[static_cast<std::size_t>(leg)];
            }
            r(row, col) += val;
        }
    }
    return r;
}

}  // namespace ikor
