#pragma once

// Truncated formal power series with coefficients in an arbitrary ring.
// Index m is the coefficient of zeta^{m*step}; `step` is bookkeeping only.
// Exact constants carry trunc = kExactOrder so that matrix algebra over
// Series never loses precision through default-constructed zeros.

#include "ikor/field.hpp"

#include <limits>
#include <vector>

namespace ikor {

inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 2;

template <class S>
class Series {
  public:
    Series() : trunc_(kExactOrder), step_(0) {}
    explicit Series(S c) : trunc_(kExactOrder), step_(0) { set(0, std::move(c)); }
    explicit Series(long c) : Series(S(c)) {}
    Series(int trunc, int step) : trunc_(trunc), step_(step) {}

    static Series zero_to(int trunc, int step = 1) { return Series(trunc, step); }

    int truncation() const { return trunc_; }
    int step() const { return step_; }
    int stored() const { return static_cast<int>(c_.size()); }

    const S& coeff(int m) const {
        static const S zero{};
        if (m < 0 || m >= stored()) return zero;
        return c_[static_cast<std::size_t>(m)];
    }
    void set(int m, S val) {
        if (m > trunc_) return;
        if (m >= stored()) c_.resize(static_cast<std::size_t>(m) + 1);
        c_[static_cast<std::size_t>(m)] = std::move(val);
    }

    bool is_zero() const {
        for (auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) {
        int n = std::max(a.stored(), b.stored());
        for (int m = 0; m < n; ++m)
            if (!(a.coeff(m) == b.coeff(m))) return false;
        return true;
    }

    Series operator-() const {
        Series r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Series operator+(const Series& a, const Series& b) {
        Series r(combine(a, b));
        for (int m = 0; m <= r.cap(std::max(a.stored(), b.stored()) - 1); ++m)
            r.set(m, a.coeff(m) + b.coeff(m));
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        Series r(combine(a, b));
        int hi = r.cap(a.stored() + b.stored() - 2);
        for (int m = 0; m <= hi; ++m) {
            S acc{};
            for (int k = std::max(0, m - b.stored() + 1); k <= std::min(m, a.stored() - 1); ++k)
                acc += a.coeff(k) * b.coeff(m - k);
            r.set(m, std::move(acc));
        }
        return r;
    }
    friend Series operator*(const S& c, Series s) {
        for (auto& e : s.c_) e = c * e;
        return s;
    }
    friend Series operator*(Series s, const S& c) { return c * s; }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// multiplicative inverse; constant term must be invertible
    Series inverse() const {
        S c0i = coeff(0).inverse();
        if (stored() <= 1) {
            Series r(trunc_, step_);
            r.set(0, c0i);
            return r;
        }
        if (trunc_ >= kExactOrder)
            throw std::domain_error("series inverse needs a truncation order");
        Series r(trunc_, step_);
        r.set(0, c0i);
        for (int m = 1; m <= trunc_; ++m) {
            S acc{};
            for (int k = 1; k <= m; ++k) acc += coeff(k) * r.coeff(m - k);
            r.set(m, -(c0i * acc));
        }
        return r;
    }
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    /// log(f) for constant term 1
    Series log() const {
        if (!(coeff(0) == S(1L))) throw std::domain_error("series log needs constant term 1");
        int n = order_for_composition();
        Series y = *this;
        y.set(0, S(0L));
        Series r = Series::zero_to(n, step_);
        Series p(S(1L));
        for (int k = 1; k <= n; ++k) {
            p = p * y;
            S c = S(k % 2 == 1 ? 1L : -1L) / S(static_cast<long>(k));
            r += c * p;
        }
        return r;
    }

    /// exp(f) for constant term 0
    Series exp() const {
        if (!coeff(0).is_zero()) throw std::domain_error("series exp needs constant term 0");
        int n = order_for_composition();
        Series r(S(1L));
        r.trunc_ = n;
        r.step_ = step_;
        Series p(S(1L));
        S fact(1L);
        for (int k = 1; k <= n; ++k) {
            p = p * (*this);
            fact = fact * S(static_cast<long>(k));
            r += fact.inverse() * p;
        }
        return r;
    }

    /// substitute zeta^step -> scale * zeta^step
    Series scaled(const S& scale) const {
        Series r(*this);
        S p(1L);
        for (int m = 1; m < stored(); ++m) {
            p = p * scale;
            r.set(m, p * coeff(m));
        }
        return r;
    }

  private:
    static Series combine(const Series& a, const Series& b) {
        int step = a.step_ ? a.step_ : b.step_;
        if (a.step_ && b.step_ && a.step_ != b.step_)
            throw std::domain_error("series step mismatch");
        return Series(std::min(a.trunc_, b.trunc_), step);
    }
    int cap(int m) const { return std::min(m, trunc_); }
    int order_for_composition() const {
        if (trunc_ >= kExactOrder) throw std::domain_error("series log/exp needs a truncation order");
        return trunc_;
    }

    int trunc_;
    int step_;
    std::vector<S> c_;
};

/// lambda(scale * zeta^step) as a truncated series: coefficient of
/// zeta^{m*step} is scale^m / (m (q^m - (-1)^m + q^{-m})).
template <CoefficientField F>
Series<typename F::S> lambda_series(const F& f, int order, const typename F::S& scale,
                                    int step = 1) {
    if (order < 1) throw std::domain_error("lambda_series: order >= 1 required");
    using S = typename F::S;
    Series<S> r = Series<S>::zero_to(order, step);
    S p(1L);
    for (int m = 1; m <= order; ++m) {
        p = p * scale;
        S sgn = f.integer(m % 2 == 0 ? 1 : -1);
        S den = (q_pow(f, m) - sgn + q_pow(f, -m)) * f.integer(m);
        r.set(m, p / den);
    }
    return r;
}

/// log(1 + c*zeta^step) built coefficientwise: (-1)^{m+1} c^m / m.  Keeps
/// exact coefficients small where the generic series log would not.
template <class S>
Series<S> linear_log_series(const S& c, int order, int step = 1) {
    Series<S> r = Series<S>::zero_to(order, step);
    S p(1L);
    for (int m = 1; m <= order; ++m) {
        p = p * c;
        S coef = p / S(static_cast<long>(m % 2 == 1 ? m : -m));
        r.set(m, coef);
    }
    return r;
}

/// the geometric-type series 1 + c*zeta^step + c^2*zeta^{2 step} + ...
template <class S>
Series<S> geometric_series(const S& c, int order, int step = 1) {
    Series<S> r = Series<S>::zero_to(order, step);
    S p(1L);
    r.set(0, p);
    for (int m = 1; m <= order; ++m) {
        p = p * c;
        r.set(m, p);
    }
    return r;
}

/// 1 + c*zeta^step as an exact (untruncated) linear polynomial in zeta^step
template <class S>
Series<S> linear_series(const S& c0, const S& c1, int order, int step = 1) {
    Series<S> r = Series<S>::zero_to(order, step);
    r.set(0, c0);
    r.set(1, c1);
    return r;
}

}  // namespace ikor
