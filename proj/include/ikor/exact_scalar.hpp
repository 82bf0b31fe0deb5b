#pragma once

// Exact coefficient field: elements A + B*u with A, B rational functions in
// (v, zeta, xi) and u^2 = v^2 + v^{-2} = [2]_q.  Since v^2 + v^{-2} is
// invariant under v -> v^{-1}, the Cartan anti-involution fixes u.

#include "ikor/rational_function.hpp"

namespace ikor {

class Exact {
  public:
    Exact() = default;
    explicit Exact(long c) : a_(c) {}
    explicit Exact(const Rational& c) : a_(c) {}
    explicit Exact(RatFun a) : a_(std::move(a)) {}
    Exact(RatFun a, RatFun b) : a_(std::move(a)), b_(std::move(b)) {}

    static Exact variable(Var x, int exp = 1) { return Exact(RatFun::variable(x, exp)); }
    static Exact u() { return Exact(RatFun(), RatFun(1L)); }
    static RatFun u_squared() {
        return RatFun(Poly::variable(Var::v, 2) + Poly::variable(Var::v, -2));
    }

    const RatFun& re() const { return a_; }   // u-free part
    const RatFun& uco() const { return b_; }  // coefficient of u

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    friend bool operator==(const Exact& x, const Exact& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    Exact operator-() const { return Exact(-a_, -b_); }
    friend Exact operator+(const Exact& x, const Exact& y) {
        return Exact(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend Exact operator-(const Exact& x, const Exact& y) {
        return Exact(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend Exact operator*(const Exact& x, const Exact& y) {
        if (x.b_.is_zero() && y.b_.is_zero()) return Exact(x.a_ * y.a_);
        return Exact(x.a_ * y.a_ + x.b_ * y.b_ * u_squared(), x.a_ * y.b_ + x.b_ * y.a_);
    }

    Exact inverse() const {
        if (is_zero()) throw division_by_zero();
        if (b_.is_zero()) return Exact(a_.inverse());
        // (A + Bu)^{-1} = (A - Bu)/(A^2 - B^2 u^2); the norm form vanishes
        // only at zero because [2]_q is not a square in Q(v, zeta, xi)
        RatFun n = a_ * a_ - b_ * b_ * u_squared();
        RatFun ni = n.inverse();
        return Exact(a_ * ni, -(b_ * ni));
    }
    friend Exact operator/(const Exact& x, const Exact& y) { return x * y.inverse(); }

    Exact& operator+=(const Exact& o) { return *this = *this + o; }
    Exact& operator-=(const Exact& o) { return *this = *this - o; }
    Exact& operator*=(const Exact& o) { return *this = *this * o; }
    Exact& operator/=(const Exact& o) { return *this = *this / o; }

    /// Cartan anti-involution on coefficients: q -> q^{-1}, zeta -> zeta^{-1},
    /// xi -> xi^{-1}; u is fixed since [2]_{q^{-1}} = [2]_q.
    Exact omega() const { return Exact(a_.omega(), b_.omega()); }

    Exact derivative(Var x) const { return Exact(a_.derivative(x), b_.derivative(x)); }
    Exact subst_one(Var x, const Rational& val) const {
        return Exact(a_.subst_one(x, val), b_.subst_one(x, val));
    }

    /// evaluate at a sample with u0 = +sqrt(v0^2 + v0^{-2})
    template <class T>
    T eval(const std::array<T, kNumVars>& vals, const T& u0) const {
        T r = a_.eval<T>(vals);
        if (!b_.is_zero()) r = r + b_.eval<T>(vals) * u0;
        return r;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        if (a_.is_zero()) return b_.str() + "*u";
        return a_.str() + " + " + b_.str() + "*u";
    }

  private:
    RatFun a_, b_;
};

}  // namespace ikor
