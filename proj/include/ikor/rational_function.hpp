#pragma once

// Field of fractions of the Laurent ring Q[v^±, zeta^±, xi^±].  Canonical
// form: numerator and denominator coprime, denominator an ordinary
// polynomial with coprime integer coefficients, positive leading sign and
// zero minimal exponents (all monomial units live in the numerator).

#include "ikor/polynomial.hpp"

#include <stdexcept>

namespace ikor {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero") {}
};

class RatFun {
  public:
    RatFun() : num_(), den_(1L) {}
    explicit RatFun(const Rational& c) : num_(c), den_(1L) {}
    explicit RatFun(long c) : num_(c), den_(1L) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(1L) {}
    RatFun(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFun variable(Var x, int exp = 1) { return RatFun(Poly::variable(x, exp)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFun operator-() const {
        RatFun r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
        Poly g = poly_gcd(a.den_, b.den_);
        if (g.is_constant()) return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Poly da = *try_divide(a.den_, g);
        Poly db = *try_divide(b.den_, g);
        return RatFun(a.num_ * db + b.num_ * da, a.den_ * db);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        // cross-cancel before multiplying to keep degrees small
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        Poly n = *try_divide_laurent(a.num_, g1) * *try_divide_laurent(b.num_, g2);
        Poly d = *try_divide(a.den_, g2) * *try_divide(b.den_, g1);
        RatFun r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.unit_normalize();
        return r;
    }

    RatFun inverse() const {
        if (is_zero()) throw division_by_zero();
        RatFun r;
        r.num_ = den_;
        r.den_ = num_;
        r.laurent_fix();
        r.unit_normalize();
        return r;
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun derivative(Var x) const {
        RatFun r(num_.derivative(x) * den_ - num_ * den_.derivative(x), den_ * den_);
        return r;
    }

    /// v -> v^{-1}, zeta -> zeta^{-1}, xi -> xi^{-1}
    RatFun omega() const {
        RatFun r;
        r.num_ = num_.flipped();
        r.den_ = den_.flipped();
        r.laurent_fix();
        r.unit_normalize();
        return r;
    }

    /// substitute a rational value for one variable (denominator must not
    /// vanish there; canonical form guarantees this at regular points)
    RatFun subst_one(Var x, const Rational& val) const {
        Poly d = den_.subst_one(x, val);
        if (d.is_zero()) throw division_by_zero();
        return RatFun(num_.subst_one(x, val), d);
    }

    template <class T>
    T eval(const std::array<T, kNumVars>& vals) const {
        return num_.eval<T>(vals) / den_.eval<T>(vals);
    }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value() == 1) return "(" + num_.str() + ")";
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    // division where the quotient may be Laurent even though gcd is ordinary
    static std::optional<Poly> try_divide_laurent(const Poly& a, const Poly& b) {
        return try_divide(a, b);
    }

    // move monomial content of the denominator into the numerator
    void laurent_fix() {
        Mono m = detail::min_exponents(den_);
        if (!m.is_unit()) {
            den_ = den_.shifted(m.negated());
            num_ = num_.shifted(m.negated());
        }
    }

    void unit_normalize() {
        Rational scale;
        den_ = detail::integer_primitive(den_, &scale);
        if (scale != 1) num_ *= Rational(1) / scale;
    }

    void normalize() {
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) {
            den_ = Poly(1L);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *try_divide(num_, g);
            den_ = *try_divide(den_, g);
        }
        laurent_fix();
        unit_normalize();
    }

    Poly num_, den_;
};

}  // namespace ikor
