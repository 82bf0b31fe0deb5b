#pragma once

// Backend abstraction.  All constructions are written against a "field"
// object that hands out the basic elements v = q^{1/2}, u = sqrt([2]_q) and
// the spectral parameters zeta, xi.  The exact field returns symbolic
// rational functions, the numeric field returns values bound to a sample
// point.  f.flipped() realizes q -> q^{-1}, zeta -> zeta^{-1} uniformly.

#include "ikor/exact_scalar.hpp"
#include "ikor/numeric_scalar.hpp"

#include <concepts>

namespace ikor {

struct Convention {
    int s0 = 1;
    int s1 = 0;
    int s() const { return s0 + 2 * s1; }
    bool valid() const { return s() != 0; }
};

struct ExactField {
    using S = Exact;
    bool flip = false;

    S v(int k = 1) const { return Exact::variable(Var::v, flip ? -k : k); }
    S zeta(int k = 1) const { return Exact::variable(Var::zeta, flip ? -k : k); }
    S xi(int k = 1) const { return Exact::variable(Var::xi, flip ? -k : k); }
    S u() const { return Exact::u(); }
    S integer(long n) const { return Exact(n); }
    S rational(long p, long q) const { return Exact(Rational(p, q)); }
    ExactField flipped() const { return ExactField{!flip}; }
    static constexpr bool exact = true;
};

template <unsigned D>
class NumField {
  public:
    using S = Num<D>;
    static constexpr bool exact = false;

    NumField(S v0, S z0, S w0) : v_(v0), z_(z0), w_(w0) {
        using std::sqrt;
        auto u2 = v_ * v_ + (S(1L) / (v_ * v_));
        u_ = S(typename S::Complex(sqrt(u2.value())));
        if (u_.value().real() < 0) u_ = -u_;
    }

    S v(int k = 1) const { return pow_i(v_, k); }
    S zeta(int k = 1) const { return pow_i(z_, k); }
    S xi(int k = 1) const { return pow_i(w_, k); }
    S u() const { return u_; }
    S integer(long n) const { return S(n); }
    S rational(long p, long q) const { return S(Rational(p, q)); }
    NumField flipped() const { return NumField(v_.inverse(), z_.inverse(), w_.inverse()); }

    template <class T>
    static S pow_i(T base, int k) {
        if (k < 0) return S(1L) / pow_i(base, -k);
        S r(1L), b(base);
        unsigned n = static_cast<unsigned>(k);
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

  private:
    S v_, u_, z_, w_;
};

template <class F>
concept CoefficientField = requires(const F& f, int k, long n) {
    typename F::S;
    { f.v(k) } -> std::same_as<typename F::S>;
    { f.zeta(k) } -> std::same_as<typename F::S>;
    { f.xi(k) } -> std::same_as<typename F::S>;
    { f.u() } -> std::same_as<typename F::S>;
    { f.integer(n) } -> std::same_as<typename F::S>;
    { f.flipped() } -> std::same_as<F>;
};

template <class S>
S pow_i(const S& x, int k) {
    if (k < 0) return S(1L) / pow_i(x, -k);
    S r(1L), b(x);
    unsigned n = static_cast<unsigned>(k);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

// --- q-numbers ---------------------------------------------------------
// Bases are tracked as half-exponents of q: base = v^j = q^{j/2}.  So j = 2
// is base q, j = 1 is base q^{1/2}, j = 4 is base q^2 = q^{d_0}.

template <CoefficientField F>
typename F::S q_pow(const F& f, int k) {
    return f.v(2 * k);
}

/// [n]_{v^j} = (v^{jn} - v^{-jn}) / (v^j - v^{-j})
template <CoefficientField F>
typename F::S q_number(const F& f, int n, int j = 2) {
    return (f.v(j * n) - f.v(-j * n)) / (f.v(j) - f.v(-j));
}

/// [n]_b for a base handed in as a field element
template <class S>
S q_number_base(const S& base, int n) {
    S bi = base.inverse();
    return (pow_i(base, n) - pow_i(bi, n)) / (base - bi);
}

template <CoefficientField F>
typename F::S q_factorial(const F& f, int n, int j = 2) {
    typename F::S r = f.integer(1);
    for (int k = 2; k <= n; ++k) r = r * q_number(f, k, j);
    return r;
}

template <CoefficientField F>
typename F::S q_binomial(const F& f, int n, int m, int j = 2) {
    if (n < 0 || m < 0 || m > n) throw std::domain_error("q_binomial: need n >= m >= 0");
    return q_factorial(f, n, j) / (q_factorial(f, n - m, j) * q_factorial(f, m, j));
}

/// (n)_b = (b^n - 1)/(b - 1), used by the q-exponential
template <class S>
S paren_number(const S& base, int n) {
    S num = pow_i(base, n) - S(1L);
    return num / (base - S(1L));
}

template <class S>
S paren_factorial(const S& base, int n) {
    S r(1L);
    for (int k = 2; k <= n; ++k) r = r * paren_number(base, k);
    return r;
}

/// b_m = ([m]_q / m) (q^m - (-1)^m + q^{-m})
template <CoefficientField F>
typename F::S b_coefficient(const F& f, int m) {
    typename F::S sgn = f.integer(m % 2 == 0 ? 1 : -1);
    return q_number(f, m) / f.integer(m) * (q_pow(f, m) - sgn + q_pow(f, -m));
}

// --- backend glue -------------------------------------------------------

template <class S>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<Exact> : std::true_type {};
template <class S>
inline constexpr bool is_exact_v = is_exact_scalar<S>::value;

template <>
inline double magnitude<Exact>(const Exact& x) {
    return x.is_zero() ? 0.0 : 1.0;  // exact values are either zero or not
}

}  // namespace ikor
