#pragma once

// Arbitrary-precision complex scalars.  Division guards against
// ill-conditioned denominators per the numeric-backend contract.

#include "ikor/rational.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <stdexcept>
#include <string>

namespace ikor {

struct ill_conditioned : std::runtime_error {
    ill_conditioned() : std::runtime_error("numeric divisor below 1e-40") {}
};

template <unsigned Digits>
class Num {
  public:
    using Complex = boost::multiprecision::number<
        boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<Digits>>,
        boost::multiprecision::et_off>;
    using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                               boost::multiprecision::et_off>;
    static constexpr unsigned digits = Digits;

    Num() : x_(0) {}
    explicit Num(long c) : x_(c) {}
    explicit Num(const Rational& c)
        : x_(Real(boost::multiprecision::numerator(c)) /
             Real(boost::multiprecision::denominator(c))) {}
    explicit Num(Complex x) : x_(std::move(x)) {}
    Num(Real re, Real im) : x_(std::move(re), std::move(im)) {}

    const Complex& value() const { return x_; }
    Real abs() const {
        using std::abs;
        return abs(x_);
    }
    bool is_zero() const { return x_ == 0; }

    friend bool operator==(const Num& a, const Num& b) { return a.x_ == b.x_; }

    Num operator-() const { return Num(Complex(-x_)); }
    friend Num operator+(const Num& a, const Num& b) { return Num(Complex(a.x_ + b.x_)); }
    friend Num operator-(const Num& a, const Num& b) { return Num(Complex(a.x_ - b.x_)); }
    friend Num operator*(const Num& a, const Num& b) { return Num(Complex(a.x_ * b.x_)); }
    friend Num operator/(const Num& a, const Num& b) {
        if (b.abs() < ill_threshold()) throw ill_conditioned();
        return Num(Complex(a.x_ / b.x_));
    }
    Num inverse() const { return Num(1L) / *this; }

    Num& operator+=(const Num& o) { return *this = *this + o; }
    Num& operator-=(const Num& o) { return *this = *this - o; }
    Num& operator*=(const Num& o) { return *this = *this * o; }
    Num& operator/=(const Num& o) { return *this = *this / o; }

    static Real ill_threshold() {
        static const Real t = Real("1e-40");
        return t;
    }

    std::string str(unsigned prec = Digits) const {
        return "(" + x_.real().str(prec) + ", " + x_.imag().str(prec) + ")";
    }

  private:
    Complex x_;
};

using Num50 = Num<50>;
using Num100 = Num<100>;

template <class S>
inline double magnitude(const S& x);

template <unsigned D>
inline double magnitude_impl(const Num<D>& x) {
    return static_cast<double>(x.abs());
}

template <>
inline double magnitude<Num50>(const Num50& x) {
    return magnitude_impl(x);
}
template <>
inline double magnitude<Num100>(const Num100& x) {
    return magnitude_impl(x);
}

}  // namespace ikor
