#pragma once

// The three-dimensional evaluation representation phi_zeta and the closed
// forms of all higher root-vector images.  Index convention: matrix units
// are zero-based, E(i,j) here is E_{i+1,j+1} in 1-based notation.

#include "ikor/algebra.hpp"

namespace ikor {

template <class S>
struct Rep {
    int dim = 3;
    Convention conv;
    Mat<S> e_alpha, e_a0;  // e_{alpha}, e_{delta-2alpha}
    Mat<S> f_alpha, f_a0;
    Mat<S> h_alpha, h_a0;
    std::vector<int> h_alpha_weights, h_a0_weights;  // integer diagonals

    /// q^{h_gamma} for gamma = k*alpha + m*delta as a diagonal matrix
    template <CoefficientField F>
    Mat<S> q_h_gamma(const F& f, const Root& g) const {
        auto [m0, m1] = g.simple_coefficients();
        Mat<S> r(dim, dim);
        for (int i = 0; i < dim; ++i)
            r(i, i) = q_pow(f, m0 * h_a0_weights[static_cast<std::size_t>(i)] +
                                   m1 * h_alpha_weights[static_cast<std::size_t>(i)]);
        return r;
    }
};

/// phi_zeta with spectral convention (s0, s1); `zeta` is the bound spectral
/// parameter (a field element, possibly a monomial in the exact backend)
template <CoefficientField F>
Rep<typename F::S> make_phi(const F& f, const typename F::S& zeta, Convention conv) {
    using S = typename F::S;
    if (!conv.valid()) throw std::domain_error("make_phi: s = s0 + 2 s1 must be nonzero");
    Rep<S> rep;
    rep.conv = conv;
    auto E = [&](int i, int j) { return Mat<S>::unit(3, i, j); };
    S zs1 = pow_i(zeta, conv.s1);
    S zs0 = pow_i(zeta, conv.s0);
    rep.e_alpha = zs1 * (E(0, 1) + E(1, 2));
    rep.e_a0 = (zs0 * f.u()) * E(2, 0);
    rep.f_alpha = zs1.inverse() * (E(1, 0) + E(2, 1));
    rep.f_a0 = (zs0.inverse() * f.u()) * E(0, 2);
    rep.h_alpha = E(0, 0) - E(2, 2);
    rep.h_a0 = S(2L) * (E(2, 2) - E(0, 0));
    rep.h_alpha_weights = {1, 0, -1};
    rep.h_a0_weights = {-2, 0, 2};
    return rep;
}

enum class VectorKind { E, F };

/// closed-form image of a root vector under phi_zeta
template <CoefficientField F>
Mat<typename F::S> phi_closed_form(const F& f, const typename F::S& zeta, Convention conv,
                                   const Root& root, VectorKind kind) {
    using S = typename F::S;
    auto cls = root.classify();
    if (!cls) throw std::domain_error("phi_closed_form: unknown root " + root.str());
    auto [fam, m] = *cls;
    const int s = conv.s(), s1 = conv.s1;
    const bool e = (kind == VectorKind::E);
    auto E = [&](int i, int j) { return Mat<S>::unit(3, i, j); };
    auto zp = [&](int p) { return pow_i(zeta, e ? p : -p); };
    auto qp = [&](int p) { return q_pow(f, e ? p : -p); };
    S sgn_m = f.integer(m % 2 == 0 ? 1 : -1);

    switch (fam) {
        case RootFamily::AlphaDelta:
            // q^{-m} zeta^{s1+ms} ((-1)^m E12 + q^{-m} E23), f: transposed flip
            return (qp(-m) * zp(s1 + m * s)) *
                   (sgn_m * (e ? E(0, 1) : E(1, 0)) + qp(-m) * (e ? E(1, 2) : E(2, 1)));
        case RootFamily::DeltaMinusAlpha: {
            S sgn = f.integer((m + 1) % 2 == 0 ? 1 : -1);
            return (S(0L) - qp(-m) * zp(s - s1 + m * s)) *
                   (sgn * (e ? E(1, 0) : E(0, 1)) + qp(-m - 2) * (e ? E(2, 1) : E(1, 2)));
        }
        case RootFamily::TwoAlphaOddDelta:
            return (sgn_m * qp(-3 * m - 1) * zp(2 * s1 + (2 * m + 1) * s) * f.u()) *
                   (e ? E(0, 2) : E(2, 0));
        case RootFamily::DeltaMinusTwoAlpha:
            return (sgn_m * qp(-3 * m) * zp(s - 2 * s1 + 2 * m * s) * f.u()) *
                   (e ? E(2, 0) : E(0, 2));
        case RootFamily::Imaginary: {
            S sgn = f.integer(m % 2 == 0 ? -1 : 1);  // (-1)^{m-1}
            S mid = sgn_m * qp(-2 * m) - qp(-m);     // (-1)^m q^{-2m} - q^{-m}
            return (q_number(f, m) / f.integer(m) * zp(m * s)) *
                   (sgn * E(0, 0) + mid * E(1, 1) + qp(-3 * m) * E(2, 2));
        }
    }
    throw std::logic_error("bad family");
}

/// closed-form image of the primed imaginary root vectors
template <CoefficientField F>
Mat<typename F::S> phi_primed_closed_form(const F& f, const typename F::S& zeta,
                                          Convention conv, int m, VectorKind kind) {
    using S = typename F::S;
    if (m < 1) throw std::domain_error("primed imaginary index m >= 1");
    const int s = conv.s();
    const bool e = (kind == VectorKind::E);
    auto E = [&](int i, int j) { return Mat<S>::unit(3, i, j); };
    auto zp = [&](int p) { return pow_i(zeta, e ? p : -p); };
    auto qp = [&](int p) { return q_pow(f, e ? p : -p); };
    S sgn_m = f.integer(m % 2 == 0 ? 1 : -1);
    S sgn_m1 = f.integer(m % 2 == 0 ? -1 : 1);
    S mid = sgn_m * qp(-1) - qp(-m - 1);  // (-1)^m q^{-1} - q^{-m-1}
    return (qp(-m + 1) * zp(m * s)) *
           (sgn_m1 * E(0, 0) + mid * E(1, 1) + qp(-m - 2) * E(2, 2));
}

/// full recursive root-vector data in phi_zeta
template <CoefficientField F>
std::pair<RootVectors<Mat<typename F::S>, F>, RootVectors<Mat<typename F::S>, F>>
phi_root_vectors(const F& f, const typename F::S& zeta, Convention conv, int max_m) {
    using S = typename F::S;
    auto rep = make_phi(f, zeta, conv);
    Mat<S> zero(3, 3);
    auto ev = root_vectors_recursive<Mat<S>, F>(f, rep.e_alpha, rep.e_a0, max_m, +1, zero);
    auto fv = root_vectors_recursive<Mat<S>, F>(f, rep.f_alpha, rep.f_a0, max_m, -1, zero);
    return {std::move(ev), std::move(fv)};
}

}  // namespace ikor
