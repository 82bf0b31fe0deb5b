#pragma once

// The recursive root-vector engine.  Works in any representation: the
// element type E only needs ring operations and scalar multiplication, so
// the same code drives 3x3 matrices and q-oscillator elements.  The f-side
// recursions are the Cartan anti-involution images of the e-side ones
// (operands swapped, pairing exponent negated, prefactors invariant).

#include "ikor/field.hpp"
#include "ikor/matrix.hpp"
#include "ikor/roots.hpp"

#include <map>
#include <vector>

namespace ikor {

/// [X, Y]_q = X Y - pairing * Y X
template <class E, class S>
E q_commutator(const E& X, const E& Y, const S& pairing) {
    return X * Y - pairing * (Y * X);
}

/// coefficient list of log(1 + sum_{m>=1} P[m] t^m) up to t^{max_m};
/// entries of P indexed from 1, P[0] ignored
template <class E>
std::vector<E> log_coefficients(const std::vector<E>& P, int max_m, const E& zero) {
    std::vector<E> out(static_cast<std::size_t>(max_m) + 1, zero);
    // powers[m] holds the t^m coefficient of Y^k while iterating k
    std::vector<E> powk(static_cast<std::size_t>(max_m) + 1, zero);
    std::vector<E> y(static_cast<std::size_t>(max_m) + 1, zero);
    for (int m = 1; m <= max_m; ++m)
        if (m < static_cast<int>(P.size())) y[static_cast<std::size_t>(m)] = P[static_cast<std::size_t>(m)];
    powk = y;
    for (int k = 1; k <= max_m; ++k) {
        for (int m = k; m <= max_m; ++m) {
            // (-1)^{k+1}/k * coefficient
            Rational c(k % 2 == 1 ? 1 : -1, k);
            out[static_cast<std::size_t>(m)] =
                out[static_cast<std::size_t>(m)] + scale_by(powk[static_cast<std::size_t>(m)], c);
        }
        if (k == max_m) break;
        // powk <- powk * y (t-convolution)
        std::vector<E> next(static_cast<std::size_t>(max_m) + 1, zero);
        for (int m1 = k; m1 <= max_m; ++m1)
            for (int m2 = 1; m1 + m2 <= max_m; ++m2)
                next[static_cast<std::size_t>(m1 + m2)] =
                    next[static_cast<std::size_t>(m1 + m2)] +
                    powk[static_cast<std::size_t>(m1)] * y[static_cast<std::size_t>(m2)];
        powk = std::move(next);
    }
    return out;
}

template <class S>
Mat<S> scale_by(const Mat<S>& m, const Rational& c) {
    return S(c) * m;
}

/// All root-vector images up to delta-height max_m, computed from the
/// images of the two simple-root vectors by the defining recursions.
/// side = +1 builds e-vectors from (e_alpha, e_{delta-2alpha}); side = -1
/// builds f-vectors from (f_alpha, f_{delta-2alpha}).
template <class E, CoefficientField F>
struct RootVectors {
    std::vector<E> alpha_m;      // (alpha + m delta), m = 0..max_m
    std::vector<E> two_alpha;    // (2 alpha + (2m+1) delta), index m
    std::vector<E> dma;          // (delta - alpha + m delta), index m
    std::vector<E> dm2a;         // (delta - 2 alpha + 2m delta), index m
    std::vector<E> primed;       // primed imaginary, index m >= 1 ([0] unused)
    std::vector<E> unprimed;     // unprimed imaginary, index m >= 1
    E primed_delta;              // e'_delta == primed[1]

    const E& of(const Root& r) const {
        auto cls = r.classify();
        if (!cls) throw std::domain_error("not a positive root: " + r.str());
        auto [fam, mf] = *cls;
        switch (fam) {
            case RootFamily::AlphaDelta: return alpha_m.at(static_cast<std::size_t>(mf));
            case RootFamily::TwoAlphaOddDelta: return two_alpha.at(static_cast<std::size_t>(mf));
            case RootFamily::Imaginary: return unprimed.at(static_cast<std::size_t>(mf));
            case RootFamily::DeltaMinusAlpha: return dma.at(static_cast<std::size_t>(mf));
            case RootFamily::DeltaMinusTwoAlpha: return dm2a.at(static_cast<std::size_t>(mf));
        }
        throw std::logic_error("bad family");
    }
    const E& primed_of(int m) const { return primed.at(static_cast<std::size_t>(m)); }
};

template <class E, CoefficientField F>
RootVectors<E, F> root_vectors_recursive(const F& f, const E& simple_alpha,
                                         const E& simple_a0, int max_m, int side,
                                         const E& zero) {
    using S = typename F::S;
    if (side != 1 && side != -1) throw std::domain_error("side must be +-1");
    RootVectors<E, F> rv;
    auto qc = [&](const E& X, const E& Y, int pairing) {
        // e-side: [X, Y] with q^{pairing}; f-side: omega image
        if (side > 0) return q_commutator(X, Y, q_pow(f, pairing));
        return q_commutator(Y, X, q_pow(f, -pairing));
    };
    S inv_u = f.u().inverse();
    S inv_3h = q_number(f, 3, 1).inverse();  // 1/[3]_{q^{1/2}}

    rv.alpha_m.resize(static_cast<std::size_t>(max_m) + 1, zero);
    rv.dma.resize(static_cast<std::size_t>(max_m) + 1, zero);
    rv.primed.resize(static_cast<std::size_t>(max_m) + 1, zero);

    rv.alpha_m[0] = simple_alpha;
    rv.dma[0] = inv_u * qc(simple_alpha, simple_a0, form(Root::alpha(), Root::alpha0()));
    rv.primed_delta = qc(simple_alpha, rv.dma[0], form(Root::alpha(), {-1, 1}));
    if (max_m >= 1) rv.primed[1] = rv.primed_delta;

    for (int m = 1; m <= max_m; ++m) {
        rv.alpha_m[static_cast<std::size_t>(m)] =
            inv_3h * qc(rv.alpha_m[static_cast<std::size_t>(m - 1)], rv.primed_delta, 0);
        rv.dma[static_cast<std::size_t>(m)] =
            inv_3h * qc(rv.primed_delta, rv.dma[static_cast<std::size_t>(m - 1)], 0);
    }
    for (int m = 0; m + 1 <= max_m; ++m)
        rv.two_alpha.push_back(inv_u * qc(rv.alpha_m[static_cast<std::size_t>(m)],
                                          rv.alpha_m[static_cast<std::size_t>(m + 1)], 1));
    rv.dm2a.push_back(simple_a0);
    for (int m = 0; 2 * (m + 1) + 1 <= max_m; ++m)
        rv.dm2a.push_back(inv_u * qc(rv.dma[static_cast<std::size_t>(m + 1)],
                                     rv.dma[static_cast<std::size_t>(m)], 1));
    for (int m = 2; m <= max_m; ++m)
        rv.primed[static_cast<std::size_t>(m)] =
            qc(rv.alpha_m[static_cast<std::size_t>(m - 1)], rv.dma[0], -1);

    // unprimed imaginary vectors through the formal logarithm:
    //   (q - q^{-1}) e_delta(x) = log[1 + (q - q^{-1}) e'_delta(x)]
    // and on the f side the omega image flips the sign of (q - q^{-1}):
    //   (q - q^{-1}) f_delta(x) = -log[1 - (q - q^{-1}) f'_delta(x)]
    S kappa = q_pow(f, 1) - q_pow(f, -1);
    if (side < 0) kappa = -kappa;
    std::vector<E> P(static_cast<std::size_t>(max_m) + 1, zero);
    for (int m = 1; m <= max_m; ++m) P[static_cast<std::size_t>(m)] = kappa * rv.primed[static_cast<std::size_t>(m)];
    auto L = log_coefficients(P, max_m, zero);
    rv.unprimed.assign(static_cast<std::size_t>(max_m) + 1, zero);
    S kinv = kappa.inverse();
    for (int m = 1; m <= max_m; ++m)
        rv.unprimed[static_cast<std::size_t>(m)] = kinv * L[static_cast<std::size_t>(m)];
    return rv;
}

/// residual of [e_{alpha+m delta}, e_{n delta}] - b_n e_{alpha+(m+n) delta}
template <class E, CoefficientField F>
E ed_commutation_residual(const F& f, const RootVectors<E, F>& rv, int m, int n) {
    const E& x = rv.alpha_m.at(static_cast<std::size_t>(m));
    const E& y = rv.unprimed.at(static_cast<std::size_t>(n));
    E lhs = x * y - y * x;  // pairing (alpha + m delta, n delta) = 0
    return lhs - b_coefficient(f, n) * rv.alpha_m.at(static_cast<std::size_t>(m + n));
}

/// X^a * Y * X^b
template <class E>
E mul_chain(const E& X, int a, const E& Y, int b) {
    E r = Y;
    for (int i = 0; i < a; ++i) r = X * r;
    for (int i = 0; i < b; ++i) r = r * X;
    return r;
}

/// Serre residual sum_k (-1)^k binom(n, k)_{base} X^{n-k} Y X^k with the
/// base given as a half-exponent of q (j = 4 for q^{d_0}, j = 1 for
/// q^{d_1})
template <class E, CoefficientField F>
E serre_residual(const F& f, const E& X, const E& Y, int n, int base_half_exp) {
    E acc = q_binomial(f, n, 0, base_half_exp) * mul_chain(X, n, Y, 0);
    for (int k = 1; k <= n; ++k) {
        E term = q_binomial(f, n, k, base_half_exp) * mul_chain(X, n - k, Y, k);
        if (k % 2 == 1)
            acc = acc - term;
        else
            acc = acc + term;
    }
    return acc;
}

}  // namespace ikor
