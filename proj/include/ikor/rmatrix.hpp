#pragma once

// The 9x9 R-matrix in phi (x) phi: factor-by-factor assembly, the closed
// form with entry functions a, b, c, d, rho, sigma, eigenvalues, gauge
// relation, triangular factorization and the zeta-linear decomposition.
// All matrix identities are stated for the normalized R-matrix (the scalar
// prefactor exp(lambda(q zeta^s) - lambda(q^{-1} zeta^s)) is dropped).

#include "ikor/evalrep.hpp"
#include "ikor/series.hpp"

#include <array>

namespace ikor {

// --- entry functions -----------------------------------------------------

template <CoefficientField F>
typename F::S entry_a(const F& f, const typename F::S& zeta, Convention conv) {
    auto zs = pow_i(zeta, conv.s());
    return (q_pow(f, 1) - q_pow(f, -1)) * pow_i(zeta, conv.s1) / (f.integer(1) - zs);
}

template <CoefficientField F>
typename F::S entry_b(const F& f, const typename F::S& zeta, Convention conv) {
    auto zs = pow_i(zeta, conv.s());
    return (q_pow(f, 1) - q_pow(f, -1)) * pow_i(zeta, conv.s1) /
           (f.integer(1) + q_pow(f, -1) * zs);
}

template <CoefficientField F>
typename F::S entry_c(const F& f, const typename F::S& zeta, Convention conv) {
    auto zs = pow_i(zeta, conv.s());
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    return (q - qi) * (q - f.integer(1) + (q + qi) * qi * zs) * pow_i(zeta, 2 * conv.s1) /
           ((f.integer(1) - zs) * (f.integer(1) + qi * zs));
}

template <CoefficientField F>
typename F::S entry_d(const F& f, const typename F::S& zeta, Convention conv) {
    auto zs = pow_i(zeta, conv.s());
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    auto num = q + (q - f.integer(1)) * (q - qi + q_pow(f, -3)) * zs - q_pow(f, -2) * zs * zs;
    return num / ((f.integer(1) - zs) * (f.integer(1) + qi * zs));
}

template <CoefficientField F>
typename F::S entry_rho(const F& f, const typename F::S& zeta, Convention conv) {
    auto zs = pow_i(zeta, conv.s());
    return (f.integer(1) - zs) / (f.integer(1) - q_pow(f, -2) * zs);
}

template <CoefficientField F>
typename F::S entry_sigma(const F& f, const typename F::S& zeta, Convention conv) {
    auto zs = pow_i(zeta, conv.s());
    return q_pow(f, -1) * (f.integer(1) - zs) * (f.integer(1) + q_pow(f, -1) * zs) /
           ((f.integer(1) - q_pow(f, -2) * zs) * (f.integer(1) + q_pow(f, -3) * zs));
}

/// Omega_1 of an entry function: evaluate with q -> q^{-1}, zeta -> zeta^{-1}
/// at the same spectral value.  Works on both backends.
template <CoefficientField F, class Fn>
typename F::S omega_entry(Fn&& fn, const F& f, const typename F::S& zeta, Convention conv) {
    return fn(f.flipped(), zeta.inverse(), conv);
}

// --- factors -------------------------------------------------------------

enum class RFactor {
    PrecDelta,        // image of R_alpha R_{2alpha}
    SimDelta,         // normalized diagonal factor (prefactor dropped)
    SuccDelta,        // image of R_{delta-2alpha} R_{delta-alpha}
    K,                // Cartan factor
    Alpha,            // single family R_alpha
    TwoAlpha,         // single family R_{2alpha}
    DeltaMinusAlpha,  // single family R_{delta-alpha}
    DeltaMinus2Alpha  // single family R_{delta-2alpha}
};

template <CoefficientField F>
Mat<typename F::S> build_factor(const F& f, const typename F::S& zeta, Convention conv,
                                RFactor which) {
    using S = typename F::S;
    const int s = conv.s(), s1 = conv.s1;
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S zs = pow_i(zeta, s);
    S kappa = q - qi;  // q - q^{-1}
    auto EE = [&](int i, int j, int m, int n) {
        return kron(Mat<S>::unit(3, i, j), Mat<S>::unit(3, m, n));
    };
    Mat<S> I = Mat<S>::identity(9);

    switch (which) {
        case RFactor::TwoAlpha:
            return I + (kappa * q_number(f, 2) * pow_i(zeta, s + 2 * s1) /
                        (one - pow_i(zeta, 2 * s))) *
                           EE(0, 2, 2, 0);
        case RFactor::DeltaMinus2Alpha:
            return I + (kappa * q_number(f, 2) * pow_i(zeta, s - 2 * s1) /
                        (one - pow_i(zeta, 2 * s))) *
                           EE(2, 0, 0, 2);
        case RFactor::Alpha: {
            S z1 = pow_i(zeta, s1);
            Mat<S> r = I + (kappa * z1 / (one - zs)) * (EE(0, 1, 1, 0) + EE(1, 2, 2, 1)) +
                       (kappa * z1 / (one + q * zs)) * EE(0, 1, 2, 1) +
                       (kappa * z1 / (one + qi * zs)) * EE(1, 2, 1, 0);
            S c13 = kappa * (q - one) * (one - q_pow(f, -2) * zs) * pow_i(zeta, 2 * s1) /
                    ((one - pow_i(zeta, 2 * s)) * (one + qi * zs));
            return r + c13 * EE(0, 2, 2, 0);
        }
        case RFactor::DeltaMinusAlpha: {
            S zss1 = pow_i(zeta, s - s1);
            Mat<S> r = I + (kappa * zss1 / (one - zs)) * (EE(1, 0, 0, 1) + EE(2, 1, 1, 2)) -
                       (kappa * q_pow(f, 2) * zss1 / (one + q * zs)) * EE(1, 0, 1, 2) -
                       (kappa * q_pow(f, -2) * zss1 / (one + qi * zs)) * EE(2, 1, 0, 1);
            S c31 = kappa * (q - one - (one - qi) * qi * zs) * pow_i(zeta, 2 * (s - s1)) /
                    ((one - pow_i(zeta, 2 * s)) * (one + qi * zs));
            return r + c31 * EE(2, 0, 0, 2);
        }
        case RFactor::PrecDelta: {
            S z1 = pow_i(zeta, s1);
            Mat<S> r = I + (kappa * z1 / (one - zs)) * (EE(0, 1, 1, 0) + EE(1, 2, 2, 1)) +
                       (kappa * z1 / (one + q * zs)) * EE(0, 1, 2, 1) +
                       (kappa * z1 / (one + qi * zs)) * EE(1, 2, 1, 0);
            S c13 = kappa * (q - one + (q + qi) * qi * zs) * pow_i(zeta, 2 * s1) /
                    ((one - zs) * (one + qi * zs));
            return r + c13 * EE(0, 2, 2, 0);
        }
        case RFactor::SuccDelta: {
            S zss1 = pow_i(zeta, s - s1);
            Mat<S> r = I + (kappa * zss1 / (one - zs)) * (EE(1, 0, 0, 1) + EE(2, 1, 1, 2)) -
                       (kappa * q_pow(f, 2) * zss1 / (one + q * zs)) * EE(1, 0, 1, 2) -
                       (kappa * q_pow(f, -2) * zss1 / (one + qi * zs)) * EE(2, 1, 0, 1);
            S c31 = kappa * (q + qi + (qi - one) * qi * zs) * pow_i(zeta, s - 2 * s1) /
                    ((one - zs) * (one + qi * zs));
            return r + c31 * EE(2, 0, 0, 2);
        }
        case RFactor::SimDelta: {
            Mat<S> r(9, 9);
            S r22 = (one + q * zs) / (one + qi * zs);
            S up = (one - q_pow(f, 2) * zs) / (one - zs);
            S dn = (one - zs) / (one - q_pow(f, -2) * zs);
            S r13 = up * (one + q_pow(f, 3) * zs) / (one + q * zs);
            S r31 = dn * (one + qi * zs) / (one + q_pow(f, -3) * zs);
            r += Mat<S>::unit(9, 0, 0) + r22 * Mat<S>::unit(9, 4, 4) + Mat<S>::unit(9, 8, 8);
            r += up * (Mat<S>::unit(9, 1, 1) + Mat<S>::unit(9, 5, 5));
            r += dn * (Mat<S>::unit(9, 3, 3) + Mat<S>::unit(9, 7, 7));
            r += r13 * Mat<S>::unit(9, 2, 2) + r31 * Mat<S>::unit(9, 6, 6);
            return r;
        }
        case RFactor::K: {
            // exp(hbar h_alpha (x) h_alpha): diagonal q^{w_i w_j} with
            // weights (1, 0, -1)
            Mat<S> r(9, 9);
            const int w[3] = {1, 0, -1};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r(3 * i + j, 3 * i + j) = q_pow(f, w[i] * w[j]);
            return r;
        }
    }
    throw std::logic_error("bad factor");
}

/// normalized R(zeta) assembled from the closed-form factor images
template <CoefficientField F>
Mat<typename F::S> build_r_from_factors(const F& f, const typename F::S& zeta, Convention conv) {
    return build_factor(f, zeta, conv, RFactor::PrecDelta) *
           build_factor(f, zeta, conv, RFactor::SimDelta) *
           build_factor(f, zeta, conv, RFactor::SuccDelta) * build_factor(f, zeta, conv, RFactor::K);
}

/// the 19-entry closed form of the normalized R-matrix
template <CoefficientField F>
Mat<typename F::S> build_r(const F& f, const typename F::S& zeta, Convention conv) {
    using S = typename F::S;
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S a = entry_a(f, zeta, conv), b = entry_b(f, zeta, conv), c = entry_c(f, zeta, conv);
    S d = entry_d(f, zeta, conv);
    S rho = entry_rho(f, zeta, conv), sig = entry_sigma(f, zeta, conv);
    S ab = omega_entry([](auto&& ff, auto&& z, Convention cv) { return entry_a(ff, z, cv); }, f,
                       zeta, conv);
    S bb = omega_entry([](auto&& ff, auto&& z, Convention cv) { return entry_b(ff, z, cv); }, f,
                       zeta, conv);
    S cb = omega_entry([](auto&& ff, auto&& z, Convention cv) { return entry_c(ff, z, cv); }, f,
                       zeta, conv);

    Mat<S> r(9, 9);
    auto put = [&](int i, int j, const S& val) { r(i - 1, j - 1) = val; };
    put(1, 1, q);
    put(2, 2, rho);
    put(2, 4, rho * a);
    put(4, 2, rho * ab);
    put(4, 4, rho);
    put(3, 3, sig);
    put(3, 5, q * sig * b);
    put(3, 7, sig * c);
    put(5, 3, qi * sig * bb);
    put(5, 5, sig * d);
    put(5, 7, sig * b);
    put(7, 3, sig * cb);
    put(7, 5, sig * bb);
    put(7, 7, sig);
    put(6, 6, rho);
    put(6, 8, rho * a);
    put(8, 6, rho * ab);
    put(8, 8, rho);
    put(9, 9, q);
    return r;
}

/// R-hat = R P and R-check = P R
template <CoefficientField F>
std::pair<Mat<typename F::S>, Mat<typename F::S>> build_r_hat_check(const F& f,
                                                                    const typename F::S& zeta,
                                                                    Convention conv) {
    using S = typename F::S;
    Mat<S> P = Mat<S>::permutation(3);
    Mat<S> R = build_r(f, zeta, conv);
    return {R * P, P * R};
}

/// skew-diagonal unit matrix
template <class S>
Mat<S> skew_identity(int n = 3) {
    Mat<S> j(n, n);
    for (int i = 0; i < n; ++i) j(i, n - 1 - i) = S(1L);
    return j;
}

// --- checks --------------------------------------------------------------

/// two-site operator on sites (i, j) of an N-site chain of C^3 legs
template <class S>
Mat<S> embed_two_site(const Mat<S>& op, int sites, int i, int j) {
    std::vector<int> dims(static_cast<std::size_t>(sites), 3);
    return embed(op, dims, {i, j});
}

/// residual of the Yang-Baxter equation for given spectral arguments; the
/// three R-matrices are built at z12, z13 = z12*z23 and z23
template <CoefficientField F>
Mat<typename F::S> yang_baxter_residual(const F& f, const typename F::S& z12,
                                        const typename F::S& z23, Convention conv) {
    using S = typename F::S;
    Mat<S> r12 = embed_two_site(build_r(f, z12, conv), 3, 0, 1);
    Mat<S> r13 = embed_two_site(build_r(f, z12 * z23, conv), 3, 0, 2);
    Mat<S> r23 = embed_two_site(build_r(f, z23, conv), 3, 1, 2);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

/// gauge matrix G(zeta) = diag(zeta^{s1}, 1, zeta^{-s1})
template <CoefficientField F>
Mat<typename F::S> gauge_matrix(const F& f, const typename F::S& zeta, Convention conv) {
    using S = typename F::S;
    Mat<S> g(3, 3);
    g(0, 0) = pow_i(zeta, conv.s1);
    g(1, 1) = S(1L);
    g(2, 2) = pow_i(zeta, -conv.s1);
    return g;
}

/// residual of R^{(s,s1)}(z1/z2) - [G(z1) (x) G(z2)] R^{(1,0)}((z1/z2)^s)
/// [G(z1) (x) G(z2)]^{-1}
template <CoefficientField F>
Mat<typename F::S> gauge_relation_residual(const F& f, const typename F::S& z1,
                                           const typename F::S& z2, Convention conv) {
    using S = typename F::S;
    S z12 = z1 / z2;
    Mat<S> lhs = build_r(f, z12, conv);
    Mat<S> g = kron(gauge_matrix(f, z1, conv), gauge_matrix(f, z2, conv));
    Mat<S> base = build_r(f, pow_i(z12, conv.s()), Convention{1, 0});
    return lhs - g * base * g.inverse();
}

/// triangular factors (R_+, R_0, R_-) with R_+ R_0 R_- = R
template <CoefficientField F>
std::array<Mat<typename F::S>, 3> triangular_factorization(const F& f, const typename F::S& zeta,
                                                           Convention conv) {
    using S = typename F::S;
    const int s = conv.s(), s1 = conv.s1;
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S zs = pow_i(zeta, s);
    S kappa = q - qi;
    auto EE = [&](int i, int j, int m, int n) {
        return kron(Mat<S>::unit(3, i, j), Mat<S>::unit(3, m, n));
    };

    Mat<S> rp = build_factor(f, zeta, conv, RFactor::PrecDelta);
    Mat<S> r0 = build_factor(f, zeta, conv, RFactor::SimDelta) *
                build_factor(f, zeta, conv, RFactor::K);
    // R_- = K^{-1} (R_succ) K: conjugation turns q^{+-2} into q^{+-1}
    S zss1 = pow_i(zeta, s - s1);
    Mat<S> rm = Mat<S>::identity(9) +
                (kappa * zss1 / (one - zs)) * (EE(1, 0, 0, 1) + EE(2, 1, 1, 2)) -
                (kappa * q * zss1 / (one + q * zs)) * EE(1, 0, 1, 2) -
                (kappa * qi * zss1 / (one + qi * zs)) * EE(2, 1, 0, 1);
    S c31 = kappa * (q + qi + (qi - one) * qi * zs) * pow_i(zeta, s - 2 * s1) /
            ((one - zs) * (one + qi * zs));
    rm += c31 * EE(2, 0, 0, 2);
    return {rp, r0, rm};
}

/// the zeta-linear decomposition at convention (1,0):
///   R(zeta) = Lambda(zeta) [ q^{1/2}(zeta^{-1} r1 - r0)
///                            - Omega_9(q^{1/2}(zeta^{-1} r1 - r0)) ]
template <CoefficientField F>
Mat<typename F::S> decomposition_r0(const F& f) {
    using S = typename F::S;
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S kappa = q - qi;
    auto EE = [&](int i, int j, int m, int n) {
        return kron(Mat<S>::unit(3, i, j), Mat<S>::unit(3, m, n));
    };
    Mat<S> r = EE(0, 0, 0, 0) + q * EE(0, 0, 1, 1) + EE(0, 0, 2, 2);
    r += q * (EE(1, 1, 0, 0) + (one - kappa) * EE(1, 1, 1, 1) + EE(1, 1, 2, 2));
    r += EE(2, 2, 0, 0) + q * EE(2, 2, 1, 1) + EE(2, 2, 2, 2);
    // E13 (x) E31 carries (q + q^{-1}) q^{-1}; the factorized closed form
    // forces the q^{-1} (cross-checked against sigma(zeta) c(zeta))
    Mat<S> tail = q_pow(f, -2) * EE(0, 1, 1, 0) - q * EE(0, 1, 2, 1) - EE(1, 2, 1, 0) +
                  (q + qi) * qi * EE(0, 2, 2, 0) + q_pow(f, -2) * EE(1, 2, 2, 1);
    return r - kappa * tail;
}

template <CoefficientField F>
Mat<typename F::S> decomposition_r1(const F& f) {
    using S = typename F::S;
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S kappa = q - qi;
    auto EE = [&](int i, int j, int m, int n) {
        return kron(Mat<S>::unit(3, i, j), Mat<S>::unit(3, m, n));
    };
    Mat<S> r = q_pow(f, 2) * EE(0, 0, 0, 0) + q * EE(0, 0, 1, 1) + EE(0, 0, 2, 2);
    r += q * (EE(1, 1, 0, 0) + EE(1, 1, 1, 1) + EE(1, 1, 2, 2));
    r += EE(2, 2, 0, 0) + q * EE(2, 2, 1, 1) + q_pow(f, 2) * EE(2, 2, 2, 2);
    Mat<S> tail = q * EE(0, 1, 1, 0) + q * EE(0, 1, 2, 1) + EE(1, 2, 1, 0) +
                  (q - one) * EE(0, 2, 2, 0) + q * EE(1, 2, 2, 1);
    return r + kappa * tail;
}

template <CoefficientField F>
typename F::S decomposition_lambda(const F& f, const typename F::S& zeta) {
    auto one = f.integer(1);
    return f.v(-3) * zeta /
           ((one - q_pow(f, -2) * zeta) * (one + q_pow(f, -3) * zeta));
}

}  // namespace ikor
