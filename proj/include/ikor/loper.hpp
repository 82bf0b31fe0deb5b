#pragma once

// L-operators over the q-oscillator algebra: the displayed closed forms of
// L-hat, L-check, the sigma image and the inverse partner, their factor
// product oracles over the truncated Fock space, and the RLL exchange
// relations.  All identities are stated with the scalar prefactor
// exp(lambda(-q zeta^s)) dropped.

#include "ikor/oscillator.hpp"
#include "ikor/rmatrix.hpp"

#include <array>

namespace ikor {

/// c * (adag)^j a^k q^{nD}  (D-factor written on the right)
template <CoefficientField F>
OscOp<typename F::S> osc_suffix(const F& f, int j, int k, int n, const typename F::S& c) {
    return OscOp<typename F::S>::monomial(j, k, n, c * q_pow(f, n * k));
}

/// c * q^{nD} (adag)^j a^k  (D-factor written on the left)
template <CoefficientField F>
OscOp<typename F::S> osc_prefix(const F& f, int n, int j, int k, const typename F::S& c) {
    return OscOp<typename F::S>::monomial(j, k, n, c * q_pow(f, n * j));
}

enum class LKind { Hat, Check, HatSigma, CheckPrime };

template <class S>
struct LOp {
    Convention conv;
    std::array<OscOp<S>, 9> e;  // row-major 3x3, entries in Osc

    OscOp<S>& at(int i, int j) { return e[static_cast<std::size_t>(3 * i + j)]; }
    const OscOp<S>& at(int i, int j) const { return e[static_cast<std::size_t>(3 * i + j)]; }

    friend bool operator==(const LOp& x, const LOp& y) { return x.e == y.e; }

    /// 180-degree rotation: the J (.) J conjugation for matrices with
    /// noncommuting entries (transpose, then skew-transpose)
    LOp rotated() const {
        LOp r;
        r.conv = conv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.at(i, j) = at(2 - i, 2 - j);
        return r;
    }

    template <CoefficientField F>
    LOp map_sigma(const F& f) const {
        LOp r;
        r.conv = conv;
        for (int i = 0; i < 9; ++i) r.e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)].template sigma<F>(f);
        return r;
    }
    LOp map_tau() const {
        LOp r;
        r.conv = conv;
        for (int i = 0; i < 9; ++i) r.e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)].tau();
        return r;
    }
    LOp map_gamma(const S& zeta, int s1) const {
        LOp r;
        r.conv = conv;
        for (int i = 0; i < 9; ++i) r.e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)].gamma(zeta, s1);
        return r;
    }
};

/// the displayed closed form of the chosen L-operator type at spectral
/// value zeta (which may be any exact monomial or numeric value)
template <CoefficientField F>
LOp<typename F::S> build_l(const F& f, const typename F::S& zeta, Convention conv, LKind kind) {
    using S = typename F::S;
    const int s = conv.s(), s1 = conv.s1;
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S zs = pow_i(zeta, s);
    S qp1 = q + one;
    auto mono = [&](int j, int k, int n, const S& c) { return osc_suffix(f, j, k, n, c); };
    auto qd = [&](int n, const S& c) { return OscOp<S>::monomial(0, 0, n, c); };

    LOp<S> L;
    L.conv = conv;
    switch (kind) {
        case LKind::Hat:
            L.at(0, 0) = qd(-1, one) + qd(1, q_pow(f, 2) * zs);
            L.at(0, 1) = mono(1, 0, 0, S(0L) - qp1 * q * pow_i(zeta, s - s1));
            L.at(0, 2) = mono(2, 0, -1, qp1 * qi * pow_i(zeta, s - 2 * s1));
            L.at(1, 0) = mono(0, 1, -1, pow_i(zeta, s1));
            L.at(1, 1) = qd(0, one - q * zs);
            L.at(1, 2) = mono(1, 0, -1, qp1 * qi * pow_i(zeta, s - s1));
            L.at(2, 0) = mono(0, 2, -1, q / qp1 * pow_i(zeta, 2 * s1));
            L.at(2, 1) = mono(0, 1, 0, pow_i(zeta, s1));
            L.at(2, 2) = qd(1, one) + qd(-1, zs);
            break;
        case LKind::Check:
            L.at(0, 0) = qd(1, one) + qd(-1, zs);
            L.at(0, 1) = mono(0, 1, 0, pow_i(zeta, s1));
            L.at(0, 2) = mono(0, 2, -1, q / qp1 * pow_i(zeta, 2 * s1));
            L.at(1, 0) = mono(1, 0, -1, qp1 * qi * pow_i(zeta, s - s1));
            L.at(1, 1) = qd(0, one - q * zs);
            L.at(1, 2) = mono(0, 1, -1, pow_i(zeta, s1));
            L.at(2, 0) = mono(2, 0, -1, qp1 * qi * pow_i(zeta, s - 2 * s1));
            L.at(2, 1) = mono(1, 0, 0, S(0L) - qp1 * q * pow_i(zeta, s - s1));
            L.at(2, 2) = qd(-1, one) + qd(1, q_pow(f, 2) * zs);
            break;
        case LKind::HatSigma:
            L.at(0, 0) = qd(1, q) + qd(-1, q * zs);
            L.at(0, 1) = mono(0, 1, -1, S(0L) - qp1 * q * pow_i(zeta, s - s1));
            L.at(0, 2) = mono(0, 2, -1, qp1 * q * pow_i(zeta, s - 2 * s1));
            L.at(1, 0) = mono(1, 0, 0, S(0L) - pow_i(zeta, s1));
            L.at(1, 1) = qd(0, one - q * zs);
            L.at(1, 2) = mono(0, 1, 0, qp1 * pow_i(zeta, s - s1));
            L.at(2, 0) = mono(2, 0, -1, qi / qp1 * pow_i(zeta, 2 * s1));
            L.at(2, 1) = mono(1, 0, -1, S(0L) - qi * pow_i(zeta, s1));
            L.at(2, 2) = qd(-1, qi) + qd(1, q * zs);
            break;
        case LKind::CheckPrime:
            L.at(0, 0) = qd(1, one) - qd(-1, q_pow(f, 3) * zs);
            L.at(0, 1) = osc_prefix(f, -1, 1, 0, qp1 * q_pow(f, 3) * pow_i(zeta, s - s1));
            L.at(0, 2) = osc_prefix(f, -1, 2, 0,
                                    S(0L) - qp1 * q_pow(f, 3) * pow_i(zeta, s - 2 * s1));
            L.at(1, 0) = mono(0, 1, 0, S(0L) - pow_i(zeta, s1));
            L.at(1, 1) = qd(0, one + q_pow(f, 4) * zs);
            L.at(1, 2) = mono(1, 0, 0, S(0L) - qp1 * q_pow(f, 3) * pow_i(zeta, s - s1));
            L.at(2, 0) = osc_prefix(f, -1, 0, 2, one / qp1 * pow_i(zeta, 2 * s1));
            L.at(2, 1) = osc_prefix(f, -1, 0, 1, S(0L) - pow_i(zeta, s1));
            L.at(2, 2) = qd(-1, one) - qd(1, q_pow(f, 5) * zs);
            break;
    }
    return L;
}

// --- checks on the symbolic level -----------------------------------------

/// L-hat * L-check-prime minus (1 + q^2 zeta^s)(1 - q^3 zeta^s) * identity,
/// computed in the symbolic oscillator algebra (no truncation involved)
template <CoefficientField F>
std::array<OscOp<typename F::S>, 9> inverse_relation_residual(const F& f,
                                                              const typename F::S& zeta,
                                                              Convention conv) {
    using S = typename F::S;
    auto lh = build_l(f, zeta, conv, LKind::Hat);
    auto lp = build_l(f, zeta, conv, LKind::CheckPrime);
    S zs = pow_i(zeta, conv.s());
    S scal = (f.integer(1) + q_pow(f, 2) * zs) * (f.integer(1) - q_pow(f, 3) * zs);
    std::array<OscOp<S>, 9> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            OscOp<S> acc;
            for (int k = 0; k < 3; ++k)
                acc += OscOp<S>::mul(f, lh.at(i, k), lp.at(k, j));
            if (i == j) acc -= OscOp<S>(scal);
            out[static_cast<std::size_t>(3 * i + j)] = acc;
        }
    return out;
}

// --- materialization -------------------------------------------------------

/// L as a matrix on C^3 (x) Fock with composite index i*(N_f+1) + n
template <CoefficientField F>
Mat<typename F::S> materialize_l(const Fock<F>& fock, const LOp<typename F::S>& lop) {
    using S = typename F::S;
    const int L = fock.levels();
    Mat<S> r(3 * L, 3 * L);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Mat<S> blk = fock.materialize(lop.at(i, j));
            for (int m = 0; m < L; ++m)
                for (int n = 0; n < L; ++n)
                    if (!blk(m, n).is_zero()) r(i * L + m, j * L + n) = blk(m, n);
        }
    return r;
}

/// the four factor images of the L-hat product construction, materialized on
/// C^3 (x) Fock; `which` as in the R-matrix factor order Prec, Sim, Succ, K.
/// SimDelta is the bracket with the scalar prefactor dropped.
template <CoefficientField F>
Mat<typename F::S> build_lhat_factor(const F& f, const Fock<F>& fock, const typename F::S& zeta,
                                     Convention conv, RFactor which) {
    using S = typename F::S;
    const int s = conv.s(), s1 = conv.s1;
    const int L = fock.levels();
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S zs = pow_i(zeta, s);
    Mat<S> r(3 * L, 3 * L);
    auto place = [&](int i, int j, const Mat<S>& blk) {
        for (int m = 0; m < L; ++m)
            for (int n = 0; n < L; ++n)
                if (!blk(m, n).is_zero()) r(i * L + m, j * L + n) += blk(m, n);
    };
    auto ident = Mat<S>::identity(L);
    auto qq = [&](int k, int n) { return q_pow(f, k + 2 * n); };  // q^k q^{2n}

    switch (which) {
        case RFactor::PrecDelta: {
            place(0, 0, ident);
            place(1, 1, ident);
            place(2, 2, ident);
            // zeta^{s1} a (1 + q^2 zeta^s q^{2D})^{-1} on E21 and
            // (1 - q^3 ...)^{-1} on E32, plus the a^2 term on E31
            Mat<S> amat = fock.a_mat();
            Mat<S> inv21 = fock.diagonal([&](int n) { return (one + qq(2, n) * zs).inverse(); });
            Mat<S> inv32 = fock.diagonal([&](int n) { return (one - qq(3, n) * zs).inverse(); });
            place(1, 0, pow_i(zeta, s1) * (amat * inv21));
            place(2, 1, pow_i(zeta, s1) * (amat * inv32));
            place(2, 0, (q / (q + one) * pow_i(zeta, 2 * s1)) * (amat * amat * inv21));
            break;
        }
        case RFactor::SimDelta: {
            place(0, 0, fock.diagonal([&](int n) { return one + qq(2, n) * zs; }));
            place(1, 1, fock.diagonal([&](int n) {
                      return (one + q_pow(f, 2) * zs) * (one - qq(3, n) * zs) /
                             (one + qq(4, n) * zs);
                  }));
            place(2, 2, fock.diagonal([&](int n) {
                      return (one + q_pow(f, 2) * zs) * (one - q_pow(f, 3) * zs) /
                             (one - qq(5, n) * zs);
                  }));
            break;
        }
        case RFactor::SuccDelta: {
            place(0, 0, ident);
            place(1, 1, ident);
            place(2, 2, ident);
            Mat<S> ad = fock.adag_mat();
            S kap = (q - qi) / (q - one);
            Mat<S> inv12 = fock.diagonal([&](int n) { return (one + qq(4, n) * zs).inverse(); });
            Mat<S> inv23 = fock.diagonal([&](int n) { return (one - qq(5, n) * zs).inverse(); });
            Mat<S> inv13 = fock.diagonal([&](int n) { return (one + qq(6, n) * zs).inverse(); });
            Mat<S> qm2d = fock.diagonal([&](int n) { return q_pow(f, -2 * n); });
            place(0, 1, (S(0L) - kap * q_pow(f, 2) * pow_i(zeta, s - s1)) * (ad * inv12));
            place(1, 2, (kap * q_pow(f, 4) * pow_i(zeta, s - s1)) * (ad * inv23));
            place(0, 2, (kap * pow_i(zeta, s - 2 * s1)) * (ad * ad * qm2d * inv13));
            break;
        }
        case RFactor::K: {
            place(0, 0, fock.diagonal([&](int n) { return q_pow(f, -n); }));
            place(1, 1, ident);
            place(2, 2, fock.diagonal([&](int n) { return q_pow(f, n); }));
            break;
        }
        default:
            throw std::domain_error("build_lhat_factor: Prec/Sim/Succ/K only");
    }
    return r;
}

/// restrict to Fock levels 0..top-band on both sides (site-major layout)
template <class S>
Mat<S> interior_l(const Mat<S>& m, int levels, int band) {
    Mat<S> r(m.rows(), m.cols());
    int keep = levels - band;
    for (int i = 0; i < m.rows(); ++i) {
        if (i % levels >= keep) continue;
        for (int j = 0; j < m.cols(); ++j) {
            if (j % levels >= keep) continue;
            r(i, j) = m(i, j);
        }
    }
    return r;
}

// --- RLL ------------------------------------------------------------------

/// L embedded on (Fock, one C^3 leg) of the space Fock (x) C^3 (x) C^3 with
/// composite index (n*3 + i)*3 + j; leg = 0 places L on the first C^3
template <CoefficientField F>
Mat<typename F::S> embed_l_fc33(const Fock<F>& fock, const LOp<typename F::S>& lop, int leg) {
    using S = typename F::S;
    const int L = fock.levels();
    Mat<S> r(9 * L, 9 * L);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Mat<S> blk = fock.materialize(lop.at(i, j));
            for (int m = 0; m < L; ++m)
                for (int n = 0; n < L; ++n) {
                    if (blk(m, n).is_zero()) continue;
                    for (int other = 0; other < 3; ++other) {
                        int row = leg == 0 ? (m * 3 + i) * 3 + other : (m * 3 + other) * 3 + i;
                        int col = leg == 0 ? (n * 3 + j) * 3 + other : (n * 3 + other) * 3 + j;
                        r(row, col) += blk(m, n);
                    }
                }
        }
    return r;
}

/// interior restriction helper: zero rows/cols whose Fock level (extracted
/// by `level_of`) exceeds top - band
template <class S, class Fn>
Mat<S> restrict_levels(const Mat<S>& m, int levels, int band, Fn&& level_of) {
    Mat<S> out(m.rows(), m.cols());
    int keep = levels - band;
    for (int a = 0; a < m.rows(); ++a) {
        if (level_of(a) >= keep) continue;
        for (int b = 0; b < m.cols(); ++b) {
            if (level_of(b) >= keep) continue;
            out(a, b) = m(a, b);
        }
    }
    return out;
}

/// residual of the exchange relation for type L-hat with explicit operands:
///   R_23(z12) L_13(z1) L_12(z2) - L_12(z2) L_13(z1) R_23(z12)
/// on Fock (x) C^3 (x) C^3, restricted to the interior Fock band
template <CoefficientField F>
Mat<typename F::S> rll_hat_residual_ops(const F& f, const Fock<F>& fock,
                                        const LOp<typename F::S>& l1,
                                        const LOp<typename F::S>& l2,
                                        const typename F::S& z12, Convention conv,
                                        int band = 4) {
    using S = typename F::S;
    const int L = fock.levels();
    Mat<S> l13 = embed_l_fc33(fock, l1, 1);
    Mat<S> l12 = embed_l_fc33(fock, l2, 0);
    Mat<S> r23 = kron(Mat<S>::identity(L), build_r(f, z12, conv));
    Mat<S> lhs = r23 * l13 * l12 - l12 * l13 * r23;
    return restrict_levels(lhs, L, band, [](int a) { return a / 9; });
}

template <CoefficientField F>
Mat<typename F::S> rll_hat_residual(const F& f, const Fock<F>& fock, const typename F::S& z1,
                                    const typename F::S& z2, Convention conv, int band = 4) {
    auto l1 = build_l(f, z1, conv, LKind::Hat);
    auto l2 = build_l(f, z2, conv, LKind::Hat);
    return rll_hat_residual_ops(f, fock, l1, l2, z1 / z2, conv, band);
}

/// L embedded on (one C^3 leg, Fock) of C^3 (x) C^3 (x) Fock with composite
/// index (i*3 + j)*L + n
template <CoefficientField F>
Mat<typename F::S> embed_l_c33f(const Fock<F>& fock, const LOp<typename F::S>& lop, int leg) {
    using S = typename F::S;
    const int L = fock.levels();
    Mat<S> r(9 * L, 9 * L);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Mat<S> blk = fock.materialize(lop.at(i, j));
            for (int m = 0; m < L; ++m)
                for (int n = 0; n < L; ++n) {
                    if (blk(m, n).is_zero()) continue;
                    for (int other = 0; other < 3; ++other) {
                        int row = leg == 0 ? (i * 3 + other) * L + m : (other * 3 + i) * L + m;
                        int col = leg == 0 ? (j * 3 + other) * L + n : (other * 3 + j) * L + n;
                        r(row, col) += blk(m, n);
                    }
                }
        }
    return r;
}

/// residual for type L-check with explicit operands:
///   R_12(z12) L_13(z1) L_23(z2) - L_23(z2) L_13(z1) R_12(z12)
template <CoefficientField F>
Mat<typename F::S> rll_check_residual_ops(const F& f, const Fock<F>& fock,
                                          const LOp<typename F::S>& l1,
                                          const LOp<typename F::S>& l2,
                                          const typename F::S& z12, Convention conv,
                                          int band = 4) {
    using S = typename F::S;
    const int L = fock.levels();
    Mat<S> l13 = embed_l_c33f(fock, l1, 0);
    Mat<S> l23 = embed_l_c33f(fock, l2, 1);
    Mat<S> r12 = kron(build_r(f, z12, conv), Mat<S>::identity(L));
    Mat<S> lhs = r12 * l13 * l23 - l23 * l13 * r12;
    return restrict_levels(lhs, L, band, [L](int a) { return a % L; });
}

template <CoefficientField F>
Mat<typename F::S> rll_check_residual(const F& f, const Fock<F>& fock, const typename F::S& z1,
                                      const typename F::S& z2, Convention conv, int band = 4) {
    auto l1 = build_l(f, z1, conv, LKind::Check);
    auto l2 = build_l(f, z2, conv, LKind::Check);
    return rll_check_residual_ops(f, fock, l1, l2, z1 / z2, conv, band);
}

/// boxed form: Rhat(z12) (L(z1) box L(z2)) - (L(z2) box L(z1)) Rhat(z12) on
/// Fock (x) C^3 (x) C^3, where (A box B)_{(ik)(jl)} = A_ij B_kl in Osc
template <CoefficientField F>
Mat<typename F::S> rll_boxed_residual(const F& f, const Fock<F>& fock, const typename F::S& z1,
                                      const typename F::S& z2, Convention conv, int band = 4) {
    using S = typename F::S;
    const int L = fock.levels();
    auto la = build_l(f, z1, conv, LKind::Hat);
    auto lb = build_l(f, z2, conv, LKind::Hat);
    auto boxed = [&](const LOp<S>& A, const LOp<S>& B) {
        Mat<S> r(9 * L, 9 * L);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 3; ++j)
                    for (int l = 0; l < 3; ++l) {
                        auto prod = OscOp<S>::mul(f, A.at(i, j), B.at(k, l));
                        if (prod.is_zero()) continue;
                        Mat<S> blk = fock.materialize(prod);
                        for (int m = 0; m < L; ++m)
                            for (int n = 0; n < L; ++n)
                                if (!blk(m, n).is_zero())
                                    r(m * 9 + i * 3 + k, n * 9 + j * 3 + l) += blk(m, n);
                    }
        return r;
    };
    Mat<S> rhat = build_r(f, z1 / z2, conv) * Mat<S>::permutation(3);
    Mat<S> rhat_f = kron(Mat<S>::identity(L), rhat);
    Mat<S> lhs = rhat_f * boxed(la, lb) - boxed(lb, la) * rhat_f;
    Mat<S> out(9 * L, 9 * L);
    int keep = L - band;
    for (int a = 0; a < 9 * L; ++a) {
        if (a / 9 >= keep) continue;
        for (int b = 0; b < 9 * L; ++b) {
            if (b / 9 >= keep) continue;
            out(a, b) = lhs(a, b);
        }
    }
    return out;
}

// --- gauge relations --------------------------------------------------------

/// residual of Lhat^{(s,s1)}(z1/z2) = gamma_{z1}(G(z2) Lhat^{(1,0)}((z1/z2)^s) G^{-1}(z2))
template <CoefficientField F>
std::array<OscOp<typename F::S>, 9> gauge_relation_lhat(const F& f, const typename F::S& z1,
                                                        const typename F::S& z2, Convention conv) {
    using S = typename F::S;
    S z12 = z1 / z2;
    auto lhs = build_l(f, z12, conv, LKind::Hat);
    auto base = build_l(f, pow_i(z12, conv.s()), Convention{1, 0}, LKind::Hat);
    std::array<OscOp<S>, 9> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // G = diag(z2^{s1}, 1, z2^{-s1}); conjugation scales entry (i,j).
            // The gamma map enters with inverted argument on the hat side
            // (oscillator in the first leg): a -> a z1^{+s1}, adag -> adag z1^{-s1}.
            int w = (1 - i) - (1 - j);  // s1-weight
            OscOp<S> rhs = base.at(i, j);
            rhs = pow_i(z2, conv.s1 * w) * rhs;
            rhs = rhs.gamma(z1.inverse(), conv.s1);
            out[static_cast<std::size_t>(3 * i + j)] = lhs.at(i, j) - rhs;
        }
    return out;
}

/// residual of Lcheck^{(s,s1)}(z1/z2) = G(z1) gamma_{z2}(Lcheck^{(1,0)}((z1/z2)^s)) G^{-1}(z1)
template <CoefficientField F>
std::array<OscOp<typename F::S>, 9> gauge_relation_lcheck(const F& f, const typename F::S& z1,
                                                          const typename F::S& z2,
                                                          Convention conv) {
    using S = typename F::S;
    S z12 = z1 / z2;
    auto lhs = build_l(f, z12, conv, LKind::Check);
    auto base = build_l(f, pow_i(z12, conv.s()), Convention{1, 0}, LKind::Check);
    std::array<OscOp<S>, 9> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int w = (1 - i) - (1 - j);
            OscOp<S> rhs = base.at(i, j).gamma(z2, conv.s1);
            rhs = pow_i(z1, conv.s1 * w) * rhs;
            out[static_cast<std::size_t>(3 * i + j)] = lhs.at(i, j) - rhs;
        }
    return out;
}

/// split L^{(1,0)}(zeta) = A + B zeta^s by zeta-degree; both parts should
/// materialize to invertible matrices
template <CoefficientField F>
std::pair<Mat<typename F::S>, Mat<typename F::S>> l_linear_split(const F& f, const Fock<F>& fock,
                                                                 LKind kind) {
    using S = typename F::S;
    auto l0 = build_l(f, f.integer(0), Convention{1, 0}, kind);  // zeta = 0 part
    auto l1 = build_l(f, f.integer(1), Convention{1, 0}, kind);
    LOp<S> lb;
    lb.conv = Convention{1, 0};
    for (int i = 0; i < 9; ++i)
        lb.e[static_cast<std::size_t>(i)] =
            l1.e[static_cast<std::size_t>(i)] - l0.e[static_cast<std::size_t>(i)];
    return {materialize_l(fock, l0), materialize_l(fock, lb)};
}

}  // namespace ikor
