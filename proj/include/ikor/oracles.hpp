#pragma once

// Series-based oracles: the R-matrix factors rebuilt as truncated products
// and sums of q-exponentials of root-vector images, to be compared with the
// closed forms entry by entry.  The series variable t stands for zeta^s;
// residual zeta^{s1} prefactors live inside the coefficients, so every
// spectral convention is covered.

#include "ikor/rmatrix.hpp"
#include "ikor/series.hpp"

namespace ikor {

template <CoefficientField F>
using SeriesMat = Mat<Series<typename F::S>>;

/// lift an exact matrix to a series matrix concentrated at order m
template <CoefficientField F>
SeriesMat<F> at_order(const F&, const Mat<typename F::S>& m, int ord, int trunc, int step) {
    using S = typename F::S;
    SeriesMat<F> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Series<S> s = Series<S>::zero_to(trunc, step);
            if (!m(i, j).is_zero()) s.set(ord, m(i, j));
            r(i, j) = s;
        }
    return r;
}

template <CoefficientField F>
SeriesMat<F> series_identity(const F&, int n) {
    using S = typename F::S;
    SeriesMat<F> r(n, n);
    for (int i = 0; i < n; ++i) r(i, i) = Series<S>(S(1L));
    return r;
}

/// x_{gamma,m} = (q - q^{-1}) phi_{z1}(e_{gamma+m delta}) (x)
/// phi_{z2}(f_{gamma+m delta}) as a series matrix; `fam` picks the family.
/// The zeta-ratio powers decompose as (offset monomial) * t^{order}.
template <CoefficientField F>
SeriesMat<F> tensor_term(const F& f, Convention conv, RootFamily fam, int m, int trunc) {
    using S = typename F::S;
    S one = f.integer(1);
    // closed-form images at zeta = 1 carry everything except zeta powers
    Mat<S> e = phi_closed_form(f, one, conv, Root::of(fam, m), VectorKind::E);
    Mat<S> fm = phi_closed_form(f, one, conv, Root::of(fam, m), VectorKind::F);
    S kappa = q_pow(f, 1) - q_pow(f, -1);
    Mat<S> x = kappa * kron(e, fm);
    // net zeta power of e (x) f in the ratio zeta = z1/z2 and its t-order
    int s = conv.s();
    int power = 0;
    switch (fam) {
        case RootFamily::AlphaDelta: power = conv.s1 + m * s; break;
        case RootFamily::TwoAlphaOddDelta: power = 2 * conv.s1 + (2 * m + 1) * s; break;
        case RootFamily::DeltaMinusAlpha: power = s - conv.s1 + m * s; break;
        case RootFamily::DeltaMinusTwoAlpha: power = s - 2 * conv.s1 + 2 * m * s; break;
        case RootFamily::Imaginary: power = m * s; break;
    }
    // split power = offset + order * s with 0 <= offset < s (floor division)
    if (s < 1) throw std::domain_error("tensor_term: oracle needs s >= 1");
    int order = power >= 0 ? power / s : -((-power + s - 1) / s);
    int offset = power - order * s;
    x = pow_i(f.zeta(1), offset) * x;
    return at_order(f, x, order, trunc, s);
}

/// truncated product of q-exponentials for one root family; arrow = +1 for
/// ascending m left-to-right, -1 for descending
template <CoefficientField F>
SeriesMat<F> factor_product_oracle(const F& f, Convention conv, RootFamily fam, int trunc,
                                   int arrow) {
    using S = typename F::S;
    int s = conv.s();
    // orders advance at least by s per family step; m < trunc suffices
    int terms = trunc + 1;
    SeriesMat<F> acc = series_identity(f, 9);
    Series<S> base_q(q_pow(f, -form(Root::of(fam, 0), Root::of(fam, 0))));
    for (int i = 0; i < terms; ++i) {
        int m = arrow > 0 ? i : terms - 1 - i;
        SeriesMat<F> x = tensor_term(f, conv, fam, m, trunc);
        acc = acc * qexp(x, base_q, 4);
    }
    return acc;
}

/// decompose zeta^{power} = zeta^{offset} * t^{shift} with 0 <= offset < s
template <CoefficientField F>
std::pair<typename F::S, int> zeta_power_split(const F& f, int power, int s) {
    if (s < 1) throw std::domain_error("zeta_power_split: s >= 1");
    int shift = power >= 0 ? power / s : -((-power + s - 1) / s);
    return {pow_i(f.zeta(1), power - shift * s), shift};
}

/// closed-form factor expanded as a series matrix
template <CoefficientField F>
SeriesMat<F> factor_closed_series(const F& f, Convention conv, RFactor which, int trunc) {
    using S = typename F::S;
    const int s = conv.s(), s1 = conv.s1;
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S kappa = q - qi;
    auto EE = [&](int i, int j, int m, int n) {
        return kron(Mat<S>::unit(3, i, j), Mat<S>::unit(3, m, n));
    };
    auto geo = [&](const S& c) { return geometric_series(c, trunc, s); };  // 1/(1 - c t)
    SeriesMat<F> r = series_identity(f, 9);
    // accumulate c * zeta^{power} * val at the canonical offset/shift split
    auto put = [&](const Mat<S>& pos, const S& c, int power, const Series<S>& val) {
        auto [mono, shift] = zeta_power_split(f, power, s);
        Series<S> tsh = Series<S>::zero_to(trunc, s);
        if (shift >= 0 && shift <= trunc) tsh.set(shift, one);
        Series<S> term = (c * mono) * (val * tsh);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
                if (!pos(i, j).is_zero()) r(i, j) += Series<S>(pos(i, j)) * term;
    };
    Series<S> inv2 = Series<S>::zero_to(trunc, s);  // 1/(1 - t^2)
    for (int m = 0; 2 * m <= trunc; ++m) inv2.set(2 * m, one);

    switch (which) {
        case RFactor::Alpha: {
            Series<S> inv1 = geo(one);        // 1/(1 - t)
            Series<S> invq = geo(S(0L) - q);  // 1/(1 + q t)
            Series<S> invqi = geo(S(0L) - qi);
            put(EE(0, 1, 1, 0) + EE(1, 2, 2, 1), kappa, s1, inv1);
            put(EE(0, 1, 2, 1), kappa, s1, invq);
            put(EE(1, 2, 1, 0), kappa, s1, invqi);
            // (q-q^{-1})(q-1)(1 - q^{-2} t) / ((1-t^2)(1+q^{-1} t)) at zeta^{2 s1}
            Series<S> num = linear_series(one, S(0L) - q_pow(f, -2), trunc, s);
            put(EE(0, 2, 2, 0), kappa * (q - one), 2 * s1, num * inv2 * invqi);
            break;
        }
        case RFactor::DeltaMinusAlpha: {
            Series<S> inv1 = geo(one);
            Series<S> invq = geo(S(0L) - q);
            Series<S> invqi = geo(S(0L) - qi);
            put(EE(1, 0, 0, 1) + EE(2, 1, 1, 2), kappa, s - s1, inv1);
            put(EE(1, 0, 1, 2), S(0L) - kappa * q_pow(f, 2), s - s1, invq);
            put(EE(2, 1, 0, 1), S(0L) - kappa * q_pow(f, -2), s - s1, invqi);
            // (q-q^{-1})(q-1-(1-q^{-1})q^{-1} t) zeta^{2(s-s1)} / ((1-t^2)(1+q^{-1}t))
            Series<S> num = linear_series(q - one, S(0L) - (one - qi) * qi, trunc, s);
            put(EE(2, 0, 0, 2), kappa, 2 * (s - s1), num * inv2 * invqi);
            break;
        }
        case RFactor::SimDelta: {
            // normalized diagonal entries as rational series in t
            auto lin = [&](const S& c) { return linear_series(one, c, trunc, s); };
            Series<S> up = lin(S(0L) - q_pow(f, 2)) * geo(one);
            Series<S> dn = lin(S(0L) - one) * lin(S(0L) - q_pow(f, -2)).inverse();
            Series<S> r22 = lin(q) * lin(qi).inverse();
            Series<S> r13 = up * lin(q_pow(f, 3)) * lin(q).inverse();
            Series<S> r31 = dn * lin(qi) * lin(q_pow(f, -3)).inverse();
            r = SeriesMat<F>(9, 9);
            r(0, 0) = Series<S>(one);
            r(4, 4) = r22;
            r(8, 8) = Series<S>(one);
            r(1, 1) = up;
            r(5, 5) = up;
            r(3, 3) = dn;
            r(7, 7) = dn;
            r(2, 2) = r13;
            r(6, 6) = r31;
            break;
        }
        default:
            throw std::domain_error("factor_closed_series: Alpha, DeltaMinusAlpha, SimDelta");
    }
    return r;
}

/// the exponent series of the diagonal factor: sum_m (q - q^{-1}) b_m^{-1}
/// phi(e_{m delta})_{ii} phi(f_{m delta})_{jj} t^m per slot
template <CoefficientField F>
std::array<Series<typename F::S>, 9> sim_delta_exponent(const F& f, Convention conv, int trunc) {
    using S = typename F::S;
    int s = conv.s();
    S kappa = q_pow(f, 1) - q_pow(f, -1);
    std::array<Series<S>, 9> expo;
    for (auto& slot : expo) slot = Series<S>::zero_to(trunc, s);
    for (int m = 1; m <= trunc; ++m) {
        Mat<S> em = phi_closed_form(f, f.integer(1), conv, Root::of(RootFamily::Imaginary, m),
                                    VectorKind::E);
        Mat<S> fm = phi_closed_form(f, f.integer(1), conv, Root::of(RootFamily::Imaginary, m),
                                    VectorKind::F);
        S bm_inv = b_coefficient(f, m).inverse();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto& cur = expo[static_cast<std::size_t>(3 * i + j)];
                cur.set(m, cur.coeff(m) + kappa * bm_inv * em(i, i) * fm(j, j));
            }
    }
    return expo;
}

/// exact log-form residuals of the diagonal-factor oracle: per slot,
/// exponent - [lambda(q t) - lambda(q^{-1} t)] - log(closed-form entry),
/// the latter written as a sum of log(1 + c t) series
template <CoefficientField F>
std::array<Series<typename F::S>, 9> sim_delta_log_residual(const F& f, Convention conv,
                                                            int trunc) {
    using S = typename F::S;
    int s = conv.s();
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    auto expo = sim_delta_exponent(f, conv, trunc);
    Series<S> pref =
        lambda_series(f, trunc, q, s) - lambda_series(f, trunc, qi, s);
    auto L = [&](const S& c) { return linear_log_series(c, trunc, s); };
    std::array<Series<S>, 9> logs;
    Series<S> zero = Series<S>::zero_to(trunc, s);
    Series<S> up = L(S(0L) - q_pow(f, 2)) - L(S(0L) - f.integer(1));
    Series<S> dn = L(S(0L) - f.integer(1)) - L(S(0L) - q_pow(f, -2));
    logs[0] = zero;
    logs[4] = L(q) - L(qi);
    logs[8] = zero;
    logs[1] = up;
    logs[5] = up;
    logs[3] = dn;
    logs[7] = dn;
    logs[2] = up + L(q_pow(f, 3)) - L(q);
    logs[6] = dn + L(qi) - L(q_pow(f, -3));
    std::array<Series<S>, 9> out;
    for (int d = 0; d < 9; ++d)
        out[static_cast<std::size_t>(d)] =
            expo[static_cast<std::size_t>(d)] - pref - logs[static_cast<std::size_t>(d)];
    return out;
}

/// oracle for the diagonal factor: exp of the imaginary-root sum divided by
/// the transcendental prefactor series
template <CoefficientField F>
SeriesMat<F> sim_delta_oracle(const F& f, Convention conv, int trunc) {
    using S = typename F::S;
    auto expo = sim_delta_exponent(f, conv, trunc);
    // divide each diagonal exp by the prefactor exp(lambda(q t) - lambda(q^{-1} t))
    Series<S> pref =
        (lambda_series(f, trunc, q_pow(f, 1), conv.s()) -
         lambda_series(f, trunc, q_pow(f, -1), conv.s()))
            .exp();
    Series<S> pref_inv = pref.inverse();
    SeriesMat<F> out(9, 9);
    for (int d = 0; d < 9; ++d)
        out(d, d) = expo[static_cast<std::size_t>(d)].exp() * pref_inv;
    return out;
}

/// substitute t -> zeta^s: collapse a truncated series of exact scalars into
/// one exact scalar (valid because the series variable stands for zeta^s)
inline Exact collapse_series(const Series<Exact>& ser, int s) {
    Exact acc;
    for (int m = 0; m < ser.stored(); ++m) {
        if (ser.coeff(m).is_zero()) continue;
        acc = acc + Exact::variable(Var::zeta, s * m) * ser.coeff(m);
    }
    return acc;
}

/// compare two exact series matrices as zeta-expansions through
/// zeta^{s * max_order}; sound when every coefficient has a zeta-free
/// denominator (true for the factor oracles)
inline bool series_mat_equal_collapsed(const Mat<Series<Exact>>& a, const Mat<Series<Exact>>& b,
                                       int s, int max_order) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Exact d = collapse_series(a(i, j), s) - collapse_series(b(i, j), s);
            auto chop = [&](const RatFun& r) {
                if (r.den().depends_on(Var::zeta))
                    throw std::logic_error("collapsed comparison needs zeta-free denominators");
                return r.num().truncate_var(Var::zeta, s * max_order);
            };
            if (!chop(d.re()).is_zero() || !chop(d.uco()).is_zero()) return false;
        }
    return true;
}

}  // namespace ikor
