#pragma once

// Inhomogeneous transfer matrix on N sites of C^3 and the fundamental
// Hamiltonian: logarithmic derivative of T at the homogeneous point versus
// the four-term closed form (convention (1,0), periodic wrap).

#include "ikor/rmatrix.hpp"

namespace ikor {

inline long pow3(int n) {
    long r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

/// apply the two-site operator op on legs (a, b) of an N-leg chain product
/// M (dimension 3^N (x) extra leading auxiliary leg handled by caller)
template <class S>
Mat<S> chain_embed(const Mat<S>& op, int sites, int a, int b) {
    std::vector<int> dims(static_cast<std::size_t>(sites), 3);
    return embed(op, dims, {a, b});
}

/// T(zeta | xi_1..xi_N) = tr_0( R_{01}(zeta/xi_1) ... R_{0N}(zeta/xi_N) )
template <CoefficientField F>
Mat<typename F::S> transfer_matrix(const F& f, const typename F::S& zeta,
                                   const std::vector<typename F::S>& inhom, Convention conv) {
    using S = typename F::S;
    const int n = static_cast<int>(inhom.size());
    if (n < 1 || n > 7) throw std::domain_error("transfer_matrix: 1 <= N <= 7");
    const long dim = pow3(n);
    const long full = 3 * dim;
    // product over the auxiliary leg 0 and sites 1..N
    Mat<S> acc = Mat<S>::identity(static_cast<int>(full));
    for (int k = 0; k < n; ++k) {
        Mat<S> r = build_r(f, zeta / inhom[static_cast<std::size_t>(k)], conv);
        acc = acc * chain_embed(r, n + 1, 0, k + 1);
    }
    // partial trace over leg 0
    Mat<S> t(static_cast<int>(dim), static_cast<int>(dim));
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            S v(0L);
            for (int a = 0; a < 3; ++a) v += acc(static_cast<int>(a * dim + i), static_cast<int>(a * dim + j));
            t(static_cast<int>(i), static_cast<int>(j)) = v;
        }
    return t;
}

template <CoefficientField F>
Mat<typename F::S> transfer_matrix_homogeneous(const F& f, const typename F::S& zeta, int sites,
                                               Convention conv) {
    std::vector<typename F::S> inhom(static_cast<std::size_t>(sites), f.integer(1));
    return transfer_matrix(f, zeta, inhom, conv);
}

/// the cyclic one-site shift U: |i_1 i_2 ... i_N> -> |i_2 ... i_N i_1>,
/// normalized so that T(1) = q^N U
template <class S>
Mat<S> cyclic_shift(int sites) {
    const long dim = pow3(sites);
    Mat<S> u(static_cast<int>(dim), static_cast<int>(dim));
    for (long col = 0; col < dim; ++col) {
        // col encodes (i_1 ... i_N) base 3, big-endian
        long first = col / (dim / 3);
        long rest = col % (dim / 3);
        long row = rest * 3 + first;
        u(static_cast<int>(row), static_cast<int>(col)) = S(1L);
    }
    return u;
}

/// exact-backend Hamiltonian: q^{-N} U^{-1} dT/dzeta at zeta = 1 via the
/// rational-function derivative of every entry
inline Mat<Exact> hamiltonian_log_derivative_exact(int sites, Convention conv = {1, 0}) {
    ExactField f;
    Mat<Exact> t = transfer_matrix_homogeneous(f, f.zeta(1), sites, conv);
    Mat<Exact> dt = t.map<Exact>([](const Exact& e) {
        return e.derivative(Var::zeta).subst_one(Var::zeta, Rational(1));
    });
    // T(1) = q^N U with U the cyclic shift
    Mat<Exact> uinv = cyclic_shift<Exact>(sites).transposed();  // U^{-1} = U^T
    return q_pow(f, -sites) * (uinv * dt);
}

/// numeric Hamiltonian via 5-point central differences Richardson-refined
template <unsigned D>
Mat<Num<D>> hamiltonian_log_derivative_numeric(const NumField<D>& f, int sites,
                                               Convention conv = {1, 0}) {
    using S = Num<D>;
    using R = typename S::Real;
    auto tm = [&](const S& z) { return transfer_matrix_homogeneous(f, z, sites, conv); };
    auto stencil = [&](const R& h) {
        S hh{typename S::Complex(h)};
        Mat<S> m1 = tm(S(1L) - hh - hh), m2 = tm(S(1L) - hh), m3 = tm(S(1L) + hh),
               m4 = tm(S(1L) + hh + hh);
        S c1 = S(Rational(1, 12)) / hh, c2 = S(Rational(-8, 12)) / hh,
          c3 = S(Rational(8, 12)) / hh, c4 = S(Rational(-1, 12)) / hh;
        return c1 * m1 + c2 * m2 + c3 * m3 + c4 * m4;
    };
    R h("1e-8");
    Mat<S> d1 = stencil(h);
    Mat<S> d2 = stencil(h / 2);
    // one Richardson step for the O(h^4) stencil
    S w1 = S(Rational(-1, 15)), w2 = S(Rational(16, 15));
    Mat<S> dt = w1 * d1 + w2 * d2;
    // T(1) = q^N U exactly; entries of T are regular there but the factor
    // functions are not, so the inverse is taken in closed form
    Mat<S> tinv = q_pow(f, -sites) * cyclic_shift<S>(sites).transposed();
    return tinv * dt;
}

/// the four displayed closed-form pieces; periodic indexing site N+1 = 1
template <CoefficientField F>
struct HamiltonianTerms {
    Mat<typename F::S> h12, h23, h31, h123;
    Mat<typename F::S> total;
};

template <CoefficientField F>
HamiltonianTerms<F> closed_form_hamiltonian(const F& f, int sites) {
    using S = typename F::S;
    if (sites < 2) throw std::domain_error("closed_form_hamiltonian: N >= 2");
    const long dim = pow3(sites);
    auto q = q_pow(f, 1), qi = q_pow(f, -1);
    S one = f.integer(1);
    S kappa_inv = (q - qi).inverse();
    auto E = [&](int i, int j) { return Mat<S>::unit(3, i, j); };
    auto EE = [&](int i, int j, int m, int n) { return kron(E(i - 1, j - 1), E(m - 1, n - 1)); };

    Mat<S> t12(9, 9), t23(9, 9), t31(9, 9), t123(9, 9);
    t12 = EE(1, 2, 2, 1) + EE(2, 1, 1, 2) - qi * EE(1, 1, 2, 2) - q * EE(2, 2, 1, 1);
    t12 = (S(0L) - kappa_inv) * t12;
    t23 = EE(2, 3, 3, 2) + EE(3, 2, 2, 3) - qi * EE(2, 2, 3, 3) - q * EE(3, 3, 2, 2);
    t23 = (S(0L) - kappa_inv) * t23;
    {
        S c = kappa_inv * q_number(f, 3, 1) / q_number(f, 3);  // [3]_{q^{1/2}} / [3]_q
        Mat<S> inner = EE(3, 1, 1, 3) + EE(1, 3, 3, 1) -
                       (qi + q * (q - one)) * EE(3, 3, 1, 1) -
                       (q - q_pow(f, -2) * (q - one)) * EE(1, 1, 3, 3);
        t31 = (S(0L) - c) * inner;
    }
    {
        // [3/2]_q = (q^{3/2} - q^{-3/2})/(q - q^{-1}) = v^3 - v^{-3} over v^2 - v^{-2}
        S three_half = (f.v(3) - f.v(-3)) / (f.v(2) - f.v(-2));
        S c = three_half / q_number(f, 3);
        Mat<S> inner = f.v(1) * (q * EE(1, 2, 3, 2) - qi * EE(3, 2, 1, 2)) +
                       f.v(-1) * (q * EE(2, 1, 2, 3) - qi * EE(2, 3, 2, 1)) -
                       ((f.v(1) - f.v(-1)) * q_number(f, 2)) * EE(2, 2, 2, 2);
        t123 = (S(0L) - c) * inner;
    }

    HamiltonianTerms<F> H;
    Mat<S> zero(static_cast<int>(dim), static_cast<int>(dim));
    H.h12 = zero;
    H.h23 = zero;
    H.h31 = zero;
    H.h123 = zero;
    for (int l = 0; l < sites; ++l) {
        int a = l, b = (l + 1) % sites;
        H.h12 += chain_embed(t12, sites, a, b);
        H.h23 += chain_embed(t23, sites, a, b);
        H.h31 += chain_embed(t31, sites, a, b);
        H.h123 += chain_embed(t123, sites, a, b);
    }
    H.total = H.h12 + H.h23 + H.h31 + H.h123;
    return H;
}

}  // namespace ikor
