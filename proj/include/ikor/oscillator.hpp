#pragma once

// q-deformed oscillator algebra.  Elements are kept in the normal-ordered
// symbolic form sum c_{j,n,k} (adag)^j q^{nD} a^k, which products reduce to
// via
//     a adag   = 1 - q^2 q^{2D},
//     q^{nD} a = q^{-n} a q^{nD},    q^{nD} adag = q^{n} adag q^{nD}.
// The symbolic form makes the substitution maps sigma, tau, gamma and the
// two-parameter automorphism group exact; truncated Fock-space matrices are
// obtained by materializing on the basis |0> ... |N_f>.

#include "ikor/algebra.hpp"

#include <map>

namespace ikor {

struct OscMono {
    int j = 0;  // adag power
    int k = 0;  // a power
    int n = 0;  // q^{nD} exponent
    friend auto operator<=>(const OscMono&, const OscMono&) = default;
};

template <class S>
class OscOp {
  public:
    using Terms = std::map<OscMono, S>;

    OscOp() = default;
    explicit OscOp(long c) { add({0, 0, 0}, S(c)); }
    explicit OscOp(const S& c) { add({0, 0, 0}, c); }
    static OscOp monomial(int j, int k, int n, const S& c) {
        OscOp r;
        r.add({j, k, n}, c);
        return r;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int max_raising() const {  // largest j - k over terms
        int r = 0;
        for (auto& [m, c] : t_) r = std::max(r, m.j - m.k);
        return r;
    }
    int max_lowering() const {
        int r = 0;
        for (auto& [m, c] : t_) r = std::max(r, m.k - m.j);
        return r;
    }

    friend bool operator==(const OscOp& x, const OscOp& y) { return x.t_ == y.t_; }

    OscOp operator-() const {
        OscOp r(*this);
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend OscOp operator+(OscOp x, const OscOp& y) {
        for (auto& [m, c] : y.t_) x.add(m, c);
        return x;
    }
    friend OscOp operator-(OscOp x, const OscOp& y) {
        for (auto& [m, c] : y.t_) x.add(m, -c);
        return x;
    }
    friend OscOp operator*(const S& c, OscOp x) {
        if (c.is_zero()) return OscOp();
        for (auto& [m, cc] : x.t_) cc = c * cc;
        return x;
    }
    friend OscOp operator*(OscOp x, const S& c) { return c * std::move(x); }
    OscOp& operator+=(const OscOp& o) { return *this = *this + o; }
    OscOp& operator-=(const OscOp& o) { return *this = *this - o; }

    /// normal-ordered product; q-powers come from the field.  The result is
    /// canonical: every monomial has min(j, k) = 0 (mixed ones contract
    /// through adag a = 1 - q^{2D}).
    template <CoefficientField F>
    static OscOp mul(const F& f, const OscOp& x, const OscOp& y) {
        OscOp out;
        for (auto& [mx, cx] : x.t_)
            for (auto& [my, cy] : y.t_) {
                // a^{kx} (adag)^{jy} expanded to normal form, then the
                // flanking factors are reattached
                OscOp cross = normal_cross(f, mx.k, my.j);
                for (auto& [mc, cc] : cross.t_) {
                    // (adag)^{jx} q^{nx D} [(adag)^{mc.j} q^{mc.n D} a^{mc.k}] q^{ny D} a^{ky}
                    S coeff = cx * cy * cc * q_pow(f, mx.n * mc.j)     // q^{nxD} past adag^mc.j
                              * q_pow(f, my.n * mc.k);                 // a^mc.k past q^{nyD}
                    out.add({mx.j + mc.j, mc.k + my.k, mx.n + mc.n + my.n}, coeff);
                }
            }
        return contract_mixed(f, out);
    }

    /// anti-involution tau: a <-> adag, D -> D, products reversed.
    /// tau((adag)^j q^{nD} a^k) = (adag)^k q^{nD} a^j, already normal.
    OscOp tau() const {
        OscOp r;
        for (auto& [m, c] : t_) r.add({m.k, m.j, m.n}, c);
        return r;
    }

    /// gamma_zeta: a -> a zeta^{-s1}, adag -> adag zeta^{s1}, D -> D
    OscOp gamma(const S& zeta, int s1) const {
        OscOp r;
        for (auto& [m, c] : t_) r.add(m, c * pow_i(zeta, s1 * (m.j - m.k)));
        return r;
    }

    /// sigma: adag -> a q^{-D}, a -> -q^{-D} adag, D -> -D - 1
    template <CoefficientField F>
    OscOp sigma(const F& f) const {
        // normal forms of the generator images:
        //   sigma(a)    = -q^{-D} adag = -q^{-1} adag q^{-D}
        //   sigma(adag) = a q^{-D}     =  q^{-1} q^{-D} a
        //   sigma(q^{nD}) = q^{-n} q^{-nD}
        OscOp sa = monomial(1, 0, -1, S(0L) - q_pow(f, -1));
        OscOp sad = monomial(0, 1, -1, q_pow(f, -1));
        OscOp out;
        for (auto& [m, c] : t_) {
            OscOp w(c * q_pow(f, -m.n));
            for (int i = 0; i < m.j; ++i) w = mul(f, w, sad);
            w = mul(f, w, monomial(0, 0, -m.n, S(1L)));
            for (int i = 0; i < m.k; ++i) w = mul(f, w, sa);
            out += w;
        }
        return out;
    }

    /// two-parameter automorphism a -> kappa a q^{xi D},
    /// adag -> kappa^{-1} q^{-xi D} adag, D -> D (integer xi)
    template <CoefficientField F>
    OscOp two_param(const F& f, const S& kappa, int xi) const {
        if (kappa.is_zero()) throw std::domain_error("two_param: kappa must be invertible");
        // normal forms: kappa a q^{xi D} = kappa q^{xi} q^{xi D} a,
        //               kappa^{-1} q^{-xi D} adag = kappa^{-1} q^{-xi} adag q^{-xi D}
        OscOp ta = monomial(0, 1, xi, kappa * q_pow(f, xi));
        OscOp tad = monomial(1, 0, -xi, kappa.inverse() * q_pow(f, -xi));
        OscOp out;
        for (auto& [m, c] : t_) {
            OscOp w(c);
            for (int i = 0; i < m.j; ++i) w = mul(f, w, tad);
            w = mul(f, w, monomial(0, 0, m.n, S(1L)));
            for (int i = 0; i < m.k; ++i) w = mul(f, w, ta);
            out += w;
        }
        return out;
    }

  private:
    /// normal form of a^k (adag)^j via
    /// a^k (adag)^j = a^{k-1} (adag)^{j-1} (1 - q^{2j} q^{2D})
    template <CoefficientField F>
    static OscOp normal_cross(const F& f, int k, int j) {
        if (k == 0 || j == 0) return monomial(j, k, 0, S(1L));
        OscOp prev = normal_cross(f, k - 1, j - 1);
        OscOp out;
        for (auto& [m, c] : prev.t_) {
            out.add(m, c);
            // right-multiply the term by -q^{2j} q^{2D}; the q^{2D} passes
            // the a^{m.k} tail picking up q^{2 m.k}
            out.add({m.j, m.k, m.n + 2}, S(0L) - c * q_pow(f, 2 * (j + m.k)));
        }
        return out;
    }

    void add(const OscMono& m, const S& c) {
        if (c.is_zero()) return;
        auto [it, ins] = t_.try_emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Terms t_;
};

// Canonical form demands min(j, k) = 0: a mixed monomial contracts through
// adag a = 1 - q^{2D}.  mul() produces only monomials coming from
// normal_cross, which already have min(j, k) = 0 on the cross part, but
// reattaching flanking powers can recreate mixed ones, so mul runs the
// contraction below on its output.
template <CoefficientField F, class S>
OscOp<S> contract_mixed(const F& f, const OscOp<S>& x) {
    OscOp<S> out;
    bool changed = false;
    for (auto& [m, c] : x.terms()) {
        if (m.j > 0 && m.k > 0) {
            changed = true;
            // (adag)^j q^{nD} a^k = q^{-n} [ (adag)^{j-1} q^{nD} a^{k-1}
            //                                - (adag)^{j-1} q^{(n+2)D} a^{k-1} ]
            S cc = c * q_pow(f, -m.n);
            out += OscOp<S>::monomial(m.j - 1, m.k - 1, m.n, cc);
            out += OscOp<S>::monomial(m.j - 1, m.k - 1, m.n + 2, S(0L) - cc);
        } else {
            out += OscOp<S>::monomial(m.j, m.k, m.n, c);
        }
    }
    return changed ? contract_mixed(f, out) : out;
}

/// oscillator element bound to its coefficient field: a plain ring type,
/// usable by the generic recursion engine
template <CoefficientField F>
struct BOsc {
    using S = typename F::S;
    const F* f = nullptr;
    OscOp<S> op;

    BOsc() = default;
    BOsc(const F& ff, OscOp<S> o) : f(&ff), op(std::move(o)) {}

    bool is_zero() const { return op.is_zero(); }
    friend bool operator==(const BOsc& x, const BOsc& y) { return x.op == y.op; }
    BOsc operator-() const { return {*fld(*this), -op}; }
    friend BOsc operator+(const BOsc& x, const BOsc& y) { return {*fld(x, y), x.op + y.op}; }
    friend BOsc operator-(const BOsc& x, const BOsc& y) { return {*fld(x, y), x.op - y.op}; }
    friend BOsc operator*(const BOsc& x, const BOsc& y) {
        const F* f = fld(x, y);
        return {*f, OscOp<S>::mul(*f, x.op, y.op)};
    }
    friend BOsc operator*(const S& c, const BOsc& x) { return {*fld(x), c * x.op}; }
    friend BOsc operator*(const BOsc& x, const S& c) { return c * x; }

  private:
    static const F* fld(const BOsc& x) { return x.f; }
    static const F* fld(const BOsc& x, const BOsc& y) { return x.f ? x.f : y.f; }
};

template <CoefficientField F>
BOsc<F> scale_by(const BOsc<F>& x, const Rational& c) {
    return {*x.f, typename F::S(c) * x.op};
}

template <class S>
OscOp<S> scale_by(const OscOp<S>& x, const Rational& c) {
    return S(c) * x;
}

// --- truncated Fock space ------------------------------------------------

template <CoefficientField F>
class Fock {
  public:
    using S = typename F::S;

    Fock(const F& f, int nf) : f_(&f), nf_(nf) {
        if (nf < 4) throw std::domain_error("Fock: truncation level N_f >= 4 required");
    }

    int levels() const { return nf_ + 1; }
    int top() const { return nf_; }
    const F& field() const { return *f_; }

    /// <m| op |l> on the truncated basis
    Mat<S> materialize(const OscOp<S>& op) const {
        const int L = levels();
        Mat<S> r(L, L);
        for (auto& [m, c] : op.terms()) {
            for (int l = 0; l < L; ++l) {
                int mid = l - m.k;
                if (mid < 0) continue;  // a^k annihilates, but note the
                // (1 - q^{2(l-i)}) factor vanishes at i = l anyway
                int row = mid + m.j;
                if (row >= L) continue;  // truncated
                S val = c * q_pow(*f_, m.n * mid);
                for (int i = 0; i < m.k; ++i)
                    val = val * (f_->integer(1) - q_pow(*f_, 2 * (l - i)));
                r(row, l) += val;
            }
        }
        return r;
    }
    Mat<S> materialize(const BOsc<F>& b) const { return materialize(b.op); }

    Mat<S> a_mat() const { return materialize(OscOp<S>::monomial(0, 1, 0, S(1L))); }
    Mat<S> adag_mat() const { return materialize(OscOp<S>::monomial(1, 0, 0, S(1L))); }
    Mat<S> d_mat() const {
        Mat<S> r(levels(), levels());
        for (int n = 0; n < levels(); ++n) r(n, n) = f_->integer(n);
        return r;
    }

    /// diagonal operator g(q^{2D}) evaluated per level through a callback
    template <class Fn>
    Mat<S> diagonal(Fn&& g) const {
        Mat<S> r(levels(), levels());
        for (int n = 0; n < levels(); ++n) r(n, n) = g(n);
        return r;
    }

  private:
    const F* f_;
    int nf_;
};

// --- Borel-subalgebra homomorphisms --------------------------------------

enum class OscHomKind { Chi, Psi };

/// chi maps the positive Borel generators into Osc; psi the negative ones.
/// Fixed parameter choice mu0 = (q-1)^{-1} [2]_q^{-1/2}, mu1 = (q-q^{-1})^{-1},
/// nu = 0.
template <CoefficientField F>
struct OscHom {
    using S = typename F::S;
    OscHomKind kind;
    Convention conv;
    const F* f;
    S zeta;

    BOsc<F> simple_alpha;  // image of e_alpha (chi) or f_alpha (psi)
    BOsc<F> simple_a0;     // image of e_{delta-2alpha} (chi) or f_... (psi)
    // Cartan images as diagonal coefficients of D: h_{delta-2alpha} -> pm 2D,
    // h_alpha -> mp D
    int h_a0_of_D;     // +2 for chi, -2 for psi
    int h_alpha_of_D;  // -1 for chi, +1 for psi
};

template <CoefficientField F>
OscHom<F> make_chi(const F& f, const typename F::S& zeta, Convention conv) {
    using S = typename F::S;
    OscHom<F> h{OscHomKind::Chi, conv, &f, zeta, {}, {}, +2, -1};
    S q = q_pow(f, 1);
    S mu0 = ((q - f.integer(1)) * f.u()).inverse();
    S mu1 = (q - q_pow(f, -1)).inverse();
    h.simple_a0 = BOsc<F>(f, OscOp<S>::monomial(2, 0, -2, mu0 * pow_i(zeta, conv.s0)));
    h.simple_alpha = BOsc<F>(f, OscOp<S>::monomial(0, 1, 0, mu1 * pow_i(zeta, conv.s1)));
    return h;
}

template <CoefficientField F>
OscHom<F> make_psi(const F& f, const typename F::S& zeta, Convention conv) {
    using S = typename F::S;
    OscHom<F> h{OscHomKind::Psi, conv, &f, zeta, {}, {}, -2, +1};
    S q = q_pow(f, 1);
    S mu0 = ((q - f.integer(1)) * f.u()).inverse();
    S mu1 = (q - q_pow(f, -1)).inverse();
    h.simple_a0 = BOsc<F>(f, OscOp<S>::monomial(2, 0, -2, mu0 * pow_i(zeta, -conv.s0)));
    h.simple_alpha = BOsc<F>(f, OscOp<S>::monomial(0, 1, 0, mu1 * pow_i(zeta, -conv.s1)));
    return h;
}

/// root vectors in the oscillator representation; side is +1 for chi
/// (e-vectors) and -1 for psi (f-vectors)
template <CoefficientField F>
RootVectors<BOsc<F>, F> osc_root_vectors(const OscHom<F>& hom, int max_m) {
    const F& f = *hom.f;
    BOsc<F> zero(f, OscOp<typename F::S>{});
    int side = hom.kind == OscHomKind::Chi ? +1 : -1;
    return root_vectors_recursive<BOsc<F>, F>(f, hom.simple_alpha, hom.simple_a0, max_m, side,
                                              zero);
}

/// residuals of the cubic and quintic Serre relations on the interior band
/// of the truncated Fock space; also returns the exact symbolic residuals
template <CoefficientField F>
struct SerreReport {
    OscOp<typename F::S> cubic_symbolic;
    OscOp<typename F::S> quintic_symbolic;
    double cubic_interior = 0;
    double quintic_interior = 0;
    bool interior_zero_exactly = false;
};

/// restrict a Fock-space matrix to the interior band [t, top - t]
template <class S>
Mat<S> interior_restrict(const Mat<S>& m, int fock_levels, int t) {
    // single Fock leg: plain band restriction
    Mat<S> r(m.rows(), m.cols());
    for (int i = t; i <= fock_levels - 1 - t; ++i)
        for (int j = t; j <= fock_levels - 1 - t; ++j) r(i, j) = m(i, j);
    return r;
}

template <CoefficientField F>
SerreReport<F> serre_check(const OscHom<F>& hom, const Fock<F>& fock, int t = 6) {
    const F& f = *hom.f;
    const auto& X = hom.simple_a0;     // e_{delta-2alpha} side
    const auto& Y = hom.simple_alpha;  // e_alpha side
    // cubic: X^2 Y - (q^2 + q^{-2}) X Y X + Y X^2, base q^{d_0} = q^2
    auto cubic = serre_residual(f, X, Y, 2, 4);
    // quintic: base q^{d_1} = q^{1/2}
    auto quintic = serre_residual(f, Y, X, 5, 1);
    SerreReport<F> rep;
    rep.cubic_symbolic = cubic.op;
    rep.quintic_symbolic = quintic.op;
    auto mc = interior_restrict(fock.materialize(cubic), fock.levels(), t);
    auto mq = interior_restrict(fock.materialize(quintic), fock.levels(), t);
    rep.cubic_interior = mc.max_norm();
    rep.quintic_interior = mq.max_norm();
    rep.interior_zero_exactly = mc.is_zero() && mq.is_zero();
    return rep;
}

}  // namespace ikor
