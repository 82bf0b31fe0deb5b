#pragma once

// Sparse Laurent polynomials in the three variables (v, zeta, xi) with
// rational coefficients.  v is the deformation variable (q = v^2), zeta and
// xi are spectral parameters.  Exponents may be negative; division and gcd
// shift to the ordinary polynomial ring internally, where monomials are
// units.

#include "ikor/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ikor {

enum class Var : int { v = 0, zeta = 1, xi = 2 };
inline constexpr int kNumVars = 3;

inline const char* var_name(Var x) {
    switch (x) {
        case Var::v: return "v";
        case Var::zeta: return "zeta";
        default: return "xi";
    }
}

struct Mono {
    std::array<int, kNumVars> e{0, 0, 0};

    friend auto operator<=>(const Mono&, const Mono&) = default;

    Mono operator+(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Mono operator-(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Mono negated() const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = -e[i];
        return r;
    }
    bool is_unit() const { return e == std::array<int, kNumVars>{0, 0, 0}; }
};

class Poly {
  public:
    using Terms = std::map<Mono, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_[Mono{}] = c;
    }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(Var x, int exp = 1) {
        Poly p;
        Mono m;
        m.e[static_cast<int>(x)] = exp;
        p.terms_[m] = 1;
        return p;
    }
    static Poly monomial(const Mono& m, const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    std::size_t term_count() const { return terms_.size(); }

    // lex-leading term (largest monomial)
    const std::pair<const Mono, Rational>& leading() const { return *terms_.rbegin(); }

    int min_exp(Var x) const {
        int i = static_cast<int>(x);
        int r = 0;
        bool first = true;
        for (auto& [m, c] : terms_) {
            r = first ? m.e[i] : std::min(r, m.e[i]);
            first = false;
        }
        return r;
    }
    int max_exp(Var x) const {
        int i = static_cast<int>(x);
        int r = 0;
        bool first = true;
        for (auto& [m, c] : terms_) {
            r = first ? m.e[i] : std::max(r, m.e[i]);
            first = false;
        }
        return r;
    }
    bool depends_on(Var x) const {
        int i = static_cast<int>(x);
        for (auto& [m, c] : terms_)
            if (m.e[i] != 0) return true;
        return false;
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, cc] : terms_) cc *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    Poly shifted(const Mono& m) const {
        Poly r;
        for (auto& [mm, c] : terms_) r.terms_[mm + m] = c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly derivative(Var x) const {
        int i = static_cast<int>(x);
        Poly r;
        for (auto& [m, c] : terms_) {
            if (m.e[i] == 0) continue;
            Mono mm = m;
            mm.e[i] -= 1;
            r.add_term(mm, c * m.e[i]);
        }
        return r;
    }

    // exponent flip on all variables (the q -> q^{-1}, zeta -> zeta^{-1} map)
    Poly flipped() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_[m.negated()] = c;
        return r;
    }

    /// drop terms whose exponent in x exceeds maxexp
    Poly truncate_var(Var x, int maxexp) const {
        int i = static_cast<int>(x);
        Poly r;
        for (auto& [m, c] : terms_)
            if (m.e[i] <= maxexp) r.add_term(m, c);
        return r;
    }

    Poly subst_one(Var x, const Rational& val) const {
        int i = static_cast<int>(x);
        Poly r;
        for (auto& [m, c] : terms_) {
            Mono mm = m;
            mm.e[i] = 0;
            r.add_term(mm, c * rat_pow(val, m.e[i]));
        }
        return r;
    }

    template <class T>
    T eval(const std::array<T, kNumVars>& vals) const {
        T acc(0);
        for (auto& [m, c] : terms_) {
            T t(c);
            for (int i = 0; i < kNumVars; ++i) {
                if (m.e[i] != 0) t = t * pow_of(vals[i], m.e[i]);
            }
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            Rational ac = c < 0 ? Rational(-c) : c;
            bool has_var = !it->first.is_unit();
            if (ac != 1 || !has_var) os << ac.str();
            bool need_star = (ac != 1);
            for (int i = 0; i < kNumVars; ++i) {
                int ee = it->first.e[i];
                if (ee == 0) continue;
                if (need_star) os << "*";
                os << var_name(static_cast<Var>(i));
                if (ee != 1) os << "^" << ee;
                need_star = true;
            }
        }
        return os.str();
    }

  private:
    template <class T>
    static T pow_of(const T& x, int k) {
        if (k < 0) return T(1) / pow_of(x, -k);
        T r(1), b(x);
        unsigned n = static_cast<unsigned>(k);
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    void add_term(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

template <>
inline Rational Poly::pow_of<Rational>(const Rational& x, int k) {
    return rat_pow(x, k);
}

// --- division and gcd -------------------------------------------------

namespace detail {

inline Mono min_exponents(const Poly& p) {
    Mono m;
    bool first = true;
    for (auto& [mm, c] : p.terms()) {
        for (int i = 0; i < kNumVars; ++i)
            m.e[i] = first ? mm.e[i] : std::min(m.e[i], mm.e[i]);
        first = false;
    }
    return m;
}

}  // namespace detail

/// Exact division in the Laurent ring; nullopt when b does not divide a.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly();
    if (b.is_monomial()) {
        auto& [mb, cb] = *b.terms().begin();
        Poly r;
        for (auto& [m, c] : a.terms()) r += Poly::monomial(m - mb, c / cb);
        return r;
    }
    // shift to the ordinary polynomial ring
    Mono sa = detail::min_exponents(a), sb = detail::min_exponents(b);
    Poly ra = a.shifted(sa.negated());
    Poly rb = b.shifted(sb.negated());
    Poly quot;
    while (!ra.is_zero()) {
        auto& [ma, ca] = ra.leading();
        auto& [mb, cb] = rb.leading();
        Mono md = ma - mb;
        for (int i = 0; i < kNumVars; ++i)
            if (md.e[i] < 0) return std::nullopt;
        Poly t = Poly::monomial(md, ca / cb);
        quot += t;
        ra -= t * rb;
    }
    return quot.shifted(sa - sb);
}

inline bool divides(const Poly& b, const Poly& a) { return try_divide(a, b).has_value(); }

namespace detail {

/// Scale to coprime integer coefficients with positive lex-leading sign.
inline Poly integer_primitive(const Poly& p, Rational* scale_out = nullptr) {
    if (p.is_zero()) {
        if (scale_out) *scale_out = 1;
        return p;
    }
    Rational content(0);
    for (auto& [m, c] : p.terms()) content = rat_gcd(content, c);
    if (p.leading().second < 0) content = -content;
    if (scale_out) *scale_out = content;
    Poly r = p;
    r *= Rational(1) / content;
    return r;
}

// univariate dense view in variable x, coefficients are Polys in the others
inline std::vector<Poly> coeffs_in(const Poly& p, Var x) {
    int i = static_cast<int>(x);
    std::vector<Poly> out(static_cast<std::size_t>(std::max(0, p.max_exp(x))) + 1);
    for (auto& [m, c] : p.terms()) {
        Mono mm = m;
        int d = mm.e[i];
        mm.e[i] = 0;
        out[static_cast<std::size_t>(d)] += Poly::monomial(mm, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

inline Poly from_coeffs(const std::vector<Poly>& cs, Var x) {
    Poly r;
    for (std::size_t d = 0; d < cs.size(); ++d)
        r += cs[d] * Poly::variable(x, static_cast<int>(d));
    return r;
}

inline int degree_in(const std::vector<Poly>& cs) {
    for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d)
        if (!cs[d].is_zero()) return d;
    return -1;
}

}  // namespace detail

Poly poly_gcd(const Poly& pa, const Poly& pb);  // forward

namespace detail {

inline Poly content_in(const Poly& p, Var x) {
    Poly g;
    for (auto& c : coeffs_in(p, x)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? integer_primitive(c) : poly_gcd(g, c);
        if (g.is_constant()) return Poly(1L);
    }
    return g.is_zero() ? Poly(1L) : g;
}

// pseudo-remainder sequence step: some scalar-in-rest multiple of (a mod b)
inline std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b, Var x) {
    int db = degree_in(b);
    int da = degree_in(a);
    while (da >= db && da >= 0) {
        const Poly& lb = b[static_cast<std::size_t>(db)];
        Poly la = a[static_cast<std::size_t>(da)];
        // a <- lb*a - la*x^{da-db}*b
        std::vector<Poly> next(static_cast<std::size_t>(da), Poly());
        for (int i = 0; i < da; ++i) {
            Poly t = a[static_cast<std::size_t>(i)] * lb;
            int j = i - (da - db);
            if (j >= 0 && j <= db) t -= la * b[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] = t;
        }
        a = std::move(next);
        da = degree_in(a);
    }
    a.resize(static_cast<std::size_t>(std::max(0, da)) + 1);
    return a;
}

// one-sided coprimality test: specialize all variables but x at small
// integers and reduce mod a machine prime; a degree-0 image gcd proves the
// primitive parts are coprime.  Inputs are integer-primitive and ordinary.
inline bool coprime_by_specialization(const Poly& a, const Poly& b, Var x) {
    constexpr std::uint64_t P = 2147483629ULL;
    auto mulmod = [](std::uint64_t u, std::uint64_t w) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(u) * w) % P);
    };
    auto powmod = [&](std::uint64_t base, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return r;
    };
    auto invmod = [&](std::uint64_t u) { return powmod(u, P - 2); };
    auto coeff_mod = [&](const Rational& c) {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        Int nm = numerator(c) % static_cast<long long>(P);
        Int dn = denominator(c) % static_cast<long long>(P);
        std::uint64_t n = static_cast<std::uint64_t>(nm < 0 ? nm + static_cast<long long>(P) : nm);
        std::uint64_t d = static_cast<std::uint64_t>(dn < 0 ? dn + static_cast<long long>(P) : dn);
        if (d == 0) return std::pair<bool, std::uint64_t>{false, 0};
        return std::pair<bool, std::uint64_t>{true, mulmod(n, invmod(d))};
    };

    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::uint64_t> dist(2, 997);
    const int ix = static_cast<int>(x);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::uint64_t vals[kNumVars];
        for (int i = 0; i < kNumVars; ++i) vals[i] = dist(rng);
        bool bad = false;
        auto specialize = [&](const Poly& p) {
            std::vector<std::uint64_t> cs(static_cast<std::size_t>(p.max_exp(x)) + 1, 0);
            for (auto& [m, c] : p.terms()) {
                auto [ok, cm] = coeff_mod(c);
                if (!ok) {
                    bad = true;
                    return cs;
                }
                std::uint64_t t = cm;
                for (int i = 0; i < kNumVars; ++i)
                    if (i != ix && m.e[i] != 0)
                        t = mulmod(t, powmod(vals[i], static_cast<std::uint64_t>(m.e[i])));
                std::size_t d = static_cast<std::size_t>(m.e[ix]);
                cs[d] = (cs[d] + t) % P;
            }
            return cs;
        };
        auto ua = specialize(a), ub = specialize(b);
        if (bad || ua.back() == 0 || ub.back() == 0) continue;  // unlucky point
        auto trim = [](std::vector<std::uint64_t>& cs) {
            while (!cs.empty() && cs.back() == 0) cs.pop_back();
        };
        while (!ub.empty()) {
            while (ua.size() >= ub.size() && !ua.empty()) {
                std::uint64_t fbar = mulmod(ua.back(), invmod(ub.back()));
                std::size_t off = ua.size() - ub.size();
                for (std::size_t i = 0; i < ub.size(); ++i) {
                    std::uint64_t sub = mulmod(fbar, ub[i]);
                    ua[off + i] = (ua[off + i] + P - sub) % P;
                }
                trim(ua);
            }
            std::swap(ua, ub);
        }
        return ua.size() == 1;  // constant gcd certifies coprimality
    }
    return false;  // could not certify; fall through to PRS
}

}  // namespace detail

/// gcd in Q[v, zeta, xi] up to units: integer-primitive, positive leading
/// coefficient, ordinary (non-Laurent) exponents.  Laurent inputs are fine.
inline Poly poly_gcd(const Poly& pa, const Poly& pb) {
    using namespace detail;
    Poly a = pa.shifted(min_exponents(pa).negated());
    Poly b = pb.shifted(min_exponents(pb).negated());
    if (a.is_zero()) return b.is_zero() ? Poly() : integer_primitive(b);
    if (b.is_zero()) return integer_primitive(a);
    a = integer_primitive(a);
    b = integer_primitive(b);
    if (a.is_constant() || b.is_constant()) return Poly(1L);
    if (a == b) return a;

    Var x = Var::v;
    {
        int best = -1;
        for (int i = 0; i < kNumVars; ++i) {
            Var xv = static_cast<Var>(i);
            if (!a.depends_on(xv) || !b.depends_on(xv)) continue;
            int d = std::max(a.max_exp(xv), b.max_exp(xv));
            if (best < 0 || d < best) {
                best = d;
                x = xv;
            }
        }
        if (best < 0) return Poly(1L);  // no shared variable
    }

    Poly ca = content_in(a, x), cb = content_in(b, x);
    Poly g0 = poly_gcd(ca, cb);
    Poly ap = *try_divide(a, ca);
    Poly bp = *try_divide(b, cb);

    if (ap == bp) return integer_primitive(g0 * ap);
    if (divides(bp, ap)) return integer_primitive(g0 * bp);
    if (divides(ap, bp)) return integer_primitive(g0 * ap);
    if (coprime_by_specialization(ap, bp, x)) return g0;

    auto r0 = coeffs_in(ap, x);
    auto r1 = coeffs_in(bp, x);
    if (degree_in(r0) < degree_in(r1)) std::swap(r0, r1);
    while (degree_in(r1) >= 0) {
        auto r = prem(r0, r1, x);
        r0 = std::move(r1);
        if (degree_in(r) < 0) {
            r1.assign(1, Poly());
            break;
        }
        Poly rp = from_coeffs(r, x);
        rp = *try_divide(rp, content_in(rp, x));
        r1 = coeffs_in(integer_primitive(rp), x);
        if (degree_in(r1) == 0) {
            // coprime primitive parts
            return g0;
        }
    }
    Poly g = from_coeffs(r0, x);
    g = *try_divide(g, content_in(g, x));
    return integer_primitive(g0 * g);
}

}  // namespace ikor
