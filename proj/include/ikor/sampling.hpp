#pragma once

// Numeric sample points: v0 real in (1.02, 1.25), spectral values on the
// annulus 0.3 < |zeta| < 0.8 with random phase, rejected when any tested
// spectral ratio comes within 1e-3 of the R-matrix pole loci
//   1 - zeta^s,  1 +- q^{+-k} zeta^s (k <= 3),  q^3 + zeta^s,  q^2 - zeta^s.

#include "ikor/field.hpp"

#include <random>

namespace ikor {

template <unsigned D>
class Sampler {
  public:
    using S = Num<D>;
    using R = typename S::Real;

    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    R uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        // two draws stitched for ~100 bits of mantissa
        double x1 = d(rng_), x2 = d(rng_);
        R x = R(x1) + R(x2) * R("1e-17");
        return R(lo) + (R(hi) - R(lo)) * x;
    }

    S v0() { return S(typename S::Complex(uniform(1.02, 1.25))); }

    S annulus() {
        R r = uniform(0.3, 0.8);
        R phi = uniform(0.0, 6.283185307179586);
        using std::cos;
        using std::sin;
        return S(r * cos(phi), r * sin(phi));
    }

    /// true when zeta is clear of every pole locus for the given q = v^2
    static bool admissible(const S& v, const S& zeta, int s) {
        using F = NumField<D>;
        F f(v, zeta, S(1L));
        S zs = f.zeta(s);
        R margin = R("1e-3");
        auto bad = [&](const S& x) { return x.abs() < margin; };
        S one(1L);
        for (int k = -3; k <= 3; ++k) {  // k = 0 covers 1 - zeta^s itself
            if (bad(one + f.v(2 * k) * zs)) return false;
            if (bad(one - f.v(2 * k) * zs)) return false;
        }
        if (bad(f.v(6) + zs)) return false;
        if (bad(f.v(4) - zs)) return false;
        return true;
    }

    /// draw zeta values until every ratio zeta_i/zeta_j is admissible
    std::vector<S> spectral_tuple(const S& v, int count, int s, int max_tries = 400) {
        for (int t = 0; t < max_tries; ++t) {
            std::vector<S> z;
            for (int i = 0; i < count; ++i) z.push_back(annulus());
            bool ok = true;
            for (int i = 0; ok && i < count; ++i)
                for (int j = 0; ok && j < count; ++j)
                    if (i != j && !admissible(v, z[static_cast<std::size_t>(i)] / z[static_cast<std::size_t>(j)], s)) ok = false;
            if (ok) return z;
        }
        throw std::runtime_error("sampler: no admissible tuple found");
    }

    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

}  // namespace ikor
