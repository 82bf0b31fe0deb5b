#pragma once

// Dense complex eigenvalues at working precision: Householder reduction to
// Hessenberg form, then explicit shifted QR steps with Givens rotations and
// deflation.  Values only; that is all the spectrum checks need.

#include "ikor/matrix.hpp"

#include <algorithm>
#include <vector>

namespace ikor {

template <unsigned D>
std::vector<Num<D>> eigenvalues(const Mat<Num<D>>& a, int max_sweeps = 30000) {
    using S = Num<D>;
    using C = typename S::Complex;
    using R = typename S::Real;
    using boost::multiprecision::conj;
    using boost::multiprecision::norm;
    using std::abs;
    using std::sqrt;
    const int n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("eigenvalues: square matrix required");
    if (n == 0) return {};
    const R eps = R("1e-" + std::to_string(D > 6 ? D - 3 : 3));

    std::vector<std::vector<C>> h(static_cast<std::size_t>(n),
                                  std::vector<C>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[size_t(i)][size_t(j)] = a(i, j).value();

    // Householder reduction to upper Hessenberg form
    for (int k = 0; k + 2 < n; ++k) {
        R colnorm(0);
        for (int i = k + 1; i < n; ++i) colnorm += norm(h[size_t(i)][size_t(k)]);
        colnorm = sqrt(colnorm);
        if (colnorm == 0) continue;
        C alpha = h[size_t(k + 1)][size_t(k)];
        R aab = abs(alpha);
        C phase = aab == 0 ? C(1) : C(alpha / aab);
        C sigma = -phase * colnorm;
        std::vector<C> v(static_cast<std::size_t>(n), C(0));
        for (int i = k + 1; i < n; ++i) v[size_t(i)] = h[size_t(i)][size_t(k)];
        v[size_t(k + 1)] -= sigma;
        R vv(0);
        for (int i = k + 1; i < n; ++i) vv += norm(v[size_t(i)]);
        if (vv == 0) continue;
        for (int j = k; j < n; ++j) {  // left: H <- (I - 2 v v^*/vv) H
            C dot(0);
            for (int i = k + 1; i < n; ++i) dot += conj(v[size_t(i)]) * h[size_t(i)][size_t(j)];
            dot = 2 * dot / vv;
            for (int i = k + 1; i < n; ++i) h[size_t(i)][size_t(j)] -= dot * v[size_t(i)];
        }
        for (int i = 0; i < n; ++i) {  // right: H <- H (I - 2 v v^*/vv)
            C dot(0);
            for (int j = k + 1; j < n; ++j) dot += h[size_t(i)][size_t(j)] * v[size_t(j)];
            dot = 2 * dot / vv;
            for (int j = k + 1; j < n; ++j) h[size_t(i)][size_t(j)] -= dot * conj(v[size_t(j)]);
        }
    }

    // Defective (Jordan-block) eigenvalues make the subdiagonal stall around
    // eps^{1/k}; the threshold relaxes slowly with the iteration count so the
    // sweep always terminates, at the accuracy the structure permits.
    int stall = 0;
    auto subdiag_small = [&](int i) {
        R s = abs(h[size_t(i - 1)][size_t(i - 1)]) + abs(h[size_t(i)][size_t(i)]);
        if (s == 0) s = R(1);
        R tol = eps;
        for (int k = 0; k < stall / 100; ++k) tol *= R(10);
        return abs(h[size_t(i)][size_t(i - 1)]) <= tol * s;
    };

    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(n));
    int hi = n - 1;
    int sweeps = 0;
    std::vector<C> cs(static_cast<std::size_t>(n)), sn(static_cast<std::size_t>(n));
    while (hi >= 0) {
        if (hi == 0) {
            out.emplace_back(h[0][0]);
            --hi;
            continue;
        }
        if (subdiag_small(hi)) {
            out.emplace_back(h[size_t(hi)][size_t(hi)]);
            --hi;
            stall = 0;
            continue;
        }
        int lo = hi;
        while (lo > 0 && !subdiag_small(lo)) --lo;
        ++stall;
        if (++sweeps > max_sweeps) throw std::runtime_error("eigenvalues: QR failed to converge");

        // Wilkinson shift from the trailing 2x2 block of the active window
        C a11 = h[size_t(hi - 1)][size_t(hi - 1)], a12 = h[size_t(hi - 1)][size_t(hi)];
        C a21 = h[size_t(hi)][size_t(hi - 1)], a22 = h[size_t(hi)][size_t(hi)];
        C tr = a11 + a22, det = a11 * a22 - a12 * a21;
        C disc = sqrt(tr * tr - 4 * det);
        C l1 = (tr + disc) / 2, l2 = (tr - disc) / 2;
        C shift = (abs(l1 - a22) < abs(l2 - a22)) ? l1 : l2;
        if (sweeps % 32 == 31) shift = C(abs(a21) + abs(a12), 0);  // exceptional shift

        for (int i = lo; i <= hi; ++i) h[size_t(i)][size_t(i)] -= shift;
        // QR of the active Hessenberg block by Givens rotations
        for (int i = lo; i < hi; ++i) {
            C x = h[size_t(i)][size_t(i)], y = h[size_t(i + 1)][size_t(i)];
            R r = sqrt(norm(x) + norm(y));
            C c(1), s(0);
            if (r != 0) {
                c = x / r;
                s = y / r;
            }
            cs[size_t(i)] = c;
            sn[size_t(i)] = s;
            for (int j = i; j <= hi; ++j) {  // rows i, i+1 of R
                C t1 = h[size_t(i)][size_t(j)], t2 = h[size_t(i + 1)][size_t(j)];
                h[size_t(i)][size_t(j)] = conj(c) * t1 + conj(s) * t2;
                h[size_t(i + 1)][size_t(j)] = -s * t1 + c * t2;
            }
        }
        // H <- R Q + shift I
        for (int i = lo; i < hi; ++i) {
            C c = cs[size_t(i)], s = sn[size_t(i)];
            for (int k2 = lo; k2 <= std::min(hi, i + 1); ++k2) {
                C t1 = h[size_t(k2)][size_t(i)], t2 = h[size_t(k2)][size_t(i + 1)];
                h[size_t(k2)][size_t(i)] = c * t1 + s * t2;
                h[size_t(k2)][size_t(i + 1)] = -conj(s) * t1 + conj(c) * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) h[size_t(i)][size_t(i)] += shift;
    }
    return out;
}

/// cluster eigenvalues: values closer than tol join one cluster; returns
/// (representative, multiplicity) sorted by descending multiplicity
template <unsigned D>
std::vector<std::pair<Num<D>, int>> cluster_eigenvalues(const std::vector<Num<D>>& vals,
                                                        double tol) {
    using S = Num<D>;
    using R = typename S::Real;
    R rt(tol);
    std::vector<std::pair<S, int>> cl;
    for (const auto& v : vals) {
        bool found = false;
        for (auto& [rep, mult] : cl) {
            if ((v - rep).abs() < rt) {
                ++mult;
                found = true;
                break;
            }
        }
        if (!found) cl.emplace_back(v, 1);
    }
    std::sort(cl.begin(), cl.end(),
              [](const auto& x, const auto& y) { return x.second > y.second; });
    return cl;
}

/// multiset comparison within tolerance: greedy matching, returns the
/// largest unmatched distance (0 when both sides pair off)
template <unsigned D>
double multiset_distance(std::vector<Num<D>> xs, std::vector<Num<D>> ys) {
    if (xs.size() != ys.size()) return 1e300;
    double worst = 0;
    std::vector<bool> used(ys.size(), false);
    for (const auto& x : xs) {
        double best = 1e300;
        std::size_t bj = ys.size();
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (used[j]) continue;
            double d = static_cast<double>((x - ys[j]).abs());
            if (d < best) {
                best = d;
                bj = j;
            }
        }
        if (bj == ys.size()) return 1e300;
        used[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace ikor
