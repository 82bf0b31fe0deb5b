#pragma once

// Root data of the twisted affine type with Cartan matrix [[2,-1],[-4,2]].
// A root is stored as the integer pair (k, m) meaning k*alpha + m*delta.
// The five families of positive roots and the normal order used by the
// universal R-matrix product formula live here.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ikor {

struct CartanData {
    // rows/cols indexed by {0, 1}
    static constexpr int a[2][2] = {{2, -1}, {-4, 2}};
    static constexpr int d_num[2] = {2, 1};  // d_0 = 2, d_1 = 1/2
    static constexpr int d_den[2] = {1, 2};
    static constexpr int a_sym[2][2] = {{4, -2}, {-2, 1}};
};

enum class RootFamily {
    AlphaDelta,          // alpha + m delta, m >= 0
    TwoAlphaOddDelta,    // 2 alpha + (2m+1) delta, m >= 0
    Imaginary,           // m delta, m >= 1
    DeltaMinusAlpha,     // delta - alpha + m delta, m >= 0
    DeltaMinusTwoAlpha,  // delta - 2 alpha + 2m delta, m >= 0
};

struct Root {
    int k = 0;  // coefficient of alpha
    int m = 0;  // coefficient of delta

    friend auto operator<=>(const Root&, const Root&) = default;

    static Root alpha() { return {1, 0}; }
    static Root delta() { return {0, 1}; }
    static Root alpha0() { return {-2, 1}; }  // delta - 2 alpha
    static Root alpha1() { return {1, 0}; }

    static Root of(RootFamily fam, int mf) {
        switch (fam) {
            case RootFamily::AlphaDelta: return {1, mf};
            case RootFamily::TwoAlphaOddDelta: return {2, 2 * mf + 1};
            case RootFamily::Imaginary: return {0, mf};
            case RootFamily::DeltaMinusAlpha: return {-1, mf + 1};
            case RootFamily::DeltaMinusTwoAlpha: return {-2, 2 * mf + 1};
        }
        throw std::logic_error("bad family");
    }

    Root operator+(const Root& o) const { return {k + o.k, m + o.m}; }
    Root operator-(const Root& o) const { return {k - o.k, m - o.m}; }

    /// family and family index (the paper-style m), when positive
    std::optional<std::pair<RootFamily, int>> classify() const {
        if (k == 1 && m >= 0) return {{RootFamily::AlphaDelta, m}};
        if (k == 2 && m >= 1 && m % 2 == 1) return {{RootFamily::TwoAlphaOddDelta, (m - 1) / 2}};
        if (k == 0 && m >= 1) return {{RootFamily::Imaginary, m}};
        if (k == -1 && m >= 1) return {{RootFamily::DeltaMinusAlpha, m - 1}};
        if (k == -2 && m >= 1 && m % 2 == 1)
            return {{RootFamily::DeltaMinusTwoAlpha, (m - 1) / 2}};
        return std::nullopt;
    }
    bool is_positive_root() const { return classify().has_value(); }

    /// expansion over the simple roots: (m0, m1) with root = m0*alpha_0 +
    /// m1*alpha_1, where delta = alpha_0 + 2 alpha_1 and alpha = alpha_1
    std::pair<int, int> simple_coefficients() const { return {m, k + 2 * m}; }

    std::string str() const {
        return "(" + std::to_string(k) + "a+" + std::to_string(m) + "d)";
    }
};

/// symmetric bilinear form: delta isotropic and orthogonal to alpha,
/// (alpha, alpha) = 1
inline int form(const Root& x, const Root& y) { return x.k * y.k; }

/// positive roots with delta-height <= max_m in the normal order: the
/// alpha-side families interleaved by ascending m/k slope, then the
/// imaginary roots, then the (delta - gamma)-side by descending slope
inline std::vector<Root> positive_roots(int max_m) {
    if (max_m < 0) throw std::domain_error("positive_roots: max_m >= 0");
    std::vector<Root> head, tail;
    for (int m = 0; m <= max_m; ++m) head.push_back(Root::of(RootFamily::AlphaDelta, m));
    for (int m = 0; 2 * m + 1 <= max_m; ++m)
        head.push_back(Root::of(RootFamily::TwoAlphaOddDelta, m));
    // ascending slope m/k; cross-multiplied comparison keeps it integral
    std::stable_sort(head.begin(), head.end(),
                     [](const Root& a, const Root& b) { return a.m * b.k < b.m * a.k; });

    for (int m = 0; m + 1 <= max_m; ++m) tail.push_back(Root::of(RootFamily::DeltaMinusAlpha, m));
    for (int m = 0; 2 * m + 1 <= max_m; ++m)
        tail.push_back(Root::of(RootFamily::DeltaMinusTwoAlpha, m));
    // descending slope m/|k|
    std::stable_sort(tail.begin(), tail.end(),
                     [](const Root& a, const Root& b) { return a.m * (-b.k) > b.m * (-a.k); });

    std::vector<Root> out = std::move(head);
    for (int m = 1; m <= max_m; ++m) out.push_back(Root::of(RootFamily::Imaginary, m));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

/// reverse variant (the only other admissible normal order)
inline std::vector<Root> positive_roots_reversed(int max_m) {
    auto r = positive_roots(max_m);
    std::reverse(r.begin(), r.end());
    return r;
}

}  // namespace ikor
