#pragma once

#include <cstdint>
#include <vector>

#include "rgh/diagram.hpp"
#include "rgh/poly.hpp"

namespace rgh {

// Classical one-variable Alexander polynomial of the underlying (unoriented
// symmetry ignored) link, from the winding-number matrix of the grid: the
// determinant of [t^{w(i,j)}] equals +-t^k (1-t)^{n-1} Delta(t).  Evaluated
// modulo a large prime at many points and interpolated; coefficients of the
// knots in range here are far below the lift bound.  Used for corpus
// certification, not by the invariant pipeline itself.

namespace detail {

constexpr std::int64_t kP = 2147483647;  // 2^31 - 1

inline std::int64_t pw(std::int64_t b, std::int64_t e, std::int64_t p = kP) {
    b %= p;
    if (b < 0) b += p;
    std::int64_t r = 1;
    while (e) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}
inline std::int64_t inv(std::int64_t a, std::int64_t p = kP) { return pw(a, p - 2, p); }

inline std::int64_t det_mod(std::vector<std::vector<std::int64_t>> a) {
    const int n = (int)a.size();
    std::int64_t det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = kP - det;
        }
        det = (__int128)det * a[c][c] % kP;
        std::int64_t ic = inv(a[c][c]);
        for (int r = c + 1; r < n; ++r) {
            if (!a[r][c]) continue;
            std::int64_t f = (__int128)a[r][c] * ic % kP;
            for (int k = c; k < n; ++k) {
                a[r][k] = (a[r][k] - (__int128)f * a[c][k]) % kP;
                if (a[r][k] < 0) a[r][k] += kP;
            }
        }
    }
    return det % kP;
}

// winding numbers of the oriented projection about every lattice point,
// accumulated column by column
inline std::vector<int> windings(const Diagram& d) {
    const int n = d.n;
    std::vector<int> w(n * n, 0);
    std::vector<int> acc(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i * n + j] = acc[j];
        // vertical strand of column i runs from the X to the O
        int o = d.sigmaO[i], x = d.sigmaX[i];
        int lo = std::min(o, x), hi = std::max(o, x), s = (o > x) ? 1 : -1;
        for (int j = lo + 1; j <= hi; ++j) acc[j] += s;
    }
    return w;
}

}  // namespace detail

// |Delta(-1)|, the knot determinant, via an exact fraction-free elimination
// of the winding matrix at t = -1 (entries +-1, minors stay well inside
// int64 for the sizes in range).
inline long long knot_determinant_exact(const Diagram& d) {
    const int n = d.n;
    auto w = detail::windings(d);
    std::vector<long long> a(n * n);
    for (int k = 0; k < n * n; ++k) a[k] = (w[k] & 1) ? -1 : 1;
    long long prev = 1;
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r * n + c]) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int k = c + 1; k < n; ++k)
                a[r * n + k] =
                    (a[r * n + k] * a[c * n + c] - a[r * n + c] * a[c * n + k]) / prev;
            a[r * n + c] = 0;
        }
        prev = a[c * n + c];
    }
    long long det = sign * a[(n - 1) * n + (n - 1)];
    long long denom = 1ll << (n - 1);  // (1 - (-1))^{n-1}
    return std::llabs(det) / denom;
}

// Evaluate det of the winding matrix at t = x (mod p), divided by (1-x)^{n-1}.
inline std::int64_t classical_alexander_eval(const Diagram& d, std::int64_t x) {
    using namespace detail;
    const int n = d.n;
    auto w = windings(d);
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int e = w[i * n + j];
            a[i][j] = e >= 0 ? pw(x, e) : inv(pw(x, -e));
        }
    std::int64_t det = det_mod(a);
    std::int64_t denom = pw((1 - x) % kP + kP, n - 1);
    return (__int128)det * inv(denom) % kP;
}

// Full classical Alexander polynomial, normalized so that it is symmetric
// under t -> 1/t with positive value at 1 (knots: Delta(1) = 1).  For links
// whose Alexander polynomial needs half-integer centering the returned
// polynomial is centered up to one extra power of t.
inline LaurentPoly classical_alexander(const Diagram& d) {
    using namespace detail;
    const int n = d.n;
    const int deg = 2 * n * n + 4;
    std::vector<std::int64_t> xs, ys;
    for (int x = 2; (int)xs.size() < deg + 1; ++x) {
        xs.push_back(x);
        ys.push_back(classical_alexander_eval(d, x));
    }
    // interpolate P with P(x) = ys (Lagrange, mod p); P = t^{shift} * Delta
    // up to sign.  The winding exponents are >= -n^2, so premultiply by x^{n^2}
    // to make P a genuine polynomial.
    const int pre = n * n;
    for (std::size_t i = 0; i < xs.size(); ++i)
        ys[i] = (__int128)ys[i] * pw(xs[i], pre) % kP;

    const int m = (int)xs.size();
    std::vector<std::int64_t> coeff(m, 0), base{1};
    // Newton form
    std::vector<std::int64_t> dd = ys;
    for (int k = 1; k < m; ++k)
        for (int i = m - 1; i >= k; --i) {
            std::int64_t num = (dd[i] - dd[i - 1]) % kP;
            if (num < 0) num += kP;
            dd[i] = (__int128)num * inv((xs[i] - xs[i - k]) % kP) % kP;
        }
    std::vector<std::int64_t> poly(m, 0);
    std::vector<std::int64_t> acc{1};
    for (int k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < acc.size(); ++i)
            poly[i] = (poly[i] + (__int128)dd[k] * acc[i]) % kP;
        // acc *= (x - xs[k])
        acc.push_back(0);
        for (int i = (int)acc.size() - 1; i > 0; --i)
            acc[i] = (acc[i - 1] + (__int128)acc[i] * (kP - xs[k] % kP)) % kP;
        acc[0] = (__int128)acc[0] * (kP - xs[k] % kP) % kP;
    }
    LaurentPoly p;
    for (int i = 0; i < m; ++i) {
        std::int64_t c = poly[i] % kP;
        if (c > kP / 2) c -= kP;
        if (c) p.add(i - pre, (long long)c);
    }
    if (p.is_zero()) return p;
    // normalize: center exponents, fix sign at t=1
    int lo = p.coeff.begin()->first, hi = p.coeff.rbegin()->first;
    int shift = (lo + hi) / 2;  // floor-centering when lo+hi is odd
    LaurentPoly q;
    for (auto& [e, c] : p.coeff) q.coeff[e - shift] = c;
    long long at1 = 0;
    for (auto& [e, c] : q.coeff) at1 += c;
    if (at1 < 0 || (at1 == 0 && q.coeff.begin()->second < 0)) {
        for (auto& [e, c] : q.coeff) c = -c;
    }
    return q;
}

// Compare up to the t -> 1/t mirror (chirality is certified by the real data).
inline bool classical_matches(const LaurentPoly& a, const LaurentPoly& b) {
    return a == b || a == b.inverted();
}

}  // namespace rgh
