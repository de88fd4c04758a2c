#pragma once

#include <map>
#include <optional>
#include <string>

#include "rgh/classical.hpp"
#include "rgh/homology.hpp"
#include "rgh/poly.hpp"

namespace rgh {

// Number of W-factors carried by a diagram: one per extra O-pair.
inline int w_power(int n, int l_f, int l_p) {
    int stab = n - l_f - 2 * l_p;
    if (stab < 0 || stab % 2 != 0)
        throw consistency_error("n - l_f - 2 l_p must be even and non-negative");
    return stab / 2;
}

// Euler-characteristic fast path for the real Alexander polynomial:
// sum over real states of (-1)^m t^{a2}, divided exactly by (1-t^{-2})^k and
// then by (t-t^{-1})^{l_p}.  No homology is computed.
inline LaurentPoly alexander_polynomial(const Diagram& d, const StateTable& st) {
    if (st.relative)
        throw input_error("real Alexander polynomial is not defined for periodic diagrams");
    LaurentPoly f;
    for (std::size_t i = 0; i < st.size(); ++i)
        f.add(st.a2[i], (st.m[i] & 1) ? -1 : 1);
    int k = w_power(st.n, st.l_f, st.l_p);
    for (int r = 0; r < k; ++r) f = f.divide_one_minus_tinv2("alexander fast path");
    for (int r = 0; r < st.l_p; ++r) f = f.divide_t_minus_tinv("alexander fast path");
    return f;
}

// Streaming variant for grids beyond the state-table range (poly-only sizes).
inline LaurentPoly alexander_polynomial_streaming(const Diagram& d, const LinkTrace& trace) {
    if (trace.classification == LinkClass::DoublyPeriodic)
        throw input_error("real Alexander polynomial is not defined for periodic diagrams");
    const int n = d.n;
    std::map<int, long long> acc;  // a2 -> signed count
    Perm pi(n);
    for_each_involution(n, [&](const Perm& sigma) {
        for (int i = 0; i < n; ++i) pi[i] = sigma[mod(n - i, n)];
        Bigrading g = real_gradings(d, pi, trace.l_f, trace.l_p);
        acc[g.a2] += (g.m & 1) ? -1 : 1;
    });
    LaurentPoly f;
    for (auto& [e, c] : acc) f.add(e, c);
    int k = w_power(n, trace.l_f, trace.l_p);
    for (int r = 0; r < k; ++r) f = f.divide_one_minus_tinv2("alexander fast path");
    for (int r = 0; r < trace.l_p; ++r) f = f.divide_t_minus_tinv("alexander fast path");
    return f;
}

// Homology path: graded Euler characteristic of hat.
inline LaurentPoly alexander_from_hat(const BigradedDims& hat, int l_p) {
    LaurentPoly f;
    for (auto& [key, dim] : hat.dims) {
        auto [m, a2] = key;
        f.add(a2, (m & 1) ? -dim : dim);
    }
    for (int r = 0; r < l_p; ++r) f = f.divide_t_minus_tinv("alexander from hat");
    return f;
}

// tau^R: minus one times the Alexander grading of the infinite tower.
inline int tau_r(const UModule& mod) {
    if (mod.towers.size() != 1)
        throw consistency_error("tau^R needs a single tower, found " +
                                std::to_string(mod.towers.size()));
    return -mod.towers[0].second;
}

// Maximal u-torsion order (0 when torsion-free).
inline int torsion_order(const UModule& mod) {
    int best = 0;
    for (auto& [key, mult] : mod.torsion) best = std::max(best, std::get<2>(key));
    return best;
}

// delta^R profile: bucket hat dimensions by 2*delta^R = 2m - a2.
inline std::map<int, long long> delta_profile(const BigradedDims& hat) {
    std::map<int, long long> prof;
    for (auto& [key, dim] : hat.dims) prof[2 * key.first - key.second] += dim;
    return prof;
}

// ---------------------------------------------------------------------------
// Full pipeline for one diagram, shared by the CLI and the verification suite.
// ---------------------------------------------------------------------------

struct SizeLimits {
    int minus = 11;
    int hat = 13;
    int poly = 17;
};

struct Results {
    Diagram d;
    LinkTrace trace;
    int k = 0;  // W-power
    BigradedDims tilde;
    BigradedDims hat;
    UModule minus_tilde;
    UModule minus;
    LaurentPoly alexander;  // fast path
    std::optional<int> tau;
    std::optional<int> ord_u;
};

inline Results compute_all(const Diagram& d, const SizeLimits& lim = {},
                           bool want_minus = true) {
    Results r;
    r.d = d;
    r.trace = validate(d);
    if (d.n > lim.hat)
        throw capacity_error("grid size " + std::to_string(d.n) + " exceeds hat limit " +
                             std::to_string(lim.hat));
    StateTable st = enumerate_states(d, r.trace);
    r.k = st.relative ? 0 : w_power(d.n, st.l_f, st.l_p);

    GradedComplex tilde = build_complex(d, st, Flavor::Tilde);
    if (!check_d_squared(tilde)) throw consistency_error("d^2 != 0 in tilde flavor");
    r.tilde = homology_f2(tilde);
    if (!st.relative) {
        r.hat = divide_w(r.tilde, r.k);
        r.alexander = alexander_polynomial(d, st);
    }

    if (want_minus && !st.relative) {
        if (d.n > lim.minus)
            throw capacity_error("grid size " + std::to_string(d.n) + " exceeds minus limit " +
                                 std::to_string(lim.minus));
        GradedComplex mt = build_complex(d, st, Flavor::MinusTilde);
        if (!check_d_squared(mt)) throw consistency_error("d^2 != 0 in minus-tilde flavor");
        r.minus_tilde = homology_over_u(mt);
        r.minus = divide_w(r.minus_tilde, r.k);
        if (r.trace.classification == LinkClass::StronglyInvertible &&
            r.trace.components.size() == 1) {
            r.tau = tau_r(r.minus);
            r.ord_u = torsion_order(r.minus);
        }
    }
    return r;
}

}  // namespace rgh
