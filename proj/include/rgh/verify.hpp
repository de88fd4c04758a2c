#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rgh/invariants.hpp"

namespace rgh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected, actual;
};

struct Report {
    std::string diagram;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string dims_to_string(const BigradedDims& b) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : b.dims) {
        os << (first ? "" : " ") << "(" << k.first << "," << k.second << ")";
        if (v != 1) os << "^" << v;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline std::string module_to_string(const UModule& u) {
    std::ostringstream os;
    for (auto& [m, a2] : u.towers) os << "F[u](" << m << "," << a2 << ") ";
    for (auto& [k, v] : u.torsion) {
        os << "F[u]/u^" << std::get<2>(k) << "(" << std::get<0>(k) << "," << std::get<1>(k)
           << ")";
        if (v != 1) os << "^" << v;
        os << " ";
    }
    std::string s = os.str();
    if (s.empty()) return "0";
    s.pop_back();
    return s;
}

inline void check(Report& rep, const std::string& name, bool pass, const std::string& expected,
                  const std::string& actual) {
    rep.checks.push_back({name, pass, expected, actual});
}

template <class T>
void check_eq(Report& rep, const std::string& name, const T& expected, const T& actual,
              std::function<std::string(const T&)> fmt) {
    rep.checks.push_back({name, expected == actual, fmt(expected), fmt(actual)});
}

}  // namespace detail

struct VerifyOptions {
    int moves = 20;       // random legal move sequences
    std::uint64_t seed = 1;
    SizeLimits limits{};
    bool with_minus = true;
};

// Regrading (m, a2) -> (m - a2, -a2) induced by exchanging O and X.
inline BigradedDims swap_regrade(const BigradedDims& in) {
    BigradedDims out;
    for (auto& [k, v] : in.dims) out.add(k.first - k.second, -k.second, v);
    return out;
}

namespace detail {

// one random legal move; returns false if no legal move of that type exists
inline bool apply_random_move(Diagram& d, int type, splitmix64& rng, int max_n) {
    const int n = d.n;
    if (type == 0) {
        d = cyclic_shift(d, 1 + (int)rng.below(n - 1));
        return true;
    }
    if (type == 1) {
        // collect commutable columns
        std::vector<int> ok;
        for (int c = 0; c + 1 < n; ++c) {
            try {
                real_commutation(d, c);
                ok.push_back(c);
            } catch (...) {
            }
        }
        if (ok.empty()) return false;
        d = real_commutation(d, ok[rng.below(ok.size())]);
        return true;
    }
    if (n + 2 > max_n) return false;
    std::vector<int> ok;
    for (int c = 0; c < n; ++c)
        if (d.sigmaX[c] != n - 1 - c) ok.push_back(c);
    if (ok.empty()) return false;
    d = real_stabilization(d, ok[rng.below(ok.size())]);
    return true;
}

}  // namespace detail

// The full per-diagram verification battery.
inline Report verify_diagram_suite(const Diagram& d, const VerifyOptions& opt = {}) {
    using namespace detail;
    Report rep;
    rep.diagram = d.name.empty() ? "(unnamed)" : d.name;

    LinkTrace tr = validate(d);
    bool knot = tr.classification == LinkClass::StronglyInvertible && tr.components.size() == 1;
    StateTable st = enumerate_states(d, tr);

    DomainStats stats = domain_stats(d, st);
    {
        std::ostringstream os;
        os << "generators=" << st.size() << " domains=" << stats.x_free
           << " (all-empty=" << stats.total << " marker-free=" << stats.marker_free << ")";
        check(rep, "enumeration", true, "", os.str());
    }

    GradedComplex tilde = build_complex(d, st, Flavor::Tilde);
    check(rep, "d^2=0 (tilde)", check_d_squared(tilde), "0", "d^2");
    BigradedDims tdims = homology_f2(tilde);

    bool minus_ok = opt.with_minus && !st.relative && d.n <= opt.limits.minus;
    UModule minus, minus_tilde;
    if (minus_ok) {
        GradedComplex mt = build_complex(d, st, Flavor::MinusTilde);
        check(rep, "d^2=0 (minus-tilde)", check_d_squared(mt), "0", "d^2");
        minus_tilde = homology_over_u(mt);
    }

    if (st.relative) {
        check(rep, "periodic: tilde computed (relative gradings)", true, "",
              dims_to_string(tdims));
        return rep;
    }

    int k = w_power(d.n, tr.l_f, tr.l_p);
    BigradedDims hat = divide_w(tdims, k);
    {
        long long expect = hat.total();
        for (int i = 0; i < k; ++i) expect *= 2;
        std::ostringstream e, a;
        e << "hat(" << hat.total() << ") x 2^" << k << " = " << expect;
        a << tdims.total();
        check(rep, "tilde dim = hat dim x 2^k", tdims.total() == expect, e.str(), a.str());
    }

    LaurentPoly fast = alexander_polynomial(d, st);
    LaurentPoly from_hat = alexander_from_hat(hat, tr.l_p);
    check(rep, "alexander fast path = homology path", fast == from_hat, fast.str(),
          from_hat.str());

    if (knot) {
        check(rep, "odd hat dimension", hat.total() % 2 == 1, "odd",
              std::to_string(hat.total()));
    }

    if (minus_ok) {
        minus = divide_w(minus_tilde, k);
        if (knot) {
            bool single = minus.towers.size() == 1;
            bool diag = single && minus.towers[0].first == minus.towers[0].second;
            check(rep, "single tower with m = a2", single && diag, "1 tower, m=a2",
                  module_to_string(minus));
        }
        BigradedDims hfm = hat_from_minus(minus);
        check(rep, "hat from tilde = hat from minus", hat == hfm, dims_to_string(hat),
              dims_to_string(hfm));
    }

    // symmetry relations
    {
        Diagram td = transpose(d);
        validate(td);
        StateTable st2 = enumerate_states(td, trace_link(td));
        BigradedDims hat2 = divide_w(homology_f2(build_complex(td, st2, Flavor::Tilde)), k);
        check(rep, "transpose preserves hat", hat == hat2, dims_to_string(hat),
              dims_to_string(hat2));
    }
    {
        Diagram sd = swap_markers(d);
        validate(sd);
        StateTable st2 = enumerate_states(sd, trace_link(sd));
        BigradedDims hat2 = divide_w(homology_f2(build_complex(sd, st2, Flavor::Tilde)), k);
        BigradedDims expect = swap_regrade(hat);
        check(rep, "swap regrading (m,a2)->(m-a2,-a2)", hat2 == expect, dims_to_string(expect),
              dims_to_string(hat2));
        // the regrading sends t to -t^{-1} on the graded Euler characteristic
        // (equal to plain inversion whenever hat sits in even a2)
        LaurentPoly expect_alex = fast.inverted().negated_variable();
        LaurentPoly alex2 = alexander_polynomial(sd, st2);
        check(rep, "swap sends alexander to A(-1/t)", alex2 == expect_alex, expect_alex.str(),
              alex2.str());
    }

    // randomized legal move sequences
    splitmix64 rng(opt.seed * 0x9e3779b97f4a7c15ull + d.n);
    int failures = 0, ran = 0, tau0 = 0, ord0 = 0;
    if (minus_ok && knot) {
        tau0 = tau_r(minus);
        ord0 = torsion_order(minus);
    }
    for (int trial = 0; trial < opt.moves; ++trial) {
        Diagram cur = d;
        int len = 1 + (int)rng.below(3);
        for (int s = 0; s < len; ++s) {
            int type = (int)rng.below(3);
            for (int attempt = 0; attempt < 3; ++attempt) {
                if (detail::apply_random_move(cur, type, rng, opt.limits.hat)) break;
                type = (type + 1) % 3;
            }
        }
        try {
            LinkTrace tc = validate(cur);
            StateTable stc = enumerate_states(cur, tc);
            int kc = w_power(cur.n, tc.l_f, tc.l_p);
            BigradedDims hatc =
                divide_w(homology_f2(build_complex(cur, stc, Flavor::Tilde)), kc);
            if (!(hatc == hat)) ++failures;
            if (alexander_polynomial(cur, stc) != fast) ++failures;
            if (minus_ok && knot && cur.n <= opt.limits.minus) {
                UModule mc = divide_w(
                    homology_over_u(build_complex(cur, stc, Flavor::MinusTilde)), kc);
                if (tau_r(mc) != tau0 || torsion_order(mc) != ord0) ++failures;
            }
            ++ran;
        } catch (std::exception&) {
            ++failures;
        }
    }
    check(rep, "move invariance (" + std::to_string(ran) + " sequences)", failures == 0, "0",
          std::to_string(failures) + " failures");
    return rep;
}

// Skein identity on a certified triple.  The window is the column pair
// (c, c+1) and its mirrored row pair; the three diagrams must agree outside.
inline Report verify_skein(const Diagram& dplus, const Diagram& dminus, const Diagram& dzero,
                           int window_col) {
    using namespace detail;
    Report rep;
    rep.diagram = "skein triple";
    const int n = dplus.n;
    if (dminus.n != n || dzero.n != n) throw input_error("skein triple sizes differ");
    if (window_col < 0 || window_col + 1 >= n) throw input_error("bad skein window");
    if (dplus == dminus || dplus == dzero || dminus == dzero)
        throw input_error("degenerate skein triple: diagrams do not differ in the window");
    int r1 = n - 2 - window_col, r2 = n - 1 - window_col;

    auto outside_equal = [&](const Diagram& a, const Diagram& b) {
        for (int c = 0; c < n; ++c) {
            if (c == window_col || c == window_col + 1) continue;
            auto masked = [&](int r) { return (r == r1 || r == r2) ? -1 : r; };
            if (masked(a.sigmaO[c]) != masked(b.sigmaO[c])) return false;
            if (masked(a.sigmaX[c]) != masked(b.sigmaX[c])) return false;
        }
        return true;
    };
    check(rep, "agreement outside window (plus/minus)", outside_equal(dplus, dminus), "equal",
          outside_equal(dplus, dminus) ? "equal" : "differs");
    check(rep, "agreement outside window (plus/zero)", outside_equal(dplus, dzero), "equal",
          outside_equal(dplus, dzero) ? "equal" : "differs");

    LinkTrace tp = validate(dplus), tm = validate(dminus), tz = validate(dzero);
    LaurentPoly ap = alexander_polynomial(dplus, enumerate_states(dplus, tp));
    LaurentPoly am = alexander_polynomial(dminus, enumerate_states(dminus, tm));
    LaurentPoly az = alexander_polynomial(dzero, enumerate_states(dzero, tz));
    LaurentPoly tfac;
    tfac.add(1, 1);
    tfac.add(-1, -1);
    LaurentPoly lhs = ap - am, rhs = tfac * az;
    LaurentPoly residual = lhs - rhs;
    check(rep, "alexander skein identity", residual.is_zero(), "residual 0",
          residual.is_zero() ? "residual 0" : "residual " + residual.str());
    return rep;
}

}  // namespace rgh
