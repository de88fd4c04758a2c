#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rgh/diagram.hpp"
#include "rgh/util.hpp"

namespace rgh {

// A real grid state is a permutation pi with pi.tau.pi = tau, encoded by the
// involution sigma = pi.tau.  States are enumerated in lexicographic order of
// sigma, which is also numeric order of the nibble-packed key below.

using Perm = std::vector<int>;

inline std::uint64_t pack_perm(const Perm& p) {
    // one nibble per entry, big-endian; valid for n <= 16
    std::uint64_t key = 0;
    for (int v : p) key = (key << 4) | static_cast<std::uint64_t>(v);
    return key;
}

// Number of involutions: I(n) = I(n-1) + (n-1) I(n-2).
inline std::uint64_t count_states(int n) {
    std::uint64_t a = 1, b = 1;  // I(0), I(1)
    if (n <= 1) return 1;
    for (int k = 2; k <= n; ++k) {
        std::uint64_t c = b + std::uint64_t(k - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

// Enumerate involutions sigma of {0..n-1} in lexicographic order.
template <class F>
void for_each_involution(int n, F&& fn) {
    Perm sigma(n, -1);
    // Recurse on the smallest unassigned index; choosing sigma[i]=i first and
    // then partners in increasing order yields lexicographic order.
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && sigma[i] >= 0) ++i;
        if (i == n) {
            fn(const_cast<const Perm&>(sigma));
            return;
        }
        sigma[i] = i;
        self(self, i + 1);
        sigma[i] = -1;
        for (int j = i + 1; j < n; ++j) {
            if (sigma[j] >= 0) continue;
            sigma[i] = j;
            sigma[j] = i;
            self(self, i + 1);
            sigma[i] = -1;
            sigma[j] = -1;
        }
    };
    rec(rec, 0);
}

struct Bigrading {
    int m = 0;   // real Maslov grading M^R_O
    int a2 = 0;  // doubled real Alexander grading 2 A^R
};

namespace detail {

// #{(a,b) in A x B : a strictly southwest of b} for point sets given as
// (col,row) arrays; markers live at cell centers, so "x below marker" uses <=.
struct MaslovCounts {
    long long Ixx, IxP, IPx, IPP;
};

// Classical Maslov grading of state pi with respect to marker permutation P:
//   M_P(x) = J(x,x) - 2 J(x,P) + J(P,P) + 1
// with J symmetrized over strict southwest pairs; the marker half-offsets
// turn the mixed terms into (<=, <) comparisons and all halves cancel.
inline int classical_maslov(const Perm& pi, const std::vector<int>& P) {
    const int n = (int)pi.size();
    long long Ixx = 0, IxP = 0, IPx = 0, IPP = 0;
    for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2) {
            if (pi[c1] < pi[c2]) ++Ixx;
            if (P[c1] < P[c2]) ++IPP;
        }
    for (int cx = 0; cx < n; ++cx)
        for (int cp = 0; cp < n; ++cp) {
            if (cx <= cp && pi[cx] <= P[cp]) ++IxP;  // point SW of marker center
            if (cp < cx && P[cp] < pi[cx]) ++IPx;    // marker center SW of point
        }
    return static_cast<int>(Ixx - IxP - IPx + IPP + 1);
}

}  // namespace detail

inline int classical_maslov_O(const Diagram& d, const Perm& pi) {
    return detail::classical_maslov(pi, d.sigmaO);
}
inline int classical_maslov_X(const Diagram& d, const Perm& pi) {
    return detail::classical_maslov(pi, d.sigmaX);
}

// Table of all real grid states of a diagram with their gradings, in
// canonical (lexicographic-in-sigma) order.
struct StateTable {
    int n = 0;
    int l_f = 0, l_p = 0;
    bool relative = false;  // periodic diagrams: M^R normalized to least state
    std::vector<std::uint64_t> keys;  // packed sigma, ascending
    std::vector<std::int16_t> m;      // M^R_O
    std::vector<std::int16_t> mX;     // M^R_X
    std::vector<std::int16_t> a2;     // 2 A^R
    std::vector<std::int8_t> onC;

    std::size_t size() const { return keys.size(); }

    std::size_t index_of(std::uint64_t key) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || *it != key)
            throw consistency_error("state lookup failed: target is not a real grid state");
        return static_cast<std::size_t>(it - keys.begin());
    }

    Perm sigma_of(std::size_t idx) const {
        Perm s(n);
        std::uint64_t key = keys[idx];
        for (int i = n - 1; i >= 0; --i) {
            s[i] = static_cast<int>(key & 0xf);
            key >>= 4;
        }
        return s;
    }

    // pi = sigma . tau
    Perm pi_of(std::size_t idx) const {
        Perm s = sigma_of(idx);
        Perm pi(n);
        for (int i = 0; i < n; ++i) pi[i] = s[(n - i) % n];
        return pi;
    }
};

// Real gradings of a single state (strongly invertible normalization).
inline Bigrading real_gradings(const Diagram& d, const Perm& pi, int l_f, int l_p) {
    const int n = d.n;
    int onC = 0;
    for (int i = 0; i < n; ++i)
        if (pi[i] == mod(n - i, n)) ++onC;
    int MO = classical_maslov_O(d, pi);
    int MX = classical_maslov_X(d, pi);
    int num = 2 * MO - onC + l_f;
    if (mod(num, 4) != 0)
        throw consistency_error("M^R_O is not an integer: 2M_O - |x.C| + l_f = " +
                                std::to_string(num));
    int numX = 2 * MX - onC + l_f;
    if (mod(numX, 4) != 0) throw consistency_error("M^R_X is not an integer");
    int m = num / 4, mXv = numX / 4;
    int stab = n - l_f - 2 * l_p;
    if (stab % 2 != 0) throw consistency_error("n - l_f - 2 l_p must be even");
    Bigrading g;
    g.m = m;
    g.a2 = (m - mXv) - stab / 2;
    return g;
}

// Build the full state table.  For strongly invertible diagrams the absolute
// normalization applies; for periodic diagrams M^R is shifted so the least
// enumerated state sits at 0 and the table is marked relative.
inline StateTable enumerate_states(const Diagram& d, const LinkTrace& trace) {
    const int n = d.n;
    if (n > 16) throw capacity_error("state table supports n <= 16");
    StateTable t;
    t.n = n;
    t.l_f = trace.l_f;
    t.l_p = trace.l_p;
    t.relative = (trace.classification == LinkClass::DoublyPeriodic);

    std::vector<std::uint64_t> keys;
    keys.reserve(count_states(n));
    for_each_involution(n, [&](const Perm& s) { keys.push_back(pack_perm(s)); });
    t.keys = std::move(keys);

    const std::size_t total = t.keys.size();
    t.m.resize(total);
    t.mX.resize(total);
    t.a2.resize(total);
    t.onC.resize(total);

    const bool periodic = t.relative;
    parallel_for(total, [&](std::size_t idx) {
        Perm pi = t.pi_of(idx);
        int onC = 0;
        for (int i = 0; i < n; ++i)
            if (pi[i] == mod(n - i, n)) ++onC;
        t.onC[idx] = static_cast<std::int8_t>(onC);
        if (!periodic) {
            Bigrading g = real_gradings(d, pi, t.l_f, t.l_p);
            t.m[idx] = static_cast<std::int16_t>(g.m);
            int MX = classical_maslov_X(d, pi);
            t.mX[idx] = static_cast<std::int16_t>((2 * MX - onC + t.l_f) / 4);
            t.a2[idx] = static_cast<std::int16_t>(g.a2);
        } else {
            // quarter-integer in general: store 4*M^R to keep integers, then
            // shift; the periodic Alexander level is a single value, store 0.
            int MO = classical_maslov_O(d, pi);
            int MX = classical_maslov_X(d, pi);
            t.m[idx] = static_cast<std::int16_t>(2 * MO - onC);  // 4*M^R up to shift
            t.mX[idx] = static_cast<std::int16_t>(2 * MX - onC);
            t.a2[idx] = 0;
        }
    });

    if (periodic) {
        // normalize so the least enumerated state has M^R = 0, and require the
        // relative gradings to be integers (they differ by index-1 counts).
        std::int16_t base = t.m[0], baseX = t.mX[0];
        for (std::size_t i = 0; i < total; ++i) {
            int dm = t.m[i] - base, dx = t.mX[i] - baseX;
            if (mod(dm, 4) != 0 || mod(dx, 4) != 0)
                throw consistency_error("relative M^R is not an integer on periodic diagram");
            t.m[i] = static_cast<std::int16_t>(dm / 4);
            t.mX[i] = static_cast<std::int16_t>(dx / 4);
        }
    }

    // Reality and parity checks (cheap, catch upstream bugs early).
    for (std::size_t i = 0; i < total; ++i)
        if ((t.onC[i] - t.l_f) % 2 != 0 && !periodic)
            throw consistency_error("|x.C| parity does not match l_f");
    return t;
}

}  // namespace rgh
