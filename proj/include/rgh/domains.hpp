#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <unordered_set>
#include <vector>

#include "rgh/states.hpp"

namespace rgh {

// Real rectangles: the four R-symmetric index-1 domain shapes.  A domain is
// an n x n multiplicity matrix (entries 0..2) from one real state to another.
//
// Kinds are recovered from how many moved points sit on the fixed circle C:
//   square   moves a mirror pair onto C            (0 from C, 2 onto C)
//   hexagon  slides one point along C plus a pair  (1, 1)
//   octagon  moves two C-points off C              (2, 0)
//   pair     moves four off-axis points            (0, 0)

enum class DomainKind : std::uint8_t { Square, Hexagon, Octagon, Pair };

inline const char* to_string(DomainKind k) {
    switch (k) {
        case DomainKind::Square: return "square";
        case DomainKind::Hexagon: return "hexagon";
        case DomainKind::Octagon: return "octagon";
        default: return "pair";
    }
}

struct Domain {
    std::size_t from = 0, to = 0;  // state table indices
    DomainKind kind = DomainKind::Square;
    int nO = 0, nX = 0;  // multiplicity-weighted marker counts
    std::vector<std::uint8_t> mult;  // n*n, index c*n+r
};

// A lattice point is interior iff all four incident cells have multiplicity
// >= 1; emptiness forbids interior points of the source or target state.
inline bool point_interior(const std::uint8_t* mult, int n, int i, int j) {
    auto cell = [&](int c, int r) { return mult[mod(c, n) * n + mod(r, n)]; };
    return cell(i, j) && cell(i - 1, j - 1) && cell(i - 1, j) && cell(i, j - 1);
}

inline bool interior_empty(const Domain& dom, int n, const Perm& from_pi, const Perm& to_pi) {
    for (int c = 0; c < n; ++c) {
        if (point_interior(dom.mult.data(), n, c, from_pi[c])) return false;
        if (point_interior(dom.mult.data(), n, c, to_pi[c])) return false;
    }
    return true;
}

namespace detail {

struct Rect {
    int ca, cw, ra, rw;  // column anchor/width, row anchor/width (widths 1..n-1)
};

inline Rect rho_rect(const Rect& r, int n) {
    // rho([a,b) x [c,d)) = [tau(d), tau(c)) x [tau(b), tau(a))
    int d = mod(r.ra + r.rw, n), b = mod(r.ca + r.cw, n);
    return Rect{mod(-d, n), r.rw, mod(-b, n), r.cw};
}

inline bool spans_intersect(int a, int w1, int b, int w2, int n) {
    // cyclic intervals [a, a+w1), [b, b+w2)
    int rel = mod(b - a, n);
    if (rel < w1) return true;
    int rel2 = mod(a - b, n);
    return rel2 < w2;
}

inline void add_rect(std::uint8_t* mult, int n, const Rect& r, std::uint8_t delta = 1) {
    for (int i = 0; i < r.cw; ++i) {
        int c = mod(r.ca + i, n);
        for (int j = 0; j < r.rw; ++j) mult[c * n + mod(r.ra + j, n)] += delta;
    }
}

inline void or_rect(std::uint8_t* mult, int n, const Rect& r) {
    for (int i = 0; i < r.cw; ++i) {
        int c = mod(r.ca + i, n);
        for (int j = 0; j < r.rw; ++j) mult[c * n + mod(r.ra + j, n)] = 1;
    }
}

enum class Family : std::uint8_t { SquareFam, PairFam, UnionFam, ComplementFam };

// Shared per-call state for candidate processing.
template <class Sink>
struct Processor {
    const Diagram& d;
    const StateTable& st;
    std::size_t from_idx;
    const Perm& pi;  // source state
    Sink& sink;
    int n;
    std::array<std::uint8_t, 256> mult{};
    std::unordered_set<std::uint64_t> seen;

    Processor(const Diagram& dg, const StateTable& table, std::size_t idx, const Perm& p,
              Sink& s)
        : d(dg), st(table), from_idx(idx), pi(p), sink(s), n(dg.n) {}

    void reset() { std::memset(mult.data(), 0, std::size_t(n) * n); }

    // Boundary-solve, validate, filter, classify, emit.
    void finish(Family fam) {
        const int n = this->n;
        int from_on_c = 0, to_on_c = 0;
        // moved points from the corner defect A(p) = x(p) - y(p)
        Perm to_pi = pi;
        int moved = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int A = mult[i * n + j] + mult[mod(i - 1, n) * n + mod(j - 1, n)] -
                        mult[mod(i - 1, n) * n + j] - mult[i * n + mod(j - 1, n)];
                if (A == 0) continue;
                if (A > 1 || A < -1) return;  // not a valid domain
                if (A == 1) {
                    if (pi[i] != j) return;  // moved-from point must lie in x
                    if (j == mod(n - i, n)) ++from_on_c;
                } else {
                    if (to_pi[i] != pi[i]) return;  // two targets in one column
                    to_pi[i] = j;
                    if (pi[i] == j) return;
                    if (j == mod(n - i, n)) ++to_on_c;
                    ++moved;
                }
            }
        }
        if (moved == 0) return;
        // to_pi must be a real permutation state
        {
            std::uint32_t seen_rows = 0;
            for (int i = 0; i < n; ++i) {
                if (seen_rows & (1u << to_pi[i])) return;
                seen_rows |= 1u << to_pi[i];
            }
            for (int i = 0; i < n; ++i)
                if (to_pi[mod(n - to_pi[i], n)] != mod(n - i, n)) return;
        }
        // emptiness
        for (int c = 0; c < n; ++c) {
            if (point_interior(mult.data(), n, c, pi[c])) return;
            if (point_interior(mult.data(), n, c, to_pi[c])) return;
        }

        // marker counts
        int nO = 0, nX = 0;
        for (int c = 0; c < n; ++c) {
            nO += mult[c * n + d.sigmaO[c]];
            nX += mult[c * n + d.sigmaX[c]];
        }

        std::uint64_t to_key = pack_perm_sigma(to_pi);
        std::size_t to_idx = st.index_of(to_key);

        // grading-drop identity == real Maslov index 1
        int muO = st.m[from_idx] - st.m[to_idx] + nO;
        int muX = st.mX[from_idx] - st.mX[to_idx] + nX;
        if (muO != 1) {
            if (fam == Family::SquareFam || fam == Family::PairFam)
                throw consistency_error("grading-drop identity failed on a " +
                                        std::string(fam == Family::SquareFam ? "square" : "pair") +
                                        " candidate (mu_O = " + std::to_string(muO) + ")");
            return;  // generous family: candidate is not index 1
        }
        if (muX != 1)
            throw consistency_error("O/X grading-drop mismatch (mu_O = 1, mu_X = " +
                                    std::to_string(muX) + ")");

        DomainKind kind;
        if (from_on_c == 0 && to_on_c == 2)
            kind = DomainKind::Square;
        else if (from_on_c == 1 && to_on_c == 1)
            kind = DomainKind::Hexagon;
        else if (from_on_c == 2 && to_on_c == 0)
            kind = DomainKind::Octagon;
        else if (from_on_c == 0 && to_on_c == 0)
            kind = DomainKind::Pair;
        else
            throw consistency_error("index-1 domain outside the four-shape taxonomy");

        std::uint64_t h = fnv1a(mult.data(), std::size_t(n) * n, to_key * 0x9e3779b97f4a7c15ull + 1);
        if (!seen.insert(h).second) return;
        sink(to_idx, kind, nO, nX, mult.data());
    }

    std::uint64_t pack_perm_sigma(const Perm& to) const {
        // key of sigma = pi . tau
        std::uint64_t key = 0;
        for (int i = 0; i < n; ++i) key = (key << 4) | std::uint64_t(to[mod(n - i, n)]);
        return key;
    }
};

}  // namespace detail

// Enumerate every empty real rectangle out of state `from_idx`, calling
//   sink(to_idx, kind, nO, nX, mult_ptr)
// once per domain, deduplicated by (target, multiplicity matrix).
template <class Sink>
void for_each_real_rectangle(const Diagram& d, const StateTable& st, std::size_t from_idx,
                             Sink&& sink) {
    using namespace detail;
    const int n = d.n;
    if (n < 2) return;
    Perm pi = st.pi_of(from_idx);
    Processor<Sink> proc(d, st, from_idx, pi, sink);
    auto tau = [&](int i) { return mod(n - i, n); };

    // (a) squares: single rho-invariant rectangles moving a mirror pair onto C
    for (int a = 0; a < n; ++a) {
        if (pi[a] == tau(a)) continue;
        int b = tau(pi[a]);
        if (a >= b) continue;  // mirror column; each pair once
        int w1 = mod(b - a, n);
        Rect r1{a, w1, mod(-b, n), w1};  // cols [a,b) x rows [tau(b), tau(a))
        // widths: rows tau(b)..tau(a): width = tau(a)-tau(b) = b-a mod n
        proc.reset();
        add_rect(proc.mult.data(), n, r1);
        proc.finish(Family::SquareFam);
        int w2 = n - w1;
        Rect r2{b, w2, mod(-a, n), w2};
        proc.reset();
        add_rect(proc.mult.data(), n, r2);
        proc.finish(Family::SquareFam);
    }

    // (b) pairs: r + rho(r) moving four distinct off-axis columns
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int am = tau(pi[a]), bm = tau(pi[b]);
            if (am == a || am == b || bm == a || bm == b || am == bm) continue;
            for (int which = 0; which < 2; ++which) {
                Rect r = which == 0
                             ? Rect{a, mod(b - a, n), pi[a], mod(pi[b] - pi[a], n)}
                             : Rect{b, mod(a - b, n), pi[b], mod(pi[a] - pi[b], n)};
                Rect rr = rho_rect(r, n);
                proc.reset();
                add_rect(proc.mult.data(), n, r);
                add_rect(proc.mult.data(), n, rr);
                proc.finish(Family::PairFam);
            }
        }
    }

    // (c) overlapping unions r . rho(r): L-hexagons and staircase octagons.
    // Anchor the rectangle's SW or NE corner at a point of x.
    for (int anchor = 0; anchor < 2 * n; ++anchor) {
        int c0 = anchor % n;
        bool ne = anchor >= n;
        for (int cw = 1; cw < n; ++cw) {
            for (int rw = 1; rw < n; ++rw) {
                Rect r;
                if (!ne)
                    r = Rect{c0, cw, pi[c0], rw};
                else
                    r = Rect{mod(c0 - cw, n), cw, mod(pi[c0] - rw, n), rw};
                Rect rr = rho_rect(r, n);
                if (r.ca == rr.ca && r.cw == rr.cw && r.ra == rr.ra && r.rw == rr.rw)
                    continue;  // rho-invariant: that is the square family
                if (!spans_intersect(r.ca, r.cw, rr.ca, rr.cw, n)) continue;
                if (!spans_intersect(r.ra, r.rw, rr.ra, rr.rw, n)) continue;
                proc.reset();
                or_rect(proc.mult.data(), n, r);
                or_rect(proc.mult.data(), n, rr);
                proc.finish(Family::UnionFam);
            }
        }
    }

    // (d) complements of rho-invariant rectangles: octagons through the cut,
    // moving two points of x . C off the axis.
    for (int a = 0; a < n; ++a) {
        if (pi[a] != tau(a)) continue;
        for (int b = a + 1; b < n; ++b) {
            if (pi[b] != tau(b)) continue;
            for (int which = 0; which < 2; ++which) {
                int lo = which == 0 ? a : b, hi = which == 0 ? b : a;
                int w = mod(hi - lo, n);
                Rect s{lo, w, mod(-hi, n), w};
                proc.reset();
                std::memset(proc.mult.data(), 1, std::size_t(n) * n);
                add_rect(proc.mult.data(), n, s, static_cast<std::uint8_t>(-1));
                proc.finish(Family::ComplementFam);
            }
        }
    }
}

// Materialized successor list (tests, stats, small grids).
inline std::vector<Domain> successors(const Diagram& d, const StateTable& st,
                                      std::size_t from_idx) {
    std::vector<Domain> out;
    const int n = d.n;
    for_each_real_rectangle(d, st, from_idx,
                            [&](std::size_t to, DomainKind kind, int nO, int nX,
                                const std::uint8_t* mult) {
                                Domain dom;
                                dom.from = from_idx;
                                dom.to = to;
                                dom.kind = kind;
                                dom.nO = nO;
                                dom.nX = nX;
                                dom.mult.assign(mult, mult + std::size_t(n) * n);
                                out.push_back(std::move(dom));
                            });
    // deterministic order
    std::sort(out.begin(), out.end(), [](const Domain& a, const Domain& b) {
        if (a.to != b.to) return a.to < b.to;
        return a.mult < b.mult;
    });
    return out;
}

struct DomainStats {
    std::size_t total = 0;
    std::size_t by_kind[4] = {0, 0, 0, 0};
    std::size_t x_free = 0;       // nX = 0 (minus-tilde terms)
    std::size_t marker_free = 0;  // nO = nX = 0 (tilde terms)
};

inline DomainStats domain_stats(const Diagram& d, const StateTable& st) {
    DomainStats s;
    for (std::size_t i = 0; i < st.size(); ++i) {
        for_each_real_rectangle(d, st, i,
                                [&](std::size_t, DomainKind kind, int nO, int nX,
                                    const std::uint8_t*) {
                                    ++s.total;
                                    ++s.by_kind[static_cast<int>(kind)];
                                    if (nX == 0) ++s.x_free;
                                    if (nX == 0 && nO == 0) ++s.marker_free;
                                });
    }
    return s;
}

}  // namespace rgh
