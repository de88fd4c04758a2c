#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "rgh/complex.hpp"

namespace rgh {

// Bigraded F2 dimensions, keyed by (m, a2).
struct BigradedDims {
    std::map<std::pair<int, int>, long long> dims;

    long long total() const {
        long long t = 0;
        for (auto& [k, v] : dims) t += v;
        return t;
    }
    void add(int m, int a2, long long d = 1) {
        if (d == 0) return;
        auto key = std::make_pair(m, a2);
        auto it = dims.find(key);
        if (it == dims.end())
            dims[key] = d;
        else {
            it->second += d;
            if (it->second == 0) dims.erase(it);
        }
    }
    bool operator==(const BigradedDims& o) const { return dims == o.dims; }
};

// Decomposition of a module over F[u]: free towers plus torsion summands.
struct UModule {
    std::vector<std::pair<int, int>> towers;            // (m, a2) of tower generators
    std::map<std::tuple<int, int, int>, long long> torsion;  // (m, a2, order) -> multiplicity

    void add_torsion(int m, int a2, int order, long long mult = 1) {
        if (mult == 0) return;
        auto key = std::make_tuple(m, a2, order);
        auto it = torsion.find(key);
        if (it == torsion.end())
            torsion[key] = mult;
        else {
            it->second += mult;
            if (it->second == 0) torsion.erase(it);
        }
    }
    long long torsion_total() const {
        long long t = 0;
        for (auto& [k, v] : torsion) t += v;
        return t;
    }
    bool operator==(const UModule& o) const {
        return towers == o.towers && torsion == o.torsion;
    }
};

namespace detail {

// Sorted-vector XOR (symmetric difference).
inline void xor_into(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src) {
    std::vector<std::uint32_t> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() && j < src.size()) {
        if (dst[i] < src[j])
            out.push_back(dst[i++]);
        else if (src[j] < dst[i])
            out.push_back(src[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), dst.begin() + i, dst.end());
    out.insert(out.end(), src.begin() + j, src.end());
    dst = std::move(out);
}

inline void erase_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

// Reduction core.  Generators carry bigradings; the u-exponent of an edge
// a->b is forced by homogeneity, e = 1 - m[a] + m[b], so edges are plain
// target sets with mod-2 (XOR) semantics and exponents are never stored.
//
// Phase A cancels invertible (e = 0) pairs by the Gaussian elimination lemma:
// the in(b) x out(a) splice.  Created edges keep exponents >= 0, and the
// homological grading m - a2 drops by 1 along every edge, so a pivot's row
// and column sets never overlap.
//
// Phase B computes the F[u]-module structure of the remaining minimal complex
// (all exponents >= 1) by the graded persistence reduction: columns processed
// in descending a2, pivot = entry of maximal (-a2, id), columns-only
// subtractions.  Two columns sharing a pivot row lie in the same homological
// degree, where m_k - m_j = a2_k - a2_j >= 0 makes every subtraction a legal
// non-negative power of u.  A pivot of exponent e >= 1 is a torsion summand
// F[u]/(u^e) with top generator at the pivot row's bigrading; zero columns
// whose row is never a pivot are free towers.
struct Reducer {
    std::vector<std::int16_t> m, a2;
    std::vector<std::vector<std::uint32_t>> out, in;
    std::vector<char> alive;
    UModule result;

    Reducer(const std::vector<std::int16_t>& m_, const std::vector<std::int16_t>& a2_,
            const std::vector<std::uint32_t>& ids, const GradedComplex& cx)
        : m(m_), a2(a2_) {
        // local reindexing: ids lists the global generator numbers in this block
        std::map<std::uint32_t, std::uint32_t> local;
        for (std::uint32_t i = 0; i < ids.size(); ++i) local[ids[i]] = i;
        out.resize(ids.size());
        in.resize(ids.size());
        alive.assign(ids.size(), 1);
        for (std::uint32_t i = 0; i < ids.size(); ++i) {
            for (const Entry& e : cx.cols[ids[i]]) {
                auto it = local.find(e.to);
                if (it == local.end())
                    throw consistency_error("differential leaves its grading block");
                out[i].push_back(it->second);
            }
            std::sort(out[i].begin(), out[i].end());
        }
        for (std::uint32_t i = 0; i < ids.size(); ++i)
            for (std::uint32_t t : out[i]) in[t].push_back(i);
        for (auto& v : in) std::sort(v.begin(), v.end());
    }

    int expo(std::uint32_t a, std::uint32_t b) const { return 1 - m[a] + m[b]; }

    void cancel_unit(std::uint32_t a, std::uint32_t b) {
        alive[a] = alive[b] = 0;
        std::vector<std::uint32_t> Bs = in[b];   // sources hitting b
        std::vector<std::uint32_t> As = out[a];  // targets of a
        erase_sorted(Bs, a);
        erase_sorted(As, b);
        for (std::uint32_t c : in[a]) erase_sorted(out[c], a);
        for (std::uint32_t d : out[a]) erase_sorted(in[d], a);
        for (std::uint32_t c : in[b]) erase_sorted(out[c], b);
        for (std::uint32_t d : out[b]) erase_sorted(in[d], b);
        out[a].clear();
        in[a].clear();
        out[b].clear();
        in[b].clear();
        for (std::uint32_t c : Bs) xor_into(out[c], As);
        for (std::uint32_t d : As) xor_into(in[d], Bs);
    }

    void gaussian_phase() {
        bool again = true;
        while (again) {
            again = false;
            for (std::uint32_t a = 0; a < out.size(); ++a) {
                if (!alive[a]) continue;
                for (std::uint32_t t : out[a])
                    if (expo(a, t) == 0) {
                        cancel_unit(a, t);
                        again = true;
                        break;
                    }
            }
        }
    }

    void persistence_phase() {
        const std::uint32_t N = (std::uint32_t)out.size();
        std::vector<std::uint32_t> order;
        for (std::uint32_t i = 0; i < N; ++i)
            if (alive[i]) order.push_back(i);
        std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
            if (a2[x] != a2[y]) return a2[x] > a2[y];
            return x < y;
        });
        auto rowless = [&](std::uint32_t x, std::uint32_t y) {
            if (a2[x] != a2[y]) return a2[x] > a2[y];  // larger a2 = earlier row
            return x < y;
        };
        std::map<std::uint32_t, std::uint32_t> owner;  // pivot row -> column
        std::vector<std::vector<std::uint32_t>> col(N);
        std::vector<char> is_cycle(N, 0);
        for (std::uint32_t j : order) {
            // column sorted so the pivot (maximal row position) is the back
            std::vector<std::uint32_t> c = out[j];
            std::sort(c.begin(), c.end(), rowless);
            for (;;) {
                if (c.empty()) {
                    is_cycle[j] = 1;
                    break;
                }
                std::uint32_t piv = c.back();
                if (expo(j, piv) < 1)
                    throw consistency_error("unit entry survived the Gaussian phase");
                auto it = owner.find(piv);
                if (it == owner.end()) {
                    owner[piv] = j;
                    col[j] = c;
                    break;
                }
                // subtract the owning column (legal non-negative u-power)
                const std::vector<std::uint32_t>& k = col[it->second];
                std::vector<std::uint32_t> merged;
                merged.reserve(c.size() + k.size());
                std::size_t i1 = 0, i2 = 0;
                while (i1 < c.size() && i2 < k.size()) {
                    if (c[i1] == k[i2]) {
                        ++i1;
                        ++i2;
                    } else if (rowless(c[i1], k[i2]))
                        merged.push_back(c[i1++]);
                    else
                        merged.push_back(k[i2++]);
                }
                merged.insert(merged.end(), c.begin() + i1, c.end());
                merged.insert(merged.end(), k.begin() + i2, k.end());
                c = std::move(merged);
            }
        }
        for (auto& [row, j] : owner) {
            if (!is_cycle[row])
                throw consistency_error("pivot row is not a cycle column");
            result.add_torsion(m[row], a2[row], expo(j, row));
        }
        for (std::uint32_t i : order) {
            if (!is_cycle[i]) continue;
            if (owner.count(i)) continue;
            result.towers.emplace_back(m[i], a2[i]);
        }
        // consume: survivors are encoded in result now
        for (std::uint32_t i = 0; i < N; ++i) alive[i] = 0;
    }

    void run() {
        gaussian_phase();
        persistence_phase();
    }
};

}  // namespace detail

// Homology of the tilde complex over F2, per a2-block.
inline BigradedDims homology_f2(const GradedComplex& cx) {
    if (cx.flavor != Flavor::Tilde) throw input_error("homology_f2 expects the tilde flavor");
    // split by a2 (tilde entries preserve a2)
    std::map<int, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t i = 0; i < cx.size(); ++i) blocks[cx.a2[i]].push_back(i);
    BigradedDims dims;
    for (auto& [a2v, ids] : blocks) {
        // Reducer indexes locally, so feed local grading tables.
        std::vector<std::int16_t> lm(ids.size()), la(ids.size());
        for (std::size_t k = 0; k < ids.size(); ++k) {
            lm[k] = cx.m[ids[k]];
            la[k] = cx.a2[ids[k]];
        }
        detail::Reducer red(lm, la, ids, cx);
        red.run();
        if (red.result.torsion_total() != 0)
            throw consistency_error("tilde reduction produced torsion");
        for (auto& [m, a2] : red.result.towers) dims.add(m, a2);
    }
    return dims;
}

// Graded module decomposition of the minus-tilde complex over F2[u].
inline UModule homology_over_u(const GradedComplex& cx) {
    if (cx.flavor != Flavor::MinusTilde)
        throw input_error("homology_over_u expects the minus-tilde flavor");
    std::vector<std::uint32_t> ids(cx.size());
    for (std::uint32_t i = 0; i < cx.size(); ++i) ids[i] = i;
    std::vector<std::int16_t> lm(cx.m.begin(), cx.m.end()), la(cx.a2.begin(), cx.a2.end());
    detail::Reducer red(lm, la, ids, cx);
    red.run();
    UModule mod = std::move(red.result);
    std::sort(mod.towers.begin(), mod.towers.end());
    return mod;
}

// ---------------------------------------------------------------------------
// W-factor division.  W is two-dimensional, supported at (m, a2) = (0,0) and
// (-1,-2); stabilization tensors one W per extra O-pair, in the tilde flavor
// and (via the cone of U_j - u^2) equally in the minus-tilde flavor.
// ---------------------------------------------------------------------------

namespace detail {

inline std::map<std::pair<int, int>, long long> divide_w_counts(
    const std::map<std::pair<int, int>, long long>& f, int k, const char* what) {
    auto cur = f;
    for (int round = 0; round < k; ++round) {
        // f(m,a2) = g(m,a2) + g(m+1, a2+2); solve with m descending.
        std::map<std::pair<int, int>, long long> g;
        for (auto it = cur.rbegin(); it != cur.rend(); ++it) {
            auto [key, c] = *it;
            auto [m, a2] = key;
            long long carried = 0;
            auto up = g.find({m + 1, a2 + 2});
            if (up != g.end()) carried = up->second;
            long long v = c - carried;
            if (v < 0)
                throw consistency_error(std::string(what) + ": W-division produced a negative coefficient");
            if (v) g[{m, a2}] = v;
        }
        // exactness: g * (1 + q^{-1}T^{-2}) must reproduce cur
        std::map<std::pair<int, int>, long long> back;
        for (auto& [key, c] : g) {
            back[key] += c;
            back[{key.first - 1, key.second - 2}] += c;
        }
        for (auto it = back.begin(); it != back.end();) {
            if (it->second == 0)
                it = back.erase(it);
            else
                ++it;
        }
        if (back != cur)
            throw consistency_error(std::string(what) + ": W-division is not exact");
        cur = std::move(g);
    }
    return cur;
}

}  // namespace detail

inline BigradedDims divide_w(const BigradedDims& in, int k) {
    if (k < 0) throw input_error("divide_w: negative power");
    BigradedDims out;
    out.dims = detail::divide_w_counts(in.dims, k, "tilde dims");
    return out;
}

inline UModule divide_w(const UModule& in, int k) {
    if (k < 0) throw input_error("divide_w: negative power");
    UModule out;
    std::map<std::pair<int, int>, long long> tow;
    for (auto& t : in.towers) ++tow[t];
    auto tdiv = detail::divide_w_counts(tow, k, "towers");
    for (auto& [key, c] : tdiv)
        for (long long i = 0; i < c; ++i) out.towers.push_back(key);
    std::sort(out.towers.begin(), out.towers.end());

    // torsion: W-tensoring preserves the order, so divide each order class
    std::map<int, std::map<std::pair<int, int>, long long>> by_order;
    for (auto& [key, mult] : in.torsion) {
        auto [m, a2, o] = key;
        by_order[o][{m, a2}] += mult;
    }
    for (auto& [o, counts] : by_order) {
        auto div = detail::divide_w_counts(counts, k, "torsion");
        for (auto& [key, c] : div) out.add_torsion(key.first, key.second, o, c);
    }
    return out;
}

// Hat homology from the minus module via the u-coefficient sequence: each
// tower contributes its generator; a torsion summand of order o with top
// generator at (m, a2) contributes (m, a2) from the cokernel of u and
// (m-o+1, a2-o) from the kernel class u^{o-1}.g.
inline BigradedDims hat_from_minus(const UModule& mod) {
    BigradedDims dims;
    for (auto& [m, a2] : mod.towers) dims.add(m, a2);
    for (auto& [key, mult] : mod.torsion) {
        auto [m, a2, o] = key;
        dims.add(m, a2, mult);
        dims.add(m - o + 1, a2 - o, mult);
    }
    return dims;
}

}  // namespace rgh
