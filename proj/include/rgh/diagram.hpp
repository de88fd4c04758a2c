#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rgh/util.hpp"

namespace rgh {

// Coordinates: columns run left to right, rows bottom to top.  Cell (c,r) is
// the unit square [c,c+1] x [r,r+1]; lattice point (i,j) is the intersection
// of vertical line i and horizontal line j, both mod n on the torus.
//
// The reflection acts on lattice points by R(i,j) = (n-j, n-i) mod n; its
// fixed circle C is the anti-diagonal {(i, n-i)}.  On cells it acts by
// rho(c,r) = (n-1-r, n-1-c), with fixed cells {(c, n-1-c)}.

inline int mod(int a, int n) { return ((a % n) + n) % n; }

enum class LinkClass { StronglyInvertible, DoublyPeriodic, Mixed };

inline const char* to_string(LinkClass c) {
    switch (c) {
        case LinkClass::StronglyInvertible: return "strongly-invertible";
        case LinkClass::DoublyPeriodic: return "doubly-periodic";
        default: return "mixed";
    }
}

struct LinkTrace {
    // Each component is the cyclically ordered list of marker cells it visits
    // (alternating O,X), stored as c*n + r of the O cells for reporting.
    std::vector<std::vector<int>> components;
    int l_f = 0;  // components fixed setwise by the reflection
    int l_p = 0;  // interchanged component pairs
    LinkClass classification = LinkClass::Mixed;
};

struct Diagram {
    int n = 0;
    std::vector<int> sigmaO;  // column c carries O in cell (c, sigmaO[c])
    std::vector<int> sigmaX;
    std::string name;
    std::map<std::string, std::string> meta;

    int tau(int i) const { return mod(-i, n); }     // lattice involution
    int rho_c(int c) const { return n - 1 - c; }    // used as rho(c,r)=(rho_c(r),rho_c(c))

    bool operator==(const Diagram& o) const {
        return n == o.n && sigmaO == o.sigmaO && sigmaX == o.sigmaX;
    }
};

// ---------------------------------------------------------------------------
// .rgd parsing.  Format, bit-exact:
//   line 1: n=<int>
//   line 2: O=<r0> <r1> ... <r(n-1)>
//   line 3: X=...
//   optional: name=<text>, meta.<key>=<value>, '#' comments, LF endings.
// Parsing does not check the reflection symmetry; that is validate().
// ---------------------------------------------------------------------------

inline Diagram parse_diagram(const std::string& text) {
    Diagram d;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_n = false, saw_o = false, saw_x = false;

    auto parse_row = [&](const std::string& body, const char* which) {
        std::vector<int> rows;
        std::istringstream ls(body);
        std::string tok;
        while (ls >> tok) {
            try {
                rows.push_back(std::stoi(tok));
            } catch (...) {
                throw input_error("line " + std::to_string(lineno) + ": bad integer '" + tok +
                                  "' in " + which + " row list");
            }
        }
        if ((int)rows.size() != d.n)
            throw input_error("line " + std::to_string(lineno) + ": expected " +
                              std::to_string(d.n) + " entries in " + which + " row list, got " +
                              std::to_string(rows.size()));
        std::vector<int> seen(d.n, -1);
        for (int c = 0; c < d.n; ++c) {
            int r = rows[c];
            if (r < 0 || r >= d.n)
                throw input_error("line " + std::to_string(lineno) + ": column " +
                                  std::to_string(c) + ": row " + std::to_string(r) +
                                  " out of range");
            if (seen[r] >= 0)
                throw input_error("line " + std::to_string(lineno) + ": column " +
                                  std::to_string(c) + ": duplicate row " + std::to_string(r));
            seen[r] = c;
        }
        return rows;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error("line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);

        if (key == "n") {
            try {
                d.n = std::stoi(val);
            } catch (...) {
                throw input_error("line " + std::to_string(lineno) + ": bad grid size");
            }
            if (d.n < 1) throw input_error("line " + std::to_string(lineno) + ": grid size must be positive");
            saw_n = true;
        } else if (key == "O") {
            if (!saw_n) throw input_error("line " + std::to_string(lineno) + ": O= before n=");
            d.sigmaO = parse_row(val, "O");
            saw_o = true;
        } else if (key == "X") {
            if (!saw_n) throw input_error("line " + std::to_string(lineno) + ": X= before n=");
            d.sigmaX = parse_row(val, "X");
            saw_x = true;
        } else if (key == "name") {
            d.name = val;
        } else if (key.rfind("meta.", 0) == 0) {
            d.meta[key.substr(5)] = val;
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_n) throw input_error("missing n= line");
    if (!saw_o) throw input_error("missing O= line");
    if (!saw_x) throw input_error("missing X= line");
    for (int c = 0; c < d.n; ++c)
        if (d.sigmaO[c] == d.sigmaX[c])
            throw input_error("column " + std::to_string(c) + ": O and X share cell (" +
                              std::to_string(c) + "," + std::to_string(d.sigmaO[c]) + ")");
    return d;
}

inline std::string serialize_diagram(const Diagram& d) {
    std::ostringstream os;
    os << "n=" << d.n << "\n";
    os << "O=";
    for (int c = 0; c < d.n; ++c) os << (c ? " " : "") << d.sigmaO[c];
    os << "\nX=";
    for (int c = 0; c < d.n; ++c) os << (c ? " " : "") << d.sigmaX[c];
    os << "\n";
    if (!d.name.empty()) os << "name=" << d.name << "\n";
    for (auto& [k, v] : d.meta) os << "meta." << k << "=" << v << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Validation and link tracing
// ---------------------------------------------------------------------------

// sigma is rho-invariant as a cell set iff sigma[n-1-sigma[c]] = n-1-c for all c.
inline int first_asymmetric_column(const Diagram& d, const std::vector<int>& sigma) {
    for (int c = 0; c < d.n; ++c) {
        int cc = d.n - 1 - sigma[c];
        if (sigma[cc] != d.n - 1 - c) return c;
    }
    return -1;
}

inline bool on_fixed_cell(const Diagram& d, int c, int r) { return r == d.n - 1 - c; }

// Trace the link: vertical segment O->X in each column, horizontal X->O in
// each row.  Assumes sigmaO, sigmaX are permutations with no shared cell.
inline LinkTrace trace_link(const Diagram& d) {
    const int n = d.n;
    std::vector<int> rowO(n), rowX(n);  // row -> column of its O / X
    for (int c = 0; c < n; ++c) {
        rowO[d.sigmaO[c]] = c;
        rowX[d.sigmaX[c]] = c;
    }
    LinkTrace t;
    std::vector<char> used(n, 0);  // per starting column's O
    std::vector<std::vector<char>> comp_cells;
    for (int c0 = 0; c0 < n; ++c0) {
        if (used[c0]) continue;
        std::vector<int> comp;
        std::vector<char> cells(n * n, 0);
        int c = c0;
        do {
            used[c] = 1;
            comp.push_back(c * n + d.sigmaO[c]);
            cells[c * n + d.sigmaO[c]] = 1;
            cells[c * n + d.sigmaX[c]] = 1;
            int r = d.sigmaX[c];  // vertical O->X inside column c
            c = rowO[r];          // horizontal X->O inside row r
        } while (c != c0);
        t.components.push_back(comp);
        comp_cells.push_back(std::move(cells));
    }

    // Pair up components under rho.
    int m = (int)t.components.size();
    std::vector<int> mate(m, -1);
    for (int i = 0; i < m; ++i) {
        std::vector<char> refl(n * n, 0);
        for (int idx = 0; idx < n * n; ++idx)
            if (comp_cells[i][idx]) {
                int c = idx / n, r = idx % n;
                refl[(n - 1 - r) * n + (n - 1 - c)] = 1;
            }
        for (int j = 0; j < m; ++j)
            if (refl == comp_cells[j]) {
                mate[i] = j;
                break;
            }
        if (mate[i] < 0) throw input_error("component not matched by the reflection");
    }
    for (int i = 0; i < m; ++i) {
        if (mate[i] == i)
            ++t.l_f;
        else if (mate[i] > i)
            ++t.l_p;
    }

    // Classification.
    int fixedO = 0, fixedX = 0;
    for (int c = 0; c < n; ++c) {
        if (on_fixed_cell(d, c, d.sigmaO[c])) ++fixedO;
        if (on_fixed_cell(d, c, d.sigmaX[c])) ++fixedX;
    }
    bool o_sym = first_asymmetric_column(d, d.sigmaO) < 0;
    bool x_sym = first_asymmetric_column(d, d.sigmaX) < 0;
    bool swapped = true;  // rho(O-set) == X-set
    for (int c = 0; c < n && swapped; ++c) {
        int rc = n - 1 - d.sigmaO[c], rr = n - 1 - c;
        if (d.sigmaX[rc] != rr) swapped = false;
    }

    if (o_sym && x_sym && fixedO == t.l_f && fixedX == t.l_f) {
        // each fixed component must carry exactly one fixed O and one fixed X
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (mate[i] != i) continue;
            int fo = 0, fx = 0;
            for (int idx = 0; idx < n * n; ++idx)
                if (comp_cells[i][idx]) {
                    int c = idx / n, r = idx % n;
                    if (r == n - 1 - c) {
                        if (d.sigmaO[c] == r) ++fo;
                        if (d.sigmaX[c] == r) ++fx;
                    }
                }
            ok = (fo == 1 && fx == 1);
        }
        t.classification = ok ? LinkClass::StronglyInvertible : LinkClass::Mixed;
    } else if (swapped && fixedO == 0 && fixedX == 0) {
        t.classification = LinkClass::DoublyPeriodic;
    } else {
        t.classification = LinkClass::Mixed;
    }
    return t;
}

// Full validity check: permutation property, reflection symmetry, trace.
inline LinkTrace validate(const Diagram& d,
                          std::optional<LinkClass> expect = std::nullopt) {
    const int n = d.n;
    if ((int)d.sigmaO.size() != n || (int)d.sigmaX.size() != n)
        throw input_error("marker lists do not match grid size");
    std::vector<char> seenO(n, 0), seenX(n, 0);
    for (int c = 0; c < n; ++c) {
        if (seenO[d.sigmaO[c]]++) throw input_error("O markers are not a permutation");
        if (seenX[d.sigmaX[c]]++) throw input_error("X markers are not a permutation");
        if (d.sigmaO[c] == d.sigmaX[c])
            throw input_error("column " + std::to_string(c) + ": O and X share a cell");
    }

    bool o_sym = first_asymmetric_column(d, d.sigmaO) < 0;
    bool x_sym = first_asymmetric_column(d, d.sigmaX) < 0;
    bool swapped = true;
    for (int c = 0; c < n && swapped; ++c) {
        int rc = n - 1 - d.sigmaO[c], rr = n - 1 - c;
        if (d.sigmaX[rc] != rr) swapped = false;
    }
    if (!( (o_sym && x_sym) || swapped )) {
        if (!o_sym)
            throw input_error("O markers not R-symmetric at column " +
                              std::to_string(first_asymmetric_column(d, d.sigmaO)));
        throw input_error("X markers not R-symmetric at column " +
                          std::to_string(first_asymmetric_column(d, d.sigmaX)));
    }

    LinkTrace t = trace_link(d);
    if ((int)t.components.size() != t.l_f + 2 * t.l_p)
        throw consistency_error("component count does not match l_f + 2*l_p");
    if (o_sym && x_sym && t.classification != LinkClass::DoublyPeriodic) {
        // strongly invertible discipline: one extra O-pair per W factor
        if ((n - t.l_f - 2 * t.l_p) % 2 != 0)
            throw input_error("even n cannot host l_f=" + std::to_string(t.l_f) +
                              " (n - l_f - 2 l_p must be even)");
        if (t.classification != LinkClass::StronglyInvertible)
            throw input_error(
                "fixed component does not carry exactly one fixed O and one fixed X");
    }
    if (expect && t.classification != *expect)
        throw input_error(std::string("diagram classified as ") + to_string(t.classification) +
                          ", expected " + to_string(*expect));
    return t;
}

// ---------------------------------------------------------------------------
// Symmetry transforms and real grid moves
// ---------------------------------------------------------------------------

// Columns shift by +a and rows by -a (mod n): the translation family
// commuting with the reflection.
inline Diagram cyclic_shift(const Diagram& d, int a) {
    const int n = d.n;
    Diagram r = d;
    for (int c = 0; c < n; ++c) {
        r.sigmaO[mod(c + a, n)] = mod(d.sigmaO[c] - a, n);
        r.sigmaX[mod(c + a, n)] = mod(d.sigmaX[c] - a, n);
    }
    return r;
}

// Marker cell (c,r) -> (r,c); represents (K, a^r).
inline Diagram transpose(const Diagram& d) {
    const int n = d.n;
    Diagram r = d;
    for (int c = 0; c < n; ++c) {
        r.sigmaO[d.sigmaO[c]] = c;
        r.sigmaX[d.sigmaX[c]] = c;
    }
    return r;
}

// Exchange O and X; represents (K, a^{i,r}).
inline Diagram swap_markers(const Diagram& d) {
    Diagram r = d;
    std::swap(r.sigmaO, r.sigmaX);
    return r;
}

namespace detail {

// Row span of column c's markers as a closed interval in the planar cut.
inline void column_interval(const Diagram& d, int c, int& lo, int& hi) {
    lo = std::min(d.sigmaO[c], d.sigmaX[c]);
    hi = std::max(d.sigmaO[c], d.sigmaX[c]);
}

// Classical commutability for adjacent columns in the planar picture:
// the two closed intervals are nested or disjoint (sharing an endpoint row
// counts: that is a switch, which the move set includes).
inline bool spans_commutable(int lo1, int hi1, int lo2, int hi2) {
    if (hi1 <= lo2 || hi2 <= lo1) return true;               // disjoint or touching
    if (lo1 <= lo2 && hi2 <= hi1) return true;               // 2 nested in 1
    if (lo2 <= lo1 && hi1 <= hi2) return true;               // 1 nested in 2
    return false;                                            // interleaved
}

inline bool rows_commutable(const Diagram& d, int r1, int r2) {
    // Intervals of column positions of the markers in rows r1, r2.
    int n = d.n;
    int o1 = -1, x1 = -1, o2 = -1, x2 = -1;
    for (int c = 0; c < n; ++c) {
        if (d.sigmaO[c] == r1) o1 = c;
        if (d.sigmaX[c] == r1) x1 = c;
        if (d.sigmaO[c] == r2) o2 = c;
        if (d.sigmaX[c] == r2) x2 = c;
    }
    return spans_commutable(std::min(o1, x1), std::max(o1, x1), std::min(o2, x2),
                            std::max(o2, x2));
}

}  // namespace detail

// Swap the marker contents of columns c, c+1 and of the mirrored row pair
// (n-2-c, n-1-c), all mod n.  Requires both swaps to be classical
// commutations (nested or disjoint spans; switches included).
inline Diagram real_commutation(const Diagram& d, int c) {
    const int n = d.n;
    if (c < 0 || c > n - 2)
        throw input_error("commutation column out of range (wrap-around pairs: shift first)");
    int c1 = c, c2 = c + 1;
    int r1 = n - 2 - c, r2 = n - 1 - c;

    int lo1, hi1, lo2, hi2;
    detail::column_interval(d, c1, lo1, hi1);
    detail::column_interval(d, c2, lo2, hi2);
    if (!detail::spans_commutable(lo1, hi1, lo2, hi2))
        throw input_error("columns " + std::to_string(c1) + "," + std::to_string(c2) +
                          " not commutable");
    if (!detail::rows_commutable(d, r1, r2))
        throw input_error("mirrored rows " + std::to_string(r1) + "," + std::to_string(r2) +
                          " not commutable");
    // the column swap and its mirrored row swap must act on disjoint markers:
    // a marker inside the 2x2 overlap block would be moved by both
    for (int j : {c1, c2})
        if (d.sigmaO[j] == r1 || d.sigmaO[j] == r2 || d.sigmaX[j] == r1 || d.sigmaX[j] == r2)
            throw input_error("columns " + std::to_string(c1) + "," + std::to_string(c2) +
                              " not commutable (marker in the mirrored overlap)");

    Diagram r = d;
    std::swap(r.sigmaO[c1], r.sigmaO[c2]);
    std::swap(r.sigmaX[c1], r.sigmaX[c2]);
    // swap row contents r1 <-> r2
    for (int j = 0; j < n; ++j) {
        if (r.sigmaO[j] == r1)
            r.sigmaO[j] = r2;
        else if (r.sigmaO[j] == r2)
            r.sigmaO[j] = r1;
        if (r.sigmaX[j] == r1)
            r.sigmaX[j] = r2;
        else if (r.sigmaX[j] == r2)
            r.sigmaX[j] = r1;
    }
    return r;
}

namespace detail {

// Classical X:SW stabilization at the X in column c.  New column c+1 and new
// row r+1 are inserted; the block at the old X becomes
//   NW=(c,r+1): new O,  NE=(c+1,r+1): old X,  SW=(c,r): new X.
// The old O of column c moves to column c+1; the old O of row r stays in row r.
inline Diagram stabilize_x_sw(const Diagram& d, int c) {
    const int n = d.n, r = d.sigmaX[c];
    auto shc = [&](int j) { return j + (j > c ? 1 : 0); };
    auto shr = [&](int j) { return j + (j > r ? 1 : 0); };
    Diagram out;
    out.n = n + 1;
    out.name = d.name;
    out.meta = d.meta;
    out.sigmaO.assign(n + 1, -1);
    out.sigmaX.assign(n + 1, -1);
    for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        out.sigmaO[shc(j)] = shr(d.sigmaO[j]);
        out.sigmaX[shc(j)] = shr(d.sigmaX[j]);
    }
    out.sigmaX[c] = r;                    // new X at SW
    out.sigmaO[c] = r + 1;                // new O at NW
    out.sigmaX[c + 1] = r + 1;            // old X at NE
    out.sigmaO[c + 1] = shr(d.sigmaO[c]); // old column O
    return out;
}

}  // namespace detail

// Paired stabilization: classical X:SW at the chosen off-axis X plus the
// rho-mirrored stabilization at the reflected X.  Conjugating X:SW through
// the reflection yields the same block recipe at the mirror marker (the old
// and new X are indistinguishable), so both steps use one primitive.
// Size n -> n+2.
inline Diagram real_stabilization(const Diagram& d, int c) {
    const int n = d.n, r = d.sigmaX[c];
    if (c < 0 || c >= n) throw input_error("stabilization column out of range");
    if (r == n - 1 - c) throw input_error("stabilization at a marker on the fixed diagonal");

    Diagram step1 = detail::stabilize_x_sw(d, c);
    // locate the mirror X (n-1-r, n-1-c) in the enlarged grid
    int mc = n - 1 - r, mr = n - 1 - c;
    int c2 = mc + (mc > c ? 1 : 0);
    int r2 = mr + (mr > r ? 1 : 0);
    if (step1.sigmaX[c2] != r2) throw consistency_error("mirror X lost during stabilization");
    Diagram out = detail::stabilize_x_sw(step1, c2);
    out.name = d.name;
    out.meta = d.meta;
    return out;
}

}  // namespace rgh
