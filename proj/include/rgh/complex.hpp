#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "rgh/domains.hpp"

namespace rgh {

enum class Flavor { Tilde, MinusTilde };

inline const char* to_string(Flavor f) {
    return f == Flavor::Tilde ? "tilde" : "minus-tilde";
}

// Differential entry: target generator plus a u-exponent (0 in tilde flavor).
struct Entry {
    std::uint32_t to;
    std::uint8_t e;
    bool operator<(const Entry& o) const { return to != o.to ? to < o.to : e < o.e; }
    bool operator==(const Entry& o) const { return to == o.to && e == o.e; }
};

struct GradedComplex {
    Flavor flavor = Flavor::Tilde;
    int n = 0, l_f = 0, l_p = 0;
    bool relative = false;
    std::vector<std::int16_t> m, a2;       // per generator
    std::vector<std::vector<Entry>> cols;  // mod-2 differential, one list per source

    std::size_t size() const { return m.size(); }
};

// Assemble the complex: tilde counts domains with nO = nX = 0, minus-tilde
// counts domains with nX = 0 weighted by u^{nO}.  Parallel domains with the
// same (target, exponent) cancel mod 2.  Homogeneity of every surviving entry
// is asserted.
inline GradedComplex build_complex(const Diagram& d, const StateTable& st, Flavor flavor) {
    GradedComplex cx;
    cx.flavor = flavor;
    cx.n = d.n;
    cx.l_f = st.l_f;
    cx.l_p = st.l_p;
    cx.relative = st.relative;
    cx.m.assign(st.m.begin(), st.m.end());
    cx.a2.assign(st.a2.begin(), st.a2.end());
    cx.cols.resize(st.size());

    parallel_for(st.size(), [&](std::size_t i) {
        std::vector<Entry> acc;
        for_each_real_rectangle(
            d, st, i,
            [&](std::size_t to, DomainKind, int nO, int nX, const std::uint8_t*) {
                if (nX != 0) return;
                if (flavor == Flavor::Tilde && nO != 0) return;
                std::uint8_t e = flavor == Flavor::Tilde ? 0 : static_cast<std::uint8_t>(nO);
                acc.push_back(Entry{static_cast<std::uint32_t>(to), e});
            });
        std::sort(acc.begin(), acc.end());
        std::vector<Entry> out;
        for (std::size_t k = 0; k < acc.size();) {
            std::size_t j = k;
            while (j < acc.size() && acc[j] == acc[k]) ++j;
            if ((j - k) % 2) out.push_back(acc[k]);
            k = j;
        }
        for (const Entry& en : out) {
            if (cx.m[i] - cx.m[en.to] != 1 - int(en.e) || cx.a2[i] - cx.a2[en.to] != -int(en.e))
                throw consistency_error("differential entry is not bigrading-homogeneous");
        }
        cx.cols[i] = std::move(out);
    });
    return cx;
}

// d^2 = 0 over F2 (tilde) or F2[u] (minus-tilde): compose and check parity.
inline bool check_d_squared(const GradedComplex& cx) {
    bool ok = true;
    std::mutex mu;
    parallel_for(cx.size(), [&](std::size_t i) {
        if (!ok) return;
        std::vector<std::pair<std::uint32_t, int>> acc;  // (target, total exponent)
        for (const Entry& e1 : cx.cols[i])
            for (const Entry& e2 : cx.cols[e1.to])
                acc.emplace_back(e2.to, int(e1.e) + int(e2.e));
        std::sort(acc.begin(), acc.end());
        for (std::size_t k = 0; k < acc.size();) {
            std::size_t j = k;
            while (j < acc.size() && acc[j] == acc[k]) ++j;
            if ((j - k) % 2) {
                std::lock_guard<std::mutex> g(mu);
                ok = false;
                return;
            }
            k = j;
        }
    });
    return ok;
}

// JSON dump of generators and entries for external verification tools.
inline std::string dump_complex_json(const GradedComplex& cx, const StateTable& st) {
    std::ostringstream os;
    os << "{\"flavor\":\"" << to_string(cx.flavor) << "\",\"n\":" << cx.n;
    if (cx.relative) os << ",\"relative\":true";
    os << ",\"generators\":[";
    for (std::size_t i = 0; i < cx.size(); ++i) {
        Perm s = st.sigma_of(i);
        os << (i ? "," : "") << "{\"sigma\":[";
        for (int k = 0; k < cx.n; ++k) os << (k ? "," : "") << s[k];
        os << "],\"m\":" << cx.m[i] << ",\"a2\":" << cx.a2[i] << "}";
    }
    os << "],\"entries\":[";
    bool first = true;
    for (std::size_t i = 0; i < cx.size(); ++i)
        for (const Entry& e : cx.cols[i]) {
            os << (first ? "" : ",") << "[" << i << "," << e.to << "," << int(e.e) << "]";
            first = false;
        }
    os << "]}";
    return os.str();
}

}  // namespace rgh
