#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "rgh/util.hpp"

namespace rgh {

// Laurent polynomial in t with integer coefficients.  Exponents are the
// doubled Alexander grading (t^{2s} with s in (1/2)Z), so they stay integral.
class LaurentPoly {
  public:
    std::map<int, long long> coeff;  // exponent -> coefficient, zeros erased

    LaurentPoly() = default;
    static LaurentPoly one() {
        LaurentPoly p;
        p.coeff[0] = 1;
        return p;
    }

    bool is_zero() const { return coeff.empty(); }

    void add(int exp, long long c) {
        if (c == 0) return;
        auto it = coeff.find(exp);
        if (it == coeff.end()) {
            coeff[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeff.erase(it);
        }
    }

    long long at(int exp) const {
        auto it = coeff.find(exp);
        return it == coeff.end() ? 0 : it->second;
    }

    bool operator==(const LaurentPoly& o) const { return coeff == o.coeff; }
    bool operator!=(const LaurentPoly& o) const { return coeff != o.coeff; }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : o.coeff) r.add(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : o.coeff) r.add(e, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, c1] : coeff)
            for (auto& [e2, c2] : o.coeff) r.add(e1 + e2, c1 * c2);
        return r;
    }

    // t -> t^{-1}
    LaurentPoly inverted() const {
        LaurentPoly r;
        for (auto& [e, c] : coeff) r.coeff[-e] = c;
        return r;
    }

    // t -> -t (exponent parity decides the sign flip)
    LaurentPoly negated_variable() const {
        LaurentPoly r;
        for (auto& [e, c] : coeff) r.coeff[e] = (e & 1) ? -c : c;
        return r;
    }

    // Exact division by (1 - t^{-2}).  Throws consistency_error when inexact.
    LaurentPoly divide_one_minus_tinv2(const char* what) const {
        if (is_zero()) return {};
        // f = g * (1 - t^{-2})  =>  f(e) = g(e) - g(e+2); solve descending.
        LaurentPoly g;
        int top = coeff.rbegin()->first, bot = coeff.begin()->first;
        for (int e = top; e >= bot; --e) {
            long long v = at(e) + g.at(e + 2);
            if (v) g.coeff[e] = v;
        }
        // remainder: anything forced below bot
        for (int e = bot - 1; e >= bot - 2; --e) {
            if (g.at(e + 2) != 0)
                throw consistency_error(std::string(what) + ": division by (1-t^-2) is not exact");
        }
        return g;
    }

    // Exact division by (t - t^{-1}).
    LaurentPoly divide_t_minus_tinv(const char* what) const {
        if (is_zero()) return {};
        // f = g*(t - t^{-1})  =>  f(e) = g(e-1) - g(e+1)  =>  g(e-1) = f(e) + g(e+1).
        LaurentPoly g;
        int top = coeff.rbegin()->first, bot = coeff.begin()->first;
        for (int e = top; e >= bot; --e) {
            long long v = at(e) + g.at(e + 1);
            if (v) g.coeff[e - 1] = v;
        }
        if (g.at(bot) != 0 || g.at(bot - 1) != 0)
            throw consistency_error(std::string(what) + ": division by (t-t^-1) is not exact");
        // g was built so that f - g*(t-t^-1) telescopes to zero; double-check.
        LaurentPoly tminus;
        tminus.coeff[1] = 1;
        tminus.coeff[-1] = -1;
        if (g * tminus != *this)
            throw consistency_error(std::string(what) + ": division by (t-t^-1) is not exact");
        return g;
    }

    // "-t^-2 + 3 - t^2" style rendering, ascending exponents.
    std::string str() const {
        if (coeff.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : coeff) {
            long long a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (e == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }
};

}  // namespace rgh
