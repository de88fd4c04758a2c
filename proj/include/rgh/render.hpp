#pragma once

#include <sstream>
#include <string>

#include "rgh/homology.hpp"
#include "rgh/verify.hpp"

#include "json.hpp"

namespace rgh {

// Table notation: hat summands print as (2a,m)^d with a the real Alexander
// grading (stored doubled) and m the real Maslov grading; minus summands as
// U^o_(2a,m) with the infinite tower first.

inline std::string hat_text(const BigradedDims& b) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : b.dims) {
        os << (first ? "" : " + ") << "(" << k.second << "," << k.first << ")";
        if (v != 1) os << "^" << v;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline std::string minus_text(const UModule& u) {
    std::ostringstream os;
    bool first = true;
    for (auto& [m, a2] : u.towers) {
        os << (first ? "" : " + ") << "U^inf_(" << a2 << "," << m << ")";
        first = false;
    }
    for (auto& [k, v] : u.torsion) {
        os << (first ? "" : " + ") << "U^" << std::get<2>(k) << "_(" << std::get<1>(k) << ","
           << std::get<0>(k) << ")";
        if (v != 1) os << "^" << v;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline std::string hat_latex(const BigradedDims& b) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : b.dims) {
        os << (first ? "" : "\\oplus ") << "(" << k.second << "," << k.first << ")";
        if (v != 1) os << "^{" << v << "}";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline std::string minus_latex(const UModule& u) {
    std::ostringstream os;
    bool first = true;
    for (auto& [m, a2] : u.towers) {
        os << (first ? "" : "\\oplus ") << "U^{\\infty}_{(" << a2 << "," << m << ")}";
        first = false;
    }
    for (auto& [k, v] : u.torsion) {
        os << (first ? "" : "\\oplus ") << "\\bigg(U^{" << std::get<2>(k) << "}_{("
           << std::get<1>(k) << "," << std::get<0>(k) << ")}\\bigg)";
        if (v != 1) os << "^{" << v << "}";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline nlohmann::json dims_json(const BigradedDims& b) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, v] : b.dims)
        arr.push_back({{"m", k.first}, {"a2", k.second}, {"dim", v}});
    return arr;
}

inline nlohmann::json module_json(const UModule& u) {
    nlohmann::json towers = nlohmann::json::array(), torsion = nlohmann::json::array();
    for (auto& [m, a2] : u.towers) towers.push_back({{"m", m}, {"a2", a2}});
    for (auto& [k, v] : u.torsion)
        torsion.push_back({{"m", std::get<0>(k)},
                           {"a2", std::get<1>(k)},
                           {"order", std::get<2>(k)},
                           {"mult", v}});
    return {{"towers", towers}, {"torsion", torsion}};
}

inline nlohmann::json poly_json(const LaurentPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [e, c] : p.coeff) arr.push_back({{"exp", e}, {"coeff", c}});
    return arr;
}

inline nlohmann::json report_json(const Report& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (auto& c : rep.checks)
        checks.push_back({{"check", c.name},
                          {"status", c.pass ? "pass" : "fail"},
                          {"expected", c.expected},
                          {"actual", c.actual}});
    return {{"diagram", rep.diagram}, {"pass", rep.all_pass()}, {"checks", checks}};
}

inline std::string report_text(const Report& rep) {
    std::ostringstream os;
    os << "verification: " << rep.diagram << "\n";
    for (auto& c : rep.checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.actual.empty()) {
            os << ": " << c.actual;
            if (!c.pass && !c.expected.empty()) os << " (expected " << c.expected << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace rgh
