#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rgh/corpus.hpp"
#include "rgh/domains.hpp"

using namespace rgh;

namespace {

std::set<oracle::OracleDomain> production_domains(const Diagram& d, const StateTable& st) {
    std::set<oracle::OracleDomain> out;
    for (std::size_t i = 0; i < st.size(); ++i)
        for (auto& dom : successors(d, st, i))
            out.insert(oracle::OracleDomain{i, dom.to, dom.mult});
    return out;
}

}  // namespace

TEST_CASE("unknot3 domain set matches the hand computation") {
    Diagram d = corpus_get("unknot3");
    StateTable st = enumerate_states(d, validate(d));
    std::map<std::string, int> kinds;
    std::size_t total = 0;
    for (std::size_t i = 0; i < st.size(); ++i) {
        for (auto& dom : successors(d, st, i)) {
            ++kinds[to_string(dom.kind)];
            ++total;
            // grading-drop identity, both letters
            REQUIRE(st.m[dom.from] - st.m[dom.to] == 1 - dom.nO);
            REQUIRE(st.mX[dom.from] - st.mX[dom.to] == 1 - dom.nX);
            REQUIRE(st.a2[dom.from] - st.a2[dom.to] == dom.nX - dom.nO);
        }
    }
    REQUIRE(total == 12);
    REQUIRE(kinds["square"] == 3);
    REQUIRE(kinds["hexagon"] == 6);
    REQUIRE(kinds["octagon"] == 3);
    REQUIRE(kinds["pair"] == 0);
}

TEST_CASE("size-1 grid has no domains") {
    Diagram d;
    d.n = 1;
    d.sigmaO = {0};
    d.sigmaX = {0};  // degenerate; skip validate, only enumeration
    StateTable st;
    st.n = 1;
    st.keys = {0};
    st.m = {0};
    st.mX = {0};
    st.a2 = {0};
    st.onC = {1};
    REQUIRE(successors(d, st, 0).empty());
}

TEST_CASE("interior emptiness rule") {
    // a 2x2 square block on the 5-torus: the center point is interior exactly
    // when all four incident cells are covered
    int n = 5;
    std::vector<std::uint8_t> mult(n * n, 0);
    mult[1 * n + 1] = mult[1 * n + 2] = mult[2 * n + 1] = mult[2 * n + 2] = 1;
    REQUIRE(point_interior(mult.data(), n, 2, 2));
    REQUIRE_FALSE(point_interior(mult.data(), n, 1, 1));   // corner
    REQUIRE_FALSE(point_interior(mult.data(), n, 2, 1));   // edge
    REQUIRE_FALSE(point_interior(mult.data(), n, 0, 0));
    // multiplicity-2 cells count like covered cells
    mult[1 * n + 1] = 2;
    REQUIRE(point_interior(mult.data(), n, 2, 2));
}

TEST_CASE("trefoil5 calibration: 26 generators, 61 domains") {
    Diagram d = corpus_get("trefoil5");
    StateTable st = enumerate_states(d, validate(d));
    REQUIRE(st.size() == 26);
    DomainStats s = domain_stats(d, st);
    REQUIRE(s.x_free == 61);       // the published domain count
    REQUIRE(s.total == 160);       // all empty real rectangles
    REQUIRE(s.marker_free == 20);  // tilde differential terms
}

TEST_CASE("grading-drop identity across the small corpus") {
    for (const char* name : {"trefoil5", "fig8", "5_2", "8_19"}) {
        Diagram d = corpus_get(name);
        StateTable st = enumerate_states(d, validate(d));
        for (std::size_t i = 0; i < st.size(); ++i)
            for (auto& dom : successors(d, st, i)) {
                REQUIRE(st.m[dom.from] - st.m[dom.to] == 1 - dom.nO);
                REQUIRE(st.mX[dom.from] - st.mX[dom.to] == 1 - dom.nX);
            }
    }
}

TEST_CASE("domain counts are invariant under cyclic shifts") {
    Diagram d = corpus_get("trefoil5");
    StateTable st = enumerate_states(d, validate(d));
    DomainStats base = domain_stats(d, st);
    for (int a = 1; a < d.n; ++a) {
        Diagram s = cyclic_shift(d, a);
        StateTable st2 = enumerate_states(s, validate(s));
        DomainStats moved = domain_stats(s, st2);
        REQUIRE(moved.total == base.total);
        REQUIRE(moved.x_free == base.x_free);
        REQUIRE(moved.marker_free == base.marker_free);
        for (int k = 0; k < 4; ++k) REQUIRE(moved.by_kind[k] == base.by_kind[k]);
    }
}

TEST_CASE("pair domains with off-axis markers have even marker counts") {
    for (const char* name : {"trefoil5", "fig8"}) {
        Diagram d = corpus_get(name);
        StateTable st = enumerate_states(d, validate(d));
        int axis_O = -1, axis_X = -1;
        for (int c = 0; c < d.n; ++c) {
            if (d.sigmaO[c] == d.n - 1 - c) axis_O = c;
            if (d.sigmaX[c] == d.n - 1 - c) axis_X = c;
        }
        for (std::size_t i = 0; i < st.size(); ++i)
            for (auto& dom : successors(d, st, i)) {
                if (dom.kind != DomainKind::Pair) continue;
                int o_axis = dom.mult[axis_O * d.n + d.sigmaO[axis_O]];
                int x_axis = dom.mult[axis_X * d.n + d.sigmaX[axis_X]];
                REQUIRE((dom.nO - o_axis) % 2 == 0);
                REQUIRE((dom.nX - x_axis) % 2 == 0);
            }
    }
}

TEST_CASE("successors are deduplicated and deterministic") {
    Diagram d = corpus_get("fig8");
    StateTable st = enumerate_states(d, validate(d));
    for (std::size_t i = 0; i < st.size(); ++i) {
        auto a = successors(d, st, i);
        auto b = successors(d, st, i);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            REQUIRE(a[k].to == b[k].to);
            REQUIRE(a[k].mult == b[k].mult);
        }
        std::set<std::pair<std::size_t, std::vector<std::uint8_t>>> uniq;
        for (auto& dom : a) REQUIRE(uniq.insert({dom.to, dom.mult}).second);
    }
}

TEST_CASE("brute-force oracle agrees with the constructive enumerator (n=3)") {
    Diagram d = corpus_get("unknot3");
    StateTable st = enumerate_states(d, validate(d));
    auto brute = oracle::enumerate_domains_bruteforce(d, st);
    auto prod = production_domains(d, st);
    REQUIRE(brute == prod);
}

TEST_CASE("brute-force oracle agrees with the constructive enumerator (n=5)") {
    Diagram d = corpus_get("trefoil5");
    StateTable st = enumerate_states(d, validate(d));
    auto brute = oracle::enumerate_domains_bruteforce(d, st);
    auto prod = production_domains(d, st);
    // set difference diagnostics on failure
    if (brute != prod) {
        for (auto& dom : brute)
            if (!prod.count(dom)) WARN("missing from production: " << dom.from << "->" << dom.to);
        for (auto& dom : prod)
            if (!brute.count(dom)) WARN("extra in production: " << dom.from << "->" << dom.to);
    }
    REQUIRE(brute == prod);
}
