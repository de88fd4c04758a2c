#include <catch2/catch_amalgamated.hpp>

#include "rgh/corpus.hpp"
#include "rgh/diagram.hpp"

using namespace rgh;

TEST_CASE("parse the size-3 unknot") {
    Diagram d = parse_diagram("n=3\nO=0 1 2\nX=2 0 1\n");
    REQUIRE(d.n == 3);
    REQUIRE(d.sigmaO == std::vector<int>{0, 1, 2});
    REQUIRE(d.sigmaX == std::vector<int>{2, 0, 1});
    LinkTrace t = validate(d);
    REQUIRE(t.components.size() == 1);
    REQUIRE(t.l_f == 1);
    REQUIRE(t.l_p == 0);
    REQUIRE(t.classification == LinkClass::StronglyInvertible);
}

TEST_CASE("parse accepts comments, names and meta") {
    Diagram d = parse_diagram("# comment\nn=3\nname=u\nmeta.knot=unknot\nO=0 1 2\n\nX=2 0 1\n");
    REQUIRE(d.name == "u");
    REQUIRE(d.meta.at("knot") == "unknot");
}

TEST_CASE("serialize round-trips") {
    Diagram d = corpus_get("trefoil5");
    Diagram e = parse_diagram(serialize_diagram(d));
    REQUIRE(d == e);
    REQUIRE(e.name == d.name);
}

TEST_CASE("parse errors name the offending line") {
    REQUIRE_THROWS_WITH(parse_diagram("n=3\nO=0 0 2\nX=2 1 0\n"),
                        Catch::Matchers::ContainsSubstring("duplicate row 0"));
    REQUIRE_THROWS_AS(parse_diagram("n=3\nO=0 1 2\nX=0 1 2\n"), input_error);  // collision
    REQUIRE_THROWS_AS(parse_diagram("n=3\nO=0 1\nX=2 0 1\n"), input_error);
    REQUIRE_THROWS_AS(parse_diagram("O=0 1 2\nX=2 0 1\n"), input_error);  // missing n
    REQUIRE_THROWS_AS(parse_diagram("n=3\nO=0 1 3\nX=2 0 1\n"), input_error);  // out of range
}

TEST_CASE("even grid with a fixed component is rejected") {
    Diagram d = parse_diagram("n=2\nO=0 1\nX=1 0\n");  // parses fine
    REQUIRE_THROWS_WITH(validate(d), Catch::Matchers::ContainsSubstring("even n"));
}

TEST_CASE("asymmetric markers are reported with a column") {
    // size 5, O not rho-invariant
    Diagram d;
    d.n = 5;
    d.sigmaO = {1, 0, 2, 3, 4};
    d.sigmaX = {3, 4, 0, 1, 2};
    REQUIRE_THROWS_WITH(validate(d), Catch::Matchers::ContainsSubstring("not R-symmetric"));
}

TEST_CASE("doubly periodic classification") {
    // X set = rho(O set), no fixed markers: a periodic two-component link
    Diagram d;
    d.n = 4;
    d.sigmaO = {1, 3, 0, 2};
    d.sigmaX = {2, 0, 3, 1};
    LinkTrace t = validate(d);
    REQUIRE(t.classification == LinkClass::DoublyPeriodic);
    REQUIRE(t.l_f == 0);
    REQUIRE(t.l_p == 1);
}

TEST_CASE("cyclic shift is a valid move with period n") {
    Diagram d = corpus_get("trefoil5");
    REQUIRE(cyclic_shift(d, 0) == d);
    REQUIRE(cyclic_shift(d, d.n) == d);
    Diagram s = cyclic_shift(d, 2);
    validate(s);
    REQUIRE(cyclic_shift(s, d.n - 2) == d);
}

TEST_CASE("transpose and swap_markers are involutions preserving validity") {
    for (const char* name : {"unknot3", "trefoil5", "fig8", "8_19"}) {
        Diagram d = corpus_get(name);
        Diagram t = transpose(d);
        validate(t);
        REQUIRE(transpose(t) == d);
        Diagram s = swap_markers(d);
        validate(s);
        REQUIRE(swap_markers(s) == d);
        validate(cyclic_shift(d, 1));
    }
}

TEST_CASE("commutation: inverse pair and interleaving rejection") {
    // stabilized diagrams always carry nested column pairs
    Diagram d = real_stabilization(corpus_get("trefoil5"), 0);
    int legal = -1;
    for (int c = 0; c + 1 < d.n; ++c) {
        try {
            Diagram e = real_commutation(d, c);
            validate(e);
            REQUIRE(real_commutation(e, c) == d);
            legal = c;
        } catch (const input_error&) {
            // interleaved: expected for some columns
        }
    }
    REQUIRE(legal >= 0);
    // trefoil5 has interleaved adjacent columns: commuting them must fail
    Diagram tr = corpus_get("trefoil5");
    bool saw_reject = false;
    for (int c = 0; c + 1 < tr.n; ++c) {
        try {
            real_commutation(tr, c);
        } catch (const input_error&) {
            saw_reject = true;
        }
    }
    REQUIRE(saw_reject);
}

TEST_CASE("stabilization: off-axis only, grows by two, stays valid") {
    Diagram d = corpus_get("trefoil5");
    int axis_col = -1, off_col = -1;
    for (int c = 0; c < d.n; ++c) {
        if (d.sigmaX[c] == d.n - 1 - c)
            axis_col = c;
        else
            off_col = c;
    }
    REQUIRE(axis_col >= 0);
    REQUIRE_THROWS_AS(real_stabilization(d, axis_col), input_error);
    Diagram s = real_stabilization(d, off_col);
    REQUIRE(s.n == d.n + 2);
    LinkTrace t = validate(s);
    REQUIRE(t.classification == LinkClass::StronglyInvertible);
    REQUIRE(t.components.size() == 1);
}

TEST_CASE("corpus entries validate; unknown name errors") {
    for (auto& name : corpus_names()) {
        Diagram d = corpus_get(name);
        REQUIRE(d.name == name);
    }
    REQUIRE_THROWS_AS(corpus_get("nosuch"), input_error);
}
