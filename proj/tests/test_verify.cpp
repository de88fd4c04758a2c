#include <catch2/catch_amalgamated.hpp>

#include "rgh/corpus.hpp"
#include "rgh/render.hpp"
#include "rgh/verify.hpp"

using namespace rgh;

TEST_CASE("verification suite passes on small corpus entries") {
    VerifyOptions opt;
    opt.moves = 6;
    opt.seed = 7;
    for (const char* name : {"unknot3", "trefoil5", "fig8"}) {
        Report rep = verify_diagram_suite(corpus_get(name), opt);
        INFO(report_text(rep));
        REQUIRE(rep.all_pass());
    }
}

TEST_CASE("trefoil verification reports the calibration counts") {
    VerifyOptions opt;
    opt.moves = 2;
    Report rep = verify_diagram_suite(corpus_get("trefoil5"), opt);
    bool found = false;
    for (auto& c : rep.checks)
        if (c.actual.find("generators=26 domains=61") != std::string::npos) found = true;
    REQUIRE(found);
}

TEST_CASE("a marker moved off-symmetry fails validation") {
    Diagram d = corpus_get("trefoil5");
    std::swap(d.sigmaO[0], d.sigmaO[1]);
    REQUIRE_THROWS_AS(validate(d), input_error);
}

TEST_CASE("skein triple verifies; degenerate and shuffled triples are rejected") {
    Diagram p = corpus_get("skein_plus");
    Diagram m = corpus_get("skein_minus");
    Diagram z = corpus_get("skein_zero");
    int window = std::stoi(p.meta.at("skein_window"));

    Report rep = verify_skein(p, m, z, window);
    INFO(report_text(rep));
    REQUIRE(rep.all_pass());

    REQUIRE_THROWS_AS(verify_skein(p, p, z, window), input_error);

    // a wrong zero-diagram leaves an identity residual
    Report bad = verify_skein(p, m, corpus_get("5_2"), window);
    REQUIRE_FALSE(bad.all_pass());
    bool saw_residual = false;
    for (auto& c : bad.checks)
        if (!c.pass && c.actual.find("residual") != std::string::npos) saw_residual = true;
    REQUIRE(saw_residual);
}

TEST_CASE("swap regrading helper") {
    BigradedDims in;
    in.add(0, -1, 1);
    in.add(1, 1, 2);
    BigradedDims out = swap_regrade(in);
    BigradedDims want;
    want.add(1, 1, 1);
    want.add(0, -1, 2);
    REQUIRE(out == want);
}

TEST_CASE("report rendering marks failures") {
    Report rep;
    rep.diagram = "demo";
    rep.checks.push_back({"ok-check", true, "", "fine"});
    rep.checks.push_back({"bad-check", false, "0", "1"});
    std::string text = report_text(rep);
    REQUIRE(text.find("[pass] ok-check") != std::string::npos);
    REQUIRE(text.find("[FAIL] bad-check") != std::string::npos);
    auto js = report_json(rep);
    REQUIRE(js["pass"] == false);
    REQUIRE(js["checks"].size() == 2);
}
