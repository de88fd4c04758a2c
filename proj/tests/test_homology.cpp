#include <catch2/catch_amalgamated.hpp>

#include "rgh/corpus.hpp"
#include "rgh/invariants.hpp"

using namespace rgh;

namespace {

BigradedDims dims(std::initializer_list<std::tuple<int, int, long long>> items) {
    BigradedDims b;
    for (auto& [m, a2, d] : items) b.add(m, a2, d);
    return b;
}

}  // namespace

TEST_CASE("unknot3 homology, all flavors") {
    Diagram d = corpus_get("unknot3");
    StateTable st = enumerate_states(d, validate(d));

    GradedComplex tilde = build_complex(d, st, Flavor::Tilde);
    REQUIRE(check_d_squared(tilde));
    BigradedDims t = homology_f2(tilde);
    REQUIRE(t == dims({{0, 0, 1}, {-1, -2, 1}}));  // hat(unknot) x W

    BigradedDims hat = divide_w(t, 1);
    REQUIRE(hat == dims({{0, 0, 1}}));

    GradedComplex mt = build_complex(d, st, Flavor::MinusTilde);
    REQUIRE(check_d_squared(mt));
    UModule raw = homology_over_u(mt);
    REQUIRE(raw.towers == std::vector<std::pair<int, int>>{{-1, -2}, {0, 0}});
    REQUIRE(raw.torsion.empty());
    UModule minus = divide_w(raw, 1);
    REQUIRE(minus.towers == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(hat_from_minus(minus) == hat);
}

TEST_CASE("trefoil5 homology matches the published values") {
    Diagram d = corpus_get("trefoil5");
    StateTable st = enumerate_states(d, validate(d));
    GradedComplex tilde = build_complex(d, st, Flavor::Tilde);
    REQUIRE(check_d_squared(tilde));
    BigradedDims t = homology_f2(tilde);
    REQUIRE(t.total() == 12);  // hat dim 3 x 2^2

    BigradedDims hat = divide_w(t, 2);
    REQUIRE(hat == dims({{0, -1, 1}, {0, 0, 1}, {1, 1, 1}}));

    GradedComplex mt = build_complex(d, st, Flavor::MinusTilde);
    REQUIRE(check_d_squared(mt));
    UModule minus = divide_w(homology_over_u(mt), 2);
    REQUIRE(minus.towers == std::vector<std::pair<int, int>>{{1, 1}});
    REQUIRE(minus.torsion.size() == 1);
    REQUIRE(minus.torsion.begin()->first == std::make_tuple(0, 0, 1));
    REQUIRE(minus.torsion.begin()->second == 1);
    REQUIRE(hat_from_minus(minus) == hat);
}

TEST_CASE("fig8 homology matches the published values") {
    Results r = compute_all(corpus_get("fig8"));
    REQUIRE(r.hat == dims({{-1, -1, 1}, {0, 0, 1}, {0, 1, 1}}));
    REQUIRE(r.minus.towers == std::vector<std::pair<int, int>>{{-1, -1}});
    REQUIRE(r.minus.torsion.size() == 1);
    REQUIRE(r.minus.torsion.begin()->first == std::make_tuple(0, 1, 1));
    REQUIRE(hat_from_minus(r.minus) == r.hat);
}

TEST_CASE("a deliberately corrupted complex fails d^2") {
    Diagram d = corpus_get("trefoil5");
    StateTable st = enumerate_states(d, validate(d));
    GradedComplex cx = build_complex(d, st, Flavor::MinusTilde);
    // delete one term
    for (auto& col : cx.cols)
        if (!col.empty()) {
            col.pop_back();
            break;
        }
    REQUIRE_FALSE(check_d_squared(cx));
}

TEST_CASE("divide_w identity and failure modes") {
    BigradedDims x = dims({{0, 0, 1}, {3, 2, 5}});
    REQUIRE(divide_w(x, 0) == x);
    // non-divisible input is a loud error
    REQUIRE_THROWS_AS(divide_w(dims({{0, 0, 1}}), 1), consistency_error);
    REQUIRE_THROWS_AS(divide_w(dims({{0, 0, 1}, {-1, -2, 2}}), 1), consistency_error);
    // exact division
    BigradedDims prod = dims({{0, 0, 1}, {-1, -2, 2}, {-2, -4, 1}});
    REQUIRE(divide_w(prod, 2) == dims({{0, 0, 1}}));
}

TEST_CASE("hat_from_minus shift rule on the published 6_1 module") {
    UModule m;
    m.towers = {{-1, -1}};
    m.add_torsion(0, 1, 1);
    m.add_torsion(0, 1, 2);
    BigradedDims hat = hat_from_minus(m);
    REQUIRE(hat == dims({{-1, -1, 2}, {0, 0, 1}, {0, 1, 2}}));
    REQUIRE(hat.total() == 5);  // odd
}

TEST_CASE("tilde dimension = hat dimension x 2^k across the small corpus") {
    for (const char* name : {"unknot3", "trefoil5", "fig8", "5_2", "8_19"}) {
        Results r = compute_all(corpus_get(name));
        long long expect = r.hat.total();
        for (int i = 0; i < r.k; ++i) expect *= 2;
        REQUIRE(r.tilde.total() == expect);
    }
}

TEST_CASE("homology is deterministic across repeated runs") {
    Results a = compute_all(corpus_get("fig8"));
    Results b = compute_all(corpus_get("fig8"));
    REQUIRE(a.hat == b.hat);
    REQUIRE(a.minus == b.minus);
    REQUIRE(a.tilde == b.tilde);
}

TEST_CASE("real stabilization adds one W factor and preserves hat") {
    Diagram d = corpus_get("trefoil5");
    Results base = compute_all(d);
    int off = -1;
    for (int c = 0; c < d.n; ++c)
        if (d.sigmaX[c] != d.n - 1 - c) off = c;
    Diagram s = real_stabilization(d, off);
    REQUIRE(s.n == d.n + 2);
    Results stab = compute_all(s, SizeLimits{}, false);
    // one extra O-pair: k grows by one, tilde doubles, hat is bit-identical
    REQUIRE(stab.k == base.k + 1);
    REQUIRE(stab.tilde.total() == 2 * base.tilde.total());
    REQUIRE(stab.hat == base.hat);
}
