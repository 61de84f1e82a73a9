#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pmseq/generate.hpp"
#include "pmseq/json_io.hpp"
#include "pmseq/pmspace.hpp"

using namespace pmseq;

namespace {

StepDistFn step(const Rat& q) { return StepDistFn::unit_step(ExtReal(q)); }

// Two-level profile with separation 0.2 at scale 1 and 0.4 at scale 2 (the
// value bound 1 - 0.9 = 0.1 is below both first jump locations).
StepDistFn profile() {
    return StepDistFn::from_jumps(
        {Jump{ExtReal(Rat(1, 5)), Rat(9, 10)}, Jump{ExtReal(Rat(3)), Rat(1)}}, true);
}

PMSpace line_space() {
    std::vector<std::vector<Rat>> rho{{Rat(0), Rat(1), Rat(2)},
                                      {Rat(1), Rat(0), Rat(1)},
                                      {Rat(2), Rat(1), Rat(0)}};
    return build_simple({"a", "b", "c"}, rho, profile(), TriangleFn(TNorm::Min));
}

}  // namespace

TEST_CASE("equilateral construction") {
    PMSpace sp = build_equilateral({"a", "b", "c"}, step(Rat(1)), TriangleFn(TNorm::Min));
    CHECK(verify_axioms(sp).pass);
    CHECK(sp.dist("a", "b") == step(Rat(1)));
    CHECK(sp.dist("a", "a") == step(Rat(0)));
    CHECK(sp.min_separation() == 1);

    CHECK_NOTHROW(build_equilateral({"a"}, profile(), TriangleFn(TNorm::Min)));
    CHECK_THROWS_AS(build_equilateral({"a", "b"}, step(Rat(0)), TriangleFn(TNorm::Min)),
                    std::invalid_argument);
}

TEST_CASE("simple construction from an ordinary metric") {
    std::vector<std::vector<Rat>> rho{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    PMSpace two = build_simple({"p", "q"}, rho, step(Rat(1)), TriangleFn(TNorm::Min));
    CHECK(two.dist("p", "q") == step(Rat(1)));

    PMSpace sp = line_space();
    CHECK(verify_axioms(sp).pass);
    // Scaled profile: jump locations multiply by the metric distance.
    CHECK(sp.dist("a", "c").jumps()[0].loc.value() == Rat(2, 5));
    CHECK(sp.separation(0, 1) == Rat(1, 5));
    CHECK(sp.separation(0, 2) == Rat(2, 5));
    CHECK(sp.min_separation() == Rat(1, 5));

    std::vector<std::vector<Rat>> bad{{Rat(0), Rat(1), Rat(5)},
                                      {Rat(1), Rat(0), Rat(1)},
                                      {Rat(5), Rat(1), Rat(0)}};
    CHECK_THROWS_WITH_AS(
        build_simple({"a", "b", "c"}, bad, step(Rat(1)), TriangleFn(TNorm::Min)),
        doctest::Contains("triangle inequality"), std::invalid_argument);
}

TEST_CASE("unit-step metrics satisfy the composition axiom") {
    // With unit-step profiles the composition of steps at 1 lands at 2, so a
    // three-point line with distances 1,1,2 is tight.
    std::vector<std::vector<Rat>> rho{{Rat(0), Rat(1), Rat(2)},
                                      {Rat(1), Rat(0), Rat(1)},
                                      {Rat(2), Rat(1), Rat(0)}};
    PMSpace sp = build_simple({"a", "b", "c"}, rho, step(Rat(1)), TriangleFn(TNorm::Min));
    CHECK(verify_axioms(sp).pass);
}

TEST_CASE("axiom verification reports violations with witnesses") {
    const std::vector<std::string> pts{"a", "b"};

    PMSpace::DistTable diag_bad;
    diag_bad.emplace(std::make_pair("a", "a"), step(Rat(1)));
    diag_bad.emplace(std::make_pair("a", "b"), step(Rat(1)));
    AxiomReport r1 = verify_axioms(PMSpace(pts, diag_bad, TriangleFn(TNorm::Min)));
    CHECK(!r1.pass);
    CHECK(r1.failed_axiom == 1);

    PMSpace::DistTable zero_off;
    zero_off.emplace(std::make_pair("a", "b"), step(Rat(0)));
    AxiomReport r2 = verify_axioms(PMSpace(pts, zero_off, TriangleFn(TNorm::Min)));
    CHECK(!r2.pass);
    CHECK(r2.failed_axiom == 2);
    CHECK(r2.witness == std::vector<std::string>{"a", "b"});

    PMSpace::DistTable asym;
    asym.emplace(std::make_pair("a", "b"), step(Rat(1)));
    asym.emplace(std::make_pair("b", "a"), step(Rat(2)));
    AxiomReport r3 = verify_axioms(PMSpace(pts, asym, TriangleFn(TNorm::Min)));
    CHECK(!r3.pass);
    CHECK(r3.failed_axiom == 3);

    // Distances 1,1,3 break the composition bound (step at 2 dominates step at 3).
    PMSpace::DistTable far;
    far.emplace(std::make_pair("a", "b"), step(Rat(1)));
    far.emplace(std::make_pair("b", "c"), step(Rat(1)));
    far.emplace(std::make_pair("a", "c"), step(Rat(3)));
    AxiomReport r4 = verify_axioms(PMSpace({"a", "b", "c"}, far, TriangleFn(TNorm::Min)));
    CHECK(!r4.pass);
    CHECK(r4.failed_axiom == 4);
    CHECK(r4.witness.size() == 3);
}

TEST_CASE("random generated spaces always satisfy the axioms") {
    Rng rng(1234);
    for (int i = 0; i < 60; ++i) {
        int n = static_cast<int>(rng.range(2, 6));
        std::vector<std::string> labels;
        for (int p = 0; p < n; ++p) labels.push_back(std::string(1, char('a' + p)));
        TriangleFn tau(static_cast<TNorm>(rng.below(3)));
        if (rng.coin()) {
            PMSpace sp = build_equilateral(labels, random_distance_fn_nonzero(rng), tau);
            CHECK(verify_axioms(sp).pass);
        } else {
            PMSpace sp = build_simple(labels, random_metric(rng, n),
                                      random_distance_fn_nonzero(rng), tau);
            CHECK(verify_axioms(sp).pass);
        }
    }
}

TEST_CASE("strong neighborhoods") {
    PMSpace eq = build_equilateral({"a", "b", "c"}, step(Rat(1)), TriangleFn(TNorm::Min));
    CHECK(strong_neighborhood(eq, "a", Rat(1, 2)) == std::vector<std::string>{"a"});
    CHECK(strong_neighborhood(eq, "a", Rat(3, 2)) == std::vector<std::string>{"a", "b", "c"});
    CHECK(strong_neighborhood(eq, "a", Rat(2)) == std::vector<std::string>{"a", "b", "c"});
    CHECK_THROWS_AS(strong_neighborhood(eq, "z", Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(strong_neighborhood(eq, "a", Rat(0)), std::invalid_argument);

    PMSpace sp = line_space();
    CHECK(strong_neighborhood(sp, "a", Rat(3, 10)) == std::vector<std::string>{"a", "b"});
    CHECK(strong_neighborhood(sp, "a", Rat(1, 10)) == std::vector<std::string>{"a"});
}

TEST_CASE("neighborhoods are monotone and match vicinities") {
    Rng rng(77);
    for (int i = 0; i < 25; ++i) {
        int n = static_cast<int>(rng.range(2, 6));
        std::vector<std::string> labels;
        for (int p = 0; p < n; ++p) labels.push_back(std::string(1, char('a' + p)));
        PMSpace sp = build_equilateral(labels, random_distance_fn_nonzero(rng),
                                       TriangleFn(TNorm::Product));
        std::vector<std::vector<std::string>> prev(labels.size());
        for (const Rat& r : sp.threshold_grid()) {
            Vicinity v = vicinity(sp, r);
            for (std::size_t x = 0; x < labels.size(); ++x) {
                auto nbhd = strong_neighborhood(sp, labels[x], r);
                std::vector<std::string> from_vicinity;
                for (std::size_t y = 0; y < labels.size(); ++y) {
                    if (v.member[x][y]) from_vicinity.push_back(labels[y]);
                }
                CHECK(nbhd == from_vicinity);
                for (const auto& l : prev[x]) {
                    CHECK(std::find(nbhd.begin(), nbhd.end(), l) != nbhd.end());
                }
                prev[x] = nbhd;
            }
        }
    }
}

TEST_CASE("vicinity thresholds") {
    PMSpace eq = build_equilateral({"a", "b", "c"}, step(Rat(1)), TriangleFn(TNorm::Min));
    CHECK(vicinity(eq, Rat(1, 2)).pairs.size() == 3);   // diagonal only
    CHECK(vicinity(eq, Rat(33, 32)).pairs.size() == 9); // just past the separation
    CHECK(vicinity(eq, Rat(2)).pairs.size() == 9);
    // Reflexive at every radius.
    for (const Rat& r : eq.threshold_grid()) {
        Vicinity v = vicinity(eq, r);
        for (std::size_t i = 0; i < 3; ++i) CHECK(v.member[i][i]);
    }
}

TEST_CASE("strong closure is the identity on finite spaces") {
    PMSpace eq = build_equilateral({"a", "b", "c"}, step(Rat(1)), TriangleFn(TNorm::Min));
    CHECK(strong_closure(eq, {"a", "b", "c"}) == std::vector<std::string>{"a", "b", "c"});
    CHECK(strong_closure(eq, {"a"}) == std::vector<std::string>{"a"});
    CHECK_THROWS_AS(strong_closure(eq, {}), std::invalid_argument);

    PMSpace sp = line_space();
    auto k1 = strong_closure(sp, {"b"});
    CHECK(k1 == std::vector<std::string>{"b"});
    CHECK(strong_closure(sp, k1) == k1);
}

TEST_CASE("composition threshold search") {
    PMSpace eq = build_equilateral({"a", "b", "c"}, step(Rat(1)), TriangleFn(TNorm::Min));
    auto eta = find_eta(eq, Rat(1, 2), {Rat(1, 2)});
    REQUIRE(eta.has_value());
    CHECK(*eta == Rat(1, 2));

    // Separations 0.2 / 0.2 / 0.4: at r = 0.3 the two short pairs compose to
    // the long pair, which is outside V(0.3), so eta = 0.3 fails but any
    // eta below 0.2 works.
    PMSpace sp = line_space();
    CHECK(!find_eta(sp, Rat(3, 10), {Rat(3, 10)}).has_value());
    auto eta2 = find_eta(sp, Rat(3, 10), sp.threshold_grid());
    REQUIRE(eta2.has_value());
    CHECK(*eta2 <= Rat(1, 5));

    // The grid derived from the separation scale always succeeds.
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        int n = static_cast<int>(rng.range(2, 5));
        std::vector<std::string> labels;
        for (int p = 0; p < n; ++p) labels.push_back(std::string(1, char('a' + p)));
        PMSpace rsp = build_equilateral(labels, random_distance_fn_nonzero(rng),
                                        TriangleFn(TNorm::Min));
        for (const Rat& r : rsp.threshold_grid()) {
            CHECK(find_eta(rsp, r, rsp.threshold_grid()).has_value());
        }
    }
}

TEST_CASE("threshold grid brackets the separation scale") {
    PMSpace sp = line_space();
    const auto& grid = sp.threshold_grid();
    REQUIRE(!grid.empty());
    CHECK(grid.front() == sp.min_separation() / 2);
    CHECK(grid.back() == 2);
    CHECK(std::is_sorted(grid.begin(), grid.end()));
}

TEST_CASE("json round trip preserves dyadic spaces") {
    // Dyadic jump data survives the binary64 wire format exactly.
    StepDistFn dyadic = StepDistFn::from_jumps(
        {Jump{ExtReal(Rat(3, 16)), Rat(7, 8)}, Jump{ExtReal(Rat(3)), Rat(1)}}, true);
    std::vector<std::vector<Rat>> rho{{Rat(0), Rat(1), Rat(2)},
                                      {Rat(1), Rat(0), Rat(1)},
                                      {Rat(2), Rat(1), Rat(0)}};
    PMSpace sp = build_simple({"a", "b", "c"}, rho, dyadic, TriangleFn(TNorm::Min));
    auto back = pmspace_from_json(to_json(sp));
    CHECK(*back == sp);

    // Loader fills the mirror entry from the provided side.
    Json j = to_json(sp);
    CHECK(pmspace_from_json(j)->dist("b", "a") == sp.dist("a", "b"));
}
