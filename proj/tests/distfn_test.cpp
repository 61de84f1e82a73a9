#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pmseq/distfn.hpp"
#include "pmseq/generate.hpp"
#include "pmseq/json_io.hpp"

using namespace pmseq;

namespace {

StepDistFn step(double q) { return StepDistFn::unit_step(ExtReal(rat_from_double(q))); }

StepDistFn make(std::initializer_list<std::pair<double, double>> jumps, bool distance = true) {
    std::vector<Jump> js;
    for (const auto& [x, v] : jumps) js.push_back(Jump{ExtReal(rat_from_double(x)), rat_from_double(v)});
    return StepDistFn::from_jumps(std::move(js), distance);
}

}  // namespace

TEST_CASE("unit step values") {
    StepDistFn e0 = step(0);
    CHECK(e0.eval(ExtReal(Rat(0))) == 0);
    CHECK(e0.eval(ExtReal(Rat(1, 2))) == 1);

    StepDistFn e1 = step(1);
    CHECK(e1.eval(ExtReal(Rat(1))) == 0);
    CHECK(e1.eval(ExtReal(rat_from_double(1.0001))) == 1);

    StepDistFn bottom = StepDistFn::unit_step(ExtReal::neg_inf());
    CHECK(bottom.eval(ExtReal::neg_inf()) == 0);
    CHECK(bottom.eval(ExtReal(Rat(-1000))) == 1);
    CHECK(bottom.eval(ExtReal(Rat(7))) == 1);

    StepDistFn top = StepDistFn::unit_step(ExtReal::pos_inf());
    CHECK(top.eval(ExtReal(Rat(1000000))) == 0);
    CHECK(top.eval(ExtReal::pos_inf()) == 1);
}

TEST_CASE("left-continuous evaluation") {
    StepDistFn f = make({{0.0, 0.4}, {2.0, 1.0}});
    CHECK(f.eval(ExtReal(Rat(1))) == rat_from_double(0.4));
    CHECK(f.eval(ExtReal(Rat(0))) == 0);
    CHECK(f.eval(ExtReal(Rat(2))) == rat_from_double(0.4));
    CHECK(f.eval(ExtReal(Rat(3))) == 1);
    CHECK(f.eval(ExtReal::pos_inf()) == 1);
    CHECK(f.eval(ExtReal::neg_inf()) == 0);
}

TEST_CASE("construction validates invariants") {
    CHECK_THROWS_AS(make({{1.0, 0.5}, {0.5, 1.0}}), std::invalid_argument);  // decreasing locs
    CHECK_THROWS_AS(make({{0.0, 0.9}, {1.0, 0.5}}), std::invalid_argument);  // decreasing vals
    CHECK_THROWS_AS(make({{0.0, 1.5}}), std::invalid_argument);              // out of range
    CHECK_THROWS_AS(make({{-1.0, 0.5}, {1.0, 1.0}}, true), std::invalid_argument);  // negative support
    CHECK(make({{-1.0, 0.5}, {1.0, 1.0}}, false).eval(ExtReal(Rat(0))) == Rat(1, 2));
}

TEST_CASE("pointwise order") {
    StepDistFn f = make({{0.0, 0.4}, {2.0, 1.0}});
    CHECK(pointwise_leq(f, f));
    CHECK(pointwise_leq(step(1), step(2)));   // later step is smaller
    CHECK(!pointwise_leq(step(2), step(1)));

    // Unit-step order matches location order.
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= 8; ++b) {
            CHECK(pointwise_leq(step(a / 4.0), step(b / 4.0)) == (a <= b));
        }
    }
}

TEST_CASE("pointwise max dominates both arguments") {
    Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
        StepDistFn f = random_distance_fn(rng);
        StepDistFn g = random_distance_fn(rng);
        StepDistFn m = pointwise_max(f, g);
        CHECK(pointwise_leq(m, f));
        CHECK(pointwise_leq(m, g));
    }
}

TEST_CASE("levy distance basics") {
    StepDistFn f = make({{0.5, 0.3}, {1.0, 0.8}, {4.0, 1.0}});
    CHECK(levy_distance(f, f).value == 0.0);

    LevyDistance d = levy_distance(step(0.3), step(0), 1e-6);
    CHECK(std::abs(d.value - 0.3) <= 1e-6 + d.tolerance);
    // Frozen from the grid oracle before the bisection existed.
    double grid = oracles::levy_grid(step(0.3), step(0));
    CHECK(std::abs(d.value - grid) <= 2e-4);

    CHECK(std::abs(levy_distance(step(2), step(0)).value - 1.0) <= 2e-6);
    CHECK(std::abs(oracles::levy_grid(step(2), step(0)) - 1.0) <= 2e-4);

    CHECK_THROWS_AS(levy_distance(f, f, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(levy_distance(f, f, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(levy_distance(f, f, -1.0), std::invalid_argument);
}

TEST_CASE("levy distance agrees with the grid oracle on random pairs") {
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        StepDistFn f = random_distance_fn(rng);
        StepDistFn g = random_distance_fn(rng);
        double fast = levy_distance(f, g, 1e-6).value;
        double grid = oracles::levy_grid(f, g);
        CHECK(std::abs(fast - grid) <= 2e-4);
    }
}

TEST_CASE("metric axioms on random triples") {
    Rng rng(42);
    const double tol = 1e-9;
    for (int i = 0; i < 300; ++i) {
        StepDistFn f = random_distance_fn(rng);
        StepDistFn g = random_distance_fn(rng);
        StepDistFn h = random_distance_fn(rng);
        LevyDistance fg = levy_distance(f, g, tol);
        CHECK(fg.value == levy_distance(g, f, tol).value);  // bit-exact symmetry
        if (f == g) {
            CHECK(fg.value <= tol);
        } else {
            CHECK(fg.value > 3 * tol);
        }
        CHECK(levy_distance(f, h, tol).value <=
              fg.value + levy_distance(g, h, tol).value + 3 * tol);
    }
}

TEST_CASE("weak convergence of shrinking steps") {
    StepDistFn e0 = step(0);
    double prev = 2.0;
    for (int n = 1; n <= 128; n *= 2) {
        double d = levy_distance(StepDistFn::unit_step(ExtReal(Rat(1, n))), e0).value;
        CHECK(d <= prev + 1e-6);
        prev = d;
    }
    CHECK(levy_distance(StepDistFn::unit_step(ExtReal(Rat(1, 101))), e0).value < 0.01);
}

TEST_CASE("near-zero-step criterion") {
    CHECK(near_zero_step(step(0), Rat(1, 2)));
    CHECK(!near_zero_step(step(1), Rat(1, 2)));

    StepDistFn h = make({{0.2, 0.9}, {3.0, 1.0}});
    CHECK(near_zero_step(h, rat_from_double(0.4)));
    CHECK(levy_distance(h, step(0)).value < 0.4);

    CHECK_THROWS_AS(near_zero_step(make({{-1.0, 1.0}}, false), Rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(near_zero_step(step(0), Rat(0)), std::invalid_argument);
}

TEST_CASE("threshold criterion matches the metric outside the boundary band") {
    Rng rng(42);
    const double tol = 1e-9;
    StepDistFn e0 = step(0);
    for (int i = 0; i < 1000; ++i) {
        StepDistFn h = random_distance_fn(rng);
        double d = levy_distance(h, e0, tol).value;
        for (int j = 1; j <= 19; ++j) {
            Rat t(j, 20);
            if (std::abs(to_double(t) - d) <= 2 * tol) continue;
            CHECK(near_zero_step(h, t) == (d < to_double(t)));
        }
    }
}

TEST_CASE("exact distance to the zero step matches the bisection") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        StepDistFn h = random_distance_fn(rng);
        Rat exact = exact_levy_to_zero_step(h);
        LevyDistance d = levy_distance(h, StepDistFn::unit_step(ExtReal(0)), 1e-9);
        CHECK(std::abs(to_double(exact) - d.value) <= 2e-9);
    }
    CHECK(exact_levy_to_zero_step(step(0)) == 0);
    CHECK(exact_levy_to_zero_step(step(1)) == 1);
    CHECK(exact_levy_to_zero_step(step(5)) == 1);
    CHECK(exact_levy_to_zero_step(make({{0.2, 0.9}, {3.0, 1.0}})) == rat_from_double(0.2));
}

TEST_CASE("json round trip is exact on dyadic functions") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        StepDistFn f = random_distance_fn(rng);
        CHECK(step_dist_fn_from_json(to_json(f)) == f);
    }
    StepDistFn bottom = StepDistFn::unit_step(ExtReal::neg_inf());
    CHECK(step_dist_fn_from_json(to_json(bottom)) == bottom);
    Json j = to_json(bottom);
    CHECK(j["jumps"][0][0] == Json("-inf"));
}
