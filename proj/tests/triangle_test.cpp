#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pmseq/generate.hpp"
#include "pmseq/triangle.hpp"

using namespace pmseq;

namespace {

StepDistFn step(const Rat& q) { return StepDistFn::unit_step(ExtReal(q)); }

}  // namespace

TEST_CASE("t-norm pointwise values") {
    CHECK(tnorm_apply(TNorm::Min, Rat(1, 2), Rat(3, 4)) == Rat(1, 2));
    CHECK(tnorm_apply(TNorm::Product, Rat(1, 2), Rat(3, 4)) == Rat(3, 8));
    CHECK(tnorm_apply(TNorm::Lukasiewicz, Rat(1, 2), Rat(3, 4)) == Rat(1, 4));
    CHECK(tnorm_apply(TNorm::Lukasiewicz, Rat(1, 4), Rat(1, 4)) == 0);
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
        CHECK(tnorm_apply(t, Rat(1), Rat(5, 8)) == Rat(5, 8));  // 1 is the unit
        CHECK(tnorm_apply(t, Rat(0), Rat(5, 8)) == 0);
    }
    CHECK(tnorm_from_name("min") == TNorm::Min);
    CHECK_THROWS_AS(tnorm_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("zero step is the identity") {
    Rng rng(17);
    StepDistFn e0 = step(Rat(0));
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
        TriangleFn tau(t);
        for (int i = 0; i < 100; ++i) {
            StepDistFn f = random_distance_fn(rng);
            CHECK(tau(e0, f) == f);
            CHECK(tau(f, e0) == f);
        }
        // Exact on the unit-step family too.
        for (int q = 0; q <= 8; ++q) {
            CHECK(tau(e0, step(Rat(q, 2))) == step(Rat(q, 2)));
        }
    }
}

TEST_CASE("unit steps convolve to the summed step") {
    Rng rng(3);
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
        TriangleFn tau(t);
        for (int i = 0; i < 100; ++i) {
            Rat a(rng.below(64), 16);
            Rat b(rng.below(64), 16);
            CHECK(tau(step(a), step(b)) == step(a + b));
        }
    }
}

TEST_CASE("a worked convolution, against the dense-grid oracle") {
    TriangleFn tau(TNorm::Min);
    StepDistFn r = tau(step(Rat(1, 5)), step(Rat(1, 2)));
    CHECK(r == step(Rat(7, 10)));

    // Mixed-profile example, probed pointwise.
    StepDistFn f = StepDistFn::from_jumps(
        {Jump{ExtReal(Rat(1, 2)), Rat(1, 4)}, Jump{ExtReal(Rat(2)), Rat(1)}}, true);
    StepDistFn g = StepDistFn::from_jumps(
        {Jump{ExtReal(Rat(1, 4)), Rat(1, 2)}, Jump{ExtReal(Rat(3)), Rat(1)}}, true);
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
        StepDistFn h = TriangleFn(t)(f, g);
        for (double x : {0.5, 0.74, 0.76, 1.0, 2.3, 5.01, 5.5, 8.0}) {
            double expect = oracles::sup_convolution_grid(t, f, g, x);
            double got = to_double(h.eval(ExtReal(rat_from_double(x))));
            CHECK(std::abs(expect - got) <= 1e-6);
        }
    }
}

TEST_CASE("commutativity is exact on random pairs") {
    Rng rng(11);
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
        TriangleFn tau(t);
        for (int i = 0; i < 100; ++i) {
            StepDistFn f = random_distance_fn(rng);
            StepDistFn g = random_distance_fn(rng);
            CHECK(tau(f, g) == tau(g, f));
        }
    }
}

TEST_CASE("law verification passes for all shipped t-norms") {
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
        LawReport rep = verify_triangle_laws(TriangleFn(t), 200, 42);
        CHECK(rep.pass());
        CHECK(rep.counterexample.empty());
        CHECK(rep.samples == 200);
    }
    CHECK_THROWS_AS(verify_triangle_laws(TriangleFn(TNorm::Min), 0), std::invalid_argument);
}

TEST_CASE("continuity surrogate: shifted arguments converge") {
    TriangleFn tau(TNorm::Min);
    StepDistFn g = StepDistFn::from_jumps(
        {Jump{ExtReal(Rat(1, 2)), Rat(1, 2)}, Jump{ExtReal(Rat(5, 2)), Rat(1)}}, true);
    StepDistFn limit = tau(step(Rat(0)), g);
    double prev = 2.0;
    for (int n = 1; n <= 128; n *= 2) {
        double d = levy_distance(tau(step(Rat(1, n)), g), limit).value;
        CHECK(d <= prev + 1e-6);
        prev = d;
    }
    CHECK(levy_distance(tau(step(Rat(1, 100)), g), limit).value < 0.02);
}

TEST_CASE("non-distance inputs are rejected") {
    StepDistFn d = StepDistFn::from_jumps({Jump{ExtReal(Rat(-1)), Rat(1)}}, false);
    TriangleFn tau(TNorm::Min);
    CHECK_THROWS_AS(tau(d, step(Rat(0))), std::invalid_argument);
}
