#include "pmseq/triangle.hpp"

#include <algorithm>
#include <sstream>

#include "pmseq/generate.hpp"

namespace pmseq {

Rat tnorm_apply(TNorm t, const Rat& a, const Rat& b) {
    switch (t) {
        case TNorm::Min:
            return a < b ? a : b;
        case TNorm::Product:
            return a * b;
        case TNorm::Lukasiewicz: {
            Rat v = a + b - 1;
            return v > 0 ? v : Rat(0);
        }
    }
    throw std::logic_error("tnorm_apply: bad enum");
}

std::string tnorm_name(TNorm t) {
    switch (t) {
        case TNorm::Min: return "min";
        case TNorm::Product: return "prod";
        case TNorm::Lukasiewicz: return "luk";
    }
    throw std::logic_error("tnorm_name: bad enum");
}

TNorm tnorm_from_name(const std::string& name) {
    if (name == "min") return TNorm::Min;
    if (name == "prod") return TNorm::Product;
    if (name == "luk") return TNorm::Lukasiewicz;
    throw std::invalid_argument("unknown t-norm: " + name);
}

StepDistFn TriangleFn::operator()(const StepDistFn& f, const StepDistFn& g) const {
    if (!f.is_distance_shaped() || !g.is_distance_shaped()) {
        throw std::invalid_argument("TriangleFn: arguments must be distance distribution functions");
    }
    // Level T(p_i, q_j) becomes available for x > a_i + b_j; collect all
    // candidate (location, level) pairs and keep the running max.
    struct Cand {
        Rat loc;
        Rat val;
    };
    std::vector<Cand> cands;
    cands.reserve(f.jumps().size() * g.jumps().size());
    for (const auto& jf : f.jumps()) {
        for (const auto& jg : g.jumps()) {
            cands.push_back(Cand{jf.loc.value() + jg.loc.value(),
                                 tnorm_apply(tnorm_, jf.val, jg.val)});
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.loc < b.loc; });
    std::vector<Jump> out;
    Rat running(0);
    for (auto& c : cands) {
        if (c.val <= running) continue;
        running = c.val;
        if (!out.empty() && out.back().loc.value() == c.loc) {
            out.back().val = c.val;
        } else {
            out.push_back(Jump{ExtReal(std::move(c.loc)), std::move(c.val)});
        }
    }
    return StepDistFn::from_jumps(std::move(out), true);
}

LawReport verify_triangle_laws(const TriangleFn& tau, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify_triangle_laws: samples must be >= 1");
    LawReport report;
    report.samples = samples;
    Rng rng(seed);
    const StepDistFn zero_step = StepDistFn::unit_step(ExtReal(0));
    auto fail = [&](const char* law, const std::string& detail) {
        if (!report.counterexample.empty()) return;
        report.counterexample = std::string(law) + ": " + detail;
    };
    for (int s = 0; s < samples; ++s) {
        StepDistFn f = random_distance_fn(rng);
        StepDistFn g = random_distance_fn(rng);
        StepDistFn h = random_distance_fn(rng);
        if (tau(f, g) != tau(g, f)) {
            report.commutative = false;
            fail("commutativity", "F=" + f.str() + " G=" + g.str());
        }
        if (tau(tau(f, g), h) != tau(f, tau(g, h))) {
            report.associative = false;
            fail("associativity", "F=" + f.str() + " G=" + g.str() + " H=" + h.str());
        }
        if (tau(zero_step, f) != f) {
            report.identity = false;
            fail("identity", "F=" + f.str());
        }
        StepDistFn fup = pointwise_max(f, random_distance_fn(rng));
        if (!pointwise_leq(tau(fup, g), tau(f, g))) {
            report.monotone = false;
            fail("monotonicity", "F=" + f.str() + " F'=" + fup.str() + " G=" + g.str());
        }
        if (!report.counterexample.empty()) break;
    }
    return report;
}

}  // namespace pmseq
