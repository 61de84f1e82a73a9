#pragma once

// Independent brute-force oracles used to freeze expected values. These
// deliberately avoid the library's computation paths: the Levy oracle scans
// a w-grid with dense x sampling in double arithmetic, the sup-convolution
// oracle maximizes over a dense u-grid, and the counting oracle loops over
// window members one by one.

#include <algorithm>
#include <cmath>
#include <vector>

#include "pmseq/density.hpp"
#include "pmseq/distfn.hpp"
#include "pmseq/triangle.hpp"

namespace oracles {

inline double eval_d(const pmseq::StepDistFn& f, double x) {
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    double v = 0.0;
    for (const auto& j : f.jumps()) {
        if (j.loc.to_double() < x) {
            v = pmseq::to_double(j.val);
        } else {
            break;
        }
    }
    return v;
}

inline bool levy_feasible_grid(const pmseq::StepDistFn& f, const pmseq::StepDistFn& g, double w) {
    double limit = 1.0 / w;
    std::vector<double> xs;
    auto add_around = [&](double c) {
        for (double d : {-w - 1e-7, -w + 1e-7, -1e-7, 1e-7, w - 1e-7, w + 1e-7, 0.0}) {
            double x = c + d;
            if (x > -limit && x < limit) xs.push_back(x);
        }
    };
    for (const auto& j : f.jumps()) {
        if (j.loc.is_finite()) add_around(j.loc.to_double());
    }
    for (const auto& j : g.jumps()) {
        if (j.loc.is_finite()) add_around(j.loc.to_double());
    }
    xs.push_back(std::max(-limit + 1e-7, -limit * 0.999));
    xs.push_back(std::min(limit - 1e-7, limit * 0.999));
    xs.push_back(0.0);
    for (double x : xs) {
        double fx = eval_d(f, x), gx = eval_d(g, x);
        if (eval_d(f, x - w) - w > gx + 1e-12) return false;
        if (gx > eval_d(f, x + w) + w + 1e-12) return false;
        if (eval_d(g, x - w) - w > fx + 1e-12) return false;
        if (fx > eval_d(g, x + w) + w + 1e-12) return false;
    }
    return true;
}

/// Smallest feasible w on a uniform grid of the given step.
inline double levy_grid(const pmseq::StepDistFn& f, const pmseq::StepDistFn& g,
                        double step = 1e-4) {
    for (double w = step; w < 1.0; w += step) {
        if (levy_feasible_grid(f, g, w)) return w;
    }
    return 1.0;
}

/// Dense-grid sup-convolution value at a single point x.
inline double sup_convolution_grid(pmseq::TNorm t, const pmseq::StepDistFn& f,
                                   const pmseq::StepDistFn& g, double x, double step = 1.0 / 512) {
    double best = 0.0;
    std::vector<double> us;
    for (double u = 0.0; u <= x + step; u += step) us.push_back(u);
    for (const auto& j : f.jumps()) {
        double loc = j.loc.to_double();
        us.push_back(loc + 1e-9);
        if (x - loc > 0) us.push_back(x - loc - 1e-9);
    }
    for (const auto& j : g.jumps()) {
        double loc = j.loc.to_double();
        us.push_back(loc + 1e-9);
        if (x - loc > 0) us.push_back(x - loc - 1e-9);
    }
    for (double u : us) {
        if (u < 0 || u > x) continue;
        double a = eval_d(f, u), b = eval_d(g, x - u);
        double v = 0.0;
        switch (t) {
            case pmseq::TNorm::Min: v = std::min(a, b); break;
            case pmseq::TNorm::Product: v = a * b; break;
            case pmseq::TNorm::Lukasiewicz: v = std::max(a + b - 1.0, 0.0); break;
        }
        best = std::max(best, v);
    }
    return best;
}

/// Member-by-member window count, independent of the closed-form paths.
inline pmseq::Index count_loop(const pmseq::SetDescription& m, pmseq::Index lo, pmseq::Index hi) {
    pmseq::Index n = 0;
    for (pmseq::Index k = lo; k <= hi; ++k) {
        if (m.contains(k)) ++n;
    }
    return n;
}

}  // namespace oracles
