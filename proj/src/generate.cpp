#include "pmseq/generate.hpp"

#include <algorithm>

namespace pmseq {

StepDistFn random_distance_fn(Rng& rng, const RandomDistFnOptions& opts) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(opts.max_jumps)));
    std::vector<std::uint64_t> locs;
    for (int i = 0; i < n; ++i) locs.push_back(rng.below(opts.loc_max_num + 1));
    std::sort(locs.begin(), locs.end());
    locs.erase(std::unique(locs.begin(), locs.end()), locs.end());

    // Strictly increasing values; force the occasional full mass (value 1).
    std::vector<std::uint64_t> vals;
    std::uint64_t lo = 1;
    for (std::size_t i = 0; i < locs.size(); ++i) {
        std::uint64_t remaining = locs.size() - i;
        std::uint64_t hi = opts.val_denom - (remaining - 1);
        std::uint64_t v = rng.range(lo, hi);
        vals.push_back(v);
        lo = v + 1;
    }
    if (rng.coin()) vals.back() = opts.val_denom;

    std::vector<Jump> jumps;
    for (std::size_t i = 0; i < locs.size(); ++i) {
        jumps.push_back(Jump{ExtReal(Rat(locs[i], opts.loc_denom)),
                             Rat(vals[i], opts.val_denom)});
    }
    return StepDistFn::from_jumps(std::move(jumps), true);
}

StepDistFn random_distance_fn_nonzero(Rng& rng, const RandomDistFnOptions& opts) {
    const StepDistFn zero_step = StepDistFn::unit_step(ExtReal(0));
    for (;;) {
        StepDistFn f = random_distance_fn(rng, opts);
        if (f != zero_step) return f;
    }
}

std::vector<std::vector<Rat>> random_metric(Rng& rng, int n) {
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rat w(rng.range(8, 64), 16);  // weights in [1/2, 4]
            d[i][j] = d[j][i] = w;
        }
    }
    // Floyd-Warshall closure keeps symmetry and positivity.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Rat via = d[i][k] + d[k][j];
                if (i != k && j != k && via < d[i][j]) d[i][j] = via;
            }
        }
    }
    return d;
}

}  // namespace pmseq
