#pragma once

#include <vector>

#include "pmseq/distfn.hpp"
#include "pmseq/rng.hpp"

namespace pmseq {

/// Options for random distance distribution functions. Locations and values
/// are drawn from dyadic grids so that JSON round-trips are exact.
struct RandomDistFnOptions {
    int max_jumps = 5;
    std::uint64_t loc_denom = 64;   // locations k / loc_denom
    std::uint64_t loc_max_num = 256;  // locations up to loc_max_num / loc_denom
    std::uint64_t val_denom = 256;  // values j / val_denom
};

/// Random member of the distance distribution functions (may equal the unit
/// step at 0).
StepDistFn random_distance_fn(Rng& rng, const RandomDistFnOptions& opts = {});

/// Random member distinct from the unit step at 0.
StepDistFn random_distance_fn_nonzero(Rng& rng, const RandomDistFnOptions& opts = {});

/// Random finite metric table as a symmetric matrix of positive rationals
/// (shortest-path closure of random dyadic weights, so the triangle
/// inequality holds by construction).
std::vector<std::vector<Rat>> random_metric(Rng& rng, int n);

}  // namespace pmseq
