#pragma once

#include "rliff/fusion.hpp"
#include "rliff/rng.hpp"

namespace rliff {

// Uniformly random free weights in [0,1]; w_pdr derived as usual.
WeightVector random_weights(Rng& rng);

// (1/3, 1/3, 1/3): the fused estimate is the centroid of the three paths.
WeightVector equal_weights();

}  // namespace rliff
