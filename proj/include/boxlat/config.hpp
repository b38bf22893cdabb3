#pragma once

#include <cstdint>

namespace boxlat {

struct Config {
    // Hard cap on the element count of any constructed lattice.
    int max_elements = 4096;
    // Cap on 2^m + 2^n - 4 for the polynomial join path; larger inputs
    // fall back to the closure of the union.
    int join_exponent_cap = 12;
    // Seed for sampled (non-exhaustive) verification regimes.
    uint64_t seed = 0x9e3779b97f4a7c15ull;
};

Config& config();

}  // namespace boxlat
