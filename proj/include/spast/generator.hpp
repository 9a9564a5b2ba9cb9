#pragma once

#include <cstdint>
#include <random>

#include "spast/instance.hpp"

namespace spast {

// Random instance generation. All draws come from a seeded mt19937_64
// through the helpers below, so a config is a complete recipe for the
// instance it produces, independent of platform.

struct GeneratorConfig {
    int n1 = 0;
    // Negative fields are resolved from n1: n2 = max(1, n1/2),
    // n3 = max(1, n1/5), total_capacity = max(n2, 3*n1/2).
    int n2 = -1;
    int n3 = -1;
    int total_capacity = -1;
    int pref_len = -1;  // required, in [1, n2]
    double t_ds = 0.0;  // probability an adjacent student-list pair is tied
    double t_dl = 0.0;  // same for lecturer lists
    std::uint64_t seed = 0;
};

GeneratorConfig resolve_defaults(GeneratorConfig config);

// Throws ValidationError when the (resolved) config is unsatisfiable.
Instance generate(const GeneratorConfig& config);

// splitmix64 step; used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Unbiased draw from [0, n) by rejection; n must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng);

}  // namespace spast
