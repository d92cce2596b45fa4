#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "opsplit/linear.hpp"

namespace opsplit {

using Rng = std::mt19937_64;

// Independent generator stream keyed by (seed, tag, index). Streams for
// different keys do not depend on evaluation order.
Rng make_stream(std::uint64_t seed, std::string_view tag = {}, std::uint64_t index = 0);

// Standard normal entries scaled by `scale`.
Point random_point(Rng& rng, Index dim, double scale = 1.0);
Matrix random_matrix(Rng& rng, Index rows, Index cols);
double random_uniform(Rng& rng, double lo, double hi);
Index random_index(Rng& rng, Index lo, Index hi);  // inclusive bounds

}  // namespace opsplit
