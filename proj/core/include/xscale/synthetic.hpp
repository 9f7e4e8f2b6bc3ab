#pragma once

#include <cstdint>
#include <string_view>

#include "xscale/image.hpp"

namespace xscale {

enum class SyntheticScheme { kTiledMultiscale };

SyntheticScheme parse_scheme(std::string_view text);

struct SyntheticPair {
  Image hr;
  Image lr;  // bicubic_resample(hr, 1 / scale)
};

// Renders one seeded periodic RGB texture at native scale (small islands on a
// lattice) and at 1/scale (everywhere else), so that most LR patches have an
// exact counterpart one scale down within a 30-sample search window. Throws kInvalidDimension unless size is
// a multiple of 2 * scale and at least 8 * scale.
SyntheticPair generate_synthetic(std::uint64_t seed, int size, int scale,
                                 SyntheticScheme scheme =
                                     SyntheticScheme::kTiledMultiscale);

}  // namespace xscale
