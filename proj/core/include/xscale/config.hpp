#pragma once

#include <string>
#include <string_view>

#include "xscale/image.hpp"

namespace xscale {

enum class Weighting {
  kAverage,   // uniform 1/k, the non-learned image-domain aggregation
  kGaussian,  // exp(-|label|^2 / bandwidth), normalized per query
};

struct AggregationConfig {
  int scale = 2;           // s: downsampling ratio of the search image
  int k = 5;               // neighbors per query
  int patch_size = 3;      // l: query patch side in the LR image
  int window = 30;         // d: search window side in the downsampled image
  int stride = 1;          // query grid step in the LR image
  double bandwidth = 10.0;
  Weighting weighting = Weighting::kGaussian;
  bool adapn = true;
  double adapn_eps = 1e-5;
  BoundaryPolicy boundary = BoundaryPolicy::kReflect;
  bool luma_embedding = false;  // match patches on Y instead of all channels
  int threads = 0;              // 0 = hardware concurrency

  // Throws Error(kConfig) naming the first violated constraint.
  void validate() const;
};

std::string_view to_string(Weighting w);
std::string_view to_string(BoundaryPolicy b);
Weighting parse_weighting(std::string_view text);
BoundaryPolicy parse_boundary(std::string_view text);

}  // namespace xscale
