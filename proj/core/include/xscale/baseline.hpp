#pragma once

#include "xscale/config.hpp"
#include "xscale/image.hpp"

namespace xscale {

Image bicubic_baseline(const Image& lr, int scale,
                       BoundaryPolicy boundary = BoundaryPolicy::kReflect);

// Same-scale non-local aggregation over the k nearest patches (self
// included) in a window around each query, with Gaussian weights
// exp(-|x_i - x_j|^2 / bandwidth) and identity value transform, folded back
// with patch2img. Uses cfg.k, patch_size, window, stride, bandwidth;
// scale, weighting and adapn are ignored.
Image same_scale_knn(const Image& img, const AggregationConfig& cfg);

}  // namespace xscale
