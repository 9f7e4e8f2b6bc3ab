#pragma once

#include "xscale/image.hpp"

namespace xscale {

// Cubic convolution kernel with a = -0.5 (Catmull-Rom).
double cubic_kernel(double x);

// Separable bicubic resampling. Output dimensions are round(input * scale).
// Pixel centers map as src = (dst + 0.5) / scale - 0.5. When scale < 1 the
// kernel is stretched by 1/scale so that the result is antialiased; weights
// are always renormalized to sum to one. The result is clamped to [0,1].
Image bicubic_resample(const Image& img, double scale,
                       BoundaryPolicy boundary = BoundaryPolicy::kReflect);

}  // namespace xscale
