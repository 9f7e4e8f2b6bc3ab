#pragma once

#include "xscale/image.hpp"

namespace xscale {

// BT.601 studio-swing luma for [0,1] RGB:
// Y = (16 + 65.481 R + 128.553 G + 24.966 B) / 255.
double luma(double r, double g, double b) noexcept;

Image rgb_to_y(const Image& img);

}  // namespace xscale
