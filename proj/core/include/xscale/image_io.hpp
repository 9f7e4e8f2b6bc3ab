#pragma once

#include <filesystem>

#include "xscale/image.hpp"

namespace xscale {

// Reads 8-bit PNG (gray or RGB) and binary PGM/PPM (P5/P6, maxval 255).
// The format is detected from the file signature, not the extension.
Image load_image(const std::filesystem::path& path);

// Writes PNG for ".png" and PGM/PPM for ".pgm"/".ppm"/".pnm"; the sample
// count must match (PGM needs 1 channel, PPM 3). Samples are rounded to
// the nearest 8-bit level.
void save_image(const Image& img, const std::filesystem::path& path);

}  // namespace xscale
