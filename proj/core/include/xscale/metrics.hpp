#pragma once

#include <string>

#include "xscale/image.hpp"

namespace xscale {

// PSNR (dB, peak 1.0) on luma after cropping `crop` pixels from each border.
// RGB inputs are converted to Y; single-channel inputs are taken as Y.
// Identical inputs give +infinity.
double psnr_y(const Image& a, const Image& b, int crop);

// Mean SSIM on luma: 11x11 Gaussian window (sigma 1.5), K1 = 0.01,
// K2 = 0.03, L = 1, valid region only.
double ssim_y(const Image& a, const Image& b, int crop);

struct QualityReport {
  double psnr_db = 0.0;
  double ssim = 0.0;
  int crop_border = 0;
  std::string notes;

  // {"psnr_db": <number or "inf">, "ssim": ..., "crop_border": ..., "notes": ...}
  std::string to_json() const;
};

QualityReport evaluate(const Image& result, const Image& truth, int crop);

}  // namespace xscale
