#include "xscale/resample.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "xscale/error.hpp"

namespace xscale {

namespace {

constexpr double kA = -0.5;

struct Tap {
  int index;
  double weight;
};

// Per output sample, the input taps and their normalized weights.
std::vector<std::vector<Tap>> contributions(int in_size, int out_size,
                                            double scale,
                                            BoundaryPolicy boundary) {
  const double stretch = scale < 1.0 ? scale : 1.0;
  const double support = 2.0 / stretch;
  std::vector<std::vector<Tap>> table(out_size);
  for (int o = 0; o < out_size; ++o) {
    const double center = (o + 0.5) / scale - 0.5;
    const int first = static_cast<int>(std::ceil(center - support));
    const int last = static_cast<int>(std::floor(center + support));
    auto& taps = table[o];
    double total = 0.0;
    for (int j = first; j <= last; ++j) {
      const double w = stretch * cubic_kernel((center - j) * stretch);
      if (w == 0.0) continue;
      const int src = resolve_index(j, in_size, boundary);
      bool merged = false;
      for (Tap& t : taps) {
        if (t.index == src) {
          t.weight += w;
          merged = true;
          break;
        }
      }
      if (!merged) taps.push_back({src, w});
      total += w;
    }
    for (Tap& t : taps) t.weight /= total;
  }
  return table;
}

}  // namespace

double cubic_kernel(double x) {
  const double ax = std::abs(x);
  if (ax <= 1.0) return ((kA + 2.0) * ax - (kA + 3.0)) * ax * ax + 1.0;
  if (ax < 2.0) return ((kA * ax - 5.0 * kA) * ax + 8.0 * kA) * ax - 4.0 * kA;
  return 0.0;
}

Image bicubic_resample(const Image& img, double scale,
                       BoundaryPolicy boundary) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorKind::kInvalidInput,
                "resample scale must be positive, got " + std::to_string(scale));
  }
  const int out_w = static_cast<int>(std::lround(img.width() * scale));
  const int out_h = static_cast<int>(std::lround(img.height() * scale));
  if (out_w <= 0 || out_h <= 0) {
    throw Error(ErrorKind::kInvalidDimension,
                "resampling " + std::to_string(img.width()) + "x" +
                    std::to_string(img.height()) + " by " +
                    std::to_string(scale) + " leaves no pixels");
  }
  if (scale == 1.0) return img;

  const int c = img.channels();
  const auto col_taps = contributions(img.width(), out_w, scale, boundary);
  const auto row_taps = contributions(img.height(), out_h, scale, boundary);

  // Horizontal pass.
  Image wide(out_w, img.height(), c);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < out_w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double sum = 0.0;
        for (const Tap& t : col_taps[x]) sum += t.weight * img.at(y, t.index, ch);
        wide.at(y, x, ch) = sum;
      }
    }
  }
  // Vertical pass.
  Image out(out_w, out_h, c);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double sum = 0.0;
        for (const Tap& t : row_taps[y]) sum += t.weight * wide.at(t.index, x, ch);
        out.at(y, x, ch) = sum;
      }
    }
  }
  out.clamp();
  return out;
}

}  // namespace xscale
