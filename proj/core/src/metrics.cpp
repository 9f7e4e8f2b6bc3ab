#include "xscale/metrics.hpp"

#include <cmath>
#include <limits>
#include <json.hpp>
#include <string>
#include <vector>

#include "xscale/color.hpp"
#include "xscale/error.hpp"

namespace xscale {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

// Cropped luma plane as a dense row-major buffer.
struct Plane {
  int width;
  int height;
  std::vector<double> v;

  double at(int r, int c) const {
    return v[static_cast<std::size_t>(r) * width + c];
  }
};

Plane luma_plane(const Image& img, int crop) {
  const Image y = img.channels() == 3 ? rgb_to_y(img) : img;
  Plane p{y.width() - 2 * crop, y.height() - 2 * crop, {}};
  p.v.reserve(static_cast<std::size_t>(p.width) * p.height);
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width; ++c) p.v.push_back(y.at(r + crop, c + crop, 0));
  }
  return p;
}

void check_pair(const Image& a, const Image& b, int crop) {
  if (a.width() != b.width() || a.height() != b.height() ||
      a.channels() != b.channels()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                    "x" + std::to_string(a.channels()) + " vs " +
                    std::to_string(b.width()) + "x" +
                    std::to_string(b.height()) + "x" +
                    std::to_string(b.channels()));
  }
  if (crop < 0 || 2 * crop >= std::min(a.width(), a.height())) {
    throw Error(ErrorKind::kInvalidInput,
                "crop " + std::to_string(crop) + " is not below half of " +
                    std::to_string(std::min(a.width(), a.height())));
  }
}

std::vector<double> gaussian_taps() {
  std::vector<double> taps(kWindow);
  double total = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double x = i - kWindow / 2;
    taps[i] = std::exp(-x * x / (2.0 * kSigma * kSigma));
    total += taps[i];
  }
  for (double& t : taps) t /= total;
  return taps;
}

// Separable valid-region filtering with the SSIM window.
Plane filter_valid(const Plane& in, const std::vector<double>& taps) {
  const int ow = in.width - kWindow + 1;
  const int oh = in.height - kWindow + 1;
  Plane rows{ow, in.height, std::vector<double>(static_cast<std::size_t>(ow) * in.height)};
  for (int r = 0; r < in.height; ++r) {
    for (int c = 0; c < ow; ++c) {
      double s = 0.0;
      for (int t = 0; t < kWindow; ++t) s += taps[t] * in.at(r, c + t);
      rows.v[static_cast<std::size_t>(r) * ow + c] = s;
    }
  }
  Plane out{ow, oh, std::vector<double>(static_cast<std::size_t>(ow) * oh)};
  for (int r = 0; r < oh; ++r) {
    for (int c = 0; c < ow; ++c) {
      double s = 0.0;
      for (int t = 0; t < kWindow; ++t) s += taps[t] * rows.at(r + t, c);
      out.v[static_cast<std::size_t>(r) * ow + c] = s;
    }
  }
  return out;
}

Plane product(const Plane& a, const Plane& b) {
  Plane p{a.width, a.height, std::vector<double>(a.v.size())};
  for (std::size_t i = 0; i < a.v.size(); ++i) p.v[i] = a.v[i] * b.v[i];
  return p;
}

}  // namespace

double psnr_y(const Image& a, const Image& b, int crop) {
  check_pair(a, b, crop);
  const Plane ya = luma_plane(a, crop);
  const Plane yb = luma_plane(b, crop);
  double sse = 0.0;
  for (std::size_t i = 0; i < ya.v.size(); ++i) {
    const double d = ya.v[i] - yb.v[i];
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sse / static_cast<double>(ya.v.size());
  return 10.0 * std::log10(1.0 / mse);
}

double ssim_y(const Image& a, const Image& b, int crop) {
  check_pair(a, b, crop);
  if (std::min(a.width(), a.height()) - 2 * crop < kWindow) {
    throw Error(ErrorKind::kImageTooSmall,
                "SSIM needs at least 11x11 pixels after cropping");
  }
  const Plane x = luma_plane(a, crop);
  const Plane y = luma_plane(b, crop);
  const auto taps = gaussian_taps();
  const Plane mx = filter_valid(x, taps);
  const Plane my = filter_valid(y, taps);
  const Plane exx = filter_valid(product(x, x), taps);
  const Plane eyy = filter_valid(product(y, y), taps);
  const Plane exy = filter_valid(product(x, y), taps);
  double total = 0.0;
  for (std::size_t i = 0; i < mx.v.size(); ++i) {
    const double mux = mx.v[i];
    const double muy = my.v[i];
    const double vx = exx.v[i] - mux * mux;
    const double vy = eyy.v[i] - muy * muy;
    const double cov = exy.v[i] - mux * muy;
    const double num = (2.0 * mux * muy + kC1) * (2.0 * cov + kC2);
    const double den = (mux * mux + muy * muy + kC1) * (vx + vy + kC2);
    total += num / den;
  }
  return total / static_cast<double>(mx.v.size());
}

std::string QualityReport::to_json() const {
  nlohmann::ordered_json j;
  if (std::isinf(psnr_db)) {
    j["psnr_db"] = "inf";
  } else {
    j["psnr_db"] = psnr_db;
  }
  j["ssim"] = ssim;
  j["crop_border"] = crop_border;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump();
}

QualityReport evaluate(const Image& result, const Image& truth, int crop) {
  QualityReport report;
  report.psnr_db = psnr_y(result, truth, crop);
  report.ssim = ssim_y(result, truth, crop);
  report.crop_border = crop;
  return report;
}

}  // namespace xscale
