#pragma once

// Reference implementations used only by tests. Each one is written the
// slow, literal way and shares no code with the library path it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "xscale/image.hpp"

namespace xscale::oracle {

inline Image random_image(std::uint64_t seed, int width, int height,
                          int channels, double lo = 0.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  Image img(width, height, channels);
  for (double& v : img.pixels()) {
    v = lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  }
  return img;
}

inline double keys_cubic(double x) {
  // a = -0.5, written out from the piecewise definition.
  x = std::fabs(x);
  if (x <= 1.0) return 1.5 * x * x * x - 2.5 * x * x + 1.0;
  if (x < 2.0) return -0.5 * x * x * x + 2.5 * x * x - 4.0 * x + 2.0;
  return 0.0;
}

// Direct 2-D evaluation of an upsampling at integer factor, for pixels whose
// taps stay inside the image.
inline double upsample_direct(const Image& img, int factor, int out_row,
                              int out_col, int ch) {
  const double sy = (out_row + 0.5) / factor - 0.5;
  const double sx = (out_col + 0.5) / factor - 0.5;
  double sum = 0.0;
  for (int i = 0; i < img.height(); ++i) {
    for (int j = 0; j < img.width(); ++j) {
      sum += keys_cubic(sy - i) * keys_cubic(sx - j) * img.at(i, j, ch);
    }
  }
  return sum;
}

struct Match {
  int row;
  int col;
  double distance;
};

inline double patch_ssd(const Image& a, int ar, int ac, const Image& b, int br,
                        int bc, int side) {
  double ssd = 0.0;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c)
      for (int ch = 0; ch < a.channels(); ++ch) {
        const double d = a.at(ar + r, ac + c, ch) - b.at(br + r, bc + c, ch);
        ssd += d * d;
      }
  return ssd;
}

// Every candidate in the (clipped) window, fully sorted by (distance,
// row, col); first k returned.
inline std::vector<Match> brute_knn(const Image& query_img, int qr, int qc,
                                    const Image& hay, int center_r,
                                    int center_c, int window, int k,
                                    int side) {
  std::vector<std::tuple<double, int, int>> all;
  for (int r = 0; r + side <= hay.height(); ++r) {
    for (int c = 0; c + side <= hay.width(); ++c) {
      const int lo_r = center_r - window / 2;
      const int lo_c = center_c - window / 2;
      if (r < lo_r || r > lo_r + window - 1 || c < lo_c || c > lo_c + window - 1)
        continue;
      all.emplace_back(patch_ssd(query_img, qr, qc, hay, r, c, side), r, c);
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<Match> out;
  for (int i = 0; i < k && i < static_cast<int>(all.size()); ++i) {
    out.push_back({std::get<1>(all[i]), std::get<2>(all[i]),
                   std::sqrt(std::get<0>(all[i]))});
  }
  return out;
}

// Non-local aggregation (identity value transform, Gaussian weights) over
// the k nearest same-scale patches, stride 1, then overlap averaging.
inline Image brute_same_scale(const Image& img, int k, int side, int window,
                              double bandwidth) {
  const int w = img.width(), h = img.height(), ch = img.channels();
  std::vector<double> sum(static_cast<std::size_t>(w) * h * ch, 0.0);
  std::vector<int> cnt(static_cast<std::size_t>(w) * h, 0);
  for (int qr = 0; qr + side <= h; ++qr) {
    for (int qc = 0; qc + side <= w; ++qc) {
      const auto nn = brute_knn(img, qr, qc, img, qr, qc, window, k, side);
      std::vector<double> wts;
      double total = 0.0;
      for (const Match& m : nn) {
        wts.push_back(std::exp(-m.distance * m.distance / bandwidth));
        total += wts.back();
      }
      for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
          ++cnt[static_cast<std::size_t>(qr + r) * w + qc + c];
          for (int z = 0; z < ch; ++z) {
            double v = 0.0;
            for (std::size_t n = 0; n < nn.size(); ++n)
              v += wts[n] / total * img.at(nn[n].row + r, nn[n].col + c, z);
            sum[(static_cast<std::size_t>(qr + r) * w + qc + c) * ch + z] += v;
          }
        }
    }
  }
  Image out(w, h, ch);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      for (int z = 0; z < ch; ++z)
        out.at(r, c, z) = std::clamp(
            sum[(static_cast<std::size_t>(r) * w + c) * ch + z] /
                cnt[static_cast<std::size_t>(r) * w + c],
            0.0, 1.0);
  return out;
}

inline double y_of(const Image& img, int r, int c) {
  if (img.channels() == 1) return img.at(r, c, 0);
  return (16.0 + 65.481 * img.at(r, c, 0) + 128.553 * img.at(r, c, 1) +
          24.966 * img.at(r, c, 2)) /
         255.0;
}

inline double psnr_loop(const Image& a, const Image& b, int crop) {
  double sse = 0.0;
  long n = 0;
  for (int r = crop; r < a.height() - crop; ++r)
    for (int c = crop; c < a.width() - crop; ++c) {
      const double d = y_of(a, r, c) - y_of(b, r, c);
      sse += d * d;
      ++n;
    }
  if (sse == 0.0) return INFINITY;
  return 10.0 * std::log10(1.0 / (sse / n));
}

// Literal SSIM: for every 11x11 window fully inside the cropped region,
// weighted moments with the 2-D Gaussian, then the SSIM formula.
inline double ssim_loop(const Image& a, const Image& b, int crop) {
  double g[11][11];
  double gsum = 0.0;
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) {
      g[i][j] = std::exp(-((i - 5) * (i - 5) + (j - 5) * (j - 5)) / (2 * 1.5 * 1.5));
      gsum += g[i][j];
    }
  const double c1 = 0.0001, c2 = 0.0009;
  double total = 0.0;
  long n = 0;
  for (int r = crop; r + 11 <= a.height() - crop; ++r)
    for (int c = crop; c + 11 <= a.width() - crop; ++c) {
      double mx = 0, my = 0;
      for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) {
          mx += g[i][j] / gsum * y_of(a, r + i, c + j);
          my += g[i][j] / gsum * y_of(b, r + i, c + j);
        }
      double vx = 0, vy = 0, cv = 0;
      for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) {
          const double dx = y_of(a, r + i, c + j) - mx;
          const double dy = y_of(b, r + i, c + j) - my;
          vx += g[i][j] / gsum * dx * dx;
          vy += g[i][j] / gsum * dy * dy;
          cv += g[i][j] / gsum * dx * dy;
        }
      total += ((2 * mx * my + c1) * (2 * cv + c2)) /
               ((mx * mx + my * my + c1) * (vx + vy + c2));
      ++n;
    }
  return total / n;
}

}  // namespace xscale::oracle
