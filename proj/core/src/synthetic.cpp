#include "xscale/synthetic.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "xscale/error.hpp"
#include "xscale/resample.hpp"

namespace xscale {

namespace {

constexpr int kCanvasPeriods = 8;

double unit_sample(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Seeded period x period RGB texture: white noise, two passes of a circular
// 3x3 box blur, then stretched per channel to [0.15, 0.85].
Image base_tile(std::uint64_t seed, int period) {
  std::mt19937_64 rng(seed);
  Image tile(period, period, 3);
  for (double& v : tile.pixels()) v = unit_sample(rng);
  for (int pass = 0; pass < 2; ++pass) {
    Image blurred(period, period, 3);
    for (int r = 0; r < period; ++r) {
      for (int c = 0; c < period; ++c) {
        for (int ch = 0; ch < 3; ++ch) {
          double sum = 0.0;
          for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
              sum += tile.at((r + dr + period) % period,
                             (c + dc + period) % period, ch);
            }
          }
          blurred.at(r, c, ch) = sum / 9.0;
        }
      }
    }
    tile = std::move(blurred);
  }
  for (int ch = 0; ch < 3; ++ch) {
    double lo = 1.0, hi = 0.0;
    for (int r = 0; r < period; ++r) {
      for (int c = 0; c < period; ++c) {
        lo = std::min(lo, tile.at(r, c, ch));
        hi = std::max(hi, tile.at(r, c, ch));
      }
    }
    const double span = hi > lo ? hi - lo : 1.0;
    for (int r = 0; r < period; ++r) {
      for (int c = 0; c < period; ++c) {
        tile.at(r, c, ch) = 0.15 + 0.7 * (tile.at(r, c, ch) - lo) / span;
      }
    }
  }
  return tile;
}

Image tiled(const Image& tile, int width, int height) {
  Image out(width, height, tile.channels());
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      for (int ch = 0; ch < tile.channels(); ++ch) {
        out.at(r, c, ch) = tile.at(r % tile.height(), c % tile.width(), ch);
      }
    }
  }
  return out;
}

// One period of the tiled texture after `level` successive 1/scale
// resamplings, cut from deep inside a larger canvas so the canvas border
// does not reach it. The result is exactly what the same resampling chain
// produces in the interior of any region tiled with the base texture.
Image level_tile(const Image& base, int scale, int level) {
  const int canvas_side = base.width() * kCanvasPeriods;
  Image canvas = tiled(base, canvas_side, canvas_side);
  int period = base.width();
  for (int i = 0; i < level; ++i) {
    canvas = bicubic_resample(canvas, 1.0 / scale);
    period /= scale;
  }
  const int offset = period * (kCanvasPeriods / 2);
  Image tile(period, period, base.channels());
  for (int r = 0; r < period; ++r) {
    for (int c = 0; c < period; ++c) {
      for (int ch = 0; ch < base.channels(); ++ch) {
        tile.at(r, c, ch) = canvas.at(offset + r, offset + c, ch);
      }
    }
  }
  return tile;
}

}  // namespace

SyntheticScheme parse_scheme(std::string_view text) {
  if (text == "tiled-multiscale") return SyntheticScheme::kTiledMultiscale;
  throw Error(ErrorKind::kConfig,
              "unknown synthetic scheme '" + std::string(text) + "'");
}

SyntheticPair generate_synthetic(std::uint64_t seed, int size, int scale,
                                 SyntheticScheme scheme) {
  if (scale < 2) {
    throw Error(ErrorKind::kConfig, "synthetic pairs need scale >= 2");
  }
  if (size % (2 * scale) != 0 || size < 8 * scale) {
    throw Error(ErrorKind::kInvalidDimension,
                "size " + std::to_string(size) +
                    " must be a multiple of " + std::to_string(2 * scale) +
                    " and at least " + std::to_string(8 * scale));
  }
  (void)scheme;  // kTiledMultiscale is the only scheme

  // The native texture lives in square islands on a lattice; everything
  // else holds the texture reduced by 1/scale. Measured in the twice-reduced
  // image, islands are 16 samples wide every 32 samples, so a 30-wide search
  // window centered anywhere reaches a clean island interior holding every
  // phase of the (4-sample) reduced period.
  const int period = 4 * scale * scale;
  const int island = 16 * scale * scale;
  const int spacing = 2 * island;
  const int margin = (spacing - island) / 2;
  const Image base = base_tile(seed, period);
  const Image native = level_tile(base, scale, 0);
  const Image reduced = level_tile(base, scale, 1);

  Image hr(size, size, 3);
  for (int r = 0; r < size; ++r) {
    const bool row_in = (r % spacing) >= margin && (r % spacing) < margin + island;
    for (int c = 0; c < size; ++c) {
      const bool col_in =
          (c % spacing) >= margin && (c % spacing) < margin + island;
      const Image& tile = row_in && col_in ? native : reduced;
      const int p = tile.width();
      for (int ch = 0; ch < 3; ++ch) hr.at(r, c, ch) = tile.at(r % p, c % p, ch);
    }
  }
  SyntheticPair pair;
  pair.lr = bicubic_resample(hr, 1.0 / scale);
  pair.hr = std::move(hr);
  return pair;
}

}  // namespace xscale
