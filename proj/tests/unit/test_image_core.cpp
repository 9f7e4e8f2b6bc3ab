#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "xscale/xscale.hpp"

using namespace xscale;

TEST_CASE("cubic kernel taps") {
  CHECK(cubic_kernel(0.0) == 1.0);
  CHECK(cubic_kernel(1.0) == 0.0);
  CHECK(cubic_kernel(2.0) == 0.0);
  CHECK(cubic_kernel(-2.5) == 0.0);
  // Partition of unity at every fractional phase.
  for (double t = 0.0; t < 1.0; t += 0.0625) {
    double sum = 0.0;
    for (int j = -2; j <= 2; ++j) sum += cubic_kernel(t - j);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cubic_kernel(t) == doctest::Approx(oracle::keys_cubic(t)).epsilon(1e-15));
  }
}

TEST_CASE("resample of a constant image is that constant") {
  for (double scale : {0.5, 2.0, 1.0 / 3.0, 3.0, 0.75, 1.6}) {
    Image img(12, 9, 3, 0.5);
    const Image out = bicubic_resample(img, scale);
    CHECK(out.width() == std::lround(12 * scale));
    CHECK(out.height() == std::lround(9 * scale));
    for (double v : out.pixels()) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("scale 1 is the exact identity") {
  Image ramp(4, 4, 1);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) ramp.at(r, c, 0) = (r * 4 + c) / 15.0;
  CHECK(bicubic_resample(ramp, 1.0) == ramp);
  const Image rnd = oracle::random_image(3, 9, 7, 3);
  CHECK(bicubic_resample(rnd, 1.0) == rnd);
}

TEST_CASE("impulse upsampled x2 equals products of kernel taps") {
  Image impulse(8, 8, 1, 0.0);
  impulse.at(4, 4, 0) = 1.0;
  const Image out = bicubic_resample(impulse, 2.0);
  REQUIRE(out.width() == 16);
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      const double expect =
          std::clamp(oracle::upsample_direct(impulse, 2, r, c, 0), 0.0, 1.0);
      CHECK(out.at(r, c, 0) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  // Spot value: output (8,8) sits at source 3.75 on both axes.
  const double tap = oracle::keys_cubic(0.25);
  CHECK(out.at(8, 8, 0) == doctest::Approx(tap * tap).epsilon(1e-12));
}

TEST_CASE("separable resampling matches direct 2-D evaluation on interior") {
  const Image img = oracle::random_image(11, 10, 10, 1);
  const Image out = bicubic_resample(img, 2.0);
  for (int r = 4; r < 16; ++r)
    for (int c = 4; c < 16; ++c) {
      const double expect =
          std::clamp(oracle::upsample_direct(img, 2, r, c, 0), 0.0, 1.0);
      CHECK(out.at(r, c, 0) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("resample outputs are clamped and zero-sized outputs rejected") {
  Image step(8, 1, 1, 0.0);
  for (int c = 4; c < 8; ++c) step.at(0, c, 0) = 1.0;
  const Image up = bicubic_resample(step, 3.0);
  for (double v : up.pixels()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  try {
    bicubic_resample(Image(2, 2, 1), 0.1);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidDimension);
  }
  CHECK_THROWS_AS(bicubic_resample(Image(2, 2, 1), -1.0), Error);
}

TEST_CASE("boundary index resolution") {
  CHECK(resolve_index(-1, 5, BoundaryPolicy::kReflect) == 1);
  CHECK(resolve_index(-2, 5, BoundaryPolicy::kReflect) == 2);
  CHECK(resolve_index(5, 5, BoundaryPolicy::kReflect) == 3);
  CHECK(resolve_index(6, 5, BoundaryPolicy::kReflect) == 2);
  CHECK(resolve_index(-7, 5, BoundaryPolicy::kReflect) == 1);
  CHECK(resolve_index(-3, 5, BoundaryPolicy::kClampToEdge) == 0);
  CHECK(resolve_index(9, 5, BoundaryPolicy::kClampToEdge) == 4);
  CHECK(resolve_index(3, 1, BoundaryPolicy::kReflect) == 0);
}

TEST_CASE("clamp-to-edge and reflect downsampling both keep constants") {
  Image img(16, 16, 1, 0.3);
  for (auto b : {BoundaryPolicy::kClampToEdge, BoundaryPolicy::kReflect}) {
    const Image down = bicubic_resample(img, 0.5, b);
    for (double v : down.pixels())
      CHECK(v == doctest::Approx(0.3).epsilon(1e-12));
  }
}

TEST_CASE("rgb_to_y reference values") {
  Image white(3, 2, 3, 1.0);
  const Image yw = rgb_to_y(white);
  for (double v : yw.pixels()) CHECK(v == doctest::Approx(235.0 / 255.0));
  Image black(3, 2, 3, 0.0);
  const Image yb = rgb_to_y(black);
  for (double v : yb.pixels()) CHECK(v == doctest::Approx(16.0 / 255.0));
  Image red(1, 1, 3, 0.0);
  red.at(0, 0, 0) = 1.0;
  CHECK(rgb_to_y(red).at(0, 0, 0) == doctest::Approx(81.481 / 255.0));
  CHECK(rgb_to_y(red).channels() == 1);
  try {
    rgb_to_y(Image(2, 2, 1));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kChannelMismatch);
  }
}

TEST_CASE("luma is affine") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double p[3] = {u(rng), u(rng), u(rng)};
    const double q[3] = {u(rng), u(rng), u(rng)};
    const double a = u(rng);
    const double mixed = luma(a * p[0] + (1 - a) * q[0], a * p[1] + (1 - a) * q[1],
                              a * p[2] + (1 - a) * q[2]);
    CHECK(mixed == doctest::Approx(a * luma(p[0], p[1], p[2]) +
                                   (1 - a) * luma(q[0], q[1], q[2]))
                       .epsilon(1e-12));
  }
}

TEST_CASE("image construction validates shape") {
  CHECK_THROWS_AS(Image(0, 3, 1), Error);
  CHECK_THROWS_AS(Image(3, 3, 2), Error);
  CHECK_THROWS_AS(Image(2, 2, 1, std::vector<double>(3)), Error);
  Image img(2, 1, 1, std::vector<double>{-0.5, 2.0});
  img.clamp();
  CHECK(img.at(0, 0, 0) == 0.0);
  CHECK(img.at(0, 1, 0) == 1.0);
}
