#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace xscale {

// Row-major, channel-interleaved raster of doubles in [0,1].
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels, double fill = 0.0);
  Image(int width, int height, int channels, std::vector<double> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t size() const noexcept { return data_.size(); }

  double& at(int row, int col, int ch) {
    return data_[index(row, col, ch)];
  }
  double at(int row, int col, int ch) const {
    return data_[index(row, col, ch)];
  }

  std::span<double> pixels() noexcept { return data_; }
  std::span<const double> pixels() const noexcept { return data_; }

  // Clamps every sample to [0,1]; non-finite samples become 0.
  void clamp();

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t index(int row, int col, int ch) const noexcept {
    return (static_cast<std::size_t>(row) * width_ + col) * channels_ + ch;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

enum class BoundaryPolicy { kClampToEdge, kReflect };

// Maps an arbitrary index into [0, n) under the given policy. Reflect mirrors
// without repeating the edge sample: -1 -> 1, n -> n - 2.
int resolve_index(int i, int n, BoundaryPolicy policy);

}  // namespace xscale
