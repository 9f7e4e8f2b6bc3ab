#include "xscale/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "xscale/error.hpp"

namespace xscale {

namespace fs = std::filesystem;

namespace {

using Bytes = std::vector<std::uint8_t>;

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  Bytes bytes((std::istreambuf_iterator<char>(in)),
              std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed: " + path.string());
  return bytes;
}

void write_file(const fs::path& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot create " + path.string());
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw Error(ErrorKind::kIo, "write failed: " + path.string());
}

std::uint8_t quantize(double v) {
  if (!std::isfinite(v)) return 0;
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

Image from_bytes(int width, int height, int channels, const std::uint8_t* raw) {
  std::vector<double> data(static_cast<std::size_t>(width) * height * channels);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = raw[i] / 255.0;
  return Image(width, height, channels, std::move(data));
}

Bytes to_bytes(const Image& img) {
  Bytes raw(img.size());
  auto px = img.pixels();
  std::transform(px.begin(), px.end(), raw.begin(), quantize);
  return raw;
}

bool is_png(const Bytes& b) {
  return b.size() >= 8 && png_sig_cmp(b.data(), 0, 8) == 0;
}

bool is_pnm(const Bytes& b) {
  return b.size() >= 2 && b[0] == 'P' && (b[1] == '5' || b[1] == '6');
}

Image decode_png(const Bytes& bytes, const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw Error(ErrorKind::kCorruptFile,
                path.string() + ": " + image.message);
  }
  if (image.format & (PNG_FORMAT_FLAG_ALPHA | PNG_FORMAT_FLAG_LINEAR)) {
    png_image_free(&image);
    throw Error(ErrorKind::kUnsupportedFormat,
                path.string() + ": only 8-bit gray or RGB PNG without alpha");
  }
  const int channels = (image.format & PNG_FORMAT_FLAG_COLOR) ? 3 : 1;
  image.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  Bytes raw(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, raw.data(), 0, nullptr)) {
    const std::string message = image.message;
    png_image_free(&image);
    throw Error(ErrorKind::kCorruptFile, path.string() + ": " + message);
  }
  return from_bytes(static_cast<int>(image.width),
                    static_cast<int>(image.height), channels, raw.data());
}

// Minimal binary PNM header reader: magic, width, height, maxval with
// '#' comments, then exactly one whitespace byte.
Image decode_pnm(const Bytes& bytes, const fs::path& path) {
  const int channels = bytes[1] == '6' ? 3 : 1;
  std::size_t pos = 2;
  auto corrupt = [&](const std::string& why) {
    return Error(ErrorKind::kCorruptFile, path.string() + ": " + why);
  };
  auto next_int = [&]() {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
      throw corrupt("malformed header");
    }
    long value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos++] - '0');
      if (value > (1L << 24)) throw corrupt("header value out of range");
    }
    return static_cast<int>(value);
  };
  const int width = next_int();
  const int height = next_int();
  const int maxval = next_int();
  if (width <= 0 || height <= 0) throw corrupt("zero-sized image");
  if (maxval != 255) {
    throw Error(ErrorKind::kUnsupportedFormat,
                path.string() + ": only maxval 255 is supported");
  }
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw corrupt("malformed header");
  }
  ++pos;
  const std::size_t need = static_cast<std::size_t>(width) * height * channels;
  if (bytes.size() - pos < need) throw corrupt("truncated raster");
  return from_bytes(width, height, channels, bytes.data() + pos);
}

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return ext;
}

}  // namespace

Image load_image(const fs::path& path) {
  const Bytes bytes = read_file(path);
  if (is_png(bytes)) return decode_png(bytes, path);
  if (is_pnm(bytes)) return decode_pnm(bytes, path);
  if (bytes.size() < 8 && !bytes.empty() &&
      std::memcmp(bytes.data(), "\x89PNG", std::min<std::size_t>(4, bytes.size())) == 0) {
    throw Error(ErrorKind::kCorruptFile, path.string() + ": truncated PNG");
  }
  throw Error(ErrorKind::kUnsupportedFormat,
              path.string() + ": not a PNG, PGM or PPM file");
}

void save_image(const Image& img, const fs::path& path) {
  if (img.empty()) {
    throw Error(ErrorKind::kInvalidDimension, "cannot save an empty image");
  }
  const std::string ext = lower_extension(path);
  const Bytes raw = to_bytes(img);
  if (ext == ".png") {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    image.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    png_alloc_size_t size = 0;
    if (!png_image_write_get_memory_size(image, size, 0, raw.data(), 0,
                                         nullptr)) {
      throw Error(ErrorKind::kIo, path.string() + ": " + image.message);
    }
    Bytes encoded(size);
    if (!png_image_write_to_memory(&image, encoded.data(), &size, 0,
                                   raw.data(), 0, nullptr)) {
      throw Error(ErrorKind::kIo, path.string() + ": " + image.message);
    }
    write_file(path, encoded.data(), size);
    return;
  }
  const bool pgm = ext == ".pgm";
  const bool ppm = ext == ".ppm";
  if (ext == ".pnm" || pgm || ppm) {
    if ((pgm && img.channels() != 1) || (ppm && img.channels() != 3)) {
      throw Error(ErrorKind::kChannelMismatch,
                  path.string() + ": extension does not match " +
                      std::to_string(img.channels()) + " channel(s)");
    }
    std::string header = (img.channels() == 3 ? "P6\n" : "P5\n") +
                         std::to_string(img.width()) + " " +
                         std::to_string(img.height()) + "\n255\n";
    Bytes file(header.begin(), header.end());
    file.insert(file.end(), raw.begin(), raw.end());
    write_file(path, file.data(), file.size());
    return;
  }
  throw Error(ErrorKind::kUnsupportedFormat,
              path.string() + ": unsupported extension '" + ext + "'");
}

}  // namespace xscale
