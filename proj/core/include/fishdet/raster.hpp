#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace fishdet {

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  bool operator==(const Rgb&) const = default;
};

/// Row-major RGB raster with channels normalized to [0, 1].
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;

  RgbImage() = default;
  RgbImage(int w, int h, Rgb fill = {});

  Rgb& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  const Rgb& at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::size_t pixel_count() const { return pixels.size(); }
};

/// Row-major single-channel raster with intensities in [0, 1].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0);

  double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
};

/// Per-pixel {0,1} selector with the dimensions of the image it masks.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  BinaryMask() = default;
  BinaryMask(int w, int h, std::uint8_t fill = 0);

  bool test(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool value) {
    bits[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0;
  }
  std::size_t count() const;
};

/// Decodes a PNG or binary PPM (P6, maxval 255) file. 8-bit channels map to
/// [0,1] by v/255; alpha, if present, is discarded.
RgbImage load_image(const std::filesystem::path& path);

/// Encodes to PNG or PPM depending on the file extension (.ppm/.pnm -> P6,
/// anything else -> PNG). Channels are quantized with round(v*255).
void save_image(const RgbImage& image, const std::filesystem::path& path);

/// Rec. 601 luma: 0.299 r + 0.587 g + 0.114 b.
GrayImage to_gray(const RgbImage& image);

}  // namespace fishdet
