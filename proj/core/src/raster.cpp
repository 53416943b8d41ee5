#include "fishdet/raster.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>

#include "fishdet/error.hpp"

namespace fishdet {

RgbImage::RgbImage(int w, int h, Rgb fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

GrayImage::GrayImage(int w, int h, double fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

BinaryMask::BinaryMask(int w, int h, std::uint8_t fill)
    : width(w), height(h), bits(static_cast<std::size_t>(w) * h, fill) {}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

std::uint8_t quantize(double v) {
  double q = std::lround(std::clamp(v, 0.0, 1.0) * 255.0);
  return static_cast<std::uint8_t>(q);
}

// PPM P6 allows '#' comments and arbitrary whitespace between header tokens.
int read_ppm_token(std::FILE* f, const std::filesystem::path& path) {
  int c = std::fgetc(f);
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = std::fgetc(f);
    } else if (!std::isspace(c)) {
      break;
    }
    if (c != EOF) c = std::fgetc(f);
  }
  if (c == EOF || !std::isdigit(c))
    raise(ErrorCode::corrupt_file, "truncated PPM header in " + path.string());
  long value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1 << 20)
      raise(ErrorCode::corrupt_file, "PPM header value out of range in " + path.string());
    c = std::fgetc(f);
  }
  if (c != EOF) std::ungetc(c, f);
  return static_cast<int>(value);
}

RgbImage load_ppm(std::FILE* f, const std::filesystem::path& path) {
  int width = read_ppm_token(f, path);
  int height = read_ppm_token(f, path);
  int maxval = read_ppm_token(f, path);
  if (width < 1 || height < 1)
    raise(ErrorCode::corrupt_file, "non-positive PPM dimensions in " + path.string());
  if (maxval != 255)
    raise(ErrorCode::unsupported_format,
          "PPM maxval " + std::to_string(maxval) + " (only 255 supported) in " + path.string());
  int sep = std::fgetc(f);
  if (sep == EOF || !std::isspace(sep))
    raise(ErrorCode::corrupt_file, "missing separator after PPM header in " + path.string());

  std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> raw(n * 3);
  if (std::fread(raw.data(), 1, raw.size(), f) != raw.size())
    raise(ErrorCode::corrupt_file, "truncated PPM pixel data in " + path.string());

  RgbImage image(width, height);
  for (std::size_t i = 0; i < n; ++i) {
    image.pixels[i] = {raw[3 * i] / 255.0, raw[3 * i + 1] / 255.0, raw[3 * i + 2] / 255.0};
  }
  return image;
}

RgbImage load_png(std::FILE* f, const std::filesystem::path& path) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) raise(ErrorCode::io_failure, "libpng init failed for " + path.string());
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    raise(ErrorCode::io_failure, "libpng init failed for " + path.string());
  }

  std::vector<std::uint8_t> raw;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    raise(ErrorCode::corrupt_file, "invalid PNG data in " + path.string());
  }

  png_init_io(png, f);
  png_read_info(png, info);

  png_uint_32 width = png_get_image_width(png, info);
  png_uint_32 height = png_get_image_height(png, info);

  // Normalize every color type to 8-bit RGB.
  png_byte color_type = png_get_color_type(png, info);
  if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_expand_gray_1_2_4_to_8(png);
    png_set_gray_to_rgb(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  std::size_t row_bytes = png_get_rowbytes(png, info);
  raw.resize(row_bytes * height);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = raw.data() + row_bytes * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  RgbImage image(static_cast<int>(width), static_cast<int>(height));
  for (png_uint_32 y = 0; y < height; ++y) {
    const std::uint8_t* row = raw.data() + row_bytes * y;
    for (png_uint_32 x = 0; x < width; ++x) {
      image.at(static_cast<int>(x), static_cast<int>(y)) = {
          row[3 * x] / 255.0, row[3 * x + 1] / 255.0, row[3 * x + 2] / 255.0};
    }
  }
  return image;
}

void save_ppm(const RgbImage& image, const std::filesystem::path& path) {
  FileHandle f(std::fopen(path.string().c_str(), "wb"));
  if (!f) raise(ErrorCode::io_failure, "cannot open " + path.string() + " for writing");
  std::string header =
      "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> raw(image.pixel_count() * 3);
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    raw[3 * i] = quantize(image.pixels[i].r);
    raw[3 * i + 1] = quantize(image.pixels[i].g);
    raw[3 * i + 2] = quantize(image.pixels[i].b);
  }
  if (std::fwrite(header.data(), 1, header.size(), f.get()) != header.size() ||
      std::fwrite(raw.data(), 1, raw.size(), f.get()) != raw.size())
    raise(ErrorCode::io_failure, "write failed for " + path.string());
}

void save_png(const RgbImage& image, const std::filesystem::path& path) {
  FileHandle f(std::fopen(path.string().c_str(), "wb"));
  if (!f) raise(ErrorCode::io_failure, "cannot open " + path.string() + " for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) raise(ErrorCode::io_failure, "libpng init failed for " + path.string());
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    raise(ErrorCode::io_failure, "libpng init failed for " + path.string());
  }

  std::vector<std::uint8_t> raw(image.pixel_count() * 3);
  std::vector<png_bytep> rows(image.height);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    raise(ErrorCode::io_failure, "PNG encode failed for " + path.string());
  }

  png_init_io(png, f.get());
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    raw[3 * i] = quantize(image.pixels[i].r);
    raw[3 * i + 1] = quantize(image.pixels[i].g);
    raw[3 * i + 2] = quantize(image.pixels[i].b);
  }
  for (int y = 0; y < image.height; ++y)
    rows[y] = raw.data() + static_cast<std::size_t>(y) * image.width * 3;
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

bool has_extension(const std::filesystem::path& path, const char* a, const char* b) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == a || ext == b;
}

}  // namespace

RgbImage load_image(const std::filesystem::path& path) {
  FileHandle f(std::fopen(path.string().c_str(), "rb"));
  if (!f) raise(ErrorCode::io_failure, "cannot open " + path.string());

  unsigned char magic[8] = {};
  std::size_t got = std::fread(magic, 1, sizeof(magic), f.get());
  std::rewind(f.get());

  static const unsigned char png_magic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (got >= 8 && std::memcmp(magic, png_magic, 8) == 0) return load_png(f.get(), path);
  if (got >= 2 && magic[0] == 'P' && magic[1] == '6') {
    std::fseek(f.get(), 2, SEEK_SET);
    return load_ppm(f.get(), path);
  }
  raise(ErrorCode::unsupported_format, "not a PNG or binary PPM file: " + path.string());
}

void save_image(const RgbImage& image, const std::filesystem::path& path) {
  if (image.width < 1 || image.height < 1 ||
      image.pixels.size() != static_cast<std::size_t>(image.width) * image.height)
    raise(ErrorCode::invalid_argument, "malformed image passed to save_image");
  if (has_extension(path, ".ppm", ".pnm"))
    save_ppm(image, path);
  else
    save_png(image, path);
}

GrayImage to_gray(const RgbImage& image) {
  GrayImage gray(image.width, image.height);
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    const Rgb& p = image.pixels[i];
    gray.pixels[i] = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
  }
  return gray;
}

}  // namespace fishdet
