/*
 * Copyright 2026 The cordic-dct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cordic_dct/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>

#include "cordic_dct/errors.hpp"

namespace cdct {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width <= 0 || height <= 0) throw DomainError("image dimensions must be positive");
  if (samples_.size() != static_cast<std::size_t>(width) * height) {
    throw DomainError("sample count does not match width x height");
  }
}

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : GrayImage(width, height,
                std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                              std::max(height, 0),
                                          fill)) {}

std::uint8_t GrayImage::clamped(int x, int y) const {
  return at(std::clamp(x, 0, width_ - 1), std::clamp(y, 0, height_ - 1));
}

namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string ignored;
      std::getline(in, ignored);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      in.get();
    } else {
      return;
    }
  }
}

int read_header_int(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  long value = -1;
  if (!(in >> value) || value <= 0 || value > (1L << 24)) {
    throw ParseError(std::string("PGM: bad ") + what);
  }
  return static_cast<int>(value);
}

std::uint8_t to_pixel(double v) { return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0)); }

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5') {
    throw ParseError("PGM: expected binary P5 magic");
  }
  const int width = read_header_int(in, "width");
  const int height = read_header_int(in, "height");
  const int maxval = read_header_int(in, "maxval");
  if (maxval != 255) throw ParseError("PGM: only maxval 255 is supported");
  // Exactly one whitespace byte separates the header from the raster.
  const int sep = in.get();
  if (sep != ' ' && sep != '\t' && sep != '\n' && sep != '\r') {
    throw ParseError("PGM: missing separator after maxval");
  }
  std::vector<std::uint8_t> samples(static_cast<std::size_t>(width) * height);
  if (!in.read(reinterpret_cast<char*>(samples.data()), static_cast<std::streamsize>(samples.size()))) {
    throw ParseError("PGM: truncated raster");
  }
  return GrayImage(width, height, std::move(samples));
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.samples().data()),
            static_cast<std::streamsize>(image.samples().size()));
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  write_pgm(out, image);
  if (!out) throw ParseError("write failed for " + path.string());
}

GrayImage synthetic_gradient(int width, int height) {
  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / width, v = static_cast<double>(y) / height;
      // Diagonal ramp bent by a slow vignette so no block is exactly planar.
      const double ramp = 40.0 + 170.0 * (0.6 * u + 0.4 * v * v);
      const double vignette = 25.0 * std::cos(std::numbers::pi * (u - 0.5)) * std::cos(std::numbers::pi * (v - 0.5));
      img.at(x, y) = to_pixel(ramp + vignette);
    }
  }
  return img;
}

GrayImage synthetic_zone_plate(int width, int height) {
  GrayImage img(width, height);
  const double cx = 0.5 * width, cy = 0.5 * height;
  const double k = std::numbers::pi / (2.0 * std::max(width, height));
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      img.at(x, y) = to_pixel(127.5 + 127.5 * std::cos(k * r2));
    }
  }
  return img;
}

// mt19937 output is fully specified by the standard; distributions are not,
// so samples are mapped by hand.
GrayImage synthetic_texture(int width, int height, std::uint32_t seed) {
  std::mt19937 rng(seed);
  GrayImage img(width, height);
  for (auto y = 0; y < height; ++y)
    for (auto x = 0; x < width; ++x) img.at(x, y) = static_cast<std::uint8_t>(rng() >> 24);
  return img;
}

GrayImage synthetic_scene(int width, int height, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto uniform = [&rng] { return (rng() >> 8) * (1.0 / 16777216.0); };

  std::vector<double> field(static_cast<std::size_t>(width) * height);
  const double w = width, h = height;
  // Smooth illumination.
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = x / w, v = y / h;
      field[static_cast<std::size_t>(y) * width + x] =
          90.0 + 60.0 * u + 30.0 * std::sin(2.0 * std::numbers::pi * v) * std::cos(3.0 * u);
    }
  }
  // Hard-edged discs with their own shading.
  for (int d = 0; d < 24; ++d) {
    const double cx = uniform() * w, cy = uniform() * h;
    const double radius = (0.03 + 0.12 * uniform()) * std::min(w, h);
    const double level = 30.0 + 200.0 * uniform();
    const double tilt = (uniform() - 0.5) * 0.6;
    for (int y = std::max(0, static_cast<int>(cy - radius)); y < std::min(height, static_cast<int>(cy + radius) + 1); ++y) {
      for (int x = std::max(0, static_cast<int>(cx - radius)); x < std::min(width, static_cast<int>(cx + radius) + 1); ++x) {
        const double dx = x - cx, dy = y - cy;
        if (dx * dx + dy * dy <= radius * radius) {
          field[static_cast<std::size_t>(y) * width + x] = level + tilt * (dx + dy);
        }
      }
    }
  }
  // Fine texture: smoothed noise plus a few oriented stripes.
  std::vector<double> noise(field.size());
  for (auto& n : noise) n = uniform() - 0.5;
  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double acc = 0.0;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int xx = std::clamp(x + dx, 0, width - 1), yy = std::clamp(y + dy, 0, height - 1);
          acc += noise[static_cast<std::size_t>(yy) * width + xx];
        }
      const double stripes = 6.0 * std::sin(0.35 * x + 0.2 * y) * (y > height / 2 ? 1.0 : 0.3);
      img.at(x, y) = to_pixel(field[static_cast<std::size_t>(y) * width + x] + 8.0 * acc + stripes);
    }
  }
  return img;
}

GrayImage synthetic_by_name(std::string_view name) {
  if (name == "gradient") return synthetic_gradient(512, 512);
  if (name == "zoneplate") return synthetic_zone_plate(512, 512);
  if (name == "texture") return synthetic_texture(512, 512, 7u);
  if (name == "scene") return synthetic_scene(512, 512);
  throw DomainError("unknown synthetic image '" + std::string(name) + "'");
}

}  // namespace cdct
