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

// 8-bit grayscale images, binary PGM (P5) I/O and a deterministic synthetic
// test corpus.

#ifndef CORDIC_DCT_IMAGE_HPP_
#define CORDIC_DCT_IMAGE_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cdct {

class GrayImage {
 public:
  GrayImage() = default;
  // Throws DomainError for non-positive dimensions or a size mismatch.
  GrayImage(int width, int height, std::vector<std::uint8_t> samples);
  GrayImage(int width, int height, std::uint8_t fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  std::uint8_t at(int x, int y) const { return samples_[static_cast<std::size_t>(y) * width_ + x]; }
  std::uint8_t& at(int x, int y) { return samples_[static_cast<std::size_t>(y) * width_ + x]; }
  // Coordinates clamped into the image (edge replication).
  std::uint8_t clamped(int x, int y) const;

  const std::vector<std::uint8_t>& samples() const { return samples_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> samples_;
};

// P5 with maxval 255. Header comments are skipped. Throws ParseError.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(std::ostream& out, const GrayImage& image);
void write_pgm(const std::filesystem::path& path, const GrayImage& image);

// Synthetic corpus. Every generator is a pure function of its arguments.
GrayImage synthetic_gradient(int width, int height);
GrayImage synthetic_zone_plate(int width, int height);
GrayImage synthetic_texture(int width, int height, std::uint32_t seed);
// Smooth shading, hard-edged shapes and mild texture: the default
// natural-image stand-in for quality sweeps.
GrayImage synthetic_scene(int width, int height, std::uint32_t seed = 20140501u);

// "gradient", "zoneplate", "texture" or "scene" at 512x512.
GrayImage synthetic_by_name(std::string_view name);

}  // namespace cdct

#endif  // CORDIC_DCT_IMAGE_HPP_
