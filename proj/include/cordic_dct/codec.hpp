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

// Baseline-JPEG style block codec used to measure how rotator precision
// shows up in reconstructed image quality. Entropy coding is omitted: PSNR
// depends only on the transform and the quantizer.

#ifndef CORDIC_DCT_CODEC_HPP_
#define CORDIC_DCT_CODEC_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cordic_dct/dct8.hpp"
#include "cordic_dct/image.hpp"

namespace cdct {

// Row-major 8x8 quantizer steps, each in [1, 255].
struct QuantMatrix {
  std::array<int, 64> q{};

  int at(int u, int v) const { return q[u * 8 + v]; }
  friend bool operator==(const QuantMatrix&, const QuantMatrix&) = default;
};

// ITU-T T.81 Annex K, Table K.1 (luminance).
const QuantMatrix& annex_k_luminance();

// IJG scaling: S = 5000/Q below 50, else 200 - 2Q;
// q = clamp(floor((S*base + 50)/100), 1, 255). Throws DomainError outside [1, 100].
QuantMatrix quant_table_for_quality(int quality);

using CoefBlock = std::array<int, 64>;

// Half away from zero.
int round_half_away(double v);

// Level shift by -128, engine transform, divide by q and round.
CoefBlock encode_block(const Block8& pixels, const DctEngine& engine, const QuantMatrix& q,
                       Instrumentation* instr = nullptr);
// Same chain with the exact binary64 transform.
CoefBlock encode_block_oracle(const Block8& pixels, const QuantMatrix& q);
// Dequantize, exact inverse transform, +128, round, clamp to [0, 255].
Block8 decode_block(const CoefBlock& coefs, const QuantMatrix& q);

// 10 log10(255^2 / MSE); +infinity for identical images.
// Throws DimensionMismatch when sizes differ.
double psnr(const GrayImage& a, const GrayImage& b);

struct RoundtripOptions {
  // Worker threads for the block loop; results do not depend on it.
  int threads = 1;
  // Encode with the exact transform instead of the engine.
  bool oracle_transform = false;
};

struct RoundtripStats {
  std::uint64_t saturations = 0;
  // Mean |engine - exact| over all unquantized 2-D coefficients.
  double mean_abs_coef_error = 0.0;
  std::size_t blocks = 0;
};

// Pads to a multiple of 8 by edge replication, encodes and decodes every
// block, crops back to the original size.
GrayImage roundtrip_image(const GrayImage& image, const DctEngine& engine, int quality,
                          const RoundtripOptions& options = {}, RoundtripStats* stats = nullptr);

struct PsnrRow {
  double epsilon = 0.0;
  int quality = 0;
  double psnr_db = 0.0;
  double mean_abs_coef_error = 0.0;
  std::uint64_t saturations = 0;
};

struct PsnrReport {
  std::vector<PsnrRow> rows;
};

struct SweepOptions {
  IndexPolicy policy = IndexPolicy::kNearestIndex;
  ArithmeticMode mode = ArithmeticMode::exact_float();
  GainCompensation compensation = GainCompensation::kFolded;
  bool fold_into_quantizer = false;
  RoundtripOptions roundtrip;
};

// One row per (epsilon, quality), sorted by epsilon descending then quality
// descending. Duplicates are dropped.
PsnrReport sweep(const GrayImage& image, std::span<const double> epsilons,
                 std::span<const int> qualities, const SweepOptions& options = {});

}  // namespace cdct

#endif  // CORDIC_DCT_CODEC_HPP_
