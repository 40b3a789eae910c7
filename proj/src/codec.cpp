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

#include "cordic_dct/codec.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

#include "cordic_dct/errors.hpp"

namespace cdct {

const QuantMatrix& annex_k_luminance() {
  static const QuantMatrix table{{
      16, 11, 10, 16, 24,  40,  51,  61,   //
      12, 12, 14, 19, 26,  58,  60,  55,   //
      14, 13, 16, 24, 40,  57,  69,  56,   //
      14, 17, 22, 29, 51,  87,  80,  62,   //
      18, 22, 37, 56, 68,  109, 103, 77,   //
      24, 35, 55, 64, 81,  104, 113, 92,   //
      49, 64, 78, 87, 103, 121, 120, 101,  //
      72, 92, 95, 98, 112, 100, 103, 99,
  }};
  return table;
}

QuantMatrix quant_table_for_quality(int quality) {
  if (quality < 1 || quality > 100) throw DomainError("quality factor must lie in [1, 100]");
  const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
  QuantMatrix out;
  const auto& base = annex_k_luminance();
  for (int k = 0; k < 64; ++k) out.q[k] = std::clamp((scale * base.q[k] + 50) / 100, 1, 255);
  return out;
}

int round_half_away(double v) { return static_cast<int>(std::round(v)); }

namespace {

Block8 level_shift(const Block8& pixels) {
  Block8 out{};
  for (int k = 0; k < 64; ++k) out[k] = pixels[k] - 128.0;
  return out;
}

CoefBlock quantize(const Block8& coefs, const QuantMatrix& q) {
  CoefBlock out{};
  for (int k = 0; k < 64; ++k) out[k] = round_half_away(coefs[k] / q.q[k]);
  return out;
}

// Engine coefficients in the oracle's scale.
Block8 engine_coefficients(const Block8& shifted, const DctEngine& engine, Instrumentation* instr) {
  Block8 f = dct2d(shifted, engine, instr);
  if (engine.fold_into_quantizer()) {
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v) f[u * 8 + v] *= engine.post_scale_2d(u, v);
  }
  return f;
}

}  // namespace

CoefBlock encode_block(const Block8& pixels, const DctEngine& engine, const QuantMatrix& q,
                       Instrumentation* instr) {
  return quantize(engine_coefficients(level_shift(pixels), engine, instr), q);
}

CoefBlock encode_block_oracle(const Block8& pixels, const QuantMatrix& q) {
  return quantize(dct2d_oracle(level_shift(pixels)), q);
}

Block8 decode_block(const CoefBlock& coefs, const QuantMatrix& q) {
  Block8 dequant{};
  for (int k = 0; k < 64; ++k) dequant[k] = static_cast<double>(coefs[k]) * q.q[k];
  Block8 spatial = idct2d_oracle(dequant);
  for (auto& s : spatial) s = std::clamp(std::round(s + 128.0), 0.0, 255.0);
  return spatial;
}

double psnr(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DimensionMismatch("psnr: images differ in size");
  }
  if (a.empty()) throw DimensionMismatch("psnr: empty images");
  double sse = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = static_cast<double>(a.samples()[k]) - b.samples()[k];
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sse / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

GrayImage roundtrip_image(const GrayImage& image, const DctEngine& engine, int quality,
                          const RoundtripOptions& options, RoundtripStats* stats) {
  const QuantMatrix q = quant_table_for_quality(quality);
  const int bw = (image.width() + 7) / 8;
  const int bh = (image.height() + 7) / 8;
  const std::size_t nblocks = static_cast<std::size_t>(bw) * bh;

  GrayImage out(image.width(), image.height());
  // Per-block partials, reduced in block order so the totals do not depend
  // on how blocks were split across workers.
  std::vector<double> coef_err(nblocks, 0.0);
  std::vector<std::uint64_t> saturations(nblocks, 0);

  auto process = [&](std::size_t b) {
    const int bx = static_cast<int>(b % bw) * 8;
    const int by = static_cast<int>(b / bw) * 8;
    Block8 pixels{};
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) pixels[r * 8 + c] = image.clamped(bx + c, by + r);

    CoefBlock coefs{};
    if (options.oracle_transform) {
      coefs = encode_block_oracle(pixels, q);
    } else {
      Instrumentation instr;
      const Block8 shifted = level_shift(pixels);
      const Block8 f = engine_coefficients(shifted, engine, &instr);
      const Block8 exact = dct2d_oracle(shifted);
      double err = 0.0;
      for (int k = 0; k < 64; ++k) err += std::fabs(f[k] - exact[k]);
      coef_err[b] = err;
      saturations[b] = instr.saturations;
      coefs = quantize(f, q);
    }
    const Block8 decoded = decode_block(coefs, q);
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        const int x = bx + c, y = by + r;
        if (x < image.width() && y < image.height()) {
          out.at(x, y) = static_cast<std::uint8_t>(decoded[r * 8 + c]);
        }
      }
    }
  };

  const int threads = std::clamp(options.threads, 1, 256);
  if (threads == 1) {
    for (std::size_t b = 0; b < nblocks; ++b) process(b);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t b = t; b < nblocks; b += threads) process(b);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  if (stats) {
    double total = 0.0;
    std::uint64_t sat = 0;
    for (std::size_t b = 0; b < nblocks; ++b) {
      total += coef_err[b];
      sat += saturations[b];
    }
    stats->blocks = nblocks;
    stats->saturations = sat;
    stats->mean_abs_coef_error = nblocks ? total / (64.0 * static_cast<double>(nblocks)) : 0.0;
  }
  return out;
}

PsnrReport sweep(const GrayImage& image, std::span<const double> epsilons,
                 std::span<const int> qualities, const SweepOptions& options) {
  std::vector<double> eps(epsilons.begin(), epsilons.end());
  std::vector<int> qs(qualities.begin(), qualities.end());
  std::sort(eps.begin(), eps.end(), std::greater<>());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  std::sort(qs.begin(), qs.end(), std::greater<>());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (int quality : qs) {
    if (quality < 1 || quality > 100) throw DomainError("quality factor must lie in [1, 100]");
  }

  PsnrReport report;
  for (double e : eps) {
    DctConfig config;
    config.epsilon = e;
    config.policy = options.policy;
    config.mode = options.mode;
    config.compensation = options.compensation;
    config.fold_into_quantizer = options.fold_into_quantizer;
    const DctEngine engine(config);
    for (int quality : qs) {
      RoundtripStats stats;
      const GrayImage decoded = roundtrip_image(image, engine, quality, options.roundtrip, &stats);
      report.rows.push_back({e, quality, psnr(image, decoded), stats.mean_abs_coef_error, stats.saturations});
    }
  }
  return report;
}

}  // namespace cdct
