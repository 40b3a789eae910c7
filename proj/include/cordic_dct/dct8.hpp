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

// 8-point DCT built from butterflies, four fixed-angle CORDIC rotators and
// eight post-scale constants, plus the separable 8x8 transform and exact
// binary64 reference transforms.
//
// Normalization throughout is F(k) = 1/2 C(k) sum_x f(x) cos((2x+1)k pi/16)
// with C(0) = 1/sqrt(2), C(k>0) = 1.

#ifndef CORDIC_DCT_DCT8_HPP_
#define CORDIC_DCT_DCT8_HPP_

#include <array>

#include "cordic_dct/arithmetic.hpp"
#include "cordic_dct/cordic.hpp"
#include "cordic_dct/planner.hpp"

namespace cdct {

using SampleVec8 = std::array<double, 8>;
using CoefVec8 = std::array<double, 8>;
// Row-major 8x8 grid.
using Block8 = std::array<double, 64>;

enum class Rotator { kPi4 = 0, k3Pi8 = 1, kPi16 = 2, k3Pi16 = 3 };

enum class GainCompensation {
  // Rotator gains folded into the output post-scales. The 3pi/16 rotator is
  // first aligned to the pi/16 gain since both feed every odd output.
  kFolded,
  // Each rotator compensates its own gain right after rotating.
  kPerRotator,
};

struct DctConfig {
  double epsilon = 1e-3;
  IndexPolicy policy = IndexPolicy::kNearestIndex;
  ArithmeticMode mode = ArithmeticMode::exact_float();
  GainCompensation compensation = GainCompensation::kFolded;
  // Leave post-scales out of the transform; the quantizer applies them.
  bool fold_into_quantizer = false;
};

// Immutable after construction; safe to share across threads.
class DctEngine {
 public:
  explicit DctEngine(DctConfig config = {});

  const DctConfig& config() const { return config_; }
  double epsilon() const { return config_.epsilon; }
  const ArithmeticMode& mode() const { return config_.mode; }
  bool fold_into_quantizer() const { return config_.fold_into_quantizer; }

  const RotationPlan& plan(Rotator r) const { return plans_[static_cast<int>(r)]; }
  const std::array<RotationPlan, 4>& plans() const { return plans_; }

  // Per-output factors applied after the flow graph. All positive.
  std::array<double, 8> post_scales() const;
  const std::array<ScaleConstant, 8>& post_scale_constants() const { return post_scales_; }
  // Factor for coefficient (u, v) of a 2-D transform: post_scales[u] * post_scales[v].
  double post_scale_2d(int u, int v) const;

  // Multiplier applied to both 3pi/16 rotator outputs under kFolded.
  const ScaleConstant& odd_alignment() const { return odd_alignment_; }
  const std::array<ScaleConstant, 4>& rotator_gains() const { return rotator_gains_; }

  // Operations executed by one 8-point transform in this engine's mode.
  OpCounts operation_counts() const;

 private:
  DctConfig config_;
  std::array<RotationPlan, 4> plans_;
  std::array<ScaleConstant, 4> rotator_gains_;
  ScaleConstant odd_alignment_;
  std::array<ScaleConstant, 8> post_scales_;
};

// Direct evaluation of the defining sum.
CoefVec8 dct8_oracle(const SampleVec8& x);
SampleVec8 idct8_oracle(const CoefVec8& coefs);

// M[k][x] = 1/2 C(k) cos((2x+1)k pi/16).
std::array<std::array<double, 8>, 8> dct_matrix();

// Flow-graph transform. Throws OverflowError in fixed-point mode when the
// engine's overflow policy is kError; saturations are counted otherwise.
CoefVec8 dct8_cordic(const SampleVec8& x, const DctEngine& engine,
                     Instrumentation* instr = nullptr);

Block8 transpose(const Block8& block);

// Rows, transpose, rows, transpose.
Block8 dct2d(const Block8& block, const DctEngine& engine, Instrumentation* instr = nullptr);
Block8 dct2d_oracle(const Block8& block);
Block8 idct2d_oracle(const Block8& block);

}  // namespace cdct

#endif  // CORDIC_DCT_DCT8_HPP_
