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

#include "cordic_dct/dct8.hpp"

#include <cmath>
#include <numbers>

#include "cordic_dct/detail/arith.hpp"

namespace cdct {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

template <typename Arith>
std::array<typename Arith::value_type, 8> flow_graph(Arith& ar,
                                                     const std::array<typename Arith::value_type, 8>& x,
                                                     const DctEngine& engine) {
  using T = typename Arith::value_type;
  const bool per_rotator = engine.config().compensation == GainCompensation::kPerRotator;
  const auto& gains = engine.rotator_gains();

  // Stage 1 butterflies.
  std::array<T, 4> u{}, v{};
  for (int k = 0; k < 4; ++k) {
    u[k] = ar.add(x[k], x[7 - k]);
    v[k] = ar.sub(x[k], x[7 - k]);
  }

  // Even half: a pi/4 butterfly-rotation and a 3pi/8 rotation.
  T g0 = ar.add(u[0], u[3]);
  T g1 = ar.add(u[1], u[2]);
  T h0 = ar.sub(u[0], u[3]);
  T h1 = ar.sub(u[1], u[2]);
  detail::rotate_in_place(ar, g0, g1, engine.plan(Rotator::kPi4).steps());
  detail::rotate_in_place(ar, h0, h1, engine.plan(Rotator::k3Pi8).steps());

  // Odd half: (v3, v0) by pi/16 and (v2, v1) by 3pi/16.
  T a1 = v[3], a = v[0];
  T b1 = v[2], b = v[1];
  detail::rotate_in_place(ar, a1, a, engine.plan(Rotator::kPi16).steps());
  detail::rotate_in_place(ar, b1, b, engine.plan(Rotator::k3Pi16).steps());

  if (per_rotator) {
    g0 = ar.scale(g0, gains[0]);
    g1 = ar.scale(g1, gains[0]);
    h0 = ar.scale(h0, gains[1]);
    h1 = ar.scale(h1, gains[1]);
    a1 = ar.scale(a1, gains[2]);
    a = ar.scale(a, gains[2]);
    b1 = ar.scale(b1, gains[3]);
    b = ar.scale(b, gains[3]);
  } else {
    b1 = ar.scale(b1, engine.odd_alignment());
    b = ar.scale(b, engine.odd_alignment());
  }

  std::array<T, 8> out{};
  out[0] = g1;
  out[4] = g0;
  out[2] = h1;
  out[6] = h0;
  out[1] = ar.add(a, b);
  out[7] = ar.sub(b1, a1);
  out[3] = ar.sub(ar.sub(a, a1), ar.add(b, b1));
  out[5] = ar.sub(ar.add(a, a1), ar.sub(b, b1));

  if (!engine.fold_into_quantizer()) {
    const auto& ps = engine.post_scale_constants();
    for (int k = 0; k < 8; ++k) out[k] = ar.scale(out[k], ps[k]);
  }
  return out;
}

CoefVec8 run_flow_graph(const SampleVec8& x, const DctEngine& engine, Instrumentation* instr) {
  return detail::with_arith(engine.mode(), instr, [&](auto& ar) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    std::array<T, 8> in{};
    for (int k = 0; k < 8; ++k) in[k] = ar.from_real(x[k]);
    const auto out = flow_graph(ar, in, engine);
    CoefVec8 result{};
    for (int k = 0; k < 8; ++k) result[k] = ar.to_real(out[k]);
    return result;
  });
}

}  // namespace

DctEngine::DctEngine(DctConfig config) : config_(config) {
  const auto angles = dct_rotation_angles();
  for (int r = 0; r < 4; ++r) {
    plans_[r] = decompose(angles[r], config_.epsilon, config_.policy);
    rotator_gains_[r] = make_scale_constant(plans_[r].gain(), config_.mode);
  }
  const double k4 = plans_[0].gain(), k8 = plans_[1].gain(), k16 = plans_[2].gain();
  const double k316 = plans_[3].gain();

  std::array<double, 8> ps{};
  if (config_.compensation == GainCompensation::kPerRotator) {
    ps = {0.5, 0.5, 0.5, 0.5 * kInvSqrt2, 0.5, 0.5 * kInvSqrt2, 0.5, 0.5};
    odd_alignment_ = make_scale_constant(1.0, config_.mode);
  } else {
    ps[0] = ps[4] = 0.5 * k4;
    ps[2] = ps[6] = 0.5 * k8;
    ps[1] = ps[7] = 0.5 * k16;
    ps[3] = ps[5] = 0.5 * kInvSqrt2 * k16;
    odd_alignment_ = make_scale_constant(k316 / k16, config_.mode);
  }
  for (int k = 0; k < 8; ++k) post_scales_[k] = make_scale_constant(ps[k], config_.mode);
}

std::array<double, 8> DctEngine::post_scales() const {
  std::array<double, 8> out{};
  for (int k = 0; k < 8; ++k) out[k] = post_scales_[k].value;
  return out;
}

double DctEngine::post_scale_2d(int u, int v) const {
  return post_scales_[u].value * post_scales_[v].value;
}

OpCounts DctEngine::operation_counts() const {
  Instrumentation instr;
  run_flow_graph(SampleVec8{}, *this, &instr);
  return instr.ops;
}

std::array<std::array<double, 8>, 8> dct_matrix() {
  std::array<std::array<double, 8>, 8> m{};
  for (int k = 0; k < 8; ++k) {
    const double ck = k == 0 ? kInvSqrt2 : 1.0;
    for (int x = 0; x < 8; ++x) {
      m[k][x] = 0.5 * ck * std::cos((2 * x + 1) * k * std::numbers::pi / 16.0);
    }
  }
  return m;
}

CoefVec8 dct8_oracle(const SampleVec8& x) {
  static const auto m = dct_matrix();
  CoefVec8 f{};
  for (int k = 0; k < 8; ++k) {
    double sum = 0.0;
    for (int n = 0; n < 8; ++n) sum += m[k][n] * x[n];
    f[k] = sum;
  }
  return f;
}

// M is orthonormal, so the inverse is M^T.
SampleVec8 idct8_oracle(const CoefVec8& coefs) {
  static const auto m = dct_matrix();
  SampleVec8 x{};
  for (int n = 0; n < 8; ++n) {
    double sum = 0.0;
    for (int k = 0; k < 8; ++k) sum += m[k][n] * coefs[k];
    x[n] = sum;
  }
  return x;
}

CoefVec8 dct8_cordic(const SampleVec8& x, const DctEngine& engine, Instrumentation* instr) {
  return run_flow_graph(x, engine, instr);
}

Block8 transpose(const Block8& block) {
  Block8 t{};
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) t[c * 8 + r] = block[r * 8 + c];
  return t;
}

namespace {

template <typename RowFn>
Block8 separable(const Block8& block, RowFn&& row_fn) {
  Block8 work = block;
  for (int pass = 0; pass < 2; ++pass) {
    Block8 next{};
    for (int r = 0; r < 8; ++r) {
      std::array<double, 8> row{};
      for (int c = 0; c < 8; ++c) row[c] = work[r * 8 + c];
      const auto out = row_fn(row);
      for (int c = 0; c < 8; ++c) next[r * 8 + c] = out[c];
    }
    work = transpose(next);
  }
  return work;
}

}  // namespace

Block8 dct2d(const Block8& block, const DctEngine& engine, Instrumentation* instr) {
  return separable(block, [&](const SampleVec8& row) { return dct8_cordic(row, engine, instr); });
}

Block8 dct2d_oracle(const Block8& block) {
  return separable(block, [](const SampleVec8& row) { return dct8_oracle(row); });
}

Block8 idct2d_oracle(const Block8& block) {
  return separable(block, [](const CoefVec8& row) { return idct8_oracle(row); });
}

}  // namespace cdct
