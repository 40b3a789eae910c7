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

#include "cordic_dct/cordic.hpp"

#include <algorithm>
#include <cmath>

#include "cordic_dct/detail/arith.hpp"
#include "cordic_dct/errors.hpp"

namespace cdct {

double frobenius_distance(const Matrix2& m, const Matrix2& n) {
  const double da = m.a - n.a, db = m.b - n.b, dc = m.c - n.c, dd = m.d - n.d;
  return std::sqrt(da * da + db * db + dc * dc + dd * dd);
}

double CsdScale::approximation() const {
  double sum = 0.0;
  for (const auto& t : terms) sum += t.sign * std::ldexp(1.0, -t.shift);
  return sum;
}

CsdScale csd_scale(double value, int max_terms, double tolerance) {
  if (!(value > 0.0 && value < 2.0)) throw DomainError("csd_scale value must lie in (0, 2)");
  if (max_terms < 1 || max_terms > 16) throw DomainError("csd_scale max_terms must lie in [1, 16]");
  if (!(tolerance >= 0.0)) throw DomainError("csd_scale tolerance must be non-negative");

  CsdScale out;
  out.value = value;
  double remainder = value;
  while (std::fabs(remainder) > tolerance) {
    if (static_cast<int>(out.terms.size()) == max_terms) {
      throw ToleranceUnreachable("csd_scale: " + std::to_string(max_terms) +
                                 " terms leave remainder " + std::to_string(std::fabs(remainder)));
    }
    // Nearest power of two lies between 2^floor(log2|r|) and twice that.
    const double mag = std::fabs(remainder);
    const int lo_shift = -static_cast<int>(std::floor(std::log2(mag)));
    const double lo = std::ldexp(1.0, -lo_shift);
    const int shift = (2.0 * lo - mag) <= (mag - lo) ? lo_shift - 1 : lo_shift;
    const int sign = remainder > 0.0 ? 1 : -1;
    out.terms.push_back({shift, sign});
    remainder -= sign * std::ldexp(1.0, -shift);
  }
  out.error_bound = std::fabs(remainder);
  return out;
}

double fixed_scale_tolerance(const FixedPointFormat& format) {
  return std::ldexp(1.0, -(std::min(format.frac_bits(), 20) + 4));
}

ScaleConstant make_scale_constant(double value, const ArithmeticMode& mode) {
  ScaleConstant k;
  k.value = value;
  if (mode.is_fixed()) k.csd = csd_scale(value, 16, fixed_scale_tolerance(mode.format()));
  return k;
}

Vector2 micro_rotate(Vector2 v, MicroRotation step, const ArithmeticMode& mode,
                     Instrumentation* instr) {
  if (step.index < 0 || step.index > kIndexMax || (step.direction != 1 && step.direction != -1)) {
    throw DomainError("malformed micro-rotation");
  }
  const MicroRotation steps[1] = {step};
  return detail::with_arith(mode, instr, [&](auto& ar) {
    auto x = ar.from_real(v.x);
    auto y = ar.from_real(v.y);
    detail::rotate_in_place(ar, x, y, steps);
    return Vector2{ar.to_real(x), ar.to_real(y)};
  });
}

Vector2 apply_plan(Vector2 v, const RotationPlan& plan, const ArithmeticMode& mode,
                   bool compensate, Instrumentation* instr) {
  if (plan.empty()) return v;
  const ScaleConstant k = compensate ? make_scale_constant(plan.gain(), mode) : ScaleConstant{};
  return detail::with_arith(mode, instr, [&](auto& ar) {
    auto x = ar.from_real(v.x);
    auto y = ar.from_real(v.y);
    detail::rotate_in_place(ar, x, y, plan.steps());
    if (compensate) {
      x = ar.scale(x, k);
      y = ar.scale(y, k);
    }
    return Vector2{ar.to_real(x), ar.to_real(y)};
  });
}

Matrix2 plan_matrix(const RotationPlan& plan) {
  Matrix2 m = Matrix2::identity();
  for (const auto& s : plan.steps()) {
    const double t = s.direction * std::ldexp(1.0, -s.index);
    m = Matrix2{1.0, -t, t, 1.0} * m;
  }
  return m;
}

Matrix2 ideal_rotation_matrix(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, s, c};
}

}  // namespace cdct
