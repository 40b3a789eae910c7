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

// Rotation-mode CORDIC execution of precomputed plans.
//
// A step with shift i and direction s applies the unscaled matrix
//
//   | 1        -s*2^-i |
//   | s*2^-i    1      |
//
// whose determinant is 1 + 2^-2i. The accumulated gain is compensated once,
// after the last step, by gain(plan).

#ifndef CORDIC_DCT_CORDIC_HPP_
#define CORDIC_DCT_CORDIC_HPP_

#include <vector>

#include "cordic_dct/arithmetic.hpp"
#include "cordic_dct/planner.hpp"

namespace cdct {

struct Vector2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vector2&, const Vector2&) = default;
};

// Row-major [[a, b], [c, d]].
struct Matrix2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  static Matrix2 identity() { return {}; }

  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Matrix2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
  Vector2 operator*(const Vector2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  double determinant() const { return a * d - b * c; }
};

double frobenius_distance(const Matrix2& m, const Matrix2& n);

struct CsdTerm {
  int shift = 0;  // weight 2^-shift; -1 allowed for the 2^1 term
  int sign = 1;

  friend bool operator==(const CsdTerm&, const CsdTerm&) = default;
};

// Sparse signed power-of-two expansion of a constant, so that multiplying
// by it needs only shifts and adds. Shifts are strictly increasing.
struct CsdScale {
  double value = 1.0;
  std::vector<CsdTerm> terms;
  double error_bound = 0.0;  // |value - approximation()|

  double approximation() const;
};

// Greedy expansion: repeatedly take the signed power of two nearest to the
// remainder. Requires value in (0, 2) and max_terms in [1, 16]. Throws
// ToleranceUnreachable when max_terms runs out first.
CsdScale csd_scale(double value, int max_terms, double tolerance);

// Tolerance used for constant multipliers in fixed-point mode.
double fixed_scale_tolerance(const FixedPointFormat& format);

// A constant multiplier carried in both forms: the exact factor for float
// datapaths and its shift-add expansion for fixed-point ones.
struct ScaleConstant {
  double value = 1.0;
  CsdScale csd;
};

ScaleConstant make_scale_constant(double value, const ArithmeticMode& mode);

// One unscaled micro-rotation. In fixed-point mode the input is rounded to
// the format grid, 2^-i * t is an arithmetic right shift (floor), and the
// result is range-checked per the overflow policy.
Vector2 micro_rotate(Vector2 v, MicroRotation step, const ArithmeticMode& mode,
                     Instrumentation* instr = nullptr);

// Folds micro_rotate over the plan. With compensate, multiplies both
// components by gain(plan): exactly in float mode, via csd_scale in
// fixed-point mode.
Vector2 apply_plan(Vector2 v, const RotationPlan& plan, const ArithmeticMode& mode,
                   bool compensate, Instrumentation* instr = nullptr);

// Product of the unscaled step matrices in step order (later steps on the left).
Matrix2 plan_matrix(const RotationPlan& plan);

// [[cos t, -sin t], [sin t, cos t]]
Matrix2 ideal_rotation_matrix(double theta);

}  // namespace cdct

#endif  // CORDIC_DCT_CORDIC_HPP_
