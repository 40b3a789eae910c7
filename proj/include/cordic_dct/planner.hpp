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

// Micro-rotation planning: decomposes a fixed rotation angle into a sum of
// signed arctangent-radix angles
//
//   theta ~= sum_k sigma_k * atan(2^-i_k),   sigma_k in {+1, -1}
//
// until the residual angle is within a requested tolerance. Each step maps
// to a shift by i_k in a CORDIC rotator, so a plan is the complete wiring of
// a fixed-angle rotator.

#ifndef CORDIC_DCT_PLANNER_HPP_
#define CORDIC_DCT_PLANNER_HPP_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdct {

// Largest shift a micro-rotation may use. atan(2^-30) < 1e-9, the smallest
// accepted tolerance, so no plan ever needs a deeper step.
inline constexpr int kIndexMax = 30;

// Hard cap on steps per plan. Valid input never gets close.
inline constexpr int kMaxPlanSteps = 64;

inline constexpr double kMinTolerance = 1e-9;
inline constexpr double kMaxTolerance = 1e-1;

enum class IndexPolicy {
  // i = floor(-log2(tan|r|)) + 1, the literal index formula.
  kLiteral,
  // i = round(-log2|r|): nearest shift count to the residual magnitude.
  kNearestIndex,
};

std::string_view to_string(IndexPolicy policy);
IndexPolicy parse_index_policy(std::string_view name);

struct MicroRotation {
  int index = 0;      // shift amount i, in [0, kIndexMax]
  int direction = 1;  // +1 or -1

  friend bool operator==(const MicroRotation&, const MicroRotation&) = default;
};

// atan(2^-i), tabulated once for i in [0, kIndexMax].
double micro_angle(int index);
const std::array<double, kIndexMax + 1>& micro_angle_table();

// Immutable result of decompose(). Construct only through decompose().
class RotationPlan {
 public:
  RotationPlan() = default;

  double target() const { return target_; }
  double tolerance() const { return tolerance_; }
  std::span<const MicroRotation> steps() const { return steps_; }
  double residual() const { return residual_; }
  double gain() const { return gain_; }
  IndexPolicy policy() const { return policy_; }
  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }

  std::vector<int> indices() const;
  std::vector<int> directions() const;

 private:
  friend RotationPlan decompose(double, double, IndexPolicy);

  double target_ = 0.0;
  double tolerance_ = 1e-3;
  std::vector<MicroRotation> steps_;
  double residual_ = 0.0;
  double gain_ = 1.0;
  IndexPolicy policy_ = IndexPolicy::kNearestIndex;
};

// Requires |theta| <= pi/2 and epsilon in [1e-9, 1e-1]; throws DomainError
// otherwise. The returned plan satisfies |residual| <= epsilon and
// residual == theta - reconstruct_angle(plan) in binary64.
RotationPlan decompose(double theta, double epsilon,
                       IndexPolicy policy = IndexPolicy::kNearestIndex);

// sum_k sigma_k * atan(2^-i_k), accumulated in step order.
double reconstruct_angle(const RotationPlan& plan);
double reconstruct_angle(std::span<const MicroRotation> steps);

// prod_k 1/sqrt(1 + 2^(-2 i_k)). Independent of the directions.
double gain(const RotationPlan& plan);
double gain(std::span<const MicroRotation> steps);

struct TableRow {
  double angle = 0.0;
  double epsilon = 0.0;
  std::vector<int> indices;
  std::vector<int> directions;
  double residual = 0.0;
  double gain = 1.0;
};

// One row per (angle, epsilon) pair, angles outermost.
std::vector<TableRow> generate_table(std::span<const double> angles,
                                     std::span<const double> epsilons,
                                     IndexPolicy policy = IndexPolicy::kNearestIndex);

// The four fixed angles of the 8-point flow graph: pi/4, 3pi/8, pi/16, 3pi/16.
std::array<double, 4> dct_rotation_angles();

// "2/4/6/9/13" and "+-+-+" renderings used by the table writers.
std::string format_indices(std::span<const int> indices);
std::string format_directions(std::span<const int> directions);

}  // namespace cdct

#endif  // CORDIC_DCT_PLANNER_HPP_
