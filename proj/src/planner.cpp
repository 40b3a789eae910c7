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

#include "cordic_dct/planner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cordic_dct/errors.hpp"

namespace cdct {

namespace {

std::array<double, kIndexMax + 1> make_angle_table() {
  std::array<double, kIndexMax + 1> table{};
  for (int i = 0; i <= kIndexMax; ++i) table[i] = std::atan(std::ldexp(1.0, -i));
  return table;
}

int sign_of(double v) { return v > 0.0 ? 1 : -1; }

// Both policies return a candidate shift; values past kIndexMax mean the
// residual is below anything a shift can resolve.
int literal_index(double residual) {
  const double t = std::tan(std::fabs(residual));
  const double i = std::floor(-std::log2(t)) + 1.0;
  if (i < 0.0) return 0;
  if (i > kIndexMax) return kIndexMax + 1;
  return static_cast<int>(i);
}

int nearest_index(double residual) {
  const double i = std::round(-std::log2(std::fabs(residual)));
  if (i < 0.0) return 0;
  if (i > kIndexMax) return kIndexMax + 1;
  return static_cast<int>(i);
}

}  // namespace

std::string_view to_string(IndexPolicy policy) {
  switch (policy) {
    case IndexPolicy::kLiteral:
      return "literal";
    case IndexPolicy::kNearestIndex:
      return "nearest";
  }
  return "unknown";
}

IndexPolicy parse_index_policy(std::string_view name) {
  if (name == "literal") return IndexPolicy::kLiteral;
  if (name == "nearest") return IndexPolicy::kNearestIndex;
  throw DomainError("unknown index policy '" + std::string(name) +
                    "' (expected literal or nearest)");
}

const std::array<double, kIndexMax + 1>& micro_angle_table() {
  static const auto table = make_angle_table();
  return table;
}

double micro_angle(int index) {
  if (index < 0 || index > kIndexMax) {
    throw DomainError("micro-rotation index out of range: " + std::to_string(index));
  }
  return micro_angle_table()[index];
}

std::vector<int> RotationPlan::indices() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.index);
  return out;
}

std::vector<int> RotationPlan::directions() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.direction);
  return out;
}

RotationPlan decompose(double theta, double epsilon, IndexPolicy policy) {
  if (!std::isfinite(theta) || std::fabs(theta) > std::numbers::pi / 2) {
    throw DomainError("angle must satisfy |theta| <= pi/2");
  }
  if (!(epsilon >= kMinTolerance && epsilon <= kMaxTolerance)) {
    throw DomainError("precision must lie in [1e-9, 1e-1]");
  }

  const auto& table = micro_angle_table();
  RotationPlan plan;
  plan.target_ = theta;
  plan.tolerance_ = epsilon;
  plan.policy_ = policy;

  double residual = theta;
  while (std::fabs(residual) > epsilon) {
    if (plan.steps_.size() >= static_cast<std::size_t>(kMaxPlanSteps)) {
      throw NonTerminationError("decomposition exceeded 64 micro-rotations");
    }
    const int index = policy == IndexPolicy::kLiteral ? literal_index(residual)
                                                           : nearest_index(residual);
    if (index > kIndexMax) break;
    const int direction = sign_of(residual);
    const double next = residual - direction * table[index];
    if (policy == IndexPolicy::kNearestIndex && !(std::fabs(next) < std::fabs(residual))) {
      throw NonTerminationError("nearest-index step did not shrink the residual");
    }
    plan.steps_.push_back({index, direction});
    residual = next;
  }
  if (std::fabs(residual) > epsilon) {
    throw NonTerminationError("residual above tolerance after the deepest shift");
  }
  plan.residual_ = residual;
  plan.gain_ = gain(std::span<const MicroRotation>(plan.steps_));
  return plan;
}

double reconstruct_angle(std::span<const MicroRotation> steps) {
  const auto& table = micro_angle_table();
  double sum = 0.0;
  for (const auto& s : steps) sum += s.direction * table[s.index];
  return sum;
}

double reconstruct_angle(const RotationPlan& plan) { return reconstruct_angle(plan.steps()); }

double gain(std::span<const MicroRotation> steps) {
  double k = 1.0;
  for (const auto& s : steps) k *= std::sqrt(1.0 / (1.0 + std::ldexp(1.0, -2 * s.index)));
  return k;
}

double gain(const RotationPlan& plan) { return gain(plan.steps()); }

std::vector<TableRow> generate_table(std::span<const double> angles,
                                     std::span<const double> epsilons, IndexPolicy policy) {
  std::vector<TableRow> rows;
  rows.reserve(angles.size() * epsilons.size());
  for (double angle : angles) {
    for (double eps : epsilons) {
      const RotationPlan plan = decompose(angle, eps, policy);
      rows.push_back({angle, eps, plan.indices(), plan.directions(), plan.residual(), plan.gain()});
    }
  }
  return rows;
}

std::array<double, 4> dct_rotation_angles() {
  constexpr double pi = std::numbers::pi;
  return {pi / 4, 3 * pi / 8, pi / 16, 3 * pi / 16};
}

std::string format_indices(std::span<const int> indices) {
  std::ostringstream os;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) os << '/';
    os << indices[k];
  }
  return os.str();
}

std::string format_directions(std::span<const int> directions) {
  std::string out;
  out.reserve(directions.size());
  for (int d : directions) out.push_back(d > 0 ? '+' : '-');
  return out;
}

}  // namespace cdct
