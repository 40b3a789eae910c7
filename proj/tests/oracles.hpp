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

// Independent reference routines used only by the test suites. Nothing here
// calls into the library paths it is used to check.

#ifndef CORDIC_DCT_TESTS_ORACLES_HPP_
#define CORDIC_DCT_TESTS_ORACLES_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace cdct::testing {

struct Step {
  int index;
  int direction;
  bool operator==(const Step&) const = default;
};

inline double atan_pow2(int i) { return std::atan(std::pow(2.0, -i)); }

// Brute force: at every step scan every shift in [0, 30] and keep the one
// whose size 2^-i is closest to |r| in shift-count space, |i + log2|r||.
// Ties go to the deeper shift.
inline std::vector<Step> nearest_shift_oracle(double theta, double eps) {
  std::vector<Step> steps;
  double r = theta;
  while (std::fabs(r) > eps && steps.size() < 64) {
    const double target = -std::log2(std::fabs(r));
    int best = 0;
    double best_d = std::fabs(target);
    for (int i = 1; i <= 30; ++i) {
      const double d = std::fabs(target - i);
      if (d <= best_d) {
        best = i;
        best_d = d;
      }
    }
    const int s = r > 0 ? 1 : -1;
    r -= s * atan_pow2(best);
    steps.push_back({best, s});
  }
  return steps;
}

// Brute force in angle space: the shift minimizing |r - sign(r) atan(2^-i)|.
inline std::vector<Step> linear_greedy_oracle(double theta, double eps) {
  std::vector<Step> steps;
  double r = theta;
  while (std::fabs(r) > eps && steps.size() < 64) {
    const int s = r > 0 ? 1 : -1;
    int best = 0;
    double best_d = std::fabs(r - s * atan_pow2(0));
    for (int i = 1; i <= 30; ++i) {
      const double d = std::fabs(r - s * atan_pow2(i));
      if (d < best_d) {
        best = i;
        best_d = d;
      }
    }
    r -= s * atan_pow2(best);
    steps.push_back({best, s});
  }
  return steps;
}

// The even/odd factorized matrices of the 8-point transform, written out
// from their cosine constants.
struct FactorConstants {
  double A = std::cos(std::numbers::pi / 4);
  double B = std::sin(3 * std::numbers::pi / 8);
  double C = std::cos(3 * std::numbers::pi / 8);
  double D = std::sin(7 * std::numbers::pi / 16);
  double E = std::cos(3 * std::numbers::pi / 16);
  double F = std::sin(3 * std::numbers::pi / 16);
  double G = std::cos(7 * std::numbers::pi / 16);
};

// Returns (X0, X2, X4, X6) from u_k = x_k + x_{7-k}.
inline std::array<double, 4> even_factor(const std::array<double, 4>& u) {
  const FactorConstants k;
  const double m[4][4] = {{k.A, k.A, k.A, k.A},
                          {k.B, k.C, -k.C, -k.B},
                          {k.A, -k.A, -k.A, k.A},
                          {k.C, -k.B, k.B, -k.C}};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += 0.5 * m[r][c] * u[c];
  return out;
}

// Returns (X1, X3, X5, X7) from v_k = x_k - x_{7-k}.
inline std::array<double, 4> odd_factor(const std::array<double, 4>& v) {
  const FactorConstants k;
  const double m[4][4] = {{k.D, k.E, k.F, k.G},
                          {k.E, -k.G, -k.D, -k.F},
                          {k.F, -k.D, k.G, k.E},
                          {k.G, -k.F, k.E, -k.D}};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += 0.5 * m[r][c] * v[c];
  return out;
}

// Plain double-loop evaluation of the defining cosine sum.
inline std::array<double, 8> direct_dct(const std::array<double, 8>& x) {
  std::array<double, 8> f{};
  for (int k = 0; k < 8; ++k) {
    const double ck = k == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
    double s = 0.0;
    for (int n = 0; n < 8; ++n) s += x[n] * std::cos((2 * n + 1) * k * std::numbers::pi / 16);
    f[k] = 0.5 * ck * s;
  }
  return f;
}

inline std::array<double, 8> random_int8_vector(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-128, 127);
  std::array<double, 8> x{};
  for (auto& v : x) v = dist(rng);
  return x;
}

}  // namespace cdct::testing

#endif  // CORDIC_DCT_TESTS_ORACLES_HPP_
