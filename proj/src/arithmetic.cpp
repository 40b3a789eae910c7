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

#include "cordic_dct/arithmetic.hpp"

#include <cmath>

#include "cordic_dct/errors.hpp"

namespace cdct {

FixedPointFormat::FixedPointFormat(int total_bits, int frac_bits)
    : total_bits_(total_bits), frac_bits_(frac_bits) {
  if (total_bits < 8 || total_bits > 32) {
    throw DomainError("fixed-point total_bits must lie in [8, 32]");
  }
  if (frac_bits < 0 || frac_bits > total_bits - 2) {
    throw DomainError("fixed-point frac_bits must lie in [0, total_bits - 2]");
  }
}

double FixedPointFormat::lsb() const { return std::ldexp(1.0, -frac_bits_); }
double FixedPointFormat::min_value() const { return std::ldexp(static_cast<double>(raw_min()), -frac_bits_); }
double FixedPointFormat::max_value() const { return std::ldexp(static_cast<double>(raw_max()), -frac_bits_); }

std::string ArithmeticMode::describe() const {
  if (!is_fixed()) return "float";
  const auto& f = format();
  return "fixed(" + std::to_string(f.total_bits()) + "," + std::to_string(f.frac_bits()) + "," +
         (overflow_policy_ == OverflowPolicy::kSaturate ? "saturate" : "error") + ")";
}

}  // namespace cdct
