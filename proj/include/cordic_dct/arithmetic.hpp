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

// How rotator datapaths carry out their arithmetic, plus the counters that
// record what a run actually executed.

#ifndef CORDIC_DCT_ARITHMETIC_HPP_
#define CORDIC_DCT_ARITHMETIC_HPP_

#include <cstdint>
#include <string>
#include <variant>

namespace cdct {

// Two's-complement fixed-point layout. Values span
// [-2^(total-1-frac), 2^(total-1-frac) - 2^-frac] in steps of 2^-frac.
class FixedPointFormat {
 public:
  // Throws DomainError unless total_bits in [8, 32] and
  // frac_bits in [0, total_bits - 2].
  FixedPointFormat(int total_bits, int frac_bits);

  int total_bits() const { return total_bits_; }
  int frac_bits() const { return frac_bits_; }

  std::int64_t raw_min() const { return -(std::int64_t{1} << (total_bits_ - 1)); }
  std::int64_t raw_max() const { return (std::int64_t{1} << (total_bits_ - 1)) - 1; }
  double lsb() const;
  double min_value() const;
  double max_value() const;

  friend bool operator==(const FixedPointFormat&, const FixedPointFormat&) = default;

 private:
  int total_bits_;
  int frac_bits_;
};

// Unit-scaled data (|v| < 1): 16 bits, 12 fractional.
inline FixedPointFormat unit_fixed_format() { return FixedPointFormat(16, 12); }
// 8-bit pixel data through the 2-D transform: 8 fractional bits with enough
// integer headroom for unscaled second-pass intermediates.
inline FixedPointFormat dct_fixed_format() { return FixedPointFormat(24, 8); }

enum class OverflowPolicy { kSaturate, kError };

struct ExactFloat {
  friend bool operator==(const ExactFloat&, const ExactFloat&) = default;
};

class ArithmeticMode {
 public:
  static ArithmeticMode exact_float() { return ArithmeticMode(ExactFloat{}, OverflowPolicy::kError); }
  static ArithmeticMode fixed_point(FixedPointFormat format,
                                    OverflowPolicy policy = OverflowPolicy::kError) {
    return ArithmeticMode(format, policy);
  }

  bool is_fixed() const { return std::holds_alternative<FixedPointFormat>(variant_); }
  // Precondition: is_fixed().
  const FixedPointFormat& format() const { return std::get<FixedPointFormat>(variant_); }
  OverflowPolicy overflow_policy() const { return overflow_policy_; }

  std::string describe() const;

 private:
  ArithmeticMode(std::variant<ExactFloat, FixedPointFormat> v, OverflowPolicy p)
      : variant_(v), overflow_policy_(p) {}

  std::variant<ExactFloat, FixedPointFormat> variant_;
  OverflowPolicy overflow_policy_;
};

struct OpCounts {
  std::uint64_t adds = 0;  // additions and subtractions
  std::uint64_t shifts = 0;
  std::uint64_t multiplies = 0;

  OpCounts& operator+=(const OpCounts& o) {
    adds += o.adds;
    shifts += o.shifts;
    multiplies += o.multiplies;
    return *this;
  }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Optional sink passed by pointer into the datapaths. Not thread-safe; give
// each worker its own and merge.
struct Instrumentation {
  OpCounts ops;
  std::uint64_t saturations = 0;

  Instrumentation& operator+=(const Instrumentation& o) {
    ops += o.ops;
    saturations += o.saturations;
    return *this;
  }
};

}  // namespace cdct

#endif  // CORDIC_DCT_ARITHMETIC_HPP_
