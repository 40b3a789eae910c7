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

// Arithmetic back ends shared by the rotator and transform datapaths. Both
// expose the same operation set (add, sub, shr, scale) so each datapath is
// written once as a template and instrumented uniformly.

#ifndef CORDIC_DCT_DETAIL_ARITH_HPP_
#define CORDIC_DCT_DETAIL_ARITH_HPP_

#include <cmath>
#include <cstdint>
#include <span>
#include <string>

#include "cordic_dct/arithmetic.hpp"
#include "cordic_dct/cordic.hpp"
#include "cordic_dct/errors.hpp"

namespace cdct::detail {

class FloatArith {
 public:
  using value_type = double;

  explicit FloatArith(Instrumentation* instr) : instr_(instr) {}

  value_type from_real(double v) const { return v; }
  double to_real(value_type v) const { return v; }

  value_type add(value_type a, value_type b) {
    if (instr_) ++instr_->ops.adds;
    return a + b;
  }
  value_type sub(value_type a, value_type b) {
    if (instr_) ++instr_->ops.adds;
    return a - b;
  }
  // Scaling by 2^-s; exact in binary64.
  value_type shr(value_type a, int s) {
    if (instr_) ++instr_->ops.shifts;
    return std::ldexp(a, -s);
  }
  value_type scale(value_type a, const ScaleConstant& k) {
    if (instr_) ++instr_->ops.multiplies;
    return a * k.value;
  }

 private:
  Instrumentation* instr_;
};

// Integer datapath on raw two's-complement words: add, subtract and
// arithmetic shift only.
class FixedArith {
 public:
  using value_type = std::int64_t;

  FixedArith(const FixedPointFormat& format, OverflowPolicy policy, Instrumentation* instr)
      : frac_bits_(format.frac_bits()),
        raw_min_(format.raw_min()),
        raw_max_(format.raw_max()),
        policy_(policy),
        instr_(instr) {}

  // Rounds to the nearest grid point, ties away from zero.
  value_type from_real(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite sample in fixed-point mode");
    const double scaled = std::round(std::ldexp(v, frac_bits_));
    if (scaled < static_cast<double>(raw_min_) || scaled > static_cast<double>(raw_max_)) {
      return overflow(scaled < 0 ? raw_min_ : raw_max_);
    }
    return static_cast<value_type>(scaled);
  }
  double to_real(value_type v) const { return std::ldexp(static_cast<double>(v), -frac_bits_); }

  value_type add(value_type a, value_type b) {
    if (instr_) ++instr_->ops.adds;
    return check(a + b);
  }
  value_type sub(value_type a, value_type b) {
    if (instr_) ++instr_->ops.adds;
    return check(a - b);
  }
  // Arithmetic right shift (floor). Negative s shifts left.
  value_type shr(value_type a, int s) {
    if (instr_) ++instr_->ops.shifts;
    if (s >= 0) return s >= 63 ? (a < 0 ? -1 : 0) : a >> s;
    return check(a << -s);
  }

  // sum_t sign_t * a * 2^-shift_t, accumulated exactly at 2^-max_shift
  // resolution and floored once at the end.
  value_type scale(value_type a, const ScaleConstant& k) {
    const auto& terms = k.csd.terms;
    if (terms.empty()) return 0;
    const int max_shift = terms.back().shift;
    __int128 acc = 0;
    bool first = true;
    for (const auto& t : terms) {
      const int left = max_shift - t.shift;
      __int128 part = static_cast<__int128>(a) << left;
      if (instr_ && left > 0) ++instr_->ops.shifts;
      if (first) {
        acc = t.sign > 0 ? part : -part;
        if (instr_ && t.sign < 0) ++instr_->ops.adds;
        first = false;
      } else {
        acc = t.sign > 0 ? acc + part : acc - part;
        if (instr_) ++instr_->ops.adds;
      }
    }
    if (max_shift != 0 && instr_) ++instr_->ops.shifts;
    const __int128 out = max_shift >= 0 ? (acc >> max_shift) : (acc << -max_shift);
    if (out < raw_min_ || out > raw_max_) return overflow(out < 0 ? raw_min_ : raw_max_);
    return static_cast<value_type>(out);
  }

 private:
  value_type check(value_type v) {
    if (v < raw_min_) return overflow(raw_min_);
    if (v > raw_max_) return overflow(raw_max_);
    return v;
  }
  value_type overflow(value_type clamped) {
    if (policy_ == OverflowPolicy::kError) {
      throw OverflowError("fixed-point overflow (limit " + std::to_string(clamped) + " raw)");
    }
    if (instr_) ++instr_->saturations;
    return clamped;
  }

  int frac_bits_;
  value_type raw_min_;
  value_type raw_max_;
  OverflowPolicy policy_;
  Instrumentation* instr_;
};

// x' = x - s*2^-i*y, y' = y + s*2^-i*x for every step, in order.
template <typename Arith>
void rotate_in_place(Arith& ar, typename Arith::value_type& x, typename Arith::value_type& y,
                     std::span<const MicroRotation> steps) {
  for (const auto& step : steps) {
    const auto ys = ar.shr(y, step.index);
    const auto xs = ar.shr(x, step.index);
    if (step.direction > 0) {
      x = ar.sub(x, ys);
      y = ar.add(y, xs);
    } else {
      x = ar.add(x, ys);
      y = ar.sub(y, xs);
    }
  }
}

// Invokes fn(arith) with the back end selected by mode.
template <typename Fn>
decltype(auto) with_arith(const ArithmeticMode& mode, Instrumentation* instr, Fn&& fn) {
  if (mode.is_fixed()) {
    FixedArith ar(mode.format(), mode.overflow_policy(), instr);
    return fn(ar);
  }
  FloatArith ar(instr);
  return fn(ar);
}

}  // namespace cdct::detail

#endif  // CORDIC_DCT_DETAIL_ARITH_HPP_
