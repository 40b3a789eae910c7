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

#ifndef CORDIC_DCT_ERRORS_HPP_
#define CORDIC_DCT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cdct {

// Argument outside an operation's domain (angle range, precision, quality...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Decomposition loop exceeded its step budget. Indicates a policy bug.
class NonTerminationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Fixed-point result outside the active format under OverflowPolicy::kError.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// csd_scale could not reach the requested tolerance within max_terms.
class ToleranceUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed file or text input (PGM headers, number lists, angle strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cdct

#endif  // CORDIC_DCT_ERRORS_HPP_
