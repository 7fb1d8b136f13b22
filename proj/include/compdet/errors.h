/* Copyright 2026 The compdet Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef COMPDET_ERRORS_H_
#define COMPDET_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compdet {

// Work-budget guards (cofactor dimension, column-reduction size, symbolic
// grid size). The CLI maps these to exit code 3.
class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionTooLarge : public GuardViolation {
 public:
  using GuardViolation::GuardViolation;
};

// Raised when an internal algebraic invariant fails. On a correct build
// none of these is reachable; the CLI maps them to exit code 4.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotDivisible : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class ResidualDenominator : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class BlockNotZero : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " +
                              std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace compdet

#endif  // COMPDET_ERRORS_H_
