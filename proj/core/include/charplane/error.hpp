// Copyright 2026 The charplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARPLANE_ERROR_HPP
#define CHARPLANE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charplane {

enum class ErrorCode {
  InvalidCharacteristic,
  UnsupportedExtension,
  NotSupported,
  ZeroInput,
  FieldMismatch,
  DivisionByZero,
  ParseError,
  NotRegularParameter,
  DegenerateDirection,
  NotInvertible,
  NotDivisible,
  InfiniteIntersection,
  OracleFailure,
  NotReduced,
  NotIrreducible,
  DepthExceeded,
  HypothesisFailed,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax errors from the expression parser; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace charplane

#endif  // CHARPLANE_ERROR_HPP
