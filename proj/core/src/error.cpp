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

#include "charplane/error.hpp"

namespace charplane {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotRegularParameter: return "NotRegularParameter";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::InfiniteIntersection: return "InfiniteIntersection";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
      position_(position) {}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace charplane
