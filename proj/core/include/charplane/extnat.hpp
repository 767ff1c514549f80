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

#ifndef CHARPLANE_EXTNAT_HPP
#define CHARPLANE_EXTNAT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace charplane {

/// A natural number or +infinity. Intersection numbers and Milnor numbers live here.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.value_.reset();
    return r;
  }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  /// Precondition: finite.
  constexpr std::uint64_t value() const { return *value_; }

  constexpr ExtNat& operator+=(ExtNat other) {
    if (is_infinite() || other.is_infinite()) {
      value_.reset();
    } else {
      *value_ += *other.value_;
    }
    return *this;
  }
  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) { return a += b; }

  friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return is_infinite() ? "INF" : std::to_string(*value_); }

  friend std::ostream& operator<<(std::ostream& os, ExtNat v) { return os << v.to_string(); }

 private:
  std::optional<std::uint64_t> value_{0};
};

}  // namespace charplane

#endif  // CHARPLANE_EXTNAT_HPP
