// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLIPPROD_FLIP_VALUE_HPP_
#define FLIPPROD_FLIP_VALUE_HPP_

#include <ostream>
#include <string>
#include <utility>

#include "flipprod/error.hpp"
#include "flipprod/linalg.hpp"

namespace flipprod {

/// An element of N u {inf}. Multiplication follows 0 * inf = 0.
class FlipValue {
 public:
  FlipValue() = default;
  FlipValue(Integer v) : value_(std::move(v)) {}  // NOLINT: implicit by design
  FlipValue(long long v) : value_(v) {}           // NOLINT

  static FlipValue infinite() {
    FlipValue out;
    out.infinite_ = true;
    return out;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_.is_zero(); }

  const Integer& value() const {
    if (infinite_) {
      throw Error(ErrorCode::kInternal, "value() on an infinite flip value");
    }
    return value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : value_.str(); }

  friend FlipValue operator+(const FlipValue& a, const FlipValue& b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return FlipValue(a.value_ + b.value_);
  }
  friend FlipValue operator*(const FlipValue& a, const FlipValue& b) {
    if (a.is_zero() || b.is_zero()) return FlipValue();
    if (a.infinite_ || b.infinite_) return infinite();
    return FlipValue(a.value_ * b.value_);
  }
  FlipValue& operator+=(const FlipValue& b) { return *this = *this + b; }

  friend bool operator==(const FlipValue& a, const FlipValue& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  /// Total order with inf above every finite value.
  friend bool operator<(const FlipValue& a, const FlipValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const FlipValue& a, const FlipValue& b) {
    return !(b < a);
  }

  friend std::ostream& operator<<(std::ostream& os, const FlipValue& v) {
    return os << v.to_string();
  }

 private:
  Integer value_{0};
  bool infinite_ = false;
};

}  // namespace flipprod

#endif  // FLIPPROD_FLIP_VALUE_HPP_
