// Copyright 2026 The rfdgraph Authors
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

#ifndef RFD_EXT_NAT_HPP_
#define RFD_EXT_NAT_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rfd {

// Extended natural number: N together with a top element omega standing for
// a countably infinite cardinality. omega absorbs addition and compares above
// every finite value. Finite overflow throws instead of silently saturating.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t n) : value_(n) {}  // NOLINT: implicit by design of counts

  static constexpr ExtNat omega() {
    ExtNat r;
    r.omega_ = true;
    return r;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }

  std::uint64_t value() const {
    if (omega_) throw std::logic_error("ExtNat::value() called on omega");
    return value_;
  }

  friend ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.omega_ || b.omega_) return omega();
    if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_) {
      throw std::overflow_error("ExtNat addition overflow");
    }
    return ExtNat(a.value_ + b.value_);
  }

  // omega * 0 = 0: zero copies of an infinite family contribute nothing.
  friend ExtNat operator*(ExtNat a, ExtNat b) {
    if ((a.is_finite() && a.value_ == 0) || (b.is_finite() && b.value_ == 0)) {
      return ExtNat(0);
    }
    if (a.omega_ || b.omega_) return omega();
    if (a.value_ > std::numeric_limits<std::uint64_t>::max() / b.value_) {
      throw std::overflow_error("ExtNat multiplication overflow");
    }
    return ExtNat(a.value_ * b.value_);
  }

  ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return omega_ ? std::string("omega") : std::to_string(value_);
  }

 private:
  std::uint64_t value_ = 0;
  bool omega_ = false;
};

}  // namespace rfd

#endif  // RFD_EXT_NAT_HPP_
