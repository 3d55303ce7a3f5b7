// Copyright 2026 The sscaug Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sscaug {

/// Hop distance in a directed graph, or "unreachable".
///
/// Unreachable is a sentinel state, not a large number: it compares greater
/// than every finite distance and equal to itself, so `inf() < inf()` is
/// false. Arithmetic on it saturates.
class Dist {
 public:
  using value_type = std::uint32_t;

  constexpr Dist() = default;
  constexpr explicit Dist(value_type hops) : raw_(hops) {
    if (hops == kInfRaw) throw std::out_of_range("Dist: finite value too large");
  }

  static constexpr Dist inf() {
    Dist d;
    d.raw_ = kInfRaw;
    return d;
  }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  constexpr bool is_finite() const { return raw_ != kInfRaw; }

  /// Finite hop count. Throws when called on the unreachable sentinel.
  constexpr value_type value() const {
    if (is_inf()) throw std::logic_error("Dist: value() on unreachable distance");
    return raw_;
  }

  /// One more hop; unreachable stays unreachable.
  constexpr Dist next() const { return is_inf() ? inf() : Dist(raw_ + 1); }

  /// True when this distance is strictly greater than the integer `bound`
  /// (bounds may be negative, e.g. -1 for "no constraint").
  constexpr bool exceeds(std::int64_t bound) const {
    return is_inf() || static_cast<std::int64_t>(raw_) > bound;
  }

  friend constexpr bool operator==(Dist, Dist) = default;
  friend constexpr std::strong_ordering operator<=>(Dist a, Dist b) { return a.raw_ <=> b.raw_; }

  std::string to_string() const { return is_inf() ? std::string("inf") : std::to_string(raw_); }

  friend std::ostream& operator<<(std::ostream& os, Dist d) { return os << d.to_string(); }

 private:
  static constexpr value_type kInfRaw = std::numeric_limits<value_type>::max();
  value_type raw_ = 0;
};

}  // namespace sscaug
