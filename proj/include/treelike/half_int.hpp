// Copyright 2026 The treelike Authors.
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
#include <ostream>
#include <string>

namespace treelike {

/// A multiple of 1/2 stored exactly as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  constexpr std::int64_t floor() const { return doubled_ >= 0 ? doubled_ / 2 : -((-doubled_ + 1) / 2); }
  constexpr std::int64_t ceil() const { return -HalfInt(-doubled_).floor(); }

  /// "k" or "k/2", e.g. "3/2" for one and a half.
  std::string str() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
  constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(doubled_ * k); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

 private:
  constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}
  std::int64_t doubled_ = 0;
};

}  // namespace treelike
