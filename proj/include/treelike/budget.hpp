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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "treelike/errors.hpp"

namespace treelike {

/// Node and wall-clock limits for exponential searches.
struct Budget {
  std::uint64_t max_nodes = 200'000'000;
  std::optional<std::chrono::milliseconds> time_limit;

  static Budget unlimited() { return {UINT64_MAX, std::nullopt}; }

  friend bool operator==(const Budget&, const Budget&) = default;
};

/// Counts search nodes against a Budget and throws BudgetError when exhausted.
class BudgetMeter {
 public:
  BudgetMeter(const Budget& budget, std::string what)
      : budget_(budget), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetError(what_ + ": node budget of " + std::to_string(budget_.max_nodes) + " exhausted");
    }
    if (budget_.time_limit && (nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
      throw BudgetError(what_ + ": time budget of " + std::to_string(budget_.time_limit->count()) +
                        " ms exhausted");
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace treelike
