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

#include <stdexcept>
#include <string>

namespace treelike {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or graph6 input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A metric operation was handed a disconnected graph.
class DisconnectedError : public Error {
 public:
  DisconnectedError(std::size_t u, std::size_t v)
      : Error("graph is disconnected: no path between vertices " +
              std::to_string(u) + " and " + std::to_string(v)),
        u_(u),
        v_(v) {}
  std::size_t first() const { return u_; }
  std::size_t second() const { return v_; }

 private:
  std::size_t u_, v_;
};

/// Invalid argument, range violation or size cap.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input does not belong to the graph class a classifier requires.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node or time budget. Never a verdict.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A checked mathematical invariant failed. Always a library bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace treelike
