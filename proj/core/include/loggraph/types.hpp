// Copyright 2026 The loggraph Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loggraph {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;
using Weight = std::uint32_t;

// Error hierarchy. Every failure the library reports derives from Error so
// callers (the CLI in particular) can map families onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists). Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Argument outside the valid domain of a query (vertex id, select index...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested structure does not fit the representable range.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class EncodeError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

// Invalid combination of schemes or options.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace loggraph
