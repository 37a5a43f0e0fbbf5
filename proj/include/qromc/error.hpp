// Copyright 2026 The qromc Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qromc {

/// Base class of every error raised by the compiler.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed `.pla` or OpenQASM input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Two cubes of a `.pla` file assign different values to the same output bit.
class ExpansionConflict : public Error {
  public:
    ExpansionConflict(std::uint64_t address, const std::string &message)
        : Error(message), address_(address) {}

    std::uint64_t address() const { return address_; }

  private:
    std::uint64_t address_;
};

/// A precondition on an argument was violated (bad mode, bad circuit shape, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A configured resource guard (qubit cap, address width cap) was exceeded.
class ResourceLimit : public Error {
  public:
    using Error::Error;
};

}  // namespace qromc
