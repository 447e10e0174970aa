// Copyright 2026 The ENDOS Simulator Authors
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
#include <stdexcept>
#include <string>

namespace endos {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A basis configuration or state does not match the register it is used with.
class MismatchedRegister : public Error {
   public:
    using Error::Error;
};

/// An operation needs the STM tip over a qubit but the tip is parked.
class TipParked : public Error {
   public:
    using Error::Error;
};

/// State norm collapsed below the corruption guard.
class DegenerateState : public Error {
   public:
    using Error::Error;
};

class SameQubit : public Error {
   public:
    using Error::Error;
};

/// A pulse program violates its well-formedness rules.
class IllFormedProgram : public Error {
   public:
    using Error::Error;
};

class UnclassifiableFrequency : public Error {
   public:
    using Error::Error;
};

/// Trace sample rate is at or below the Nyquist rate of the modulation lines.
class AliasingError : public Error {
   public:
    using Error::Error;
};

class ConfigError : public Error {
   public:
    using Error::Error;
};

/// Text input (config or circuit) failed to parse. Carries 1-based line/column.
class ParseError : public Error {
   public:
    ParseError(const std::string &source, std::size_t line, std::size_t column, const std::string &what)
        : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace endos
