// Copyright 2026 The oragg Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oragg {

// Base class for all library errors. Verification verdicts are boolean
// returns; exceptions signal contract violations and malformed data.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

class BackendMismatch : public Error {
  public:
    using Error::Error;
};

class EmptyAggregation : public Error {
  public:
    using Error::Error;
};

// A constituent proof's descriptor does not resolve in the transcript.
class UnknownConstituent : public Error {
  public:
    using Error::Error;
};

class TreeMismatch : public Error {
  public:
    using Error::Error;
};

// Aux payload fails to parse; distinct from a false verdict.
class MalformedAux : public Error {
  public:
    using Error::Error;
};

class ArityMismatch : public Error {
  public:
    using Error::Error;
};

// Verification input tree is incompatible with the expression shape.
class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

class InvalidParams : public Error {
  public:
    using Error::Error;
};

class ScaleExceeded : public Error {
  public:
    using Error::Error;
};

class UnboundAtom : public Error {
  public:
    explicit UnboundAtom(std::string name)
        : Error("unbound atom '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

class SyntaxError : public Error {
  public:
    SyntaxError(std::size_t line, std::size_t column, std::string token, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                (token.empty() ? "" : " near '" + token + "'")),
          line_(line),
          column_(column),
          token_(std::move(token)) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& token() const { return token_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

class BadMagic : public Error {
  public:
    using Error::Error;
};

class UnsupportedVersion : public Error {
  public:
    using Error::Error;
};

class Truncated : public Error {
  public:
    using Error::Error;
};

// Loaded value would violate a structural invariant of its module.
class IntegrityError : public Error {
  public:
    using Error::Error;
};

class DuplicateDescriptor : public Error {
  public:
    using Error::Error;
};

// Well-framed file whose fields are out of range or inconsistent.
class MalformedData : public Error {
  public:
    using Error::Error;
};

}  // namespace oragg
