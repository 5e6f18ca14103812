// Copyright 2026 The corpus2know Authors
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

#ifndef C2K_ERRORS_HPP
#define C2K_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace c2k {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document (XML, TSV, CSV). Carries a line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a schema or domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Missing or unreadable files, unwritable outputs.
class IoError : public Error {
 public:
  using Error::Error;
};

// An operation was called on inputs that make its result undefined
// (empty corpus for a ratio, zero parsed sentences, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource bound was exceeded (chart size).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace c2k

#endif  // C2K_ERRORS_HPP
