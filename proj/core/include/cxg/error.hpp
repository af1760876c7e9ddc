// Copyright 2026 The cxg Authors
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

#ifndef CXG_ERROR_HPP_
#define CXG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cxg {

// Every error the engine raises belongs to one of these buckets. The CLI
// maps them onto process exit codes (malformed/logic -> 1, io -> 2,
// resource -> 4); "no solution" is not an error and is signalled by an
// empty result.
enum class ErrorCategory {
  malformed,
  io,
  resource,
  logic,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCategory::malformed,
              message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class MalformedDocumentError : public Error {
 public:
  MalformedDocumentError(const std::string& message, const std::string& path)
      : Error(ErrorCategory::malformed, message + " [" + path + "]"),
        path_(path) {}

  // JSON-pointer-ish path of the offending element.
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorCategory::io, message) {}
};

class FileNotFoundError : public IoError {
 public:
  explicit FileNotFoundError(const std::string& path)
      : IoError("file not found: " + path) {}
};

class BadMagicError : public Error {
 public:
  explicit BadMagicError(const std::string& message)
      : Error(ErrorCategory::malformed, message) {}
};

class VersionUnsupportedError : public Error {
 public:
  explicit VersionUnsupportedError(const std::string& message)
      : Error(ErrorCategory::malformed, message) {}
};

class DuplicateNameError : public Error {
 public:
  explicit DuplicateNameError(const std::string& name)
      : Error(ErrorCategory::logic, "duplicate construction name: " + name) {}
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& name)
      : Error(ErrorCategory::logic, "unknown name: " + name) {}
};

class EmptyUtteranceError : public Error {
 public:
  EmptyUtteranceError()
      : Error(ErrorCategory::malformed, "utterance must be non-empty") {}
};

class ResourceExhaustedError : public Error {
 public:
  explicit ResourceExhaustedError(const std::string& message)
      : Error(ErrorCategory::resource, message) {}
};

class MissingAppliedCxnError : public Error {
 public:
  MissingAppliedCxnError()
      : Error(ErrorCategory::logic,
              "reward on a successful interaction requires an applied "
              "construction") {}
};

class UntaggedTokenError : public Error {
 public:
  UntaggedTokenError(const std::string& surface, const std::string& pos)
      : Error(ErrorCategory::malformed,
              "token \"" + surface + "\" has unknown POS tag \"" + pos +
                  "\"") {}
};

}  // namespace cxg

#endif  // CXG_ERROR_HPP_
