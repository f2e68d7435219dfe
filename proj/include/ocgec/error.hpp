// Copyright 2026 The ocgec Authors
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

namespace ocgec {

// Root of every error the library raises. The CLI maps ProcessError and its
// subclasses to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edit whose span falls outside its source, or a null edit.
class InvalidEditError : public Error {
 public:
  using Error::Error;
};

// Overlapping edits or two insertions at one position.
class InvalidEditSetError : public Error {
 public:
  using Error::Error;
};

// Two edit sets (or an edit set and a sentence) disagree on source length.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed UTF-8, TSV/JSONL shape problems, delimiter collisions.
class FormatError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Syntax error in a line-oriented file. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An external program (corrector, scorer) failed or broke its protocol.
class ProcessError : public Error {
 public:
  using Error::Error;
};

class FoldFailureError : public ProcessError {
 public:
  FoldFailureError(std::size_t fold, const std::string& what,
                   std::string diagnostics)
      : ProcessError("fold " + std::to_string(fold) + ": " + what),
        fold_(fold),
        diagnostics_(std::move(diagnostics)) {}
  std::size_t fold() const { return fold_; }
  const std::string& diagnostics() const { return diagnostics_; }

 private:
  std::size_t fold_;
  std::string diagnostics_;
};

class ProtocolError : public ProcessError {
 public:
  using ProcessError::ProcessError;
};

class ScorerError : public ProcessError {
 public:
  using ProcessError::ProcessError;
};

}  // namespace ocgec
