// Copyright 2026 The Satz Toolkit Authors
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

namespace satz {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid function argument or CLI usage (exit code 1).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input data: dictionary lines, weight files, mapping files
// (exit code 2).
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Structurally valid file whose contents contradict its own header or the
// run configuration (exit code 2).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Bad or inconsistent configuration (e.g. an empty endings list).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure, always carries the path in the message.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid byte sequence in input text.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t byte_offset)
      : Error(what + " at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Training diverged or could not start (exit code 3).
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, int epoch)
      : Error(what + " (epoch " + std::to_string(epoch) + ")"), epoch_(epoch) {}

  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

}  // namespace satz
