// Copyright 2026 The textaug Authors
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

#ifndef TEXTAUG_ERRORS_H_
#define TEXTAUG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textaug {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File missing, unreadable or unwritable.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input data. `row` is 1-based over data rows, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row = 0)
      : Error(row == 0 ? what : "row " + std::to_string(row) + ": " + what),
        row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// Invalid or unsatisfiable configuration (bad fractions, unsupported
// language, impossible stratified split, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// API misuse by the caller, e.g. mismatched lengths or dimensions.
class UsageError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

// Raised by the linear trainers. `epoch` is 1-based, 0 when the failure is
// detected before training starts.
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, int epoch = 0)
      : Error(epoch == 0 ? what
                         : "epoch " + std::to_string(epoch) + ": " + what),
        epoch_(epoch) {}
  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

// A backtranslation leg failed after retries. `leg` looks like "en->es".
class AugmentationError : public Error {
 public:
  AugmentationError(const std::string& what, std::string leg = {})
      : Error(leg.empty() ? what : "leg " + leg + ": " + what),
        leg_(std::move(leg)) {}
  const std::string& leg() const { return leg_; }

 private:
  std::string leg_;
};

}  // namespace textaug

#endif  // TEXTAUG_ERRORS_H_
