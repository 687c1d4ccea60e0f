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

#ifndef TEXTAUG_CSV_H_
#define TEXTAUG_CSV_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace textaug {

// RFC 4180 record reader: quoted fields may contain commas, doubled quotes
// and line breaks. CRLF and LF line endings are both accepted.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Next record, or nullopt at end of input. Throws ParseError on an
  // unterminated quoted field.
  std::optional<std::vector<std::string>> Next();

  // 1-based index of the record most recently returned.
  std::size_t record_number() const { return record_number_; }

 private:
  std::istream& in_;
  std::size_t record_number_ = 0;
};

// Quotes a field when it contains a comma, quote or line break.
std::string CsvEscape(const std::string& field);

}  // namespace textaug

#endif  // TEXTAUG_CSV_H_
