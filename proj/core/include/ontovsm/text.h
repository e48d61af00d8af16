// Copyright 2026 The ontovsm Authors
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

#ifndef ONTOVSM_TEXT_H_
#define ONTOVSM_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace ontovsm {

// Word characters are ASCII letters and digits plus every byte of a
// multi-byte UTF-8 sequence, so non-ASCII words are kept whole.
inline bool is_word_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') ||
         (u >= 'A' && u <= 'Z') || u >= 0x80;
}

inline bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// ASCII lower-casing; bytes >= 0x80 pass through unchanged.
std::string fold_case(std::string_view s);

// Canonical form of an entity name or surface string: case-folded, leading
// and trailing whitespace removed, internal whitespace runs collapsed to a
// single space. Used by the KB name index, the recognizer and term slots.
std::string normalize_name(std::string_view s);

// Splits on every occurrence of `sep`; empty fields are preserved.
std::vector<std::string> split(std::string_view s, char sep);

std::string_view trim(std::string_view s);

}  // namespace ontovsm

#endif  // ONTOVSM_TEXT_H_
