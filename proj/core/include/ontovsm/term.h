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

#ifndef ONTOVSM_TERM_H_
#define ONTOVSM_TERM_H_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace ontovsm {

// The six indexing spaces: keywords, the four ontological spaces (names,
// classes, name-class pairs, identifiers), and the generalized-term space.
enum class Space : std::uint8_t {
  kKeyword = 0,
  kName,
  kClass,
  kNameClass,
  kIdentifier,
  kGeneralized,
};

inline constexpr std::size_t kNumSpaces = 6;
inline constexpr std::array<Space, kNumSpaces> kAllSpaces = {
    Space::kKeyword,   Space::kName,       Space::kClass,
    Space::kNameClass, Space::kIdentifier, Space::kGeneralized,
};

// "kw", "n", "c", "nc", "i", "g".
std::string_view space_name(Space s);
std::optional<Space> parse_space(std::string_view name);

// A keyword stem or a named-entity triple (name/class/id) with optional
// slots. Name slots are stored normalized, so "Gruzia" and "gruzia" are the
// same term. Terms order and hash by their canonical serialized key.
class GeneralizedTerm {
 public:
  static GeneralizedTerm keyword(std::string_view stem);
  // Throws ValidationError if every slot is unspecified.
  static GeneralizedTerm triple(std::optional<std::string_view> name,
                                std::optional<std::string_view> class_id,
                                std::optional<std::string_view> entity_id);

  // Inverse of serialize(); throws ValidationError on malformed input.
  static GeneralizedTerm parse(std::string_view key);

  bool is_keyword() const { return kind_ == Kind::kKeyword; }
  bool is_triple() const { return kind_ == Kind::kTriple; }

  // Keyword stem; empty for triples.
  const std::string& stem() const { return stem_; }
  const std::optional<std::string>& name() const { return name_; }
  const std::optional<std::string>& class_id() const { return class_; }
  const std::optional<std::string>& entity_id() const { return id_; }

  // `k:<stem>` or `t:<name|*>/<class|*>/<id|*>`, with '/', '%', '*', tab and
  // newline inside slot values percent-encoded.
  const std::string& serialize() const { return key_; }

  // Human notation: the bare stem, or `(name/class/id)` with '*' slots.
  std::string display() const;

  // The ontological space a triple of this shape belongs to; kKeyword for
  // keywords. Triples with both name and id (or class and id) have no
  // ontological space and report kGeneralized.
  Space natural_space() const;

  friend bool operator==(const GeneralizedTerm& a, const GeneralizedTerm& b) {
    return a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const GeneralizedTerm& a,
                                          const GeneralizedTerm& b) {
    return a.key_ <=> b.key_;
  }

 private:
  enum class Kind : std::uint8_t { kKeyword, kTriple };
  GeneralizedTerm() = default;
  void rebuild_key();

  Kind kind_ = Kind::kKeyword;
  std::string stem_;
  std::optional<std::string> name_;
  std::optional<std::string> class_;
  std::optional<std::string> id_;
  std::string key_;
};

struct GeneralizedTermHash {
  std::size_t operator()(const GeneralizedTerm& t) const {
    return std::hash<std::string>{}(t.serialize());
  }
};

// Term -> occurrence count. Never holds a zero count. Iterates in term
// order, which keeps every downstream computation deterministic.
class TermBag {
 public:
  using Map = std::map<GeneralizedTerm, std::uint32_t>;

  void add(const GeneralizedTerm& term, std::uint32_t count = 1);
  std::uint32_t count(const GeneralizedTerm& term) const;

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::uint64_t total() const;

  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  friend bool operator==(const TermBag&, const TermBag&) = default;

 private:
  Map terms_;
};

}  // namespace ontovsm

#endif  // ONTOVSM_TERM_H_
