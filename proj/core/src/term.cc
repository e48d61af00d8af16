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

#include "ontovsm/term.h"

#include "ontovsm/errors.h"
#include "ontovsm/text.h"

namespace ontovsm {
namespace {

constexpr std::array<std::string_view, kNumSpaces> kSpaceNames = {
    "kw", "n", "c", "nc", "i", "g"};

void encode_slot(std::string& out, std::string_view v) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  for (char c : v) {
    if (c == '/' || c == '%' || c == '*' || c == '\t' || c == '\n') {
      const auto u = static_cast<unsigned char>(c);
      out.push_back('%');
      out.push_back(kHex[u >> 4]);
      out.push_back(kHex[u & 0xF]);
    } else {
      out.push_back(c);
    }
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::string decode_slot(std::string_view v, std::string_view key) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != '%') {
      out.push_back(v[i]);
      continue;
    }
    if (i + 2 >= v.size()) {
      throw ValidationError("truncated escape in term '" + std::string(key) +
                            "'");
    }
    const int hi = hex_value(v[i + 1]);
    const int lo = hex_value(v[i + 2]);
    if (hi < 0 || lo < 0) {
      throw ValidationError("bad escape in term '" + std::string(key) + "'");
    }
    out.push_back(static_cast<char>(hi * 16 + lo));
    i += 2;
  }
  return out;
}

std::optional<std::string_view> as_slot(std::string_view v) {
  if (v == "*") return std::nullopt;
  return v;
}

}  // namespace

std::string_view space_name(Space s) {
  return kSpaceNames[static_cast<std::size_t>(s)];
}

std::optional<Space> parse_space(std::string_view name) {
  for (Space s : kAllSpaces) {
    if (space_name(s) == name) return s;
  }
  return std::nullopt;
}

GeneralizedTerm GeneralizedTerm::keyword(std::string_view stem) {
  if (stem.empty()) throw ValidationError("empty keyword stem");
  GeneralizedTerm t;
  t.kind_ = Kind::kKeyword;
  t.stem_ = std::string(stem);
  t.rebuild_key();
  return t;
}

GeneralizedTerm GeneralizedTerm::triple(
    std::optional<std::string_view> name,
    std::optional<std::string_view> class_id,
    std::optional<std::string_view> entity_id) {
  GeneralizedTerm t;
  t.kind_ = Kind::kTriple;
  if (name) {
    std::string n = normalize_name(*name);
    if (!n.empty()) t.name_ = std::move(n);
  }
  if (class_id && !class_id->empty()) t.class_ = std::string(*class_id);
  if (entity_id && !entity_id->empty()) t.id_ = std::string(*entity_id);
  if (!t.name_ && !t.class_ && !t.id_) {
    throw ValidationError("a triple needs at least one specified slot");
  }
  t.rebuild_key();
  return t;
}

GeneralizedTerm GeneralizedTerm::parse(std::string_view key) {
  if (key.starts_with("k:")) {
    GeneralizedTerm t = keyword(decode_slot(key.substr(2), key));
    if (t.key_ != key) {
      throw ValidationError("term '" + std::string(key) +
                            "' is not in canonical form");
    }
    return t;
  }
  if (!key.starts_with("t:")) {
    throw ValidationError("term '" + std::string(key) +
                          "' has no k: or t: prefix");
  }
  const std::vector<std::string> slots = split(key.substr(2), '/');
  if (slots.size() != 3) {
    throw ValidationError("triple term '" + std::string(key) +
                          "' needs exactly three slots");
  }
  std::array<std::optional<std::string>, 3> decoded;
  for (std::size_t i = 0; i < 3; ++i) {
    if (auto v = as_slot(slots[i])) decoded[i] = decode_slot(*v, key);
  }
  auto view = [](const std::optional<std::string>& s) {
    return s ? std::optional<std::string_view>(*s) : std::nullopt;
  };
  GeneralizedTerm t = triple(view(decoded[0]), view(decoded[1]), view(decoded[2]));
  if (t.key_ != key) {
    throw ValidationError("term '" + std::string(key) +
                          "' is not in canonical form");
  }
  return t;
}

void GeneralizedTerm::rebuild_key() {
  key_.clear();
  if (kind_ == Kind::kKeyword) {
    key_ = "k:";
    encode_slot(key_, stem_);
    return;
  }
  key_ = "t:";
  auto put = [&](const std::optional<std::string>& slot) {
    if (slot) {
      encode_slot(key_, *slot);
    } else {
      key_.push_back('*');
    }
  };
  put(name_);
  key_.push_back('/');
  put(class_);
  key_.push_back('/');
  put(id_);
}

std::string GeneralizedTerm::display() const {
  if (is_keyword()) return stem_;
  std::string out = "(";
  out += name_.value_or("*");
  out += '/';
  out += class_.value_or("*");
  out += '/';
  out += id_.value_or("*");
  out += ')';
  return out;
}

Space GeneralizedTerm::natural_space() const {
  if (is_keyword()) return Space::kKeyword;
  if (id_) return name_ || class_ ? Space::kGeneralized : Space::kIdentifier;
  if (name_ && class_) return Space::kNameClass;
  return name_ ? Space::kName : Space::kClass;
}

void TermBag::add(const GeneralizedTerm& term, std::uint32_t count) {
  if (count == 0) return;
  terms_[term] += count;
}

std::uint32_t TermBag::count(const GeneralizedTerm& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t TermBag::total() const {
  std::uint64_t sum = 0;
  for (const auto& [term, n] : terms_) sum += n;
  return sum;
}

}  // namespace ontovsm
