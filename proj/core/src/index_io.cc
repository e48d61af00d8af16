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

#include "ontovsm/index_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ontovsm/errors.h"
#include "ontovsm/text.h"

namespace ontovsm {
namespace {

// One file per space: `N <TAB> doc <TAB> norm` rows for the whole roster,
// then `T <TAB> term <TAB> df <TAB> doc:tf,...` rows in term order.
std::string space_file(Space s) { return std::string(space_name(s)) + ".tsv"; }

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + p.string() + "'");
  return out;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read '" + p.string() + "'");
  return in;
}

template <typename T>
T parse_number(std::string_view s, const std::string& src, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(src, line, "bad number '" + std::string(s) + "'");
  }
  return value;
}

std::string format_norm(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

void write_index(const IndexBundle& bundle, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest = open_out(dir / "manifest.tsv");
  for (Space s : kAllSpaces) {
    const SpaceIndex& space = bundle.space(s);
    manifest << space_name(s) << '\t' << space.n_docs() << '\t'
             << space_file(s) << '\t' << space.term_count() << '\n';

    std::ofstream out = open_out(dir / space_file(s));
    for (DocOrdinal d = 0; d < bundle.size(); ++d) {
      out << "N\t" << bundle.doc_id(d) << '\t' << format_norm(space.doc_norm(d))
          << '\n';
    }
    for (const GeneralizedTerm* term : space.sorted_terms()) {
      const auto list = space.postings(*term);
      out << "T\t" << term->serialize() << '\t' << list.size() << '\t';
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) out << ',';
        out << bundle.doc_id(list[i].doc) << ':' << list[i].tf;
      }
      out << '\n';
    }
    if (!out) throw Error("write failed for " + space_file(s));
  }
  if (!manifest) throw Error("write failed for manifest.tsv");
}

IndexBundle read_index(const std::filesystem::path& dir) {
  const std::string manifest_src = (dir / "manifest.tsv").string();
  std::ifstream manifest = open_in(dir / "manifest.tsv");
  std::map<Space, std::pair<std::uint32_t, std::string>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(manifest, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, '\t');
    if (f.size() != 4) {
      throw ParseError(manifest_src, line_no, "manifest line needs 4 fields");
    }
    const auto space = parse_space(f[0]);
    if (!space) throw ParseError(manifest_src, line_no, "unknown space " + f[0]);
    entries[*space] = {parse_number<std::uint32_t>(f[1], manifest_src, line_no),
                       f[2]};
  }
  if (entries.size() != kNumSpaces) {
    throw ValidationError(manifest_src + ": expected all six spaces");
  }

  std::array<std::map<GeneralizedTerm,
                      std::vector<std::pair<std::string, std::uint32_t>>>,
             kNumSpaces>
      postings;
  std::vector<std::string> roster;
  std::array<std::map<std::string, double>, kNumSpaces> stored_norms;

  for (Space s : kAllSpaces) {
    const auto& [n_docs, file] = entries.at(s);
    const std::string src = (dir / file).string();
    std::ifstream in = open_in(dir / file);
    auto& target = postings[static_cast<std::size_t>(s)];
    auto& norms = stored_norms[static_cast<std::size_t>(s)];
    std::vector<std::string> docs;
    line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto f = split(line, '\t');
      if (f[0] == "N") {
        if (f.size() != 3) throw ParseError(src, line_no, "norm row needs 3 fields");
        if (!target.empty()) throw ParseError(src, line_no, "norm row after terms");
        if (!norms.emplace(f[1], parse_number<double>(f[2], src, line_no)).second) {
          throw ParseError(src, line_no, "duplicate doc '" + f[1] + "'");
        }
        docs.push_back(f[1]);
        continue;
      }
      if (f[0] != "T" || f.size() != 4) {
        throw ParseError(src, line_no, "expected an N or T row");
      }
      GeneralizedTerm term = [&] {
        try {
          return GeneralizedTerm::parse(f[1]);
        } catch (const ValidationError& e) {
          throw ParseError(src, line_no, e.what());
        }
      }();
      const auto df = parse_number<std::uint32_t>(f[2], src, line_no);
      std::vector<std::pair<std::string, std::uint32_t>> list;
      for (const std::string& item : split(f[3], ',')) {
        const auto colon = item.rfind(':');
        if (colon == std::string::npos || colon == 0) {
          throw ParseError(src, line_no, "bad posting '" + item + "'");
        }
        list.emplace_back(item.substr(0, colon),
                          parse_number<std::uint32_t>(
                              std::string_view(item).substr(colon + 1), src, line_no));
      }
      if (list.size() != df) {
        throw ParseError(src, line_no, "df does not match postings length");
      }
      if (!target.emplace(std::move(term), std::move(list)).second) {
        throw ParseError(src, line_no, "duplicate term");
      }
    }
    if (docs.size() != n_docs) {
      throw ValidationError(src + ": roster size disagrees with manifest");
    }
    if (s == Space::kKeyword) {
      roster = docs;
    } else if (docs != roster) {
      throw ValidationError(src + ": roster differs between spaces");
    }
  }

  IndexBundle bundle = IndexBundle::from_postings(roster, postings);
  for (Space s : kAllSpaces) {
    const auto& stored = stored_norms[static_cast<std::size_t>(s)];
    const SpaceIndex& space = bundle.space(s);
    for (DocOrdinal d = 0; d < bundle.size(); ++d) {
      const double want = stored.at(bundle.doc_id(d));
      const double got = space.doc_norm(d);
      if (std::abs(want - got) > 1e-9 * std::max(1.0, std::abs(got))) {
        throw ValidationError("stored norm for '" + bundle.doc_id(d) + "' in " +
                              std::string(space_name(s)) +
                              " disagrees with its postings");
      }
    }
  }
  return bundle;
}

}  // namespace ontovsm
