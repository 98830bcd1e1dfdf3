// Copyright 2026 The Authors.
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

#include "tropsp/io.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tropsp {

namespace {

using nlohmann::ordered_json;

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Byte offset of every value in a syntactically valid JSON text, keyed by
// JSON pointer. Only consulted to position semantic errors.
class OffsetIndex {
 public:
  explicit OffsetIndex(std::string_view s) : s_(s) { value(""); }

  std::size_t at(const std::string& pointer) const {
    auto it = offsets_.find(pointer);
    return it == offsets_.end() ? 0 : it->second;
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      ++i_;
    }
  }
  std::string string_lit() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\') out += s_[i_++];
      out += s_[i_++];
    }
    ++i_;
    return out;
  }
  void value(const std::string& ptr) {
    ws();
    offsets_.emplace(ptr, i_);
    if (i_ >= s_.size()) return;
    const char c = s_[i_];
    if (c == '{') {
      ++i_;
      ws();
      if (i_ < s_.size() && s_[i_] == '}') {
        ++i_;
        return;
      }
      for (;;) {
        ws();
        const std::string key = string_lit();
        ws();
        ++i_;  // ':'
        value(ptr + "/" + key);
        ws();
        if (i_ < s_.size() && s_[i_++] == ',') continue;
        return;
      }
    } else if (c == '[') {
      ++i_;
      ws();
      if (i_ < s_.size() && s_[i_] == ']') {
        ++i_;
        return;
      }
      for (int k = 0;; ++k) {
        value(ptr + "/" + std::to_string(k));
        ws();
        if (i_ < s_.size() && s_[i_++] == ',') continue;
        return;
      }
    } else if (c == '"') {
      string_lit();
    } else {
      while (i_ < s_.size() && std::string_view(",]} \t\r\n").find(s_[i_]) ==
                                   std::string_view::npos) {
        ++i_;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

class JsonDoc {
 public:
  explicit JsonDoc(std::string_view text) : text_(text) {
    try {
      root_ = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
      const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
      std::string msg = e.what();
      // Strip nlohmann's "[json.exception.parse_error.101] " prefix.
      if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
      throw ParseError(line, col, msg);
    }
    index_.emplace(text);
  }

  const ordered_json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& pointer,
                         const std::string& message) const {
    const auto [line, col] = line_col(text_, index_->at(pointer));
    throw ParseError(line, col, message);
  }

  const ordered_json& require_object() const {
    if (!root_.is_object()) fail("", "expected a JSON object");
    return root_;
  }

  void reject_unknown(const std::set<std::string>& known) const {
    for (const auto& [key, v] : root_.items()) {
      if (!known.count(key)) fail("/" + key, "unknown field '" + key + "'");
    }
  }

  int get_int(const std::string& key, int lo, int hi) const {
    if (!root_.contains(key)) fail("", "missing field '" + key + "'");
    const ordered_json& v = root_.at(key);
    if (!v.is_number_integer() || v.get<long long>() < lo ||
        v.get<long long>() > hi) {
      fail("/" + key, "'" + key + "' must be an integer in [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v.get<int>();
  }

  TropNum get_value(const ordered_json& v, const std::string& pointer) const {
    if (v.is_number_integer()) return TropNum(v.get<long>());
    if (!v.is_string()) fail(pointer, "value must be a string or an integer");
    try {
      return TropNum::parse(v.get<std::string>());
    } catch (const ValueParseError& e) {
      fail(pointer, "malformed value '" + e.token() + "'");
    }
  }

  Subset get_subset(const ordered_json& v, const std::string& pointer,
                    int ground) const {
    if (!v.is_array()) fail(pointer, "subset must be an array of elements");
    Subset s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const ordered_json& e = v[i];
      const std::string p = pointer + "/" + std::to_string(i);
      if (!e.is_number_integer() || e.get<long long>() < 1 ||
          e.get<long long>() > ground) {
        fail(p, "element must be an integer in [1, " + std::to_string(ground) +
                    "]");
      }
      const int x = e.get<int>() - 1;
      if (s.contains(x)) fail(p, "repeated element " + std::to_string(x + 1));
      s = s.with(x);
    }
    return s;
  }

 private:
  std::string_view text_;
  ordered_json root_;
  std::optional<OffsetIndex> index_;
};

}  // namespace

MatroidFile parse_matroid(std::string_view text) {
  const JsonDoc doc(text);
  const ordered_json& root = doc.require_object();
  doc.reject_unknown({"name", "ground", "paired", "rank", "values", "entries"});

  std::string name;
  if (root.contains("name")) {
    if (!root["name"].is_string()) doc.fail("/name", "'name' must be a string");
    name = root["name"].get<std::string>();
  }
  const int ground = doc.get_int("ground", 0, 20);
  const int rank = doc.get_int("rank", 0, ground);
  bool paired = false;
  if (root.contains("paired")) {
    if (!root["paired"].is_boolean()) {
      doc.fail("/paired", "'paired' must be true or false");
    }
    paired = root["paired"].get<bool>();
    if (paired && ground % 2 != 0) {
      doc.fail("/ground", "a paired ground set needs an even size");
    }
  }
  const bool has_values = root.contains("values");
  const bool has_entries = root.contains("entries");
  if (has_values == has_entries) {
    doc.fail("", "give exactly one of 'values' or 'entries'");
  }

  const std::size_t count = binomial(ground, rank);
  std::vector<TropNum> values(count);
  if (has_values) {
    const ordered_json& vs = root["values"];
    if (!vs.is_array()) doc.fail("/values", "'values' must be an array");
    if (vs.size() != count) {
      doc.fail("/values", "expected " + std::to_string(count) +
                              " values (C(" + std::to_string(ground) + "," +
                              std::to_string(rank) + ")), got " +
                              std::to_string(vs.size()));
    }
    for (std::size_t i = 0; i < count; ++i) {
      values[i] = doc.get_value(vs[i], "/values/" + std::to_string(i));
    }
  } else {
    const ordered_json& es = root["entries"];
    if (!es.is_array()) doc.fail("/entries", "'entries' must be an array");
    std::vector<char> seen(count, 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string p = "/entries/" + std::to_string(i);
      const ordered_json& e = es[i];
      if (!e.is_object()) doc.fail(p, "entry must be an object");
      for (const auto& [key, v] : e.items()) {
        if (key != "subset" && key != "value") {
          doc.fail(p + "/" + key, "unknown field '" + key + "'");
        }
      }
      if (!e.contains("subset") || !e.contains("value")) {
        doc.fail(p, "entry needs 'subset' and 'value'");
      }
      const Subset s = doc.get_subset(e["subset"], p + "/subset", ground);
      if (s.size() != rank) {
        doc.fail(p + "/subset", "subset has " + std::to_string(s.size()) +
                                    " elements, rank is " +
                                    std::to_string(rank));
      }
      const std::size_t r = colex_rank(s);
      if (seen[r]) doc.fail(p + "/subset", "subset listed twice");
      seen[r] = 1;
      values[r] = doc.get_value(e["value"], p + "/value");
    }
  }
  try {
    return {ValuatedMatroid(ground, rank, std::move(values), name), paired};
  } catch (const std::invalid_argument& e) {
    doc.fail("", e.what());
  }
}

nlohmann::ordered_json matroid_json(const ValuatedMatroid& mu, bool paired) {
  ordered_json out;
  if (!mu.name().empty()) out["name"] = mu.name();
  out["ground"] = mu.ground_size();
  out["paired"] = paired;
  out["rank"] = mu.rank();
  ordered_json values = ordered_json::array();
  for (const TropNum& v : mu.values()) values.push_back(v.str());
  out["values"] = std::move(values);
  return out;
}

std::string serialize_matroid(const ValuatedMatroid& mu, bool paired) {
  return matroid_json(mu, paired).dump(2) + "\n";
}

MatrixFile parse_matrix(std::string_view text) {
  std::vector<std::vector<TropNum>> rows;
  int split_at = -1;
  int line_no = 0;
  int first_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<TropNum> row;
    int row_split = -1;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const int col = static_cast<int>(i) + 1;
      if (line[i] == '|') {
        if (row_split >= 0) throw ParseError(line_no, col, "second '|' in row");
        row_split = static_cast<int>(row.size());
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != '|' &&
             !std::isspace(static_cast<unsigned char>(line[j]))) {
        ++j;
      }
      try {
        row.push_back(TropNum::parse(line.substr(i, j - i)));
      } catch (const ValueParseError& e) {
        throw ParseError(line_no, col, "malformed value '" + e.token() + "'");
      }
      i = j;
    }
    if (!row.empty() || row_split >= 0) {
      if (rows.empty()) {
        split_at = row_split;
        first_line = line_no;
      } else if (row.size() != rows.front().size()) {
        throw ParseError(line_no, 1,
                         "row has " + std::to_string(row.size()) +
                             " entries, line " + std::to_string(first_line) +
                             " has " + std::to_string(rows.front().size()));
      } else if (row_split != split_at) {
        throw ParseError(line_no, 1, "'|' position differs from line " +
                                         std::to_string(first_line));
      }
      rows.push_back(std::move(row));
    }
    pos = end + 1;
  }
  if (rows.empty() || rows.front().empty()) {
    throw ParseError(line_no, 1, "empty matrix");
  }
  const int cols = static_cast<int>(rows.front().size());
  if (split_at >= 0 && 2 * split_at != cols) {
    throw ParseError(first_line, 1, "'|' must split the columns in half");
  }
  MatrixFile out;
  out.split = split_at >= 0;
  out.matrix.resize(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols; ++c) out.matrix(r, c) = rows[r][c];
  }
  return out;
}

std::string serialize_matrix(const TropMatrix& m, bool split) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      if (split && j == m.cols() / 2) out << "| ";
      out << m(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

AdmissibleBasisSystem parse_basis_system(std::string_view text) {
  const JsonDoc doc(text);
  const ordered_json& root = doc.require_object();
  doc.reject_unknown({"name", "n", "rank", "bases", "non_bases"});
  const int n = doc.get_int("n", 1, 10);
  const int k = doc.get_int("rank", 1, n);
  const PairedGround g{n};
  const bool has_bases = root.contains("bases");
  if (has_bases == root.contains("non_bases")) {
    doc.fail("", "give exactly one of 'bases' or 'non_bases'");
  }
  const std::string key = has_bases ? "bases" : "non_bases";
  const ordered_json& list = root[key];
  if (!list.is_array()) doc.fail("/" + key, "'" + key + "' must be an array");
  std::vector<Subset> listed;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = "/" + key + "/" + std::to_string(i);
    const Subset s = doc.get_subset(list[i], p, 2 * n);
    if (s.size() != k) doc.fail(p, "expected " + std::to_string(k) + " elements");
    if (!g.admissible(s)) doc.fail(p, g.label(s) + " is not admissible");
    listed.push_back(s);
  }
  AdmissibleBasisSystem sys{n, k, {}};
  for_each_subset(2 * n, k, [&](Subset j) {
    if (!g.admissible(j)) return;
    const bool in = std::find(listed.begin(), listed.end(), j) != listed.end();
    if (in == has_bases) sys.bases.push_back(j);
  });
  if (sys.bases.empty()) doc.fail("/" + key, "no admissible bases remain");
  return sys;
}

nlohmann::ordered_json report_json(const RelationReport& r, int paired_n) {
  const PairedGround g{paired_n};
  ordered_json out;
  out["verdict"] = r.verdict ? "pass" : "fail";
  out["relations"] = r.relations_checked;
  out["failures"] = r.failures;
  ordered_json ws = ordered_json::array();
  for (const Witness& w : r.witnesses) {
    ordered_json j;
    j["relation"] = w.relation;
    ordered_json idx = ordered_json::array();
    for (Subset s : w.indices) {
      idx.push_back(paired_n > 0 ? g.label(s) : to_string(s));
    }
    j["indices"] = std::move(idx);
    ordered_json terms = ordered_json::array();
    for (const TropNum& t : w.terms) terms.push_back(t.str());
    j["terms"] = std::move(terms);
    j["min"] = w.min.str();
    j["multiplicity"] = w.multiplicity;
    ws.push_back(std::move(j));
  }
  out["witnesses"] = std::move(ws);
  out["truncated"] = r.truncated;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tropsp
