// Copyright 2026 The DiversiTree Authors
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

// MPS reader (fixed and free format) and a free-format writer.
//
// Supported sections: NAME, OBJSENSE, ROWS, COLUMNS (with MARKER
// INTORG/INTEND), RHS, RANGES, BOUNDS, ENDATA. Columns without explicit
// bounds get [0, +inf), integer or not. A ranged row is split into two
// constraints, the second named "<row>#range".

#ifndef DIVERSITREE_MPS_HPP_
#define DIVERSITREE_MPS_HPP_

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diversitree/error.hpp"
#include "diversitree/model.hpp"

namespace diversitree {

enum class MpsFormat { kAuto, kFree, kFixed };

enum class MpsErrorKind {
  kBadSection,
  kDuplicateRow,
  kUnknownRow,
  kUnknownColumn,
  kBadBoundType,
  kBadNumber,
  kMalformedLine,
  kMissingObjective,
  kIo,
};

inline const char* MpsErrorKindName(MpsErrorKind kind) {
  switch (kind) {
    case MpsErrorKind::kBadSection:
      return "bad section header";
    case MpsErrorKind::kDuplicateRow:
      return "duplicate row";
    case MpsErrorKind::kUnknownRow:
      return "unknown row";
    case MpsErrorKind::kUnknownColumn:
      return "unknown column";
    case MpsErrorKind::kBadBoundType:
      return "bad bound type";
    case MpsErrorKind::kBadNumber:
      return "bad number";
    case MpsErrorKind::kMalformedLine:
      return "malformed line";
    case MpsErrorKind::kMissingObjective:
      return "missing objective row";
    case MpsErrorKind::kIo:
      return "i/o error";
  }
  return "error";
}

class MpsParseError : public Error {
 public:
  MpsParseError(MpsErrorKind kind, int line, const std::string& detail)
      : Error("MPS line " + std::to_string(line) + ": " + MpsErrorKindName(kind) +
              ": " + detail),
        kind_(kind),
        line_(line) {}

  MpsErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  MpsErrorKind kind_;
  int line_;
};

struct MpsReadResult {
  MipInstance instance;
  std::vector<std::string> warnings;
};

namespace mps_internal {

enum class Section { kNone, kName, kObjSense, kRows, kColumns, kRhs, kRanges, kBounds, kEnd };

inline std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

inline std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Fixed-format fields (1-based columns): 2-3, 5-12, 15-22, 25-36, 40-47, 50-61.
inline std::vector<std::string> FixedFields(std::string_view line) {
  static constexpr std::pair<std::size_t, std::size_t> kSpans[] = {
      {1, 2}, {4, 8}, {14, 8}, {24, 12}, {39, 8}, {49, 12}};
  std::vector<std::string> out;
  for (const auto& [start, len] : kSpans) {
    out.push_back(start < line.size() ? Trim(line.substr(start, len)) : std::string());
  }
  return out;
}

inline std::optional<double> ToNumber(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // strtod accepts forms from_chars rejects on some toolchains ("1.e5", "+3").
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return value;
}

inline std::string Upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

struct RowInfo {
  char type = 'G';  // N, G, L, E
  int constraint = -1;  // index into constraints, -1 for N rows
};

class Reader {
 public:
  explicit Reader(MpsFormat format) : format_(format) {}

  MpsReadResult Read(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty() || raw[0] == '*') continue;
      if (Trim(raw).empty()) continue;
      if (!std::isspace(static_cast<unsigned char>(raw[0]))) {
        Header(raw);
        if (section_ == Section::kEnd) break;
        continue;
      }
      Data(raw);
    }
    return Finish();
  }

 private:
  [[noreturn]] void Fail(MpsErrorKind kind, const std::string& detail) const {
    throw MpsParseError(kind, line_no_, detail);
  }

  double Number(const std::string& s) const {
    auto v = ToNumber(s);
    if (!v) Fail(MpsErrorKind::kBadNumber, "'" + s + "'");
    return *v;
  }

  void Header(const std::string& raw) {
    const auto tokens = Tokenize(raw);
    const std::string key = Upper(tokens[0]);
    if (key == "NAME") {
      section_ = Section::kName;
      // Fixed format allows spaces inside the name.
      if (tokens.size() > 1) {
        name_ = format_ == MpsFormat::kFree ? tokens[1] : Trim(std::string_view(raw).substr(4));
      }
    } else if (key == "OBJSENSE") {
      section_ = Section::kObjSense;
      if (tokens.size() > 1) ObjSense(tokens[1]);
    } else if (key == "ROWS") {
      section_ = Section::kRows;
    } else if (key == "COLUMNS") {
      section_ = Section::kColumns;
    } else if (key == "RHS") {
      section_ = Section::kRhs;
    } else if (key == "RANGES") {
      section_ = Section::kRanges;
    } else if (key == "BOUNDS") {
      section_ = Section::kBounds;
    } else if (key == "ENDATA") {
      section_ = Section::kEnd;
    } else {
      Fail(MpsErrorKind::kBadSection, "'" + tokens[0] + "'");
    }
  }

  void ObjSense(const std::string& token) {
    const std::string s = Upper(token);
    if (s == "MAX" || s == "MAXIMIZE") {
      maximize_ = true;
    } else if (s == "MIN" || s == "MINIMIZE") {
      maximize_ = false;
    } else {
      Fail(MpsErrorKind::kMalformedLine, "unknown objective sense '" + token + "'");
    }
  }

  void Data(const std::string& raw) {
    switch (section_) {
      case Section::kObjSense:
        ObjSense(Tokenize(raw).at(0));
        return;
      case Section::kRows:
        return Rows(raw);
      case Section::kColumns:
        return WithFallback(raw, [&](const std::vector<std::string>& f, bool fixed) {
          Columns(f, fixed);
        });
      case Section::kRhs:
      case Section::kRanges:
        return WithFallback(raw, [&](const std::vector<std::string>& f, bool fixed) {
          RhsOrRanges(f, fixed, section_ == Section::kRanges);
        });
      case Section::kBounds:
        return WithFallback(raw, [&](const std::vector<std::string>& f, bool fixed) {
          Bounds(f, fixed);
        });
      case Section::kName:
      case Section::kNone:
      case Section::kEnd:
        Fail(MpsErrorKind::kMalformedLine, "data line outside of a section");
    }
  }

  // Free tokenization first; fixed column slicing when free parsing fails and
  // the format allows it.
  template <typename Fn>
  void WithFallback(const std::string& raw, Fn&& fn) {
    if (format_ == MpsFormat::kFixed) return fn(FixedFields(raw), true);
    if (format_ == MpsFormat::kFree) return fn(Tokenize(raw), false);
    try {
      fn(Tokenize(raw), false);
    } catch (const MpsParseError& free_error) {
      if (free_error.kind() == MpsErrorKind::kDuplicateRow) throw;
      try {
        fn(FixedFields(raw), true);
      } catch (const MpsParseError&) {
        throw free_error;
      }
    }
  }

  void Rows(const std::string& raw) {
    std::vector<std::string> f = Tokenize(raw);
    if (format_ == MpsFormat::kFixed || (format_ == MpsFormat::kAuto && f.size() > 2)) {
      auto fixed = FixedFields(raw);
      f = {fixed[0], fixed[1]};
    }
    if (f.size() != 2 || f[0].size() != 1) {
      Fail(MpsErrorKind::kMalformedLine, "ROWS entry needs a type and a name");
    }
    const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(f[0][0])));
    const std::string& name = f[1];
    if (rows_.count(name)) Fail(MpsErrorKind::kDuplicateRow, "'" + name + "'");
    RowInfo info{type, -1};
    switch (type) {
      case 'N':
        if (objective_row_.empty()) {
          objective_row_ = name;
        } else {
          warnings_.push_back("free row '" + name + "' ignored");
        }
        break;
      case 'G':
      case 'L':
      case 'E': {
        info.constraint = static_cast<int>(constraints_.size());
        LinearConstraint con;
        con.name = name;
        con.sense = type == 'G'   ? RowSense::kGreaterEqual
                    : type == 'L' ? RowSense::kLessEqual
                                  : RowSense::kEqual;
        constraints_.push_back(std::move(con));
        break;
      }
      default:
        Fail(MpsErrorKind::kMalformedLine, std::string("row type '") + f[0] + "'");
    }
    rows_.emplace(name, info);
  }

  const RowInfo& Row(const std::string& name) const {
    auto it = rows_.find(name);
    if (it == rows_.end()) Fail(MpsErrorKind::kUnknownRow, "'" + name + "'");
    return it->second;
  }

  int Column(const std::string& name) const {
    auto it = columns_.find(name);
    if (it == columns_.end()) Fail(MpsErrorKind::kUnknownColumn, "'" + name + "'");
    return it->second;
  }

  void Columns(const std::vector<std::string>& f, bool fixed) {
    // Marker: <name> 'MARKER' 'INTORG'|'INTEND'
    const std::size_t marker_pos = fixed ? 2 : 1;
    if (f.size() > marker_pos + 1 && Upper(f[marker_pos]) == "'MARKER'") {
      const std::string& kind = fixed ? f[4] : f[marker_pos + 1];
      const std::string k = Upper(kind);
      if (k == "'INTORG'") {
        in_integer_block_ = true;
      } else if (k == "'INTEND'") {
        in_integer_block_ = false;
      } else {
        Fail(MpsErrorKind::kMalformedLine, "unknown marker " + kind);
      }
      return;
    }
    std::vector<std::pair<std::string, std::string>> entries;
    std::string column;
    if (fixed) {
      column = f[1];
      if (!f[2].empty()) entries.emplace_back(f[2], f[3]);
      if (!f[4].empty()) entries.emplace_back(f[4], f[5]);
    } else {
      if (f.size() != 3 && f.size() != 5) {
        Fail(MpsErrorKind::kMalformedLine, "COLUMNS entry needs 3 or 5 fields");
      }
      column = f[0];
      entries.emplace_back(f[1], f[2]);
      if (f.size() == 5) entries.emplace_back(f[3], f[4]);
    }
    if (column.empty() || entries.empty()) {
      Fail(MpsErrorKind::kMalformedLine, "COLUMNS entry without column or row");
    }
    // Validate everything before mutating so a fallback retry starts clean.
    std::vector<std::tuple<const std::string*, const RowInfo*, double>> parsed;
    for (const auto& [row, value] : entries) {
      parsed.emplace_back(&row, &Row(row), Number(value));
    }
    int j;
    auto it = columns_.find(column);
    if (it == columns_.end()) {
      j = static_cast<int>(variables_.size());
      columns_.emplace(column, j);
      variables_.push_back({column, 0.0, kInf, in_integer_block_});
      objective_.push_back(0.0);
      column_terms_.emplace_back();
      lower_set_.push_back(false);
    } else {
      j = it->second;
    }
    for (const auto& [row_name, row, value] : parsed) {
      if (row->constraint >= 0) {
        column_terms_[j].push_back({row->constraint, value});
      } else if (*row_name == objective_row_) {
        objective_[j] += value;
      }
    }
  }

  void RhsOrRanges(const std::vector<std::string>& f, bool fixed, bool ranges) {
    std::vector<std::pair<std::string, std::string>> entries;
    if (fixed) {
      if (!f[2].empty()) entries.emplace_back(f[2], f[3]);
      if (!f[4].empty()) entries.emplace_back(f[4], f[5]);
    } else {
      // Optional leading set name: odd field count.
      std::size_t start = f.size() % 2 == 1 ? 1 : 0;
      if (f.size() < 2 || f.size() > 5) {
        Fail(MpsErrorKind::kMalformedLine, "RHS/RANGES entry needs 2 to 5 fields");
      }
      for (std::size_t i = start; i + 1 < f.size(); i += 2) entries.emplace_back(f[i], f[i + 1]);
    }
    if (entries.empty()) Fail(MpsErrorKind::kMalformedLine, "RHS/RANGES entry without rows");
    std::vector<std::pair<std::string, double>> parsed;
    for (const auto& [row, value] : entries) {
      Row(row);
      parsed.emplace_back(row, Number(value));
    }
    for (const auto& [row, value] : parsed) {
      const RowInfo& info = rows_.at(row);
      if (info.constraint < 0) {
        if (ranges) {
          warnings_.push_back("range on free row '" + row + "' ignored");
        } else if (row == objective_row_) {
          warnings_.push_back("objective constant " + std::to_string(value) + " ignored");
        }
        continue;
      }
      if (ranges) {
        range_[info.constraint] = value;
      } else {
        constraints_[info.constraint].rhs = value;
      }
    }
  }

  void Bounds(const std::vector<std::string>& f, bool fixed) {
    std::string type, column, value;
    if (fixed) {
      type = f[0];
      column = f[2];
      value = f[3];
    } else {
      if (f.size() < 2 || f.size() > 4) {
        Fail(MpsErrorKind::kMalformedLine, "BOUNDS entry needs 2 to 4 fields");
      }
      type = f[0];
      const std::string t = Upper(type);
      const bool valueless = t == "FR" || t == "MI" || t == "PL";
      if (valueless) {
        column = f.size() == 3 ? f[2] : f[1];
        if (f.size() == 4) Fail(MpsErrorKind::kMalformedLine, "unexpected bound value");
      } else if (t == "BV") {
        if (f.size() == 4) {
          column = f[2];
          value = f[3];
        } else if (f.size() == 3) {
          if (columns_.count(f[1]) && ToNumber(f[2])) {
            column = f[1];
            value = f[2];
          } else {
            column = f[2];
          }
        } else {
          column = f[1];
        }
      } else {
        if (f.size() == 4) {
          column = f[2];
          value = f[3];
        } else if (f.size() == 3) {
          column = f[1];
          value = f[2];
        } else {
          Fail(MpsErrorKind::kMalformedLine, "bound " + type + " needs a value");
        }
      }
    }
    const std::string t = Upper(type);
    const int j = Column(column);
    VariableDef& v = variables_[j];
    auto need_value = [&]() {
      if (value.empty()) Fail(MpsErrorKind::kMalformedLine, "bound " + type + " needs a value");
      return Number(value);
    };
    if (t == "UP" || t == "UI") {
      const double u = need_value();
      if (u < 0.0 && v.lower == 0.0 && !lower_set_[j]) {
        warnings_.push_back("negative upper bound on '" + column + "' sets lower to -inf");
        v.lower = -kInf;
      }
      v.upper = u;
      if (t == "UI") v.is_integer = true;
    } else if (t == "LO" || t == "LI") {
      v.lower = need_value();
      lower_set_[j] = true;
      if (t == "LI") v.is_integer = true;
    } else if (t == "FX") {
      v.lower = v.upper = need_value();
      lower_set_[j] = true;
    } else if (t == "FR") {
      v.lower = -kInf;
      v.upper = kInf;
      lower_set_[j] = true;
    } else if (t == "MI") {
      v.lower = -kInf;
      lower_set_[j] = true;
    } else if (t == "PL") {
      v.upper = kInf;
    } else if (t == "BV") {
      v.lower = 0.0;
      v.upper = 1.0;
      v.is_integer = true;
      lower_set_[j] = true;
    } else {
      Fail(MpsErrorKind::kBadBoundType, "'" + type + "'");
    }
  }

  MpsReadResult Finish() {
    if (objective_row_.empty()) {
      throw MpsParseError(MpsErrorKind::kMissingObjective, line_no_, "no N row");
    }
    for (std::size_t j = 0; j < column_terms_.size(); ++j) {
      for (const auto& [row, value] : column_terms_[j]) {
        constraints_[row].terms.push_back({static_cast<int>(j), value});
      }
    }
    MipInstance instance;
    instance.name = name_;
    instance.variables = std::move(variables_);
    instance.objective = std::move(objective_);
    instance.maximize = maximize_;
    if (maximize_) {
      for (double& c : instance.objective) c = -c;
    }
    std::vector<LinearConstraint> extra;
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
      LinearConstraint& con = constraints_[i];
      con.terms = CanonicalTerms(std::move(con.terms));
      auto r = range_.find(static_cast<int>(i));
      if (r == range_.end()) continue;
      const double range = r->second;
      LinearConstraint other;
      other.name = con.name + "#range";
      other.terms = con.terms;
      switch (con.sense) {
        case RowSense::kGreaterEqual:
          other.sense = RowSense::kLessEqual;
          other.rhs = con.rhs + std::abs(range);
          break;
        case RowSense::kLessEqual:
          other.sense = RowSense::kGreaterEqual;
          other.rhs = con.rhs - std::abs(range);
          break;
        case RowSense::kEqual:
          if (range == 0.0) continue;
          if (range > 0.0) {
            con.sense = RowSense::kGreaterEqual;
            other.sense = RowSense::kLessEqual;
          } else {
            con.sense = RowSense::kLessEqual;
            other.sense = RowSense::kGreaterEqual;
          }
          other.rhs = con.rhs + range;
          break;
      }
      extra.push_back(std::move(other));
    }
    for (LinearConstraint& con : extra) constraints_.push_back(std::move(con));
    instance.constraints = std::move(constraints_);
    for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
      if (instance.constraints[i].name == kCutoffRowName) instance.cutoff_row = i;
    }
    try {
      instance.Validate();
    } catch (const ModelError& e) {
      throw MpsParseError(MpsErrorKind::kMalformedLine, line_no_, e.what());
    }
    return {std::move(instance), std::move(warnings_)};
  }

  MpsFormat format_;
  Section section_ = Section::kNone;
  int line_no_ = 0;
  std::string name_;
  bool maximize_ = false;
  bool in_integer_block_ = false;
  std::string objective_row_;
  std::unordered_map<std::string, RowInfo> rows_;
  std::unordered_map<std::string, int> columns_;
  std::vector<LinearConstraint> constraints_;
  std::vector<VariableDef> variables_;
  std::vector<double> objective_;
  std::vector<std::vector<std::pair<int, double>>> column_terms_;
  std::vector<bool> lower_set_;
  std::map<int, double> range_;
  std::vector<std::string> warnings_;
};

inline std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace mps_internal

inline MpsReadResult ReadMps(std::istream& in, MpsFormat format = MpsFormat::kAuto) {
  return mps_internal::Reader(format).Read(in);
}

inline MpsReadResult ReadMpsString(const std::string& text,
                                   MpsFormat format = MpsFormat::kAuto) {
  std::istringstream in(text);
  return ReadMps(in, format);
}

inline MpsReadResult ReadMpsFile(const std::string& path,
                                 MpsFormat format = MpsFormat::kAuto) {
  std::ifstream in(path);
  if (!in) throw MpsParseError(MpsErrorKind::kIo, 0, "cannot open '" + path + "'");
  return ReadMps(in, format);
}

// Free-format writer. Every column gets an objective entry (possibly 0) so
// that columns without nonzeros survive a round trip.
inline void WriteMps(std::ostream& out, const MipInstance& instance) {
  using mps_internal::FormatNumber;
  std::string obj_name = "obj";
  for (const auto& con : instance.constraints) {
    if (con.name == obj_name) obj_name = "__obj";
  }
  out << "NAME " << (instance.name.empty() ? "unnamed" : instance.name) << "\n";
  if (instance.maximize) out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n N " << obj_name << "\n";
  for (const auto& con : instance.constraints) {
    const char type = con.sense == RowSense::kGreaterEqual ? 'G'
                      : con.sense == RowSense::kLessEqual  ? 'L'
                                                           : 'E';
    out << " " << type << " " << con.name << "\n";
  }
  std::vector<std::vector<std::pair<std::size_t, double>>> by_column(instance.variables.size());
  for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
    for (const Term& t : instance.constraints[i].terms) by_column[t.index].emplace_back(i, t.value);
  }
  out << "COLUMNS\n";
  bool in_block = false;
  int marker = 0;
  for (std::size_t j = 0; j < instance.variables.size(); ++j) {
    const VariableDef& v = instance.variables[j];
    if (v.is_integer != in_block) {
      out << "    MARKER" << marker++ << " 'MARKER' " << (v.is_integer ? "'INTORG'" : "'INTEND'")
          << "\n";
      in_block = v.is_integer;
    }
    const double c = instance.maximize ? -instance.objective[j] : instance.objective[j];
    out << "    " << v.name << " " << obj_name << " " << FormatNumber(c) << "\n";
    for (const auto& [row, value] : by_column[j]) {
      out << "    " << v.name << " " << instance.constraints[row].name << " "
          << FormatNumber(value) << "\n";
    }
  }
  if (in_block) out << "    MARKER" << marker++ << " 'MARKER' 'INTEND'\n";
  out << "RHS\n";
  for (const auto& con : instance.constraints) {
    if (con.rhs != 0.0) out << "    RHS " << con.name << " " << FormatNumber(con.rhs) << "\n";
  }
  out << "BOUNDS\n";
  for (const VariableDef& v : instance.variables) {
    if (v.lower == -kInf && v.upper == kInf) {
      out << " FR BND " << v.name << "\n";
      continue;
    }
    if (v.lower == v.upper) {
      out << " FX BND " << v.name << " " << FormatNumber(v.lower) << "\n";
      continue;
    }
    if (v.lower == -kInf) {
      out << " MI BND " << v.name << "\n";
    } else if (v.lower != 0.0) {
      out << " LO BND " << v.name << " " << FormatNumber(v.lower) << "\n";
    }
    if (v.upper != kInf) out << " UP BND " << v.name << " " << FormatNumber(v.upper) << "\n";
  }
  out << "ENDATA\n";
}

inline std::string WriteMpsString(const MipInstance& instance) {
  std::ostringstream out;
  WriteMps(out, instance);
  return out.str();
}

}  // namespace diversitree

#endif  // DIVERSITREE_MPS_HPP_
