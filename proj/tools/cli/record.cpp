#include "record.hpp"

#include <algorithm>
#include <cstdint>

namespace zeroruns::cli {

namespace {

bool is_numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '-' || c == '/';
  });
}

void render_plain(const Table& t, std::ostream& out) {
  if (t.header.empty() && t.rows.size() == 1 && t.rows[0].size() == 1) {
    out << t.rows[0][0] << '\n';
    return;
  }
  std::size_t cols = t.header.size();
  for (const auto& row : t.rows) cols = std::max(cols, row.size());
  std::vector<std::size_t> width(cols, 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(t.header);
  for (const auto& row : t.rows) widen(row);
  std::vector<bool> numeric(cols, true);
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) numeric[i] = numeric[i] && is_numeric(row[i]);
  }

  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      const std::string pad(width[i] - row[i].size(), ' ');
      line += numeric[i] ? pad + row[i] : row[i] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  if (!t.header.empty()) emit(t.header);
  for (const auto& row : t.rows) emit(row);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void render_csv(const Table& t, std::ostream& out) {
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_cell(row[i]);
    }
    out << '\n';
  };
  if (!t.header.empty()) emit(t.header);
  for (const auto& row : t.rows) emit(row);
}

}  // namespace

Json count_json(const Count& c) {
  if (fits_u64(c)) return Json(static_cast<std::uint64_t>(c));
  return Json(to_string(c));
}

Json counts_json(const std::vector<Count>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(count_json(c));
  return arr;
}

Json record_json(const Record& r) {
  Json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["result"] = r.result;
  j["provenance"] = r.provenance;
  return j;
}

void render(const Record& r, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << record_json(r).dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < r.sections.size(); ++i) {
    if (i > 0) out << '\n';
    if (format == Format::csv) {
      render_csv(r.sections[i], out);
    } else {
      render_plain(r.sections[i], out);
    }
  }
}

Table scalar_table(std::string value) { return Table{{}, {{std::move(value)}}}; }

Table property_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  Table t{{"property", "value"}, {}};
  for (const auto& [k, v] : rows) t.rows.push_back({k, v});
  return t;
}

std::string join(const std::vector<Count>& values, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += sep;
    s += to_string(values[i]);
  }
  return s;
}

}  // namespace zeroruns::cli
