#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zeroruns/count.hpp"

namespace zeroruns::cli {

using Json = nlohmann::ordered_json;
using zeroruns::to_string;

enum class Format { plain, csv, json };

/// Rectangular text view of one part of a result.
struct Table {
  std::vector<std::string> header;  ///< empty for a bare scalar or list
  std::vector<std::vector<std::string>> rows;
};

/// Everything a command produces. `result` is the JSON payload; `sections` is
/// what the plain and csv renderers print, in order, separated by blank lines.
struct Record {
  std::string command;
  Json params = Json::object();
  Json result;
  std::string provenance;  ///< formula, recurrence, oracle or a mix joined by '+'
  std::vector<Table> sections;
};

/// Counts that fit in 64 bits become JSON integers, larger ones decimal strings.
Json count_json(const Count& c);
Json counts_json(const std::vector<Count>& cs);

Json record_json(const Record& r);
void render(const Record& r, Format format, std::ostream& out);

/// Single-cell section holding one value.
Table scalar_table(std::string value);

/// Two-column key/value section.
Table property_table(const std::vector<std::pair<std::string, std::string>>& rows);

std::string join(const std::vector<Count>& values, const std::string& sep);

}  // namespace zeroruns::cli
