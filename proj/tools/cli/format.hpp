#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace flc::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { human, csv, json };

OutputFormat parse_format(const std::string& text);

/// Rows of typed cells. CSV and JSON output are byte-stable: fixed column
/// order, no locale, reals rounded to six decimals.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

void render(const Table& table, OutputFormat format, std::ostream& out);

/// Rounds to six decimals so the shortest round-trip form is short.
Json real(double value);

/// Cell text used by the CSV and human renderers.
std::string cell_text(const Json& cell);

} // namespace flc::cli
