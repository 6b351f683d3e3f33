#include "format.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flc::cli {

OutputFormat parse_format(const std::string& text)
{
    if (text == "human") {
        return OutputFormat::human;
    }
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw std::invalid_argument("unknown format '" + text + "' (human, csv, json)");
}

Json real(double value) { return std::round(value * 1e6) / 1e6; }

std::string cell_text(const Json& cell)
{
    if (cell.is_null()) {
        return "";
    }
    if (cell.is_string()) {
        return cell.get<std::string>();
    }
    if (cell.is_array()) {
        std::string text;
        for (const Json& item : cell) {
            if (!text.empty()) {
                text += ' ';
            }
            text += cell_text(item);
        }
        return text;
    }
    return cell.dump();
}

void render(const Table& table, OutputFormat format, std::ostream& out)
{
    switch (format) {
    case OutputFormat::json: {
        Json rows = Json::array();
        for (const auto& row : table.rows) {
            Json object = Json::object();
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                object[table.columns[i]] = row.at(i);
            }
            rows.push_back(std::move(object));
        }
        out << rows.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv: {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << (i ? "," : "") << table.columns[i];
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << cell_text(row[i]);
            }
            out << '\n';
        }
        break;
    }
    case OutputFormat::human: {
        std::vector<std::size_t> width(table.columns.size());
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            width[i] = table.columns[i].size();
            for (const auto& row : table.rows) {
                width[i] = std::max(width[i], cell_text(row.at(i)).size());
            }
        }
        auto line = [&](auto&& text_of) {
            std::string text;
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                std::string cell = text_of(i);
                if (i + 1 < table.columns.size()) {
                    cell.resize(width[i] + 2, ' ');
                }
                text += cell;
            }
            out << text << '\n';
        };
        line([&](std::size_t i) { return table.columns[i]; });
        for (const auto& row : table.rows) {
            line([&](std::size_t i) { return cell_text(row[i]); });
        }
        break;
    }
    }
}

} // namespace flc::cli
