#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace discretion::io {

using Cell = std::variant<std::int64_t, double, std::string>;

// Column-ordered table with optional provenance metadata. CSV renders the
// metadata as leading `# key=value` comment lines; JSON mirrors it under
// "meta" with identical field names.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string format_double(double v);
std::string to_csv(const Table& table);
std::string to_json(const Table& table);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Minimal delimited-line splitter for the fixed, quote-free schemas used by
// this project.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace discretion::io
