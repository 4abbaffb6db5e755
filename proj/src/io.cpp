#include "discretion/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace discretion::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string cell_to_string(const Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell)) {
    return std::to_string(std::get<std::int64_t>(cell));
  }
  if (std::holds_alternative<double>(cell)) {
    return format_double(std::get<double>(cell));
  }
  return std::get<std::string>(cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.meta) {
    out << "# " << key << "=" << value << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << cell_to_string(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string to_json(const Table& table) {
  nlohmann::json doc;
  if (!table.meta.empty()) {
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [key, value] : table.meta) meta[key] = value;
    doc["meta"] = meta;
  }
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      const Cell& cell = row[i];
      if (std::holds_alternative<std::int64_t>(cell)) {
        obj[table.columns[i]] = std::get<std::int64_t>(cell);
      } else if (std::holds_alternative<double>(cell)) {
        obj[table.columns[i]] = std::get<double>(cell);
      } else {
        obj[table.columns[i]] = std::get<std::string>(cell);
      }
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace discretion::io
