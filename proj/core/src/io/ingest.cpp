#include "avlm/io/ingest.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace avlm::io {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? std::string()
                                            : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_cell(const std::string& cell, long line_no,
                  const std::string& column) {
  if (cell.empty()) {
    throw IngestError(line_no, "empty cell in column '" + column + "'");
  }
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0') {
    throw IngestError(line_no, "non-numeric cell '" + cell + "' in column '" +
                                   column + "'");
  }
  return v;
}

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw IngestError(1, "missing column '" + name + "' in header");
  }
  return static_cast<std::size_t>(it - header.begin());
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

Format detect_format(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    const std::string ext = path.substr(dot + 1);
    if (ext == "ndjson" || ext == "jsonl" || ext == "json") {
      return Format::Ndjson;
    }
  }
  return Format::Csv;
}

void ingest_columns(std::istream& in, const std::vector<std::string>& columns,
                    const std::function<void(const std::vector<double>&)>& sink) {
  std::string line;
  if (!read_line(in, line)) {
    throw IngestError(1, "empty input, expected a header row");
  }
  const std::vector<std::string> header = split_csv_line(line);
  std::vector<std::size_t> index;
  index.reserve(columns.size());
  for (const auto& name : columns) index.push_back(find_column(header, name));

  std::vector<double> row(columns.size());
  long line_no = 1;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty()) {
      throw IngestError(line_no, "blank row");
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw IngestError(line_no, "ragged row: expected " +
                                     std::to_string(header.size()) +
                                     " fields, got " +
                                     std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      row[c] = parse_cell(fields[index[c]], line_no, columns[c]);
    }
    sink(row);
  }
}

void ingest_csv(std::istream& in, const Schema& schema,
                const std::function<void(const DesignPoint&)>& sink) {
  std::vector<std::string> columns;
  columns.push_back(schema.y);
  columns.insert(columns.end(), schema.x.begin(), schema.x.end());
  columns.insert(columns.end(), schema.z.begin(), schema.z.end());
  const auto p = static_cast<Eigen::Index>(schema.x.size());
  const auto d = static_cast<Eigen::Index>(schema.z.size());

  DesignPoint pt;
  pt.x = Eigen::VectorXd::Zero(p);
  pt.z = Eigen::VectorXd::Zero(d);
  ingest_columns(in, columns, [&](const std::vector<double>& row) {
    pt.y = row[0];
    for (Eigen::Index j = 0; j < p; ++j) pt.x(j) = row[1 + j];
    for (Eigen::Index j = 0; j < d; ++j) pt.z(j) = row[1 + p + j];
    sink(pt);
  });
}

void ingest_ndjson(std::istream& in,
                   const std::function<void(const DesignPoint&)>& sink) {
  std::string line;
  long line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty()) {
      throw IngestError(line_no, "blank row");
    }
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw IngestError(line_no, std::string("bad JSON: ") + e.what());
    }
    if (!rec.is_object() || !rec.contains("y") || !rec.contains("z")) {
      throw IngestError(line_no, "record must contain keys 'y' and 'z'");
    }
    DesignPoint pt;
    try {
      pt.y = rec.at("y").get<double>();
      const auto to_vec = [](const nlohmann::json& arr) {
        Eigen::VectorXd v(arr.size());
        Eigen::Index i = 0;
        for (const auto& e : arr) v(i++) = e.get<double>();
        return v;
      };
      pt.x = rec.contains("x") ? to_vec(rec.at("x")) : Eigen::VectorXd(0);
      pt.z = to_vec(rec.at("z"));
    } catch (const nlohmann::json::exception& e) {
      throw IngestError(line_no, std::string("non-numeric value: ") + e.what());
    }
    sink(pt);
  }
}

}  // namespace avlm::io
