#include "eqlines/io/matrix_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace eqlines::io {

using exact::ParseError;
using nlohmann::json;

json matrix_json(const frames::LineSet& ls) {
  json rows = json::array();
  for (std::size_t i = 0; i < ls.m(); ++i) {
    json row = json::array();
    for (const auto& e : ls.row(i)) row.push_back(exact::to_json(e));
    rows.push_back(std::move(row));
  }
  return {{"m", ls.m()}, {"n", ls.n()}, {"entries", rows}};
}

MatrixFile matrix_file_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix file must be a JSON object");
  for (const char* k : {"m", "n", "entries"}) {
    if (!j.contains(k)) throw ParseError(std::string("matrix file needs '") + k + "'");
  }
  if (!j.at("m").is_number_unsigned() || !j.at("n").is_number_unsigned())
    throw ParseError("m and n must be non-negative integers");
  const auto m = j.at("m").get<std::size_t>();
  const auto n = j.at("n").get<std::size_t>();
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != m) throw ParseError("entries must hold m rows");
  std::vector<exact::Surd> flat;
  flat.reserve(m * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw ParseError("every row must hold n entries");
    for (const auto& e : row) flat.push_back(exact::surd_from_json(e));
  }
  if (m == 0 || n == 0) throw ParseError("matrix must have at least one row and one column");
  MatrixFile f{frames::LineSet(m, n, std::move(flat)), std::nullopt, std::nullopt};
  if (j.contains("metadata") && j.at("metadata").is_object()) {
    const json& meta = j.at("metadata");
    if (meta.contains("id") && meta.at("id").is_string()) f.id = meta.at("id").get<std::string>();
    if (meta.contains("notes") && meta.at("notes").is_string()) f.notes = meta.at("notes").get<std::string>();
  }
  return f;
}

json to_json(const MatrixFile& f) {
  json j = matrix_json(f.set);
  if (f.id || f.notes) {
    json meta = json::object();
    if (f.id) meta["id"] = *f.id;
    if (f.notes) meta["notes"] = *f.notes;
    j["metadata"] = meta;
  }
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  const std::string text = ss.str();
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(path.string() + " is not valid JSON");
  return j;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) { return matrix_file_from_json(read_json_file(path)); }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

std::string to_csv(const frames::LineSet& ls) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < ls.m(); ++i) {
    for (std::size_t j = 0; j < ls.n(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", ls.at(i, j).to_double());
      if (j) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("bad CSV cell '" + cell + "'");
      }
    }
    if (!rows.empty() && rows.front().size() != row.size()) throw ParseError("ragged CSV rows");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eqlines::io
