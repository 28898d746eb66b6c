#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqlines/exact/json.hpp"
#include "eqlines/frames/line_set.hpp"

namespace eqlines::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"m", "n", "entries": [[surd, ...], ...], "metadata": {"id", "notes"}}
struct MatrixFile {
  frames::LineSet set;
  std::optional<std::string> id;
  std::optional<std::string> notes;
};

// Raises exact::ParseError when the shape or any entry is malformed.
MatrixFile matrix_file_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MatrixFile& f);
nlohmann::json matrix_json(const frames::LineSet& ls);

// Raises IoError when the file cannot be read and exact::ParseError when it
// is not a matrix file.
nlohmann::json read_json_file(const std::filesystem::path& path);
MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Row-major doubles with 17 significant digits, no header.
std::string to_csv(const frames::LineSet& ls);
std::vector<std::vector<double>> parse_csv(const std::string& text);

}  // namespace eqlines::io
