#pragma once

// Serialization of fields and matrices, CSV emission, and file output.

#include <json.hpp>

#include <string>
#include <vector>

#include "starsdym/sine_basis.hpp"

namespace starsdym {

using Json = nlohmann::json;

/// 17 significant digits, locale independent.
std::string format_double(double x);

/// {"band_limit": R, "modes": [[m1, m2, re, im], ...]} in lexicographic mode order.
Json field_to_json(const FourierField& f);

/// Accepts the object form above or a bare modes array. Repeated modes add up.
FourierField field_from_json(const Json& j);

/// {"n": N, "re": [[...]], "im": [[...]]}, row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Comma-separated, LF line endings, doubles via format_double.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  std::string str() const { return out_; }

 private:
  std::size_t columns_;
  std::string out_;
};

/// Writes the whole string; throws ValidationError if the path is not writable.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace starsdym
