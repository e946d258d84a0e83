#include "starsdym/io.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "starsdym/errors.hpp"

namespace starsdym {

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

Json field_to_json(const FourierField& f) {
  Json modes = Json::array();
  for (const auto& [m, c] : f.coefficients()) modes.push_back({m.m1, m.m2, c.real(), c.imag()});
  return Json{{"band_limit", f.band_limit()}, {"modes", modes}};
}

FourierField field_from_json(const Json& j) {
  const Json* modes = &j;
  int band = 0;
  if (j.is_object()) {
    if (!j.contains("modes")) throw ValidationError("field JSON needs a \"modes\" array");
    modes = &j.at("modes");
    band = j.value("band_limit", 0);
  }
  if (!modes->is_array()) throw ValidationError("field modes must be an array");
  FourierField f(band);
  for (const auto& row : *modes) {
    if (!row.is_array() || (row.size() != 3 && row.size() != 4)) {
      throw ValidationError("each mode must be [m1, m2, re] or [m1, m2, re, im]");
    }
    if (!row[0].is_number_integer() || !row[1].is_number_integer()) {
      throw ValidationError("mode indices must be integers");
    }
    for (std::size_t k = 2; k < row.size(); ++k) {
      if (!row[k].is_number()) throw ValidationError("mode coefficients must be numbers");
    }
    const double im = row.size() == 4 ? row[3].get<double>() : 0.0;
    f.add({row[0].get<int>(), row[1].get<int>()}, complex{row[2].get<double>(), im});
  }
  if (band > 0 && f.band_limit() > band) throw ValidationError("a mode exceeds the declared band_limit");
  return f;
}

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array(), ri = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ri.push_back(m(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return Json{{"n", m.rows()}, {"re", re}, {"im", im}};
}

Matrix matrix_from_json(const Json& j) {
  auto square = [](const Json& rows, Eigen::Index n) {
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) return false;
    return std::all_of(rows.begin(), rows.end(), [n](const Json& r) {
      return r.is_array() && static_cast<Eigen::Index>(r.size()) == n &&
             std::all_of(r.begin(), r.end(), [](const Json& x) { return x.is_number(); });
    });
  };
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("re") || !j.contains("im")) {
    throw ValidationError("matrix JSON needs \"n\", \"re\" and \"im\"");
  }
  const auto n = j["n"].get<Eigen::Index>();
  if (n < 1 || !square(j["re"], n) || !square(j["im"], n)) {
    throw ValidationError("matrix JSON rows must be n x n arrays of numbers");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      m(i, k) = complex{j.at("re").at(i).at(k).get<double>(), j.at("im").at(i).at(k).get<double>()};
    }
  }
  return m;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out_ += ',';
    out_ += header[i];
  }
  out_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_) throw ValidationError("CSV row width does not match the header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out_ += ',';
    out_ += format_double(values[i]);
  }
  out_ += '\n';
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError(fmt::format("cannot open output file '{}'", path));
  out << content;
  if (!out) throw ValidationError(fmt::format("failed writing output file '{}'", path));
}

}  // namespace starsdym
