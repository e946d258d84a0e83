#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "starsdym/errors.hpp"
#include "starsdym/io.hpp"
#include "starsdym/sine_basis.hpp"

using namespace starsdym;

TEST_CASE("doubles round-trip through 17 significant digits") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("field JSON round trip in lexicographic order") {
  FourierField f(3);
  f.set({1, -2}, complex{0.25, -1.5});
  f.set({-3, 0}, 2.0);
  const Json j = field_to_json(f);
  CHECK(j["band_limit"] == 3);
  CHECK(j["modes"][0][0] == -3);
  CHECK(j["modes"][1][1] == -2);
  const auto back = field_from_json(j);
  CHECK(max_abs_difference(back, f) == 0.0);
  CHECK(back.band_limit() == 3);

  const auto bare = field_from_json(Json::parse("[[1,1,0.5,0],[1,1,0.25],[0,2,1,1]]"));
  CHECK(bare.coeff({1, 1}) == complex{0.75});
  CHECK(bare.coeff({0, 2}) == complex{1.0, 1.0});
  CHECK_THROWS_AS(field_from_json(Json::parse("[[1,1]]")), ValidationError);
  CHECK_THROWS_AS(field_from_json(Json::parse("{\"modes\": 3}")), ValidationError);
  CHECK_THROWS_AS(field_from_json(Json::parse("[[1.5,1,0,0]]")), ValidationError);
}

TEST_CASE("matrix JSON round trip") {
  const Matrix m = basis_matrix(3, {1, 2}).entries;
  const Json j = matrix_to_json(m);
  CHECK(j["n"] == 3);
  CHECK((matrix_from_json(j) - m).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"n\": 2, \"re\": [[1]], \"im\": [[0]]}")), ValidationError);
}

TEST_CASE("CSV writer") {
  CsvWriter csv({"a", "b"});
  csv.add_row({1.0, 0.1});
  CHECK(csv.str() == "a,b\n1,0.10000000000000001\n");
  CHECK_THROWS_AS(csv.add_row({1.0}), ValidationError);
}

TEST_CASE("file output") {
  const auto path = std::filesystem::temp_directory_path() / "starsdym_io_test.txt";
  write_text_file(path.string(), "abc\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "abc\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x/y.txt", "abc"), ValidationError);
}
