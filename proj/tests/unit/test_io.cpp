#include <sstream>

#include "ahg/io.hpp"
#include "doctest.h"

using namespace ahg;

TEST_CASE("matrix JSON round trip") {
  const CMatrix m = parse_matrix_json(R"({"n":2,"re":[[1,0.3],[0.3,0.8]],"im":[[0.1,0],[0,-0.2]]})");
  CHECK(m(0, 1) == cdouble(0.3, 0.0));
  CHECK(m(1, 1) == cdouble(0.8, -0.2));
  CHECK(parse_matrix_json(matrix_to_json(m)) == m);
  CHECK(parse_matrix_json(R"({"n":1,"re":[[2]]})")(0, 0) == cdouble(2.0));
}

TEST_CASE("matrix JSON errors are usage errors") {
  CHECK_THROWS_AS(parse_matrix_json("{"), UsageError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"re":[[1]]})"), UsageError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"n":2,"re":[[1,0]]})"), UsageError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"n":1,"re":[["x"]]})"), UsageError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"n":0,"re":[]})"), UsageError);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/theta.json"), UsageError);
}

TEST_CASE("shortest round-trip number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  for (double x : {0.1 + 0.2, 1.0 / 3.0, 6.02214076e23, 5e-324}) CHECK(parse_double(format_double(x)) == x);
  CHECK(parse_double("+1.5") == 1.5);
  CHECK_THROWS_AS(parse_double("1.5x"), UsageError);
  CHECK_THROWS_AS(parse_double(""), UsageError);
}

TEST_CASE("grid specifications") {
  const Axis a = parse_axis("-3:3:7");
  CHECK(a.count == 7);
  CHECK(a.at(3) == 0.0);
  CHECK(a.at(6) == 3.0);
  CHECK_THROWS_AS(parse_axis("0:1:1"), UsageError);
  CHECK_THROWS_AS(parse_axis("1:0:3"), UsageError);
  CHECK_THROWS_AS(parse_axis("0:1"), UsageError);
  const auto axes = parse_grid({"0:1:2", "-1:1:3"}, 2);
  CHECK(grid_size(axes) == 6);
  CHECK(grid_point(axes, 1)(1) == 0.0);
  CHECK(grid_point(axes, 3)(0) == 1.0);
  CHECK(parse_grid({"0:1:2"}, 3).size() == 3);
  CHECK_THROWS_AS(parse_grid({"0:1:2", "0:1:2"}, 3), UsageError);
}

TEST_CASE("sampled functions interpolate multilinearly") {
  std::istringstream in("x1,x2,re,im\n0,0,1,0\n0,1,2,0\n1,0,3,1\n1,1,4,1\n");
  const GridSamples g = GridSamples::from_csv(in);
  CHECK(g.dim() == 2);
  const CVector mid = (CVector(2) << 0.5, 0.5).finished();
  CHECK(std::abs(g(mid) - cdouble(2.5, 0.5)) < 1e-15);
  CHECK(g((CVector(2) << 2.0, 0.0).finished()) == cdouble(0.0));
  std::istringstream bad("x1,re,im\n0,1,0\n0,2,0\n");
  CHECK_THROWS_AS(GridSamples::from_csv(bad), UsageError);
}
