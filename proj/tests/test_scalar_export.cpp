#include "indicatrix/export.hpp"
#include "indicatrix/scalar.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace indicatrix;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/8") == Rational(3, 8));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(format_rational(Rational(6, 16)) == "3/8");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  for (const char* bad : {"", "1/0", "0.5", "1e3", "1/", "/2", "1/2/3", "a"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_rational("12/x4", 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 13);
  }
}

TEST_CASE("real formatting round-trips") {
  for (double x : {0.1, 1.0 / 3, 1e-300, 12345.678, -2.5}) CHECK(std::stod(format_real(x)) == x);
  CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("dyadic approximation") {
  CHECK(dyadic_approximation(0.375) == Rational(3, 8));
  const Rational r = dyadic_approximation(0.1, 20);
  CHECK(std::abs(to_double(r) - 0.1) <= std::ldexp(1.0, -21));
  CHECK(boost::multiprecision::denominator(r) <= (Integer(1) << 20));
}

TEST_CASE("wrap and floor") {
  CHECK(wrap01(Rational(-1, 4)) == Rational(3, 4));
  CHECK(wrap01(Rational(5, 4)) == Rational(1, 4));
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(wrap01(-1e-20) < 1.0);
}

TEST_CASE("csv output") {
  Table t{{"h", "tau", "note"}, {}};
  t.add({Rational(3, 8), 0.25, std::string("plain")});
  t.add({Rational(1), std::int64_t{7}, std::string("has, comma and \"quote\"")});
  const auto csv = to_csv(t);
  CHECK(csv == "h,tau,note\r\n3/8,0.25,plain\r\n1,7,\"has, comma and \"\"quote\"\"\"\r\n");
  const auto back = parse_csv(csv);
  REQUIRE(back.size() == 3);
  CHECK(back[2][2] == "has, comma and \"quote\"");
  CHECK(back[1][0] == "3/8");
  CHECK_THROWS_AS(t.add({Rational(1)}), InvalidInput);
}

TEST_CASE("empty table still writes a header") {
  const Table t{{"a", "b"}, {}};
  CHECK(to_csv(t) == "a,b\r\n");
  CHECK(nlohmann::json::parse(to_json(t)) == nlohmann::json::array());
}

TEST_CASE("json output") {
  Table t{{"h", "tau"}, {}};
  t.add({Rational(3, 8), std::numeric_limits<double>::infinity()});
  t.add({Rational(1, 2), 0.5});
  const auto j = nlohmann::json::parse(to_json(t));
  REQUIRE(j.is_array());
  CHECK(j[0]["h"] == "3/8");
  CHECK(j[0]["tau"] == "inf");
  CHECK(j[1]["tau"] == 0.5);
}

TEST_CASE("write_table by extension") {
  const auto dir = std::filesystem::temp_directory_path() / "indicatrix_export_test";
  std::filesystem::create_directories(dir);
  Table t{{"x"}, {}};
  t.add({Rational(1, 3)});
  write_table(t, dir / "t.csv");
  write_table(t, dir / "t.json");
  std::ifstream in(dir / "t.csv", std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "x\r\n1/3\r\n");
  CHECK_THROWS_AS(write_table(t, dir / "t.txt"), InvalidInput);
  std::filesystem::remove_all(dir);
}
