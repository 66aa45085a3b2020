#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "doctest.h"
#include "fracplast/csv.hpp"

using fracplast::csv::format_decimal;

TEST_CASE("positional decimal with 17 significant digits") {
  CHECK(format_decimal(0.0) == "0");
  CHECK(format_decimal(-0.0) == "0");
  CHECK(format_decimal(0.1) == "0.10000000000000001");
  CHECK(format_decimal(0.003) == "0.0030000000000000001");
  CHECK(format_decimal(1200000000.0) == "1200000000");
  CHECK(format_decimal(-2.5) == "-2.5");
  CHECK(format_decimal(1e-20) == "0.0000000000000000000099999999999999995");
  CHECK(format_decimal(1.2345e22) == "12345000000000000000000");
  CHECK(format_decimal(0.0058536585365853658) == "0.0058536585365853658");
}

TEST_CASE("no exponent and no trailing zeros") {
  for (double v : {1e-7, 3.0, 250.0, 1e15, 123.456}) {
    const auto s = format_decimal(v);
    CHECK(s.find('e') == std::string::npos);
    CHECK(s.find('E') == std::string::npos);
    if (s.find('.') != std::string::npos) CHECK(s.back() != '0');
  }
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> mant(-10.0, 10.0);
  std::uniform_int_distribution<int> ex(-30, 30);
  for (int i = 0; i < 5000; ++i) {
    const double v = std::ldexp(mant(rng), ex(rng));
    CHECK(std::strtod(format_decimal(v).c_str(), nullptr) == v);
  }
}
