#include <sstream>

#include "doctest.h"
#include "mtcav/io.hpp"

using namespace mtcav::io;

TEST_CASE("number formatting is deterministic and lowercase") {
  CHECK(fmt(5e-7) == "5e-07");
  CHECK(fmt(0.25) == "0.25");
  CHECK(fmt(6e8) == "600000000");
  CHECK(fmt(1.3e12) == "1.3e+12");
  CHECK(fmt(-0.5) == "-0.5");
  CHECK(fmt(1.0) == "1");
  CHECK(fmt(0.0) == "0");
  CHECK(fmt(2.0 / 3.0, 4) == "0.6667");
  CHECK(fmt(static_cast<long long>(1625)) == "1625");
}

TEST_CASE("complex formatting carries the sign into the imaginary part") {
  CHECK(fmt(std::complex<double>(0.6, 0.0)) == "0.6");
  CHECK(fmt(std::complex<double>(0.6, 0.8)) == "0.6+0.8i");
  CHECK(fmt(std::complex<double>(0.6, -0.8)) == "0.6-0.8i");
  CHECK(fmt(std::complex<double>(0.0, 1.0)) == "0+1i");
  CHECK(fmt(std::complex<double>(-0.25, -0.5)) == "-0.25-0.5i");
}

TEST_CASE("csv rows and key=value lines") {
  std::ostringstream out;
  write_csv_row(out, {"a", "1", "2.5"});
  write_kv(out, "key", 5e-7);
  write_kv(out, "name", "value");
  CHECK(out.str() == "a,1,2.5\nkey=5e-07\nname=value\n");
}
