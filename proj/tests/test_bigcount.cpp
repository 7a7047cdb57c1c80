#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>

#include "dyckmax/bigcount.hpp"
#include "dyckmax/dyck_path.hpp"

using namespace dyckmax;

TEST_CASE("decimal and scientific rendering") {
  CHECK(to_decimal(BigCount(16796)) == "16796");
  CHECK(to_scientific(BigCount(16796), 5) == "1.6796e+04");
  CHECK(to_scientific(BigCount(0)) == "0");
}

TEST_CASE("log of huge integers has no overflow") {
  BigCount big = 1;
  big <<= 20000;  // 2^20000
  CHECK(log_of(big) == doctest::Approx(20000 * std::log(2.0)).epsilon(1e-15));
  CHECK(log_of(BigCount(0)) == -std::numeric_limits<double>::infinity());
  CHECK(log_ratio(big + 1, big) == doctest::Approx(0.0));
  CHECK(log_ratio(BigCount(1), BigCount(42)) == doctest::Approx(-std::log(42.0)).epsilon(1e-15));
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("DyckPath rejects invalid step sequences") {
  CHECK_THROWS_AS(DyckPath::from_string("DU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::from_string("UUD"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::from_string("UXDD"), std::invalid_argument);
  const DyckPath p = DyckPath::from_string("UUDUDD");
  CHECK(p.max_height() == 2);
  CHECK(p.half_length() == 3);
  CHECK(p.height_at(3) == 1);
  CHECK(p.to_string() == "UUDUDD");
  CHECK(DyckPath().max_height() == 0);
}
