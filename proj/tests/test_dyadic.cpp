#include <doctest.h>

#include "thompson/dyadic.hpp"

using thompson::Dyadic;

TEST_CASE("make canonicalizes") {
  const Dyadic half = Dyadic::make(2, 2);
  CHECK(half.numerator() == 1);
  CHECK(half.scale() == 1);
  CHECK(half == Dyadic::make(1, 1));

  const Dyadic seven_eighths = Dyadic::make(7, 3);
  CHECK(seven_eighths.numerator() == 7);
  CHECK(seven_eighths.scale() == 3);

  const Dyadic zero = Dyadic::make(0, 5);
  CHECK(zero.is_zero());
  CHECK(zero.scale() == 0);

  CHECK(Dyadic::make(12, 0) == Dyadic(12));
  CHECK(Dyadic::make(-6, 2) == Dyadic::make(-3, 1));
  CHECK_THROWS_AS(Dyadic::make(1, -1), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Dyadic::make(1, 1) + Dyadic::make(1, 2) == Dyadic::make(3, 2));
  // phi_2 = 1 - 2^-3
  CHECK(Dyadic(1) - Dyadic::pow2(-3) == Dyadic::make(7, 3));
  CHECK(Dyadic::make(3, 2) < Dyadic::make(7, 3));
  CHECK(Dyadic::make(3, 2) * Dyadic::make(5, 3) == Dyadic::make(15, 5));
  CHECK(Dyadic::make(3, 2) - Dyadic::make(3, 2) == Dyadic(0));
  CHECK(-Dyadic::make(1, 3) == Dyadic::make(-1, 3));
  CHECK(Dyadic::make(1, 2) + Dyadic::make(1, 2) == Dyadic::make(1, 1));
  CHECK((Dyadic::make(1, 4) <=> Dyadic::make(1, 4)) == std::strong_ordering::equal);
  CHECK(Dyadic::make(-1, 1) < Dyadic(0));
}

TEST_CASE("power-of-two helpers") {
  CHECK(Dyadic::pow2(3) == Dyadic(8));
  CHECK(Dyadic::pow2(-4) == Dyadic::make(1, 4));
  CHECK(Dyadic::make(3, 2).shifted(2) == Dyadic(3));
  CHECK(Dyadic::make(3, 2).shifted(-1) == Dyadic::make(3, 3));
  CHECK(Dyadic::make(3, 4).log2_ratio(Dyadic::make(3, 1)) == std::optional<std::int64_t>(-3));
  CHECK_FALSE(Dyadic(3).log2_ratio(Dyadic(2)).has_value());
  CHECK(Dyadic::make(3, 2).floor_log2() == -1);
  CHECK(Dyadic(8).floor_log2() == 3);
  CHECK(Dyadic::make(5, 3).granularity() == 3);
  CHECK(Dyadic(12).granularity() == -2);
}

TEST_CASE("text round trip") {
  CHECK(Dyadic::make(7, 3).to_string() == "7/2^3");
  CHECK(Dyadic(5).to_string() == "5");
  CHECK(Dyadic(-5).to_string() == "-5");
  for (const char* text : {"0", "1", "7/2^3", "-3/2^10", "12345678901234567891/2^70"}) {
    CHECK(Dyadic::parse(text).to_string() == text);
  }
  CHECK(Dyadic::parse("2/2^2") == Dyadic::make(1, 1));
  CHECK_THROWS(Dyadic::parse("1/3"));
  CHECK_THROWS(Dyadic::parse("x"));
  CHECK_THROWS(Dyadic::parse("1/2^"));
}

TEST_CASE("scale limit") {
  const auto saved = thompson::scale_limit();
  thompson::set_scale_limit(4);
  CHECK_NOTHROW(Dyadic::make(1, 4));
  CHECK_THROWS_AS(Dyadic::make(1, 5), thompson::ScaleOverflow);
  CHECK_THROWS_AS(Dyadic::make(1, 3) * Dyadic::make(1, 3), thompson::ScaleOverflow);
  thompson::set_scale_limit(saved);
  CHECK(thompson::scale_limit() == thompson::kDefaultScaleLimit);
}
