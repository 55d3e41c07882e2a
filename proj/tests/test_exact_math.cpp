#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "powerpoly/errors.hpp"
#include "powerpoly/json_io.hpp"
#include "powerpoly/matrix.hpp"
#include "powerpoly/rational.hpp"

using namespace powerpoly;

TEST_SUITE("rational") {
  TEST_CASE("construction reduces and normalizes sign") {
    CHECK(rat(2, 4).str() == "1/2");
    CHECK(rat(3, -6).str() == "-1/2");
    CHECK(rat(97, 150).str() == "97/150");
    CHECK(rat(6, 3).str() == "2");
    CHECK(rat(0, -5).str() == "0");
    CHECK(rat(3, -6).denominator() > 0);
  }

  TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(rat(1, 0), InputError);
    CHECK_THROWS_AS(Rational::parse("3/0"), InputError);
  }

  TEST_CASE("parse") {
    CHECK(Rational::parse("7/36") == rat(7, 36));
    CHECK(Rational::parse("-4/8") == rat(-1, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
    for (const char* bad : {"", "/", "1/", "a", "1/-2", "1.5", "1 /2", "--1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Rational::parse(bad), InputError);
    }
  }

  TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(rat(11, 18).to_decimal(6) == "0.611111");
    CHECK(rat(7, 36).to_decimal(6) == "0.194444");
    CHECK(rat(1, 8).to_decimal(2) == "0.13");
    CHECK(rat(-1, 8).to_decimal(2) == "-0.13");
    CHECK(rat(2, 3).to_decimal(0) == "1");
    CHECK(Rational(5).to_decimal(3) == "5.000");
    CHECK(rat(1, 1000000000).to_decimal(6) == "0.000000");
    CHECK(rat(-1, 1000000000).to_decimal(6) == "0.000000");
  }

  TEST_CASE("arithmetic is exact: (a+b)-b == a on random fractions") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
      const auto num = [&] { return static_cast<long long>(rng() % 2001) - 1000; };
      const auto den = [&] { return static_cast<long long>(rng() % 999) + 1; };
      const Rational a = rat(num(), den());
      const Rational b = rat(num(), den());
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a * b) / b == a);
      CHECK(a - a == Rational(0));
    }
  }

  TEST_CASE("ordering") {
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < Rational(0));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(7, 216) > rat(1, 48));
  }

  TEST_CASE("json form") {
    const Rational r = rat(-97, 150);
    const Json j = rational_to_json(r);
    CHECK(j.at("num") == "-97");
    CHECK(j.at("den") == "150");
    CHECK(rational_from_json(j) == r);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}}), InputError);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), InputError);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("solve: identity") {
    const auto x = solve_square_system(RatMatrix::identity(2), RatVector{rat(1, 3), rat(1, 3)});
    REQUIRE(x);
    CHECK(*x == RatVector{rat(1, 3), rat(1, 3)});
  }

  TEST_CASE("solve: two boundary lines of the [3;2,1,1] region") {
    // w1 + w2 = 1 and 2 w1 + w2 = 1; substitution gives w1 = 0, w2 = 1
    const RatMatrix a{{1, 1}, {2, 1}};
    const auto x = solve_square_system(a, RatVector{1, 1});
    REQUIRE(x);
    CHECK(*x == RatVector{0, 1});
    CHECK(multiply(a, *x) == RatVector{1, 1});
  }

  TEST_CASE("solve: singular") {
    CHECK_FALSE(solve_square_system(RatMatrix{{1, 1}, {1, 1}}, RatVector{1, 2}));
    CHECK_FALSE(solve_square_system(RatMatrix{{1, 1}, {1, 1}}, RatVector{1, 1}));
    CHECK_FALSE(solve_square_system(RatMatrix(3, 3), RatVector(3)));
  }

  TEST_CASE("determinant") {
    CHECK(determinant(RatMatrix::identity(3)) == Rational(1));
    CHECK(determinant(RatMatrix{{1, 0}, {0, rat(1, 2)}}) == rat(1, 2));
    // edges of the triangle (1/3,1/3), (1/2,1/2), (1/2,0)
    const RatMatrix edges{{rat(1, 6), rat(1, 6)}, {rat(1, 6), rat(-1, 3)}};
    const Rational det = determinant(edges);
    CHECK(det == rat(-1, 12));
    // shoelace oracle on the same three points
    const Rational x1 = rat(1, 3), y1 = rat(1, 3), x2 = rat(1, 2), y2 = rat(1, 2), x3 = rat(1, 2), y3 = 0;
    const Rational shoelace = (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2)).abs() / 2;
    CHECK(shoelace == rat(1, 24));
    CHECK(det.abs() / 2 == shoelace);
  }

  TEST_CASE("properties on random small matrices") {
    std::mt19937_64 rng(5);
    auto entry = [&] { return rat(static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 4) + 1); };
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + rng() % 4;
      RatMatrix a(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = entry();
      RatVector b(n);
      for (auto& v : b) v = entry();

      const Rational det = determinant(a);
      const auto x = solve_square_system(a, b);
      CHECK(x.has_value() == !det.is_zero());
      CHECK((rank(a) == n) == !det.is_zero());
      if (x) CHECK(multiply(a, *x) == b);

      if (n >= 2) {
        RatMatrix swapped = a;
        swapped.swap_rows(0, n - 1);
        CHECK(determinant(swapped) == -det);
        RatMatrix singular = a;
        for (std::size_t c = 0; c < n; ++c) singular(1, c) = singular(0, c) * 3;
        CHECK(determinant(singular) == Rational(0));
        CHECK_FALSE(solve_square_system(singular, b));
      }
    }
  }

  TEST_CASE("non-square input is rejected") {
    CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(solve_square_system(RatMatrix(2, 3), RatVector(2)), std::invalid_argument);
  }
}
