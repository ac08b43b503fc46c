#include "cgexact/combinatorics.hpp"
#include "cgexact/exact.hpp"
#include "cgexact/indices.hpp"

#include "test_support.hpp"

using namespace cgexact;
using testing::q;

TEST_SUITE("exact") {
  TEST_CASE("rationals print in lowest terms with the sign on the numerator") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(10, 5)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  }

  TEST_CASE("parse_rational accepts the wire format and rejects anything else") {
    CHECK(parse_rational("9/70") == make_rational(9, 70));
    CHECK(parse_rational("-18/4") == make_rational(-9, 2));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("0") == Rational(0));
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", "1.5", "x", "1/2/3", " 1"})
      CHECK_THROWS_AS(parse_rational(bad), DomainError);
  }

  TEST_CASE("parse and print round-trip") {
    for (const char* text : {"1", "-1", "9/70", "-27/70", "340282366920938463463374607431768211457/3"})
      CHECK(to_string(parse_rational(text)) == text);
  }

  TEST_CASE("to_decimal rounds half away from zero") {
    CHECK(to_decimal(make_rational(2, 3), 3) == "0.667");
    CHECK(to_decimal(make_rational(1, 8), 2) == "0.13");
    CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(make_rational(9, 70), 6) == "0.128571");
    CHECK(to_decimal(Rational(-3), 2) == "-3.00");
    CHECK(to_decimal(make_rational(-1, 1000), 2) == "0.00");
    CHECK(to_decimal(make_rational(5, 2), 0) == "3");
  }

  TEST_CASE("exact_sqrt detects rational squares") {
    Rational root;
    REQUIRE(exact_sqrt(make_rational(9, 49), root));
    CHECK(root == make_rational(3, 7));
    CHECK_FALSE(exact_sqrt(make_rational(1, 2), root));
    CHECK_FALSE(exact_sqrt(Rational(-4), root));
    REQUIRE(exact_sqrt(Rational(0), root));
    CHECK(root == 0);
  }
}

TEST_SUITE("combinatorics") {
  TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == Integer("15511210043330985984000000"));
    CHECK(factorial(kFactorialCacheCap + 10) == factorial(kFactorialCacheCap + 9) * (kFactorialCacheCap + 10));
    CHECK_THROWS_AS(factorial(-1), DomainError);
  }

  TEST_CASE("binomial with the zero convention for negative entries") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(-3, 1) == 0);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
    CHECK(binomial(100, 50) == Integer("100891344545564193334812497256"));
  }

  TEST_CASE("binomial agrees with Pascal's rule and with factorials") {
    for (long a = 1; a <= 40; ++a)
      for (long b = 0; b <= a; ++b) {
        CHECK(binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1));
        CHECK(binomial(a, b) * factorial(b) * factorial(a - b) == factorial(a));
      }
  }

  TEST_CASE("multinomial") {
    CHECK(multinomial(7, 3, 1, 3) == 140);
    CHECK(multinomial(6, 0, 3, 3) == 20);
    CHECK(multinomial(5, 2, -1, 4) == 0);
    CHECK(multinomial(0, 0, 0, 0) == 1);
    CHECK(multinomial2(6, 3, 1) == 60);
    CHECK(multinomial2(6, 0, 3) == 20);
    CHECK(multinomial2(6, 4, 3) == 0);
    CHECK_THROWS_AS(multinomial(7, 3, 1, 2), DomainError);
  }

  TEST_CASE("chu_vandermonde_lhs") {
    CHECK(chu_vandermonde_lhs(1, 1, 1) == -1);
    CHECK(chu_vandermonde_lhs(2, 3, 0) == 10);
    CHECK(chu_vandermonde_lhs(1, 3, 1) == -1);
    CHECK(chu_vandermonde_lhs(4, 4, 2) == 15);
    CHECK_THROWS_AS(chu_vandermonde_lhs(1, 3, 2), DomainError);
    CHECK_THROWS_AS(chu_vandermonde_lhs(-1, 3, 0), DomainError);
  }

  TEST_CASE("chu_vandermonde identity for small r, s") {
    for (long r = 0; r <= 12; ++r)
      for (long s = 0; s <= 12; ++s)
        for (long k = 0; k <= std::min(r, s); ++k)
          CHECK(chu_vandermonde_lhs(r, s, k) == sign_power(k) * binomial(r + s - k, s));
  }

  TEST_CASE("sign_power") {
    CHECK(sign_power(0) == 1);
    CHECK(sign_power(3) == -1);
    CHECK(sign_power(-2) == 1);
    CHECK(sign_power(-1) == -1);
  }
}

TEST_SUITE("indices") {
  TEST_CASE("structural and window validity") {
    CHECK(IndexTuple{3, 4, 1, 0, 3}.window_valid());
    CHECK(IndexTuple{3, 4, 1, 9, 9}.structurally_valid());
    CHECK_FALSE(IndexTuple{3, 4, 1, 9, 9}.window_valid());
    CHECK_FALSE(IndexTuple{3, 4, 1, 0, 0}.window_valid());
    CHECK_FALSE(IndexTuple{3, 4, 4, 0, 0}.structurally_valid());
    CHECK_FALSE(IndexTuple{-1, 4, 0, 0, 0}.structurally_valid());
    CHECK(IndexTuple{0, 0, 0, 0, 0}.window_valid());
    CHECK_THROWS_AS(require_structural(3, 4, 5, "test"), DomainError);
    CHECK_NOTHROW(require_structural(3, 4, 3, "test"));
    CHECK_THROWS_AS(require_window({3, 4, 1, 3, 4}, "test"), DomainError);
  }

  TEST_CASE("weight ranges") {
    CHECK(weight_range(3, 4, 3).lo == 0);
    CHECK(weight_range(3, 4, 3).hi == 3);
    CHECK(weight_range(3, 4, 6).lo == 2);
    CHECK(weight_range(3, 4, 6).size() == 2);
    CHECK(weight_range(3, 4, 9).size() == 0);
  }

  TEST_CASE("dimension identity, globally and per weight space") {
    for (long m = 0; m <= 64; m += 7)
      for (long n = 0; n <= 64; n += 5) {
        long dims = 0;
        for (long k = 0; k <= std::min(m, n); ++k) dims += m + n - 2 * k + 1;
        CHECK(dims == (m + 1) * (n + 1));
        for (long p = 0; p <= m + n; ++p) {
          long summands = 0;
          for (long k = 0; k <= std::min(m, n); ++k) summands += (k <= p && p <= m + n - k) ? 1 : 0;
          CHECK(summands == weight_range(m, n, p).size());
        }
      }
  }
}
