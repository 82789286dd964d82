#include <doctest.h>

#include <random>

#include "qheun/rational.hpp"
#include "qheun/roots.hpp"

using namespace qheun;

TEST_CASE("canonical form") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(3, -6).den() == 2);
  CHECK(Rat(0, 7).str() == "0/1");
  CHECK(Rat(-4, 2).str() == "-2/1");
  CHECK_THROWS_AS(Rat(1, 0), Error);
}

TEST_CASE("parse and serialize") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-6/8") == Rat(-3, 4));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("-12") == Rat(-12));
  CHECK(Rat::parse("123456789123456789/2").num() == mpz_class("123456789123456789"));
  CHECK(Rat::parse(Rat(22, 7).str()) == Rat(22, 7));
  CHECK(Rat(22, 7).pretty() == "22/7");
  CHECK(Rat(5).pretty() == "5");
  CHECK_THROWS_AS(Rat::parse("1/x"), Error);
  CHECK_THROWS_AS(Rat::parse("x"), Error);
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
}

TEST_CASE("field operations randomized") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  auto rnd = [&]() { return Rat(num(rng), den(rng)); };
  for (int i = 0; i < 500; ++i) {
    Rat a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("pow, floor, ceil, sqrt") {
  CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
  CHECK(Rat(-1, 2).pow(2) == Rat(1, 4));
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  Rat root;
  CHECK(Rat(9, 4).exact_sqrt(&root));
  CHECK(root == Rat(3, 2));
  CHECK(Rat(0).exact_sqrt(&root));
  CHECK(root == Rat(0));
  CHECK_FALSE(Rat(2).exact_sqrt(&root));
  CHECK_FALSE(Rat(-4).exact_sqrt(&root));
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_in(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
  CHECK(simplest_rational_in(Rat(2, 7), Rat(3, 7)) == Rat(1, 3));
  CHECK(simplest_rational_in(Rat(-1, 2), Rat(1, 2)) == Rat(0));
  CHECK(simplest_rational_in(Rat(5, 3), Rat(7, 3)) == Rat(2));
  CHECK(simplest_rational_in(Rat(-7, 3), Rat(-5, 3)) == Rat(-2));
  CHECK(simplest_rational_in(Rat(15, 16), Rat(17, 16)) == Rat(1));
  CHECK(simplest_rational_in(Rat(13, 17), Rat(13, 17)) == Rat(13, 17));
}
