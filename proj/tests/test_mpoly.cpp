#include <doctest.h>

#include <random>

#include "qheun/mpoly.hpp"

using namespace qheun;

namespace {

MPoly v(const char* name) { return MPoly::var(name); }

// Random polynomial in up to three variables, small degrees.
MPoly random_poly(std::mt19937& rng) {
  static const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coef(-6, 6);
  MPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    MPoly mono(Rat(coef(rng)));
    for (const char* nm : names) {
      int e = expo(rng);
      if (e > 0 && rng() % 2) mono *= MPoly::var(nm, e);
    }
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("products expand exactly") {
  MPoly x = v("x"), s = v("s"), e2 = v("eps2");
  CHECK((x + MPoly(1)) * (x - MPoly(1)) == x * x - MPoly(1));
  CHECK(((s + e2) * MPoly(0)).is_zero());
  MPoly lhs = (s * Rat(2) + MPoly(1)) * (s * Rat(2) - MPoly(3));
  MPoly rhs = s * s * Rat(4) - s * Rat(4) - MPoly(3);
  CHECK(lhs == rhs);
  CHECK(lhs.str() == "4*s^2 - 4*s - 3");
}

TEST_CASE("substitution specializes parameters exactly") {
  MPoly e2 = v("eps2");
  // 2 eps2^2 + eps2 - 1 vanishes at eps2 = 1/2 (eps2 stands for epsilon^2).
  MPoly p = e2 * e2 * Rat(2) + e2 - MPoly(1);
  CHECK(p.substitute({{"eps2", Rat(1, 2)}}).is_zero());

  MPoly x = v("x");
  CHECK(x.substitute({}) == x);

  MPoly q = v("s") * v("s") * Rat(4) - v("s") * Rat(4) - MPoly(3);
  CHECK(q.substitute({{"s", Rat(1, 2)}}).constant_value() == Rat(-4));
  CHECK(q.eval({{"s", Rat(1, 2)}}) == Rat(-4));
  CHECK_THROWS_AS(q.eval({}), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(987654);
  for (int i = 0; i < 1000; ++i) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation homomorphism") {
  std::mt19937 rng(13579);
  std::uniform_int_distribution<long> val(-5, 5);
  for (int i = 0; i < 200; ++i) {
    MPoly p = random_poly(rng), q = random_poly(rng);
    std::map<std::string, Rat> B = {{"x", Rat(val(rng), 3)},
                                    {"y", Rat(val(rng), 2)},
                                    {"z", Rat(val(rng))}};
    CHECK((p * q).substitute(B) == p.substitute(B) * q.substitute(B));
  }
}

TEST_CASE("compose and falling factorials") {
  MPoly n = v("n");
  MPoly p = n * n + n * Rat(3);
  MPoly shifted = p.compose("n", n + MPoly(2));  // (n+2)^2 + 3(n+2)
  CHECK(shifted == n * n + n * Rat(7) + MPoly(10));

  MPoly two_m = n * Rat(2) - MPoly(1);
  CHECK(p.compose("n", two_m) ==
        n * n * Rat(4) + n * Rat(2) - MPoly(2));  // (2n-1)^2+3(2n-1)

  CHECK(MPoly::falling(n, 0) == MPoly(1));
  CHECK(MPoly::falling(n, 2) == n * n - n);
  CHECK(MPoly::falling(n, 3) == n * n * n - n * n * Rat(3) + n * Rat(2));
}

TEST_CASE("exact division helpers") {
  MPoly n = v("n"), s = v("s");
  MPoly p = (n - MPoly(2)) * (n + s * Rat(2) - MPoly(5));
  CHECK(p.divide_linear_exact("n", Rat(2)) == n + s * Rat(2) - MPoly(5));
  CHECK_THROWS_AS(p.divide_linear_exact("n", Rat(3)), Error);

  MPoly t = v("t");
  MPoly m = t.pow(3) * s + t.pow(4) * Rat(2);
  CHECK(m.divide_power_exact("t", 3) == s + t * Rat(2));
  CHECK_THROWS_AS((m + MPoly(1)).divide_power_exact("t", 3), Error);
}

TEST_CASE("coefficient extraction") {
  MPoly n = v("n"), s = v("s");
  MPoly p = n * n * s + n * Rat(2) - s * s + MPoly(7);
  CHECK(p.coeff_of("n", 2) == s);
  CHECK(p.coeff_of("n", 1) == MPoly(2));
  CHECK(p.coeff_of("n", 0) == MPoly(7) - s * s);
  CHECK(p.degree("n") == 2);
  CHECK(p.degree("s") == 2);
  CHECK(p.degree("absent") == 0);
  auto parts = p.collect("n");
  CHECK(parts.size() == 3);
}

TEST_CASE("variable hygiene") {
  CHECK_THROWS_AS(MPoly::var("", 1), Error);
  CHECK_THROWS_AS(MPoly::var("x", -2), Error);
  MPoly p = v("b") + v("a");  // canonical order by name
  CHECK(p.vars() == std::vector<std::string>{"a", "b"});
  MPoly q = v("a") * MPoly(0) + v("b");
  CHECK(q.vars() == std::vector<std::string>{"b"});  // unused vars pruned
}
