#include <doctest.h>

#include "qheun/ode.hpp"
#include "qheun/qes_models.hpp"
#include "qheun/recurrence_lab.hpp"

using namespace qheun;

namespace {

MPoly v(const char* name) { return MPoly::var(name); }

// Checks that the coefficients of an exact polynomial solution satisfy the
// recurrence at every index (plain scaling: entries are the a_n).
bool satisfies(const Recurrence& rec, const std::vector<Rat>& a,
               const std::map<std::string, Rat>& bindings) {
  Recurrence r = rec.bind(bindings);
  auto get = [&](int i) { return i >= 0 && i < static_cast<int>(a.size()) ? a[i] : Rat(0); };
  for (int n = r.first_valid; n <= static_cast<int>(a.size()) + r.span * r.step + 2; ++n) {
    Rat acc(0);
    for (int j = 0; j <= r.span; ++j)
      acc += r.coeffs[j].eval({{r.index_var, Rat(n)}}) * get(n - j * r.step);
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Hermite series recurrence, plain scaling") {
  // f'' - 2x f' + 2 lambda f = 0  ->  (n+2)(n+1) a_{n+2} = 2(n - lambda) a_n
  LinearOde ode("x", {{2, MPoly(1)},
                      {1, v("x") * Rat(-2)},
                      {0, v("lambda") * Rat(2)}});
  Recurrence rec = derive_recurrence(ode, {SeriesAnsatz::Scaling::Plain, "n"}, "lambda");
  CHECK(rec.span == 1);
  CHECK(rec.step == 2);
  MPoly n = v("n");
  CHECK(rec.coeffs[0] == n * n - n);                              // n(n-1)
  CHECK(rec.coeffs[1] == v("lambda") * Rat(2) - n * Rat(2) + MPoly(4));
  // Recentered on a_n: (n+2)(n+1) a_{n+2} + [2 lambda - 2n] a_n = 0.
  CHECK(rec.coeff_shifted(0, 2) == (n + MPoly(2)) * (n + MPoly(1)));
  CHECK(rec.coeff_shifted(1, 2) == v("lambda") * Rat(2) - n * Rat(2));
}

TEST_CASE("kink t-ODE recurrence: exact engine output") {
  Recurrence rec = derived_kink_recurrence();
  CHECK(rec.span == 2);
  CHECK(rec.step == 2);
  MPoly n = v("n"), s = v("s"), e2 = v("eps2");

  CHECK(rec.coeffs[0] == e2 * (e2 + MPoly(1)));

  // Trailing coefficient, recentered: n(n-1)(n+2s-5)(n+2s+3).
  MPoly trailing = rec.coeff_shifted(2, 2);
  MPoly expected = n * (n - MPoly(1)) * (n + s * Rat(2) - MPoly(5)) *
                   (n + s * Rat(2) + MPoly(3));
  CHECK(trailing == expected);
  // ... whose bracket expands to n^2 + n(4s-2) + 4s^2 - 4s - 15.
  CHECK((n + s * Rat(2) - MPoly(5)) * (n + s * Rat(2) + MPoly(3)) ==
        n * n + n * (s * Rat(4) - MPoly(2)) + s * s * Rat(4) - s * Rat(4) -
            MPoly(15));

  // Middle coefficient, recentered: -[(1+2e2)n^2 + e2(1+4s)n - 4s^2 + 2se2 - 9e2 + 3].
  MPoly middle = rec.coeff_shifted(1, 2);
  MPoly bracket = (MPoly(1) + e2 * Rat(2)) * n * n +
                  e2 * (MPoly(1) + s * Rat(4)) * n - s * s * Rat(4) +
                  s * e2 * Rat(2) - e2 * Rat(9) + MPoly(3);
  CHECK(middle == -bracket);
}

TEST_CASE("documented discrepancy against the as-printed recursion") {
  Recurrence derived = derived_kink_recurrence();
  Recurrence printed = printed_kink_recurrence();
  MPoly n = v("n"), e2 = v("eps2");

  CHECK(derived.coeffs[0] == printed.coeffs[0]);
  CHECK(derived.coeffs[2] == printed.coeffs[2]);

  // The middle coefficients differ by exactly (4 eps2 + 2) n when recentered.
  MPoly diff = derived.coeff_shifted(1, 2) - printed.coeff_shifted(1, 2);
  CHECK(diff == (e2 * Rat(4) + MPoly(2)) * n);
  // n^2 and constant parts agree.
  CHECK(diff.coeff_of("n", 2).is_zero());
  CHECK(diff.coeff_of("n", 0).is_zero());
}

TEST_CASE("parity decoupling reproduces the printed sector recursions") {
  auto [even, odd] = parity_decouple(printed_kink_recurrence());
  Recurrence rc1 = printed_kink_even_recurrence();
  Recurrence rc2 = printed_kink_odd_recurrence();
  for (int j = 0; j <= 2; ++j) {
    CHECK(even.coeffs[j] == rc1.coeffs[j]);
    CHECK(odd.coeffs[j] == rc2.coeffs[j]);
  }
  CHECK(even.step == 1);
  CHECK(odd.span == 2);
}

TEST_CASE("derived sectors differ from printed only in the linear index term") {
  auto [even, odd] = derived_kink_sectors();
  MPoly n = v("n"), e2 = v("eps2");
  // (4 eps2 + 2)(2n - 2) for the even map n -> 2n, (4 eps2 + 2)(2n - 1) for odd.
  MPoly d_even = even.coeffs[1] - printed_kink_even_recurrence().coeffs[1];
  MPoly d_odd = odd.coeffs[1] - printed_kink_odd_recurrence().coeffs[1];
  CHECK(d_even == (e2 * Rat(4) + MPoly(2)) * (n * Rat(2) - MPoly(2)));
  CHECK(d_odd == (e2 * Rat(4) + MPoly(2)) * (n * Rat(2) - MPoly(1)));
  CHECK(even.coeffs[0] == printed_kink_even_recurrence().coeffs[0]);
  CHECK(even.coeffs[2] == printed_kink_even_recurrence().coeffs[2]);
  CHECK(odd.coeffs[2] == printed_kink_odd_recurrence().coeffs[2]);
}

TEST_CASE("parity decoupling of a trivial constant recurrence") {
  Recurrence rec;
  rec.span = 2;
  rec.step = 2;
  rec.index_var = "n";
  rec.spectral_var = "s";
  rec.coeffs = {MPoly(1), MPoly(0), MPoly(-1)};  // Q_n = Q_{n-4}... Q_{n+2} = Q_n
  auto [even, odd] = parity_decouple(rec);
  for (const Recurrence* r : {&even, &odd}) {
    CHECK(r->coeffs[0] == MPoly(1));
    CHECK(r->coeffs[1].is_zero());
    CHECK(r->coeffs[2] == MPoly(-1));
    CHECK(r->step == 1);
  }
  CHECK_THROWS_AS(parity_decouple(even), Error);  // step 1: wrong shape
}

TEST_CASE("exact residuals of the QES solutions") {
  UPoly f_t("t", {Rat(0), Rat(1)});  // f = t
  for (Rat e2 : {Rat(1, 3), Rat(1, 2), Rat(2), Rat(7, 5)}) {
    LinearOde ode = build_kink_t_ode(Rat(1), e2);
    CHECK(exact_residual(ode, f_t, {}).is_zero());
  }
  // f = 1 - (4/3) t^2 at s = 1/2 only for eps2 = 1/2.
  UPoly f_even("t", {Rat(1), Rat(0), Rat(-4, 3)});
  CHECK(exact_residual(build_kink_t_ode(Rat(1, 2), Rat(1, 2)), f_even, {}).is_zero());
  CHECK_FALSE(exact_residual(build_kink_t_ode(Rat(1, 2), Rat(1, 3)), f_even, {}).is_zero());
  // Non-solution control.
  CHECK_FALSE(exact_residual(build_kink_t_ode(Rat(1, 2), Rat(1, 2)), f_t, {}).is_zero());
  // Parameters must be bound.
  CHECK_THROWS_AS(exact_residual(build_kink_t_ode(Rat(1), std::nullopt), f_t, {}), Error);
  CHECK(exact_residual(build_kink_t_ode(Rat(1), std::nullopt), f_t,
                       {{"eps2", Rat(3, 7)}})
            .is_zero());
}

TEST_CASE("solution coefficients satisfy the derived recurrence") {
  // Physicists' H4 = 16x^4 - 48x^2 + 12 solves the Hermite ODE at lambda = 4.
  LinearOde ode("x", {{2, MPoly(1)}, {1, v("x") * Rat(-2)}, {0, MPoly(8)}});
  UPoly h4("x", {Rat(12), Rat(0), Rat(-48), Rat(0), Rat(16)});
  CHECK(exact_residual(ode, h4, {}).is_zero());
  Recurrence rec = derive_recurrence(ode, {SeriesAnsatz::Scaling::Plain, "n"}, "");
  CHECK(satisfies(rec, {Rat(12), Rat(0), Rat(-48), Rat(0), Rat(16)}, {}));

  // Kink series Q = (1, 0, -8/3) in factorial scaling at s = 1/2, eps2 = 1/2.
  Recurrence krec = derived_kink_recurrence(Rat(1, 2));
  CHECK(satisfies(krec, {Rat(1), Rat(0), Rat(-4, 3) * Rat(2)}, {{"s", Rat(1, 2)}}));
}

TEST_CASE("geometric control f' = f gives 1/n! coefficients") {
  LinearOde ode("x", {{1, MPoly(1)}, {0, MPoly(-1)}});
  Recurrence rec = derive_recurrence(ode, {SeriesAnsatz::Scaling::Plain, "n"}, "s");
  PolySequence seq = generate_sequence(rec, {}, 30);
  Rat fact(1);
  for (int n = 0; n <= 30; ++n) {
    if (n > 0) fact *= Rat(n);
    CHECK(seq.entries[n].degree() == 0);
    CHECK(seq.entries[n].coeff(0) == fact.inv());
  }
}

TEST_CASE("derivation is invariant under rational rescaling of the ODE") {
  LinearOde base = build_bhaduri_ode(BhaduriParams::from_abc(Rat(2), Rat(1), Rat(0)));
  LinearOde scaled = base.scaled(MPoly(Rat(3, 7)));
  Recurrence r1 = derive_recurrence(base, {SeriesAnsatz::Scaling::Factorial, "n"}, "beta");
  Recurrence r2 = derive_recurrence(scaled, {SeriesAnsatz::Scaling::Factorial, "n"}, "beta");
  for (int j = 0; j <= 2; ++j) CHECK(r2.coeffs[j] == r1.coeffs[j] * Rat(3, 7));
  Recurrence n1 = r1.normalized(), n2 = r2.normalized();
  for (int j = 0; j <= 2; ++j) CHECK(n1.coeffs[j] == n2.coeffs[j]);
}

TEST_CASE("factorial and plain scalings agree via P_n = n! a_n") {
  LinearOde ode = build_kink_t_ode(std::nullopt, Rat(1, 2));
  Recurrence plain = derive_recurrence(ode, {SeriesAnsatz::Scaling::Plain, "n"}, "s");
  Recurrence fact = derive_recurrence(ode, {SeriesAnsatz::Scaling::Factorial, "n"}, "s");
  std::map<std::string, Rat> bind = {{"s", Rat(1, 3)}};
  PolySequence a = generate_sequence(plain, bind, 30);
  PolySequence q = generate_sequence(fact, bind, 30);
  Rat factorial(1);
  for (int n = 0; n <= 30; ++n) {
    if (n > 0) factorial *= Rat(n);
    CHECK(q.entries[n].coeff(0) == factorial * a.entries[n].coeff(0));
  }
}

TEST_CASE("indicial obstructions are reported with the offending index") {
  // Bhaduri shape with a = -1: leading coefficient n (n - 3) vanishes at n = 3.
  LinearOde ode = build_bhaduri_ode(BhaduriParams::from_abc(Rat(-1), Rat(1), Rat(0)));
  try {
    derive_recurrence(ode, {SeriesAnsatz::Scaling::Factorial, "n"}, "beta");
    FAIL("expected LEADING_COEFF_VANISHES");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LeadingCoeffVanishes);
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  CHECK_THROWS_AS(MPoly::var("x", -1), Error);  // negative powers unrepresentable
}

TEST_CASE("ODE validation") {
  CHECK_THROWS_AS(LinearOde("x", {{0, MPoly(1)}}), Error);  // no derivative term
  CHECK_THROWS_AS(LinearOde("x", {{2, MPoly(0)}}), Error);  // top order zero
  LinearOde ok("x", {{1, v("x")}, {0, MPoly(1)}});
  CHECK(ok.max_order() == 1);
}
