#include <doctest.h>

#include <cmath>
#include <complex>

#include "qheun/qes_models.hpp"

using namespace qheun;

TEST_CASE("kink potential values and limits") {
  KinkParams p(1.0, Rat(1, 2));
  CHECK(kink_potential(0.0, p) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(kink_potential(40.0, p) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kink_potential(-40.0, p) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kink_potential(700.0, p) == doctest::Approx(1.0));

  bool clamped = false;
  double far = kink_potential(1500.0, p, &clamped);
  CHECK(clamped);
  CHECK(far == doctest::Approx(1.0));
  clamped = false;
  kink_potential(3.0, p, &clamped);
  CHECK_FALSE(clamped);

  KinkParams p2(2.0, Rat(1, 3));
  CHECK(kink_potential(300.0, p2) == doctest::Approx(4.0));  // mu^2 asymptote

  CHECK_THROWS_AS(KinkParams(0.0, Rat(1, 2)), Error);
  CHECK_THROWS_AS(KinkParams(1.0, Rat(-1, 2)), Error);
}

TEST_CASE("kink potential at an imaginary point matches the periodic partner") {
  KinkParams p(1.0, Rat(1, 2));
  std::complex<double> v3 = kink_potential(std::complex<double>(0.0, M_PI / 2), p);
  double v22 = periodic_potential(M_PI / 2, p);
  CHECK(std::abs(v3.imag()) < 1e-14);
  CHECK(v3.real() == doctest::Approx(-v22).epsilon(1e-13));
}

TEST_CASE("periodic potential: zero at origin, 2 pi/mu periodic") {
  KinkParams p(1.0, Rat(1, 2));
  CHECK(periodic_potential(0.0, p) == doctest::Approx(0.0).epsilon(1e-14));
  for (double th : {0.3, 1.7, 4.4}) {
    CHECK(periodic_potential(th, p) ==
          doctest::Approx(periodic_potential(th + 2 * M_PI, p)).epsilon(1e-13));
  }
  KinkParams p3(3.0, Rat(2));
  CHECK(periodic_potential(0.5, p3) ==
        doctest::Approx(periodic_potential(0.5 + 2 * M_PI / 3.0, p3)).epsilon(1e-12));
}

TEST_CASE("anti-isospectral identity on a dense grid") {
  for (Rat e2 : {Rat(1, 3), Rat(1, 2), Rat(2)}) {
    KinkParams p(1.0, e2);
    double worst = 0, worst_im = 0;
    for (int i = 0; i < 10000; ++i) {
      double th = -4 * M_PI + 8 * M_PI * i / 9999.0;
      std::complex<double> v3 = kink_potential(std::complex<double>(0, th), p);
      worst = std::max(worst, std::abs(periodic_potential(th, p) + v3.real()));
      worst_im = std::max(worst_im, std::abs(v3.imag()));
    }
    CHECK(worst < 1e-12);
    CHECK(worst_im < 1e-12);
  }
}

TEST_CASE("kink transform") {
  KinkParams p(1.0, Rat(1, 2));
  KinkPoint origin = kink_transform(0.0, p);
  CHECK(origin.y == doctest::Approx(0.0));
  CHECK(origin.t == doctest::Approx(std::sqrt(0.5)));

  KinkPoint far = kink_transform(60.0, p);
  CHECK(far.y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(far.t == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));

  // Printed substitution recovered at eps2 = 1/2, and y increases in |x|.
  double prev = -1;
  for (double x = 0; x <= 8; x += 0.25) {
    KinkPoint k = kink_transform(x, p);
    CHECK(k.t == doctest::Approx(std::sqrt(k.y + 0.5)).epsilon(1e-14));
    CHECK(k.y > prev);
    CHECK(k.y >= 0);
    CHECK(k.y < 1);
    CHECK(k.t >= std::sqrt(0.5) - 1e-15);
    CHECK(k.t < std::sqrt(1.5));
    prev = k.y;
    CHECK(kink_transform(-x, p).y == doctest::Approx(k.y));
  }
}

TEST_CASE("t-ODE constant term matches the expanded Heun parameters") {
  // -4(alpha betaH eps2 + qH) = 4s^2 - 2 s eps2 + 9 eps2 - 3; at s=1: 1 + 7 eps2.
  for (Rat e2 : {Rat(1, 2), Rat(1, 3), Rat(2)}) {
    LinearOde ode = build_kink_t_ode(Rat(1), e2);
    MPoly c0;
    for (const auto& [k, c] : ode.terms)
      if (k == 0) c0 = c;
    Rat expected = Rat(1) + Rat(7) * e2;
    CHECK(c0.coeff_of("t", 0).constant_value() == expected);
  }
  LinearOde half = build_kink_t_ode(Rat(1), Rat(1, 2));
  for (const auto& [k, c] : half.terms)
    if (k == 0) CHECK(c.coeff_of("t", 0).constant_value() == Rat(9, 2));
}

TEST_CASE("Heun y-form reproduces the t-ODE exactly") {
  LinearOde direct = build_kink_t_ode();
  LinearOde via_heun = kink_t_ode_via_heun();
  REQUIRE(direct.terms.size() == via_heun.terms.size());
  for (size_t i = 0; i < direct.terms.size(); ++i) {
    CHECK(direct.terms[i].first == via_heun.terms[i].first);
    CHECK(direct.terms[i].second == via_heun.terms[i].second);
  }
  // Also with both parameters bound.
  LinearOde d2 = build_kink_t_ode(Rat(1, 2), Rat(1, 3));
  LinearOde h2 = kink_t_ode_via_heun(Rat(1, 2), Rat(1, 3));
  for (size_t i = 0; i < d2.terms.size(); ++i)
    CHECK(d2.terms[i].second == h2.terms[i].second);
}

TEST_CASE("Bhaduri parameter maps") {
  BhaduriParams p = BhaduriParams::from_quantum_numbers(3, 3, Rat(2));
  CHECK(p.a == Rat(2));         // a(a-1) = 2, branch a >= 1/2
  CHECK(p.b == Rat(3, 2));      // |l+q|/4 = 6/4
  CHECK(p.c == Rat(0));         // l = q
  CHECK(bhaduri_a_from_g1(2.0) == doctest::Approx(2.0));
  CHECK(bhaduri_a_from_g1(0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(BhaduriParams::from_quantum_numbers(1, 0, Rat(-1, 2)), Error);
  CHECK_THROWS_AS(bhaduri_a_from_g1(-0.3), Error);

  // b = c decouples the beta parities: the middle coefficient dies.
  Recurrence rec = derived_bhaduri_recurrence(BhaduriParams::from_abc(Rat(2), Rat(1), Rat(1)));
  CHECK(rec.coeffs[1].is_zero());
}

TEST_CASE("QES state catalog is residual-verified") {
  QesState g13 = kink_ground_state(Rat(1, 3));
  QesState g2 = kink_ground_state(Rat(2));
  QesState second = kink_second_excited_state();
  QesState chi0 = periodic_ground_state();
  QesState chi2 = periodic_second_excited_state();
  for (const QesState* st : {&g13, &g2, &second, &chi0, &chi2}) CHECK(st->verified);
  CHECK(g13.energy_over_mu2 == Rat(0));
  CHECK(second.energy_over_mu2 == Rat(3, 4));
  CHECK(second.energy(2.0) == doctest::Approx(3.0));
  CHECK(chi0.energy_over_mu2 == Rat(-3, 4));
  CHECK(chi2.energy_over_mu2 == Rat(0));
}

TEST_CASE("reconstructed line states match their closed forms") {
  KinkParams p(1.0, Rat(1, 2));
  auto psi0 = reconstruct_wavefunction(kink_ground_state(Rat(1, 2)), p);
  auto psi2 = reconstruct_wavefunction(kink_second_excited_state(), p);
  for (double x = -6; x <= 6; x += 0.37) {
    KinkPoint k = kink_transform(x, p);
    CHECK(psi0(x) == doctest::Approx((1 - k.y) * k.t).epsilon(1e-13));
    CHECK(psi2(x) ==
          doctest::Approx(std::sqrt(1 - k.y) * (1 - 4 * k.y) / 3.0).epsilon(1e-12));
  }
  // psi0 nodeless; psi2 has its two nodes at y = 1/4.
  int changes0 = 0, changes2 = 0;
  double prev0 = psi0(-10), prev2 = psi2(-10);
  for (double x = -10; x <= 10; x += 0.01) {
    if (psi0(x) * prev0 < 0) ++changes0;
    if (psi2(x) * prev2 < 0) ++changes2;
    prev0 = psi0(x);
    prev2 = psi2(x);
  }
  CHECK(changes0 == 0);
  CHECK(changes2 == 2);

  // General eps2 ground state keeps the (1-y) sqrt(y+eps2) shape.
  KinkParams p3(1.0, Rat(1, 3));
  auto psi0b = reconstruct_wavefunction(kink_ground_state(Rat(1, 3)), p3);
  for (double x : {-2.0, 0.5, 3.3}) {
    KinkPoint k = kink_transform(x, p3);
    CHECK(psi0b(x) == doctest::Approx((1 - k.y) * k.t).epsilon(1e-13));
  }
}

TEST_CASE("reconstructed periodic states match the continued closed forms") {
  KinkParams p(1.0, Rat(1, 2));
  auto chi0 = reconstruct_wavefunction(periodic_ground_state(), p);
  auto chi2 = reconstruct_wavefunction(periodic_second_excited_state(), p);
  for (double th = 0; th < 4 * M_PI; th += 0.17) {
    double s2 = std::sin(th / 2) * std::sin(th / 2);
    double ref0 = (1 + s2) / std::pow(3 - s2, 1.5);
    double ref2 = std::cos(th / 2) / std::pow(3 - s2, 1.5);
    CHECK(chi0(th) == doctest::Approx(std::sqrt(3.0) * ref0).epsilon(1e-12));
    CHECK(chi2(th) == doctest::Approx(3 * std::sqrt(1.5) * ref2).epsilon(1e-12));
  }
  // chi0 is 2 pi periodic; chi2 is antiperiodic over 2 pi (hence the doubled circle).
  for (double th : {0.4, 2.0, 5.1}) {
    CHECK(chi0(th + 2 * M_PI) == doctest::Approx(chi0(th)).epsilon(1e-12));
    CHECK(chi2(th + 2 * M_PI) == doctest::Approx(-chi2(th)).epsilon(1e-12));
  }
  // Node counts on the doubled period.
  int nodes0 = 0, nodes2 = 0;
  double prev0 = chi0(0.005), prev2 = chi2(0.005);
  for (double th = 0.005; th < 4 * M_PI; th += 0.01) {
    if (chi0(th) * prev0 < 0) ++nodes0;
    if (chi2(th) * prev2 < 0) ++nodes2;
    prev0 = chi0(th);
    prev2 = chi2(th);
  }
  CHECK(nodes0 == 0);
  CHECK(nodes2 == 2);
}

TEST_CASE("reconstruction refuses unverified states") {
  QesState bogus;
  bogus.system = "kink-line";
  bogus.s = Rat(1);
  bogus.eps2 = Rat(1, 2);
  bogus.q_coeffs = {Rat(1)};
  bogus.verified = false;
  CHECK_THROWS_AS(reconstruct_wavefunction(bogus, KinkParams(1.0, Rat(1, 2))), Error);
}

TEST_CASE("radial problem spec") {
  RadialProblem rp = bhaduri_radial_problem(1.0);
  CHECK(rp.centrifugal == doctest::Approx(15.0 / 4.0));
  CHECK(rp.expected_energy(0) == doctest::Approx(3.0));
  CHECK(rp.expected_energy(1) == doctest::Approx(5.0));
  CHECK(rp.potential(2.0) == doctest::Approx(4.0 + 15.0 / 16.0));
  RadialProblem rp2 = bhaduri_radial_problem(2.0);
  CHECK(rp2.expected_energy(1) == doctest::Approx(6.0));
  CHECK_THROWS_AS(bhaduri_radial_problem(0.5), Error);
}
