#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qheun/ode.hpp"
#include "qheun/recurrence_lab.hpp"

namespace qheun {

// Parameters of the kink-stability line problem and its periodic partner.
struct KinkParams {
  double mu = 1.0;
  Rat eps2 = Rat(1, 2);

  KinkParams() = default;
  KinkParams(double mu_, Rat eps2_);
};

// Local-exponent and accessory parameters of the Heun form; polynomials in
// {s, eps2} unless those were bound at construction.
struct HeunParams {
  MPoly alpha;   // -5/2 - s
  MPoly betaH;   // 3/2 - s
  MPoly qH;      // (1-s^2)(1+eps2) - s eps2/2 - (1-2 eps2)/4
};

HeunParams heun_params(const std::optional<Rat>& s = std::nullopt,
                       const std::optional<Rat>& eps2 = std::nullopt);

// Angular-problem parameters: b = |l+q|/4, c = |l-q|/4, a(a-1) = g1 with the
// regular branch a >= 1/2.
struct BhaduriParams {
  Rat a, b, c;

  static BhaduriParams from_abc(Rat a, Rat b, Rat c);
  // Exact when 1 + 4 g1 is a rational square; INVALID_G1 if g1 < -1/4.
  static BhaduriParams from_quantum_numbers(int l, int q, const Rat& g1);
};

// Regular branch of a(a-1) = g1 in floating point (INVALID_G1 if g1 < -1/4).
double bhaduri_a_from_g1(double g1);

// Closed-form quasi-exact state. q_coeffs are the series coefficients in
// the factorial convention f = sum Q_n t^n / n!.
struct QesState {
  std::string system;  // "kink-line" or "kink-periodic"
  std::string sector;  // "even" or "odd" (parity in t)
  Rat s;
  Rat eps2;
  Rat energy_over_mu2;
  std::vector<Rat> q_coeffs;
  std::string description;
  bool verified = false;

  double energy(double mu) const { return energy_over_mu2.to_double() * mu * mu; }
};

// V of the line problem; evaluated stably out to |mu x| ~ 1400, beyond which
// the mu^2 asymptote is returned and *clamped (if given) is set.
double kink_potential(double x, const KinkParams& p, bool* clamped = nullptr);
std::complex<double> kink_potential(std::complex<double> x, const KinkParams& p,
                                    bool* clamped = nullptr);

// The anti-isospectral partner, periodic with period 2 pi / mu.
double periodic_potential(double theta, const KinkParams& p);

// y in [0, 1) and t = sqrt(y + eps2).
struct KinkPoint {
  double y;
  double t;
};
KinkPoint kink_transform(double x, const KinkParams& p);

// The t-form ODE of the line problem, coefficients in {t, s, eps2} with s
// and eps2 optionally bound.
LinearOde build_kink_t_ode(const std::optional<Rat>& s = std::nullopt,
                           const std::optional<Rat>& eps2 = std::nullopt);

// Same ODE obtained by clearing the Heun y-form of denominators and applying
// the hand-encoded map y = t^2 - eps2 (consistency oracle for the above).
LinearOde kink_t_ode_via_heun(const std::optional<Rat>& s = std::nullopt,
                              const std::optional<Rat>& eps2 = std::nullopt);

// The angular ODE multiplied through by x to clear 1/x terms; spectral
// variable named "beta".
LinearOde build_bhaduri_ode(const BhaduriParams& p);
LinearOde build_bhaduri_ode_symbolic();  // a, b, c left symbolic

// Closed-form state catalog. Every factory verifies its series against
// exact_residual before marking the state verified.
QesState kink_ground_state(const Rat& eps2);      // s = 1, E = 0, any eps2 > 0
QesState kink_second_excited_state();             // s = 1/2, E = 3 mu^2/4, eps2 = 1/2
QesState periodic_ground_state();                 // E = -3 mu^2/4, eps2 = 1/2
QesState periodic_second_excited_state();         // E = 0, eps2 = 1/2

// psi(x) for line states, chi(theta) for periodic states (the analytic
// continuation x -> i theta with the documented cosine branch for odd f).
std::function<double(double)> reconstruct_wavefunction(const QesState& state,
                                                       const KinkParams& p);

// Radial problem after F = u / R^{3/2}:
//   u'' + (2E - R^2 - ((beta+1)^2 - 1/4)/R^2) u = 0 on (0, R_max], Dirichlet.
struct RadialProblem {
  double beta;
  double centrifugal;  // (beta+1)^2 - 1/4
  std::function<double(double)> potential;  // R^2 + centrifugal / R^2
  double expected_energy(int n_r) const { return 2 * n_r + beta + 2; }
};
RadialProblem bhaduri_radial_problem(double beta);  // BETA_OUT_OF_RANGE if beta < 1

// Literal as-printed recursions, stored for regression comparison against
// the engine-derived versions (top-index storage convention).
Recurrence printed_kink_recurrence();        // the step-2 Q recursion
Recurrence printed_kink_even_recurrence();   // even sector, P_m = Q_{2m}
Recurrence printed_kink_odd_recurrence();    // odd sector, P_m = Q_{2m+1}
Recurrence printed_bhaduri_recurrence();     // the angular recursion as printed

// Engine-derived recurrences (the versions used downstream).
Recurrence derived_kink_recurrence(const std::optional<Rat>& eps2 = std::nullopt);
std::pair<Recurrence, Recurrence> derived_kink_sectors(
    const std::optional<Rat>& eps2 = std::nullopt);
Recurrence derived_bhaduri_recurrence(const std::optional<BhaduriParams>& p = std::nullopt);

}  // namespace qheun
