#include "qheun/qes_models.hpp"

#include <cmath>

namespace qheun {

namespace {

constexpr double kOverflowBound = 1400.0;  // |mu x| beyond which sinh overflows
constexpr double kLargeS2 = 1e8;           // switch to the asymptote-stable form

MPoly sym_or_const(const char* name, const std::optional<Rat>& v) {
  return v ? MPoly(*v) : MPoly::var(name);
}

}  // namespace

KinkParams::KinkParams(double mu_, Rat eps2_) : mu(mu_), eps2(std::move(eps2_)) {
  if (!(mu > 0)) fail(Errc::BadInput, "mu must be positive");
  if (eps2.sign() <= 0) fail(Errc::BadInput, "eps2 must be positive");
}

HeunParams heun_params(const std::optional<Rat>& s, const std::optional<Rat>& eps2) {
  MPoly sv = sym_or_const("s", s);
  MPoly e2 = sym_or_const("eps2", eps2);
  HeunParams h;
  h.alpha = MPoly(Rat(-5, 2)) - sv;
  h.betaH = MPoly(Rat(3, 2)) - sv;
  h.qH = (MPoly(Rat(1)) - sv * sv) * (MPoly(Rat(1)) + e2) - sv * e2 * Rat(1, 2) -
         (MPoly(Rat(1)) - e2 * Rat(2)) * Rat(1, 4);
  return h;
}

BhaduriParams BhaduriParams::from_abc(Rat a, Rat b, Rat c) {
  if (b.sign() < 0 || c.sign() < 0)
    fail(Errc::BadInput, "b and c are |l+q|/4, |l-q|/4 and must be nonnegative");
  return {std::move(a), std::move(b), std::move(c)};
}

BhaduriParams BhaduriParams::from_quantum_numbers(int l, int q, const Rat& g1) {
  if (g1 < Rat(-1, 4)) fail(Errc::InvalidG1, "g1 < -1/4 has no real branch");
  Rat disc = Rat(1) + Rat(4) * g1;
  Rat root;
  if (!disc.exact_sqrt(&root))
    fail(Errc::InvalidG1,
         "1 + 4 g1 = " + disc.pretty() + " is not a rational square; use the "
         "floating-point branch accessor for numeric work");
  Rat a = (Rat(1) + root) * Rat(1, 2);
  Rat b(std::abs(l + q), 4);
  Rat c(std::abs(l - q), 4);
  return {std::move(a), std::move(b), std::move(c)};
}

double bhaduri_a_from_g1(double g1) {
  if (g1 < -0.25) fail(Errc::InvalidG1, "g1 < -1/4 has no real branch");
  return (1.0 + std::sqrt(1.0 + 4.0 * g1)) / 2.0;
}

template <typename T>
static T kink_potential_impl(T x, const KinkParams& p, bool* clamped) {
  if (clamped) *clamped = false;
  double e2 = p.eps2.to_double();
  double mu2 = p.mu * p.mu;
  double re_x;
  if constexpr (std::is_same_v<T, double>) re_x = x;
  else re_x = x.real();
  if (std::abs(re_x) * p.mu > kOverflowBound) {
    if (clamped) *clamped = true;
    return T(mu2);
  }
  T sh = std::sinh(x * (p.mu / 2.0));
  T s2 = sh * sh;
  double c0 = 2.0 * (1.0 / (e2 * e2) - 1.0 / e2 - 2.0);
  double c1 = 4.0 * (5.0 / e2 - 1.0);
  double dshift = 1.0 + 1.0 / e2;
  if (std::abs(s2) > kLargeS2) {
    // Divide numerator and denominator by s2^2.
    T inv = T(1.0) / s2;
    T num = T(8.0) - c1 * inv + c0 * inv * inv;
    T den = T(1.0) + dshift * inv;
    return mu2 * num / (8.0 * den * den);
  }
  T num = 8.0 * s2 * s2 - c1 * s2 + T(c0);
  T den = T(dshift) + s2;
  return mu2 * num / (8.0 * den * den);
}

double kink_potential(double x, const KinkParams& p, bool* clamped) {
  return kink_potential_impl<double>(x, p, clamped);
}

std::complex<double> kink_potential(std::complex<double> x, const KinkParams& p,
                                    bool* clamped) {
  return kink_potential_impl<std::complex<double>>(x, p, clamped);
}

double periodic_potential(double theta, const KinkParams& p) {
  double e2 = p.eps2.to_double();
  double mu2 = p.mu * p.mu;
  double s2 = std::sin(p.mu * theta / 2.0);
  s2 *= s2;
  double num = 8.0 * s2 * s2 + 4.0 * (5.0 / e2 - 1.0) * s2 +
               2.0 * (1.0 / (e2 * e2) - 1.0 / e2 - 2.0);
  double den = 1.0 + 1.0 / e2 - s2;
  return -mu2 * num / (8.0 * den * den);
}

KinkPoint kink_transform(double x, const KinkParams& p) {
  double e2 = p.eps2.to_double();
  double sh = std::sinh(p.mu * x / 2.0);
  double s2 = sh * sh;
  double y;
  if (s2 > kLargeS2) {
    y = 1.0 / ((1.0 + 1.0 / e2) / s2 + 1.0);
  } else {
    y = s2 / (1.0 + 1.0 / e2 + s2);
  }
  return {y, std::sqrt(y + e2)};
}

LinearOde build_kink_t_ode(const std::optional<Rat>& s,
                           const std::optional<Rat>& eps2) {
  MPoly t = MPoly::var("t");
  MPoly sv = sym_or_const("s", s);
  MPoly e2 = sym_or_const("eps2", eps2);
  HeunParams h = heun_params(s, eps2);
  MPoly t2 = t * t;
  MPoly ab = h.alpha * h.betaH;

  MPoly c2 = (t2 - e2) * (t2 - MPoly(Rat(1)) - e2);
  MPoly c1 = ((t2 - MPoly(Rat(1)) - e2) +
              (MPoly(Rat(1)) + sv * Rat(2)) * (t2 - e2) * Rat(2)) *
             t;
  MPoly c0 = ab * t2 * Rat(4) - (ab * e2 + h.qH) * Rat(4);
  return LinearOde("t", {{2, c2}, {1, c1}, {0, c0}});
}

LinearOde kink_t_ode_via_heun(const std::optional<Rat>& s,
                              const std::optional<Rat>& eps2) {
  MPoly y = MPoly::var("y");
  MPoly sv = sym_or_const("s", s);
  MPoly e2 = sym_or_const("eps2", eps2);
  HeunParams h = heun_params(s, eps2);

  // Heun form cleared of denominators: A f'' + B f' + C f = 0 in y.
  MPoly A = y * (y - MPoly(Rat(1))) * (y + e2);
  MPoly B = (y - MPoly(Rat(1))) * (y + e2) * Rat(1, 2) +
            (MPoly(Rat(1)) + sv * Rat(2)) * y * (y + e2) +
            y * (y - MPoly(Rat(1))) * Rat(1, 2);
  MPoly C = h.alpha * h.betaH * y - h.qH;

  // y = t^2 - eps2, f'(y) = f'(t)/(2t), f''(y) = f''(t)/(4t^2) - f'(t)/(4t^3);
  // multiply through by 4 t^3 and remove the common t^3.
  MPoly t = MPoly::var("t");
  MPoly image = t * t - e2;
  MPoly At = A.compose("y", image);
  MPoly Bt = B.compose("y", image);
  MPoly Ct = C.compose("y", image);
  MPoly c2 = (At * t).divide_power_exact("t", 3);
  MPoly c1 = (Bt * t * t * Rat(2) - At).divide_power_exact("t", 3);
  MPoly c0 = (Ct * t.pow(3) * Rat(4)).divide_power_exact("t", 3);
  return LinearOde("t", {{2, c2}, {1, c1}, {0, c0}});
}

static LinearOde bhaduri_ode_impl(const MPoly& a, const MPoly& b, const MPoly& c) {
  MPoly x = MPoly::var("x");
  MPoly beta = MPoly::var("beta");
  MPoly one(Rat(1));
  MPoly S = a + b + c;
  MPoly lam = (beta + one) * (beta + one) * Rat(1, 4) -
              (S + MPoly(Rat(1, 2))) * (S + MPoly(Rat(1, 2)));
  MPoly c2 = x * (one - x * x);
  MPoly c1 = (a - (b - c) * x - (S + one) * x * x) * Rat(2);
  MPoly c0 = lam * x + a * (c - b) * Rat(2);
  return LinearOde("x", {{2, c2}, {1, c1}, {0, c0}});
}

LinearOde build_bhaduri_ode(const BhaduriParams& p) {
  return bhaduri_ode_impl(MPoly(p.a), MPoly(p.b), MPoly(p.c));
}

LinearOde build_bhaduri_ode_symbolic() {
  return bhaduri_ode_impl(MPoly::var("a"), MPoly::var("b"), MPoly::var("c"));
}

namespace {

// Verifies a state's series against the t-ODE; f = sum Q_n t^n / n!.
bool residual_vanishes(const QesState& st) {
  std::vector<Rat> cs(st.q_coeffs.size());
  Rat fact(1);
  for (size_t n = 0; n < st.q_coeffs.size(); ++n) {
    if (n > 0) fact *= Rat(static_cast<long>(n));
    cs[n] = st.q_coeffs[n] / fact;
  }
  UPoly f("t", cs);
  LinearOde ode = build_kink_t_ode(st.s, st.eps2);
  return exact_residual(ode, f, {}).is_zero();
}

QesState make_verified(QesState st) {
  st.verified = residual_vanishes(st);
  if (!st.verified)
    fail(Errc::ResidualNonzero, "state series does not solve the model ODE");
  return st;
}

}  // namespace

QesState kink_ground_state(const Rat& eps2) {
  QesState st;
  st.system = "kink-line";
  st.sector = "odd";
  st.s = Rat(1);
  st.eps2 = eps2;
  st.energy_over_mu2 = Rat(0);
  st.q_coeffs = {Rat(0), Rat(1)};  // f = t
  st.description = "psi0 ~ (1-y) sqrt(y+eps2), nodeless zero mode";
  return make_verified(std::move(st));
}

QesState kink_second_excited_state() {
  QesState st;
  st.system = "kink-line";
  st.sector = "even";
  st.s = Rat(1, 2);
  st.eps2 = Rat(1, 2);
  st.energy_over_mu2 = Rat(3, 4);
  st.q_coeffs = {Rat(1), Rat(0), Rat(-8, 3)};  // f = 1 - (4/3) t^2
  st.description = "psi2 ~ (1-y)^{1/2} (1-4y), two nodes at y = 1/4";
  return make_verified(std::move(st));
}

QesState periodic_ground_state() {
  QesState st = kink_second_excited_state();
  st.system = "kink-periodic";
  st.energy_over_mu2 = Rat(-3, 4);
  st.description =
      "chi0 ~ (1+sin^2(mu th/2))/(3-sin^2(mu th/2))^{3/2}, nodeless, period 2 pi/mu";
  return st;  // verification carried by the line pre-image under x -> i theta
}

QesState periodic_second_excited_state() {
  QesState st = kink_ground_state(Rat(1, 2));
  st.system = "kink-periodic";
  st.energy_over_mu2 = Rat(0);
  st.description =
      "chi2 ~ cos(mu th/2)/(3-sin^2(mu th/2))^{3/2}, two nodes per doubled period";
  return st;
}

std::function<double(double)> reconstruct_wavefunction(const QesState& state,
                                                       const KinkParams& p) {
  if (!state.verified)
    fail(Errc::ResidualNonzero, "refusing to reconstruct an unverified state");
  if (state.eps2 != p.eps2)
    fail(Errc::BadInput, "state and parameters disagree on eps2");
  double e2 = p.eps2.to_double();
  double s_exp = state.s.to_double();
  double mu = p.mu;
  bool periodic = state.system == "kink-periodic";

  // Split the series into even/odd parts in t so only t^2 (plus a signed t
  // for the odd part) is ever needed.
  std::vector<double> even_c, odd_c;
  Rat fact(1);
  for (size_t n = 0; n < state.q_coeffs.size(); ++n) {
    if (n > 0) fact *= Rat(static_cast<long>(n));
    double coef = (state.q_coeffs[n] / fact).to_double();
    if (n % 2 == 0) even_c.push_back(coef);
    else odd_c.push_back(coef);
  }
  auto horner = [](const std::vector<double>& cs, double u) {
    double acc = 0;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * u + *it;
    return acc;
  };

  return [=](double arg) {
    double one_minus_y, t2, t_signed;
    if (!periodic) {
      double sh = std::sinh(mu * arg / 2.0);
      double ch = std::cosh(mu * arg / 2.0);
      double den = 1.0 + 1.0 / e2 + sh * sh;
      one_minus_y = (1.0 + 1.0 / e2) / den;
      t2 = (1.0 + e2) * ch * ch / den;
      t_signed = std::sqrt(1.0 + e2) * ch / std::sqrt(den);
    } else {
      double sn = std::sin(mu * arg / 2.0);
      double cs = std::cos(mu * arg / 2.0);
      double den = 1.0 + 1.0 / e2 - sn * sn;
      one_minus_y = (1.0 + 1.0 / e2) / den;
      t2 = (1.0 + e2) * cs * cs / den;
      // Analytic continuation picks the signed cosine branch for odd f.
      t_signed = std::sqrt(1.0 + e2) * cs / std::sqrt(den);
    }
    double f = horner(even_c, t2) + t_signed * horner(odd_c, t2);
    return std::pow(one_minus_y, s_exp) * f;
  };
}

RadialProblem bhaduri_radial_problem(double beta) {
  if (beta < 1.0)
    fail(Errc::BetaOutOfRange, "beta must satisfy beta >= 1");
  RadialProblem rp;
  rp.beta = beta;
  rp.centrifugal = (beta + 1.0) * (beta + 1.0) - 0.25;
  double cf = rp.centrifugal;
  rp.potential = [cf](double R) { return R * R + cf / (R * R); };
  return rp;
}

// --- literal as-printed recursions -------------------------------------

Recurrence printed_kink_recurrence() {
  MPoly n = MPoly::var("n");
  MPoly s = MPoly::var("s");
  MPoly e2 = MPoly::var("eps2");
  MPoly bracket = (e2 * Rat(2) + MPoly(Rat(1))) * n * n +
                  (e2 * Rat(5) + MPoly(Rat(2)) + s * e2 * Rat(4)) * n -
                  s * s * Rat(4) + s * e2 * Rat(2) + MPoly(Rat(3)) - e2 * Rat(9);
  MPoly tr = n * (n - MPoly(Rat(1))) *
             (n * n + n * (s * Rat(4) - MPoly(Rat(2))) + s * s * Rat(4) -
              s * Rat(4) - MPoly(Rat(15)));
  Recurrence rec;
  rec.span = 2;
  rec.step = 2;
  rec.index_var = "n";
  rec.spectral_var = "s";
  rec.first_valid = 2;
  MPoly shift = n - MPoly(Rat(2));
  rec.coeffs = {e2 * (e2 + MPoly(Rat(1))), -bracket.compose("n", shift),
                tr.compose("n", shift)};
  return rec;
}

static Recurrence printed_sector(const MPoly& bracket, const MPoly& tr) {
  MPoly e2 = MPoly::var("eps2");
  Recurrence rec;
  rec.span = 2;
  rec.step = 1;
  rec.index_var = "n";
  rec.spectral_var = "s";
  rec.first_valid = 1;
  rec.coeffs = {e2 * (e2 + MPoly(Rat(1))), -bracket, tr};
  return rec;
}

Recurrence printed_kink_even_recurrence() {
  MPoly m = MPoly::var("n");
  MPoly s = MPoly::var("s");
  MPoly e2 = MPoly::var("eps2");
  MPoly bracket = (e2 * Rat(8) + MPoly(Rat(4))) * m * m +
                  (s * e2 * Rat(8) - e2 * Rat(6) - MPoly(Rat(4))) * m -
                  s * s * Rat(4) - s * e2 * Rat(6) + MPoly(Rat(3)) - e2 * Rat(11);
  MPoly tr = (m - MPoly(Rat(1))) * (m * Rat(2) - MPoly(Rat(3))) *
             (m * m * Rat(8) + m * (s * Rat(16) - MPoly(Rat(24))) +
              s * s * Rat(8) - s * Rat(24) - MPoly(Rat(14)));
  return printed_sector(bracket, tr);
}

Recurrence printed_kink_odd_recurrence() {
  MPoly m = MPoly::var("n");
  MPoly s = MPoly::var("s");
  MPoly e2 = MPoly::var("eps2");
  MPoly bracket = (e2 * Rat(8) + MPoly(Rat(4))) * m * m +
                  (s * e2 * Rat(8) + e2 * Rat(2)) * m - s * s * Rat(4) -
                  s * e2 * Rat(2) + MPoly(Rat(2)) - e2 * Rat(12);
  MPoly tr = (m - MPoly(Rat(1))) * (m * Rat(2) - MPoly(Rat(1))) *
             (m * m * Rat(8) + m * (s * Rat(16) - MPoly(Rat(16))) +
              s * s * Rat(8) - s * Rat(16) - MPoly(Rat(24)));
  return printed_sector(bracket, tr);
}

Recurrence printed_bhaduri_recurrence() {
  MPoly n = MPoly::var("n");
  MPoly beta = MPoly::var("beta");
  MPoly a = MPoly::var("a");
  MPoly b = MPoly::var("b");
  MPoly c = MPoly::var("c");
  MPoly one(Rat(1));
  MPoly S = a + b + c;
  Recurrence rec;
  rec.span = 2;
  rec.step = 1;
  rec.index_var = "n";
  rec.spectral_var = "beta";
  rec.first_valid = 1;
  rec.coeffs = {
      n + a * Rat(2) - one,
      (b - c) * (n + a - one) * Rat(-2),
      (n - one) * ((beta + one) * (beta + one) * Rat(1, 4) -
                   (S - MPoly(Rat(3, 2))) * (S - MPoly(Rat(3, 2)))),
  };
  return rec;
}

Recurrence derived_kink_recurrence(const std::optional<Rat>& eps2) {
  return derive_recurrence(build_kink_t_ode(std::nullopt, eps2),
                           {SeriesAnsatz::Scaling::Factorial, "n"}, "s");
}

std::pair<Recurrence, Recurrence> derived_kink_sectors(const std::optional<Rat>& eps2) {
  return parity_decouple(derived_kink_recurrence(eps2));
}

Recurrence derived_bhaduri_recurrence(const std::optional<BhaduriParams>& p) {
  LinearOde ode = p ? build_bhaduri_ode(*p) : build_bhaduri_ode_symbolic();
  return derive_recurrence(ode, {SeriesAnsatz::Scaling::Factorial, "n"}, "beta");
}

}  // namespace qheun
