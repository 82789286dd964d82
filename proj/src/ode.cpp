#include "qheun/ode.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qheun/roots.hpp"

namespace qheun {

LinearOde::LinearOde(std::string indep_, std::vector<std::pair<int, MPoly>> terms_)
    : indep(std::move(indep_)), terms(std::move(terms_)) {
  int order = 0;
  bool top_nonzero = false;
  for (const auto& [k, c] : terms) {
    if (k < 0) fail(Errc::WrongShape, "negative derivative order");
    if (c.is_zero()) continue;
    if (k > order) { order = k; top_nonzero = true; }
    else if (k == order) top_nonzero = top_nonzero || !c.is_zero();
  }
  if (order < 1 || !top_nonzero)
    fail(Errc::WrongShape, "ODE must have a nonzero term of order >= 1");
}

int LinearOde::max_order() const {
  int order = 0;
  for (const auto& [k, c] : terms)
    if (!c.is_zero()) order = std::max(order, k);
  return order;
}

LinearOde LinearOde::scaled(const MPoly& p) const {
  std::vector<std::pair<int, MPoly>> t;
  t.reserve(terms.size());
  for (const auto& [k, c] : terms) t.emplace_back(k, c * p);
  return LinearOde(indep, std::move(t));
}

std::string LinearOde::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*f";
    for (int i = 0; i < k; ++i) os << "'";
  }
  os << " = 0";
  return os.str();
}

MPoly Recurrence::coeff_shifted(int j, int offset) const {
  return coeffs.at(j).compose(index_var,
                              MPoly::var(index_var) + MPoly(Rat(offset)));
}

Recurrence Recurrence::bind(const std::map<std::string, Rat>& bindings) const {
  if (bindings.count(index_var))
    fail(Errc::BadInput, "cannot bind the recurrence index variable");
  Recurrence r = *this;
  for (auto& c : r.coeffs) c = c.substitute(bindings);
  return r;
}

Recurrence Recurrence::scaled(const Rat& c) const {
  if (c.is_zero()) fail(Errc::BadInput, "recurrence scaled by zero");
  Recurrence r = *this;
  for (auto& p : r.coeffs) p *= c;
  return r;
}

static Rat leading_rational(const MPoly& p) {
  if (p.is_zero()) return Rat(0);
  // Coefficient of the display-leading term: highest total degree, then
  // largest exponent vector.
  int best_deg = -1;
  const MPoly::Exps* best = nullptr;
  const Rat* val = nullptr;
  for (const auto& [e, c] : p.terms()) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (t > best_deg || (t == best_deg && best && e > *best)) {
      best_deg = t;
      best = &e;
      val = &c;
    }
  }
  return *val;
}

Recurrence Recurrence::normalized() const {
  Rat lead = leading_rational(coeffs.at(0));
  if (lead.is_zero()) return *this;
  return scaled(lead.inv());
}

std::string Recurrence::display() const {
  Rat lead = leading_rational(coeffs.at(0));
  Rat flip = lead.sign() < 0 ? Rat(-1) : Rat(1);
  std::ostringstream os;
  for (int j = 0; j <= span; ++j) {
    if (coeffs[j].is_zero()) continue;
    if (j > 0) os << " + ";
    os << "[" << factored_coeff_str(coeffs[j] * flip, index_var, spectral_var)
       << "]*P[" << index_var;
    if (j > 0) os << "-" << j * step;
    os << "]";
  }
  os << " = 0   (" << index_var << " >= " << first_valid << ")";
  return os.str();
}

Recurrence derive_recurrence(const LinearOde& ode, const SeriesAnsatz& ansatz,
                             const std::string& spectral_var) {
  const std::string& x = ode.indep;
  const std::string& n = ansatz.index_symbol;
  MPoly nv = MPoly::var(n);

  // delta = order - power: a term c * x^j * d^k/dx^k sends a_{m+k-j} into
  // the coefficient of x^m.
  std::map<int, std::vector<std::pair<int, MPoly>>> by_delta;  // delta -> (order, param coeff)
  for (const auto& [k, c] : ode.terms) {
    if (c.is_zero()) continue;
    if (c.depends_on(n))
      fail(Errc::BadInput, "ODE coefficient uses the index symbol '" + n + "'");
    for (const auto& [j, q] : c.collect(x)) {
      if (q.is_zero()) continue;
      by_delta[k - j].emplace_back(k, q);
    }
  }
  if (by_delta.empty()) fail(Errc::WrongShape, "empty ODE");

  int delta_max = by_delta.rbegin()->first;
  int delta_min = by_delta.begin()->first;

  // Gap g = delta_max - delta: coefficient of a_{n-g} in the constraint
  // whose highest touched index is n.
  std::map<int, MPoly> by_gap;
  for (const auto& [delta, parts] : by_delta) {
    int gap = delta_max - delta;
    MPoly acc;
    for (const auto& [k, q] : parts)
      acc += q * MPoly::falling(nv - MPoly(Rat(gap)), k);
    if (!acc.is_zero()) by_gap[gap] = std::move(acc);
  }

  if (!by_gap.count(0) || by_gap[0].is_zero())
    fail(Errc::LeadingCoeffVanishes,
         "leading recurrence coefficient vanishes identically (indicial obstruction)");

  // With parameters bound, an exact nonnegative-integer root of the leading
  // coefficient blocks the series at a specific index.
  {
    const MPoly& rho = by_gap[0];
    bool univariate = true;
    for (const auto& v : rho.vars()) univariate = univariate && (v == n);
    if (univariate && rho.degree(n) >= 1) {
      UPoly rho_u = UPoly::from_mpoly(rho, n);
      Rat lo = Rat(delta_max) - Rat(1, 2);
      Rat hi = cauchy_root_bound(rho_u) + Rat(1);
      if (hi > lo)
        for (const Rat& r : rational_roots(rho_u, lo, hi))
          if (r.is_integer())
            fail(Errc::LeadingCoeffVanishes,
                 "indicial obstruction: leading coefficient vanishes at n = " +
                     r.pretty());
    }
  }

  int d = 0;
  for (const auto& [gap, c] : by_gap)
    if (gap > 0) d = std::gcd(d, gap);
  if (d == 0) d = 1;

  Recurrence rec;
  rec.step = d;
  rec.span = (delta_max - delta_min) / d;
  rec.index_var = n;
  rec.spectral_var = spectral_var;
  rec.first_valid = delta_max;
  rec.coeffs.assign(rec.span + 1, MPoly());
  for (auto& [gap, c] : by_gap) rec.coeffs[gap / d] = std::move(c);

  if (ansatz.scaling == SeriesAnsatz::Scaling::Factorial) {
    // a_n = P_n / n!; multiplying the constraint by (n - delta_max)! turns
    // every coefficient into a polynomial again (division is exact by the
    // indicial structure).
    for (int j = 0; j <= rec.span; ++j) {
      if (rec.coeffs[j].is_zero()) continue;
      int gap = j * d;
      for (int r = gap; r < delta_max; ++r)
        rec.coeffs[j] = rec.coeffs[j].divide_linear_exact(n, Rat(r));
      for (int r = delta_max; r < gap; ++r)
        rec.coeffs[j] *= (nv - MPoly(Rat(r)));
    }
    rec.first_valid = std::max(1, delta_max);
  }
  return rec;
}

std::pair<Recurrence, Recurrence> parity_decouple(const Recurrence& rec) {
  if (rec.span != 2 || rec.step != 2)
    fail(Errc::WrongShape, "parity decoupling needs a span-2, step-2 recurrence");
  MPoly nv = MPoly::var(rec.index_var);
  auto map_indices = [&](const MPoly& image) {
    Recurrence out;
    out.span = 2;
    out.step = 1;
    out.index_var = rec.index_var;
    out.spectral_var = rec.spectral_var;
    out.first_valid = 1;
    out.seed_negative_zero = rec.seed_negative_zero;
    for (const auto& c : rec.coeffs)
      out.coeffs.push_back(c.compose(rec.index_var, image));
    return out;
  };
  // Even sector: P_m = Q_{2m}; odd sector: P_m = Q_{2m+1} (top index).
  Recurrence even = map_indices(nv * Rat(2));
  Recurrence odd = map_indices(nv * Rat(2) + MPoly(Rat(1)));
  return {std::move(even), std::move(odd)};
}

MPoly exact_residual(const LinearOde& ode, const UPoly& f,
                     const std::map<std::string, Rat>& bindings) {
  // Every parameter except the independent variable must be bound.
  for (const auto& [k, c] : ode.terms)
    for (const auto& v : c.vars())
      if (v != ode.indep && !bindings.count(v))
        fail(Errc::UnboundParameter, "parameter '" + v + "' unbound in residual");

  std::vector<UPoly> derivs = {f};
  for (int k = 1; k <= ode.max_order(); ++k)
    derivs.push_back(derivs.back().derivative());

  MPoly acc;
  for (const auto& [k, c] : ode.terms) {
    if (c.is_zero()) continue;
    acc += c.substitute(bindings) * derivs[k].to_mpoly();
  }
  return acc;
}

std::string factored_coeff_str(const MPoly& p, const std::string& index_var,
                               const std::string& spectral_var) {
  if (p.is_zero()) return "0";
  MPoly rem = p;
  std::vector<MPoly> factors;
  bool spectral = !spectral_var.empty() && p.depends_on(spectral_var);

  // Candidate linear factors n + a*spec - r, found from the integer/rational
  // roots of the spec := 0 slice.
  bool progress = true;
  while (progress && rem.degree(index_var) >= 1) {
    progress = false;
    MPoly slice = spectral ? rem.substitute({{spectral_var, Rat(0)}}) : rem;
    if (slice.is_zero()) break;
    bool slice_univ = true;
    for (const auto& v : slice.vars()) slice_univ = slice_univ && (v == index_var);
    if (!slice_univ) break;
    UPoly slice_u = UPoly::from_mpoly(slice, index_var);
    if (slice_u.degree() < 1) break;
    Rat bound = cauchy_root_bound(slice_u) + Rat(1);
    for (const Rat& r : rational_roots(slice_u, -bound, bound)) {
      static const int kAlphas[] = {0, 1, -1, 2, -2};
      for (int a : kAlphas) {
        if (a != 0 && !spectral) continue;
        MPoly candidate_root = MPoly(r);
        if (a != 0) candidate_root -= MPoly::var(spectral_var) * Rat(a);
        if (!rem.compose(index_var, candidate_root).is_zero()) continue;
        // rem is divisible by (n + a*spec - r): divide by composing away.
        MPoly factor = MPoly::var(index_var) - candidate_root;
        // Synthetic division in n by a monic linear polynomial in n.
        auto parts = rem.collect(index_var);
        int dmax = parts.rbegin()->first;
        std::vector<MPoly> coef(dmax + 1);
        for (auto& [k, q] : parts) coef[k] = std::move(q);
        std::vector<MPoly> quot(dmax);
        quot[dmax - 1] = coef[dmax];
        for (int k = dmax - 1; k >= 1; --k)
          quot[k - 1] = coef[k] + quot[k] * candidate_root;
        MPoly check = coef[0] + quot[0] * candidate_root;
        if (!check.is_zero()) continue;  // leading coefficient not monic in n
        MPoly nv = MPoly::var(index_var);
        MPoly q;
        for (int k = dmax - 1; k >= 0; --k)
          q += quot[k] * nv.pow(static_cast<unsigned>(k));
        factors.push_back(factor);
        rem = q;
        progress = true;
        break;
      }
      if (progress) break;
    }
  }

  if (factors.empty()) return p.str();
  std::sort(factors.begin(), factors.end(), [](const MPoly& a, const MPoly& b) {
    return a.str() < b.str();
  });
  std::ostringstream os;
  bool first = true;
  if (!(rem.is_constant() && rem.constant_value() == Rat(1))) {
    os << (rem.is_constant() ? rem.str() : "(" + rem.str() + ")");
    first = false;
  }
  for (const auto& f : factors) {
    if (!first) os << "*";
    os << "(" << f.str() << ")";
    first = false;
  }
  return os.str();
}

}  // namespace qheun
