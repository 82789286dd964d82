#include "qheun/upoly.hpp"

#include <algorithm>

namespace qheun {

UPoly::UPoly(std::string var, std::vector<Rat> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::constant(std::string var, const Rat& c) {
  return UPoly(std::move(var), {c});
}

UPoly UPoly::monomial(std::string var, int deg, const Rat& c) {
  std::vector<Rat> cs(deg + 1, Rat(0));
  cs[deg] = c;
  return UPoly(std::move(var), std::move(cs));
}

UPoly UPoly::from_mpoly(const MPoly& p, const std::string& var) {
  for (const auto& v : p.vars())
    if (v != var)
      fail(Errc::UnboundParameter,
           "polynomial depends on '" + v + "', expected univariate in '" + var + "'");
  std::vector<Rat> cs(p.degree(var) + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    int k = e.empty() ? 0 : e[0];
    cs[k] = c;
  }
  return UPoly(var, std::move(cs));
}

MPoly UPoly::to_mpoly() const {
  MPoly r;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero())
      r += MPoly::var(var_, static_cast<int>(k)) * coeffs_[k];
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r(a.var_.empty() ? b.var_ : a.var_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r(a.var_.empty() ? b.var_ : a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

UPoly UPoly::operator*(const Rat& c) const {
  UPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::eval(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->to_double();
  return acc;
}

UPoly UPoly::derivative() const {
  UPoly r(var_);
  if (degree() < 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    r.coeffs_[k - 1] = coeffs_[k] * Rat(static_cast<long>(k));
  r.trim();
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

UPoly UPoly::divmod(const UPoly& d, UPoly* rem) const {
  if (d.is_zero()) fail(Errc::BadInput, "polynomial division by zero");
  UPoly q(var_), r = *this;
  if (degree() >= d.degree()) {
    q.coeffs_.assign(degree() - d.degree() + 1, Rat(0));
    Rat lead_inv = d.leading().inv();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      Rat c = r.coeff(k + d.degree()) * lead_inv;
      if (c.is_zero()) continue;
      q.coeffs_[k] = c;
      for (int j = 0; j <= d.degree(); ++j) r.coeffs_[k + j] -= c * d.coeffs_[j];
    }
    q.trim();
    r.trim();
  }
  if (rem) *rem = r;
  return q;
}

UPoly UPoly::mod(const UPoly& d) const {
  UPoly r;
  divmod(d, &r);
  return r;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> UPoly::squarefree_decomposition() const {
  // Yun's algorithm over a field of characteristic 0.
  std::vector<UPoly> out;
  if (degree() < 1) return out;
  UPoly f = monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f.divmod(a);
  UPoly c = fp.divmod(a);
  UPoly d = c - b.derivative();
  while (b.degree() >= 1) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = b.divmod(g);
    c = d.divmod(g);
    d = c - b.derivative();
  }
  return out;
}

UPoly UPoly::squarefree_part() const {
  if (degree() < 1) return monic();
  UPoly g = gcd(*this, derivative());
  return this->divmod(g).monic();
}

}  // namespace qheun
