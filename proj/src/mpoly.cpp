#include "qheun/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace qheun {

const std::string& VarTable::intern(const std::string& name) {
  static std::mutex mu;
  static std::set<std::string> table;
  if (name.empty()) fail(Errc::BadInput, "empty variable name");
  std::lock_guard<std::mutex> lock(mu);
  return *table.insert(name).first;
}

MPoly::MPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Exps{}, c);
}

MPoly MPoly::var(const std::string& name, int exp) {
  VarTable::intern(name);
  MPoly p;
  if (exp < 0) fail(Errc::NotPolynomial, "negative exponent for " + name);
  if (exp == 0) return MPoly(Rat(1));
  p.vars_ = {name};
  p.terms_.emplace(Exps{exp}, Rat(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) fail(Errc::BadInput, "polynomial is not constant: " + str());
  return terms_.begin()->second;
}

bool MPoly::depends_on(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  return it != vars_.end();
}

int MPoly::degree(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t idx = it - vars_.begin();
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void MPoly::insert_term(Exps e, Rat c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  // Drop variables that no longer occur.
  std::vector<size_t> keep;
  for (size_t i = 0; i < vars_.size(); ++i) {
    bool used = false;
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) { used = true; break; }
    if (used) keep.push_back(i);
  }
  if (keep.size() == vars_.size()) return;
  std::vector<std::string> nv;
  for (size_t i : keep) nv.push_back(vars_[i]);
  std::map<Exps, Rat> nt;
  for (const auto& [e, c] : terms_) {
    Exps ne(keep.size());
    for (size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

void MPoly::align(MPoly& a, MPoly& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u));
  auto remap = [&u](MPoly& p) {
    std::vector<size_t> pos(p.vars_.size());
    for (size_t i = 0; i < p.vars_.size(); ++i)
      pos[i] = std::lower_bound(u.begin(), u.end(), p.vars_[i]) - u.begin();
    std::map<Exps, Rat> nt;
    for (const auto& [e, c] : p.terms_) {
      Exps ne(u.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
      nt.emplace(std::move(ne), c);
    }
    p.vars_ = u;
    p.terms_ = std::move(nt);
  };
  remap(a);
  remap(b);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  MPoly rhs = o;
  align(*this, rhs);
  for (auto& [e, c] : rhs.terms_) insert_term(e, c);
  canonicalize();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly x = a, y = b;
  MPoly::align(x, y);
  MPoly r;
  r.vars_ = x.vars_;
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      MPoly::Exps e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(std::move(e), ca * cb);
    }
  r.canonicalize();
  return r;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c.is_zero()) { *this = MPoly(); return *this; }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r(Rat(1)), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

MPoly MPoly::substitute(const std::map<std::string, Rat>& bindings) const {
  std::vector<std::optional<Rat>> bound(vars_.size());
  bool any = false;
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it != bindings.end()) { bound[i] = it->second; any = true; }
  }
  if (!any) return *this;
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    Exps ne = e;
    for (size_t i = 0; i < e.size(); ++i)
      if (bound[i] && e[i] > 0) {
        v *= bound[i]->pow(static_cast<unsigned>(e[i]));
        ne[i] = 0;
      }
    r.insert_term(std::move(ne), v);
  }
  r.canonicalize();
  return r;
}

MPoly MPoly::compose(const std::string& v, const MPoly& g) const {
  if (!depends_on(v)) return *this;
  auto parts = collect(v);
  MPoly r;
  int last = parts.rbegin()->first;
  // Horner from the highest power down.
  for (int k = last; k >= 0; --k) {
    r = r * g;
    auto it = parts.find(k);
    if (it != parts.end()) r += it->second;
  }
  return r;
}

MPoly MPoly::coeff_of(const std::string& v, int k) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return k == 0 ? *this : MPoly();
  size_t idx = it - vars_.begin();
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_)
    if (e[idx] == k) {
      Exps ne = e;
      ne[idx] = 0;
      r.insert_term(std::move(ne), c);
    }
  r.canonicalize();
  return r;
}

std::map<int, MPoly> MPoly::collect(const std::string& v) const {
  std::map<int, MPoly> out;
  int d = degree(v);
  for (int k = 0; k <= d; ++k) {
    MPoly c = coeff_of(v, k);
    if (!c.is_zero() || (k == 0 && is_zero())) out.emplace(k, std::move(c));
  }
  if (out.empty()) out.emplace(0, MPoly());
  return out;
}

MPoly MPoly::divide_linear_exact(const std::string& v, const Rat& c) const {
  auto parts = collect(v);
  int d = parts.rbegin()->first;
  if (d == 0) {
    if (is_zero()) return MPoly();
    fail(Errc::BadInput, "inexact division of " + str() + " by linear factor");
  }
  std::vector<MPoly> a(d + 1);
  for (auto& [k, p] : parts) a[k] = std::move(p);
  // Synthetic division by (v - c) with polynomial coefficients.
  std::vector<MPoly> q(d);
  q[d - 1] = a[d];
  for (int k = d - 1; k >= 1; --k) q[k - 1] = a[k] + q[k] * c;
  MPoly rem = a[0] + q[0] * c;
  if (!rem.is_zero())
    fail(Errc::BadInput, "inexact division of " + str() + " by (" + v + " - " +
                             c.pretty() + ")");
  MPoly r;
  MPoly vv = MPoly::var(v);
  for (int k = d - 1; k >= 0; --k) r += q[k] * vv.pow(static_cast<unsigned>(k));
  return r;
}

MPoly MPoly::divide_power_exact(const std::string& v, int k) const {
  if (k == 0 || is_zero()) return *this;
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end())
    fail(Errc::BadInput, "inexact division of " + str() + " by " + v + "^" +
                             std::to_string(k));
  size_t idx = it - vars_.begin();
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] < k)
      fail(Errc::BadInput, "inexact division of " + str() + " by " + v + "^" +
                               std::to_string(k));
    Exps ne = e;
    ne[idx] -= k;
    r.insert_term(std::move(ne), c);
  }
  r.canonicalize();
  return r;
}

Rat MPoly::eval(const std::map<std::string, Rat>& bindings) const {
  MPoly r = substitute(bindings);
  if (!r.is_constant())
    fail(Errc::UnboundParameter, "unbound variables in " + r.str());
  return r.constant_value();
}

MPoly MPoly::falling(const MPoly& x, int k) {
  MPoly r(Rat(1));
  for (int i = 0; i < k; ++i) r = r * (x - MPoly(Rat(i)));
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  // Display order: total degree descending, then reverse-lex on exponents.
  std::vector<std::pair<Exps, Rat>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int ta = 0, tb = 0;
    for (int x : a.first) ta += x;
    for (int x : b.first) tb += x;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rat a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << "*";
      mono << vars_[i];
      if (e[i] > 1) mono << "^" << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << a.pretty();
    } else if (a == Rat(1)) {
      os << mono.str();
    } else {
      os << a.pretty() << "*" << mono.str();
    }
  }
  return os.str();
}

}  // namespace qheun
