#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qheun/rational.hpp"

namespace qheun {

// Process-wide interned variable names. Interning keeps variable identity
// cheap and catches typos early; canonical ordering is by name so that
// serialized forms are deterministic across runs.
class VarTable {
 public:
  static const std::string& intern(const std::string& name);
};

// Sparse multivariate polynomial over Rat. Invariants: the variable list is
// sorted by name and minimal (every listed variable occurs in some term),
// exponent vectors have length |vars|, no stored zero coefficient, and the
// term map is ordered lexicographically -- the canonical form.
class MPoly {
 public:
  using Exps = std::vector<int>;

  MPoly() = default;
  MPoly(const Rat& c);   // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(Rat(c)) {}
  static MPoly var(const std::string& name, int exp = 1);
  static MPoly constant(const Rat& c) { return MPoly(c); }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value when constant (zero polynomial -> 0); error otherwise.
  Rat constant_value() const;

  bool depends_on(const std::string& v) const;
  int degree(const std::string& v) const;   // -1 convention not used; zero poly -> 0
  int total_degree() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
  MPoly& operator*=(const Rat& c);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned k) const;

  // Partial evaluation; unknown names in the map are ignored.
  MPoly substitute(const std::map<std::string, Rat>& bindings) const;
  // Substitutes v := g (polynomial composition in one variable).
  MPoly compose(const std::string& v, const MPoly& g) const;
  // Coefficient of v^k, as a polynomial without v.
  MPoly coeff_of(const std::string& v, int k) const;
  // All coefficients by power of v (missing powers absent).
  std::map<int, MPoly> collect(const std::string& v) const;

  // Exact division by (v - c); errors if the remainder is nonzero.
  MPoly divide_linear_exact(const std::string& v, const Rat& c) const;
  // Exact division by v^k; errors if any term has exponent < k.
  MPoly divide_power_exact(const std::string& v, int k) const;

  // Full evaluation; every variable must be bound.
  Rat eval(const std::map<std::string, Rat>& bindings) const;

  std::string str() const;

  // Falling factorial (x)(x-1)...(x-k+1) of an arbitrary polynomial x.
  static MPoly falling(const MPoly& x, int k);

 private:
  void insert_term(Exps e, Rat c);
  void canonicalize();
  static void align(MPoly& a, MPoly& b);

  std::vector<std::string> vars_;
  std::map<Exps, Rat> terms_;
};

}  // namespace qheun
