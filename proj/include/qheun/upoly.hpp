#pragma once

#include <string>
#include <vector>

#include "qheun/mpoly.hpp"
#include "qheun/rational.hpp"

namespace qheun {

// Dense univariate polynomial over Rat, coefficients from degree 0 upward.
// The zero polynomial has an empty coefficient list; otherwise the leading
// coefficient is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::string var) : var_(std::move(var)) {}
  UPoly(std::string var, std::vector<Rat> coeffs);

  static UPoly constant(std::string var, const Rat& c);
  static UPoly monomial(std::string var, int deg, const Rat& c = Rat(1));
  // Conversion from an MPoly that depends on no variable except `var`.
  static UPoly from_mpoly(const MPoly& p, const std::string& var);

  const std::string& var() const { return var_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Rat(0);
  }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator*(const Rat& c) const;
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.coeffs_ == b.coeffs_;  // variable name is advisory
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  Rat eval(const Rat& x) const;
  double eval(double x) const;
  UPoly derivative() const;
  UPoly monic() const;

  // Euclidean division; returns quotient, stores remainder if requested.
  UPoly divmod(const UPoly& d, UPoly* rem = nullptr) const;
  UPoly mod(const UPoly& d) const;
  static UPoly gcd(UPoly a, UPoly b);  // monic gcd

  // Square-free decomposition (Yun): result[i] has multiplicity i+1.
  std::vector<UPoly> squarefree_decomposition() const;
  UPoly squarefree_part() const;

  MPoly to_mpoly() const;
  std::string str() const { return to_mpoly().str(); }

 private:
  void trim();
  std::string var_ = "x";
  std::vector<Rat> coeffs_;
};

}  // namespace qheun
