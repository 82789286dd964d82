#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qheun/mpoly.hpp"
#include "qheun/upoly.hpp"

namespace qheun {

// Linear ODE with polynomial coefficients,
//   sum_k  coeff_k(x, params) * f^(k)(x) = 0.
// Negative powers of x must be cleared by the caller before construction.
struct LinearOde {
  std::string indep;
  std::vector<std::pair<int, MPoly>> terms;  // (derivative order, coefficient)

  LinearOde(std::string indep_, std::vector<std::pair<int, MPoly>> terms_);
  int max_order() const;
  // Multiplies every coefficient by p.
  LinearOde scaled(const MPoly& p) const;
  std::string str() const;
};

// Power-series ansatz for the expansion around 0.
struct SeriesAnsatz {
  enum class Scaling {
    Plain,      // f = sum a_n x^n
    Factorial,  // f = sum P_n x^n / n!
  };
  Scaling scaling = Scaling::Factorial;
  std::string index_symbol = "n";
};

// Linear recurrence sum_j coeffs[j](n, ...) * P_{n - j*step} = 0, with j = 0
// the highest index. Entries with negative index are zero by convention
// unless seed_negative_zero is cleared.
struct Recurrence {
  int span = 0;
  int step = 1;
  std::vector<MPoly> coeffs;
  std::string index_var = "n";
  std::string spectral_var;
  int first_valid = 1;
  bool seed_negative_zero = true;

  const MPoly& coeff(int j) const { return coeffs.at(j); }
  // coeffs[j] with the index variable shifted n -> n + offset. Offset +step
  // recenters a span-2 recurrence on its middle index (the usual printed
  // convention).
  MPoly coeff_shifted(int j, int offset) const;

  // Substitutes parameter values into every coefficient.
  Recurrence bind(const std::map<std::string, Rat>& bindings) const;
  // Multiplies every coefficient by a nonzero rational.
  Recurrence scaled(const Rat& c) const;
  // Divides out the leading rational of coeffs[0] so that structurally equal
  // recurrences compare equal.
  Recurrence normalized() const;

  // Human-readable form, sign-normalized so the highest-index coefficient
  // has a positive leading rational; coefficients factored where possible.
  std::string display() const;
};

// Polynomial family P_0, P_1, ... in the spectral variable.
struct PolySequence {
  std::string spectral_var;
  std::vector<UPoly> entries;
};

// Derives the exact recurrence satisfied by the series coefficients of the
// ansatz substituted into the ODE. The expansion point 0 must be ordinary or
// regular-singular with indicial root 0.
Recurrence derive_recurrence(const LinearOde& ode, const SeriesAnsatz& ansatz,
                             const std::string& spectral_var);

// Splits a span-2 step-2 recurrence into its decoupled even and odd step-1
// sectors via the index substitutions n -> 2m and n -> 2m+1.
std::pair<Recurrence, Recurrence> parity_decouple(const Recurrence& rec);

// sum_k coeff_k * f^(k) with all parameters bound; the zero polynomial iff
// f solves the ODE exactly.
MPoly exact_residual(const LinearOde& ode, const UPoly& f,
                     const std::map<std::string, Rat>& bindings);

// Best-effort factorization of a recurrence coefficient for display:
// rational content times linear factors (n + a*spectral + b) times a
// residual bracket. Exact (the product reexpands to the input).
std::string factored_coeff_str(const MPoly& p, const std::string& index_var,
                               const std::string& spectral_var);

}  // namespace qheun
