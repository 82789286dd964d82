#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qheun/ode.hpp"
#include "qheun/roots.hpp"

namespace qheun {

// Verdict of the orthogonality normal-form check: after normalizing the
// leading coefficient to 1, the middle coefficient must be degree exactly 1
// in the spectral variable, the trailing coefficient spectral-free, zero at
// n = 1 (immaterial under the P_{-1} = 0 seed convention) and nonzero for
// n >= 2, and deg P_n = n on the generated family.
struct FavardViolation {
  int index;
  std::string code;  // LEAD_NOT_CONST, MIDDLE_NOT_DEG1, A_ZERO, C_DEPENDS_ON_SPECTRAL,
                     // C_ZERO, C1_NONZERO, DEG_GROWTH
  std::string detail;
};

struct FavardReport {
  bool pass = false;
  int checked_range = 0;
  std::vector<FavardViolation> violations;
};

// Formal linear functional given by its moments, m_0 = 1.
struct MomentFunctional {
  std::vector<Rat> moments;
  // Construction notes: degrees padded with L[x^d] = 0 (or an override), if any.
  std::vector<int> padded_degrees;
  std::map<int, Rat> overrides;
};

struct GramMatrix {
  int size = 0;
  std::vector<std::vector<Rat>> entries;  // entries[i][j] = L[P_i P_j]

  bool is_diagonal() const;
  bool diagonal_nonzero() const;
};

// One truncation-scan record: at spectral values where both P_M and the
// trailing coefficient of the n = M+1 instance vanish, every entry from
// M+1 on vanishes identically.
struct TruncationRecord {
  int M = 0;
  std::vector<RootInterval> c_factor_roots;  // roots of trailing coeff at index M+1
  std::vector<RootInterval> p_roots;         // real roots of P_M
  std::vector<Rat> qes_points;               // verified exact common rational points
  std::vector<RootInterval> numeric_only;    // certified common irrational roots
};

struct TruncationResult {
  std::vector<TruncationRecord> records;
  std::vector<Rat> all_points() const;
};

// Runs the recurrence forward from P_0 = 1 (or a recorded custom seed),
// clearing the leading coefficient exactly at each step.
PolySequence generate_sequence(const Recurrence& rec,
                               const std::map<std::string, Rat>& bindings, int count,
                               const std::vector<UPoly>* custom_seed = nullptr);

FavardReport favard_check(const Recurrence& rec, int range,
                          const std::map<std::string, Rat>& bindings = {});

// Unique moments from the triangular system L[P_0] = 1, L[P_n] = 0;
// requires deg P_n = n for every entry.
MomentFunctional moments_from_sequence(const PolySequence& seq);

// Degree-defective families: pads the system with L[x^d] = override_d
// (default 0) for every degree not attained by the family, then solves the
// full linear system exactly. `max_degree` extends the moment list.
MomentFunctional best_effort_moments(const PolySequence& seq, int max_degree,
                                     const std::map<int, Rat>& overrides = {});

GramMatrix gram_matrix(const PolySequence& seq, const MomentFunctional& L,
                       int size);

// Scans M = 1..M_max for quasi-exact truncation points of a span-2 step-1
// recurrence with all parameters bound except the spectral variable. Only
// candidates surviving exact regeneration are reported as qes_points.
TruncationResult truncation_scan(const Recurrence& rec,
                                 const std::map<std::string, Rat>& bindings,
                                 int m_max, const Rat& lo, const Rat& hi);

// E = mu^2 (1 - s^2) and its nonnegative-branch inverse.
Rat energy_from_s(const Rat& s, const Rat& mu2);
double energy_from_s(double s, double mu);
double s_from_energy(double energy, double mu);  // errors S_IMAGINARY if E > mu^2

}  // namespace qheun
