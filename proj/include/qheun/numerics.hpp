#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qheun/error.hpp"

namespace qheun {

// Uniform grid. Closed grids include both endpoints (h = (hi-lo)/(N-1));
// periodic grids exclude hi (h = (hi-lo)/N).
struct Grid {
  enum class Mode { Closed, Periodic };

  double lo = 0, hi = 1;
  int N = 16;
  Mode mode = Mode::Closed;

  static Grid closed(double lo, double hi, int N);
  static Grid periodic(double lo, double hi, int N);

  double h() const {
    return (hi - lo) / (mode == Mode::Closed ? N - 1 : N);
  }
  std::vector<double> points() const;
};

// Symmetric matrix in one of three storages.
struct SymMatrix {
  enum class Kind { Tridiagonal, CyclicTridiagonal, Dense };

  Kind kind = Kind::Tridiagonal;
  int n = 0;
  std::vector<double> diag;   // tridiagonal kinds
  std::vector<double> off;    // n-1 entries
  double corner = 0;          // cyclic kind: A[0][n-1] = A[n-1][0]
  std::vector<double> dense;  // row-major, dense kind

  static SymMatrix tridiagonal(std::vector<double> diag, std::vector<double> off);
  static SymMatrix cyclic_tridiagonal(std::vector<double> diag,
                                      std::vector<double> off, double corner);
  static SymMatrix dense_matrix(int n, std::vector<double> values);

  double at(int i, int j) const;
  double trace() const;
  std::vector<double> to_dense() const;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  // Metadata for artifact headers and refinement compatibility checks.
  double h = 0;
  int grid_points = 0;
  std::string boundary;
  std::string potential_tag;
};

enum class BoundaryCondition { Dirichlet, Periodic };

// Second-order central-difference Hamiltonian -d^2/dx^2 + V. Dirichlet uses
// the interior points of a closed grid (size N-2); periodic uses all N
// points with corner coupling.
SymMatrix build_hamiltonian(const std::function<double(double)>& V, const Grid& g,
                            BoundaryCondition bc,
                            const std::string& potential_tag = "");

// k smallest eigenvalues. Tridiagonal: Sturm-sequence bisection to 1e-10
// absolute. Cyclic/dense: cyclic Jacobi rotations, deterministic sweep
// order, off-diagonal Frobenius norm below 1e-12 of the trace scale.
Spectrum eig_sym(const SymMatrix& m, int k);

// Number of eigenvalues strictly below x (tridiagonal only; exact inertia count).
int count_eigenvalues_below(const SymMatrix& m, double x);

// Eigenvector of a tridiagonal matrix by inverse iteration at eigenvalue lam.
std::vector<double> tridiagonal_eigenvector(const SymMatrix& m, double lam);

// Strict sign changes, ignoring entries below 1e-8 of the max magnitude.
int node_count(const std::vector<double>& v);

// max_i |  -psi''(x_i) + V psi - E psi | / max|psi| over interior points,
// psi'' by the 5-point stencil.
double pointwise_residual(const std::function<double(double)>& psi, double energy,
                          const std::function<double(double)>& V, const Grid& g);

// Second-order Richardson extrapolation of two spectra at h and h/2.
Spectrum richardson_refine(const Spectrum& coarse, const Spectrum& fine);

// Convenience: build, solve, and fill the metadata in one call.
Spectrum solve_spectrum(const std::function<double(double)>& V, const Grid& g,
                        BoundaryCondition bc, int k,
                        const std::string& potential_tag = "");

}  // namespace qheun
