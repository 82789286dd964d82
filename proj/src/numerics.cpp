#include "qheun/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qheun {

static void check_grid(double lo, double hi, int N) {
  if (!(hi > lo)) fail(Errc::BadInput, "grid needs hi > lo");
  if (N < 16) fail(Errc::BadInput, "grid needs at least 16 points");
}

Grid Grid::closed(double lo, double hi, int N) {
  check_grid(lo, hi, N);
  return {lo, hi, N, Mode::Closed};
}

Grid Grid::periodic(double lo, double hi, int N) {
  check_grid(lo, hi, N);
  return {lo, hi, N, Mode::Periodic};
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(N);
  double step = h();
  for (int i = 0; i < N; ++i) xs[i] = lo + step * i;
  return xs;
}

SymMatrix SymMatrix::tridiagonal(std::vector<double> diag, std::vector<double> off) {
  if (off.size() + 1 != diag.size()) fail(Errc::BadInput, "tridiagonal size mismatch");
  SymMatrix m;
  m.kind = Kind::Tridiagonal;
  m.n = static_cast<int>(diag.size());
  m.diag = std::move(diag);
  m.off = std::move(off);
  return m;
}

SymMatrix SymMatrix::cyclic_tridiagonal(std::vector<double> diag,
                                        std::vector<double> off, double corner) {
  SymMatrix m = tridiagonal(std::move(diag), std::move(off));
  m.kind = Kind::CyclicTridiagonal;
  m.corner = corner;
  return m;
}

SymMatrix SymMatrix::dense_matrix(int n, std::vector<double> values) {
  if (static_cast<int>(values.size()) != n * n)
    fail(Errc::BadInput, "dense size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (values[i * n + j] != values[j * n + i])
        fail(Errc::BadInput, "dense matrix is not symmetric");
  SymMatrix m;
  m.kind = Kind::Dense;
  m.n = n;
  m.dense = std::move(values);
  return m;
}

double SymMatrix::at(int i, int j) const {
  if (kind == Kind::Dense) return dense[i * n + j];
  if (i == j) return diag[i];
  if (std::abs(i - j) == 1) return off[std::min(i, j)];
  if (kind == Kind::CyclicTridiagonal && std::abs(i - j) == n - 1) return corner;
  return 0.0;
}

double SymMatrix::trace() const {
  double t = 0;
  if (kind == Kind::Dense)
    for (int i = 0; i < n; ++i) t += dense[i * n + i];
  else
    for (double d : diag) t += d;
  return t;
}

std::vector<double> SymMatrix::to_dense() const {
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = at(i, j);
  return a;
}

SymMatrix build_hamiltonian(const std::function<double(double)>& V, const Grid& g,
                            BoundaryCondition bc, const std::string& tag) {
  double h = g.h();
  double inv_h2 = 1.0 / (h * h);
  auto sample = [&](double x) {
    double v = V(x);
    if (!std::isfinite(v))
      fail(Errc::NonfinitePotential,
           "potential not finite at x = " + std::to_string(x) +
               (tag.empty() ? "" : " (" + tag + ")"));
    return v;
  };
  if (bc == BoundaryCondition::Dirichlet) {
    if (g.mode != Grid::Mode::Closed)
      fail(Errc::BadInput, "Dirichlet needs a closed grid");
    int size = g.N - 2;
    std::vector<double> diag(size), off(size - 1, -inv_h2);
    for (int i = 0; i < size; ++i) diag[i] = 2.0 * inv_h2 + sample(g.lo + h * (i + 1));
    return SymMatrix::tridiagonal(std::move(diag), std::move(off));
  }
  if (g.mode != Grid::Mode::Periodic)
    fail(Errc::BadInput, "periodic BC needs a periodic grid");
  std::vector<double> diag(g.N), off(g.N - 1, -inv_h2);
  for (int i = 0; i < g.N; ++i) diag[i] = 2.0 * inv_h2 + sample(g.lo + h * i);
  return SymMatrix::cyclic_tridiagonal(std::move(diag), std::move(off), -inv_h2);
}

// --- tridiagonal path: inertia counts + bisection -----------------------

static int tri_count_below(const std::vector<double>& diag,
                           const std::vector<double>& off, double x) {
  int count = 0;
  double d = 1.0;
  for (size_t i = 0; i < diag.size(); ++i) {
    double off2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - x - (i == 0 ? 0.0 : off2 / d);
    if (d == 0.0) d = -std::numeric_limits<double>::min();
    if (d < 0) ++count;
  }
  return count;
}

int count_eigenvalues_below(const SymMatrix& m, double x) {
  if (m.kind != SymMatrix::Kind::Tridiagonal)
    fail(Errc::BadInput, "inertia counts need a tridiagonal matrix");
  return tri_count_below(m.diag, m.off, x);
}

static std::vector<double> tri_smallest(const std::vector<double>& diag,
                                        const std::vector<double>& off, int k) {
  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (size_t i = 0; i < diag.size(); ++i) {
    double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
               (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double tol = 1e-10;
  std::vector<double> out(k);
  for (int idx = 0; idx < k; ++idx) {
    double a = lo, b = hi;
    while (b - a > tol) {
      double mid = 0.5 * (a + b);
      if (tri_count_below(diag, off, mid) > idx) b = mid;
      else a = mid;
    }
    out[idx] = 0.5 * (a + b);
  }
  return out;
}

// --- dense path: cyclic Jacobi ------------------------------------------

static std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto off_norm = [&]() {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return std::sqrt(2.0 * s);
  };
  double scale = 0;
  for (int i = 0; i < n; ++i) scale += std::abs(a[i * n + i]);
  scale = std::max(scale, 1.0);
  const double target = 1e-12 * scale;
  const int max_sweeps = 60;

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    if (off_norm() < target) {
      std::vector<double> ev(n);
      for (int i = 0; i < n; ++i) ev[i] = a[i * n + i];
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (apq == 0.0) continue;
        double app = a[p * n + p], aqq = a[q * n + q];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a[i * n + p], aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a[p * n + i], aqi = a[q * n + i];
          a[p * n + i] = c * api - s * aqi;
          a[q * n + i] = s * api + c * aqi;
        }
      }
  }
  fail(Errc::NoConvergence, "Jacobi sweeps exceeded the iteration cap");
}

Spectrum eig_sym(const SymMatrix& m, int k) {
  if (k < 1 || k > m.n) fail(Errc::BadInput, "need 1 <= k <= matrix size");
  Spectrum sp;
  if (m.kind == SymMatrix::Kind::Tridiagonal) {
    sp.eigenvalues = tri_smallest(m.diag, m.off, k);
  } else {
    std::vector<double> all = jacobi_eigenvalues(m.to_dense(), m.n);
    sp.eigenvalues.assign(all.begin(), all.begin() + k);
  }
  sp.grid_points = m.n;
  return sp;
}

std::vector<double> tridiagonal_eigenvector(const SymMatrix& m, double lam) {
  if (m.kind != SymMatrix::Kind::Tridiagonal)
    fail(Errc::BadInput, "inverse iteration needs a tridiagonal matrix");
  int n = m.n;
  // Keep the shift slightly off the eigenvalue so the solve stays regular.
  double shift = lam + 1e-9 * std::max(1.0, std::abs(lam));
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int iter = 0; iter < 4; ++iter) {
    // Thomas solve of (T - shift I) w = v, with a tiny-pivot guard.
    std::vector<double> c(n), d(n);
    double b0 = m.diag[0] - shift;
    if (std::abs(b0) < 1e-300) b0 = 1e-300;
    c[0] = n > 1 ? m.off[0] / b0 : 0.0;
    d[0] = v[0] / b0;
    for (int i = 1; i < n; ++i) {
      double denom = m.diag[i] - shift - m.off[i - 1] * c[i - 1];
      if (std::abs(denom) < 1e-300) denom = 1e-300;
      if (i < n - 1) c[i] = m.off[i] / denom;
      d[i] = (v[i] - m.off[i - 1] * d[i - 1]) / denom;
    }
    std::vector<double> w(n);
    w[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) w[i] = d[i] - c[i] * w[i + 1];
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  return v;
}

int node_count(const std::vector<double>& v) {
  double vmax = 0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  double tol = 1e-8 * vmax;
  int nodes = 0, prev = 0;
  for (double x : v) {
    if (std::abs(x) <= tol) continue;
    int s = x > 0 ? 1 : -1;
    if (prev != 0 && s != prev) ++nodes;
    prev = s;
  }
  return nodes;
}

double pointwise_residual(const std::function<double(double)>& psi, double energy,
                          const std::function<double(double)>& V, const Grid& g) {
  double h = g.h();
  std::vector<double> xs = g.points();
  std::vector<double> ps(xs.size());
  double pmax = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    ps[i] = psi(xs[i]);
    pmax = std::max(pmax, std::abs(ps[i]));
  }
  if (!(pmax > 1e-150)) fail(Errc::DegeneratePsi, "psi vanishes on the grid");
  double worst = 0;
  for (size_t i = 2; i + 2 < xs.size(); ++i) {
    double lap = (-ps[i + 2] + 16 * ps[i + 1] - 30 * ps[i] + 16 * ps[i - 1] -
                  ps[i - 2]) /
                 (12 * h * h);
    double r = -lap + (V(xs[i]) - energy) * ps[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst / pmax;
}

Spectrum solve_spectrum(const std::function<double(double)>& V, const Grid& g,
                        BoundaryCondition bc, int k, const std::string& tag) {
  SymMatrix H = build_hamiltonian(V, g, bc, tag);
  Spectrum sp = eig_sym(H, k);
  sp.h = g.h();
  sp.grid_points = g.N;
  sp.boundary = bc == BoundaryCondition::Dirichlet ? "dirichlet" : "periodic";
  sp.potential_tag = tag;
  return sp;
}

Spectrum richardson_refine(const Spectrum& coarse, const Spectrum& fine) {
  if (coarse.eigenvalues.size() != fine.eigenvalues.size())
    fail(Errc::MismatchedProblems, "spectra have different k");
  if (coarse.boundary != fine.boundary || coarse.potential_tag != fine.potential_tag)
    fail(Errc::MismatchedProblems, "spectra come from different problems");
  if (coarse.h > 0 && std::abs(fine.h - coarse.h / 2) > 1e-9 * coarse.h)
    fail(Errc::MismatchedProblems, "fine spacing is not half the coarse spacing");
  Spectrum out = fine;
  for (size_t i = 0; i < out.eigenvalues.size(); ++i)
    out.eigenvalues[i] = (4.0 * fine.eigenvalues[i] - coarse.eigenvalues[i]) / 3.0;
  return out;
}

}  // namespace qheun
