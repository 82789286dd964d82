#include "qheun/recurrence_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qheun {

namespace {

// Every free variable of the bound recurrence must be the index or the
// spectral variable.
void check_closed(const Recurrence& rec) {
  for (const auto& c : rec.coeffs)
    for (const auto& v : c.vars())
      if (v != rec.index_var && v != rec.spectral_var)
        fail(Errc::UnboundParameter, "parameter '" + v + "' left unbound");
}

UPoly coeff_at(const Recurrence& rec, int j, int n) {
  MPoly c = rec.coeffs.at(j).substitute({{rec.index_var, Rat(n)}});
  return UPoly::from_mpoly(c, rec.spectral_var);
}

}  // namespace

PolySequence generate_sequence(const Recurrence& rec,
                               const std::map<std::string, Rat>& bindings, int count,
                               const std::vector<UPoly>* custom_seed) {
  Recurrence r = rec.bind(bindings);
  check_closed(r);
  PolySequence seq;
  seq.spectral_var = r.spectral_var;
  if (custom_seed && !custom_seed->empty()) {
    seq.entries = *custom_seed;
  } else {
    seq.entries = {UPoly::constant(r.spectral_var, Rat(1))};
  }
  auto entry = [&](int i) -> UPoly {
    if (i >= 0) return seq.entries[i];
    if (!r.seed_negative_zero)
      fail(Errc::BadInput, "recurrence references P_" + std::to_string(i) +
                               " without the negative-index convention");
    return UPoly(r.spectral_var);
  };
  for (int n = static_cast<int>(seq.entries.size()); n <= count; ++n) {
    UPoly lead = coeff_at(r, 0, n);
    if (lead.degree() > 0)
      fail(Errc::LeadingZeroAt,
           "leading coefficient depends on the spectral variable at n = " +
               std::to_string(n));
    if (lead.is_zero())
      fail(Errc::LeadingZeroAt,
           "generation impossible past n = " + std::to_string(n) +
               ": leading coefficient vanishes");
    UPoly acc(r.spectral_var);
    for (int j = 1; j <= r.span; ++j)
      acc = acc + coeff_at(r, j, n) * entry(n - j * r.step);
    seq.entries.push_back(acc * (-lead.coeff(0).inv()));
  }
  return seq;
}

FavardReport favard_check(const Recurrence& rec, int range,
                          const std::map<std::string, Rat>& bindings) {
  if (rec.span != 2 || rec.step != 1)
    fail(Errc::WrongShape, "Favard check needs a span-2, step-1 recurrence");
  Recurrence r = rec.bind(bindings);
  check_closed(r);

  FavardReport report;
  report.checked_range = range;
  auto violate = [&](int n, const char* code, std::string detail) {
    report.violations.push_back({n, code, std::move(detail)});
  };

  for (int n = 1; n <= range; ++n) {
    UPoly lead = coeff_at(r, 0, n);
    if (lead.is_zero() || lead.degree() > 0) {
      violate(n, "LEAD_NOT_CONST",
              "leading coefficient is '" + lead.str() + "' at n = " + std::to_string(n));
      continue;
    }
    Rat inv = lead.coeff(0).inv();
    UPoly middle = coeff_at(r, 1, n) * (-inv);
    UPoly trailing = coeff_at(r, 2, n) * (-inv);

    if (middle.degree() > 1) {
      violate(n, "MIDDLE_NOT_DEG1",
              "middle coefficient has spectral degree " + std::to_string(middle.degree()) +
                  ": " + middle.str());
    } else if (middle.degree() < 1) {
      violate(n, "A_ZERO", "middle coefficient '" + middle.str() +
                               "' has no spectral part (A_n = 0)");
    }

    if (trailing.degree() > 0) {
      violate(n, "C_DEPENDS_ON_SPECTRAL",
              "trailing coefficient depends on the spectral variable: " + trailing.str());
    } else {
      Rat c = trailing.coeff(0);
      if (n == 1) {
        // Under the P_{-1} = 0 convention the n = 1 trailing coefficient is
        // immaterial; it only matters for a declared custom seed convention.
        if (!c.is_zero() && !r.seed_negative_zero)
          violate(1, "C1_NONZERO", "C_1 = " + c.pretty() + " with a non-defaulted seed");
      } else if (c.is_zero()) {
        violate(n, "C_ZERO", "C_" + std::to_string(n) + " = 0");
      }
    }
  }

  // Degree growth on the generated family.
  try {
    PolySequence seq = generate_sequence(r, {}, range);
    for (int n = 0; n < static_cast<int>(seq.entries.size()); ++n)
      if (seq.entries[n].degree() != n)
        violate(n, "DEG_GROWTH",
                "deg P_" + std::to_string(n) + " = " +
                    std::to_string(seq.entries[n].degree()));
  } catch (const Error& e) {
    // Leading-coefficient failures are already reported per index.
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const FavardViolation& a, const FavardViolation& b) {
              if (a.index != b.index) return a.index < b.index;
              return a.code < b.code;
            });
  report.pass = report.violations.empty();
  return report;
}

MomentFunctional moments_from_sequence(const PolySequence& seq) {
  if (seq.entries.empty()) fail(Errc::BadInput, "empty sequence");
  for (int n = 0; n < static_cast<int>(seq.entries.size()); ++n)
    if (seq.entries[n].degree() != n)
      fail(Errc::DegreeDefect,
           "deg P_" + std::to_string(n) + " = " +
               std::to_string(seq.entries[n].degree()) +
               ", triangular moment system unsolvable");
  MomentFunctional L;
  int N = static_cast<int>(seq.entries.size()) - 1;
  L.moments.resize(N + 1);
  L.moments[0] = seq.entries[0].coeff(0).inv();  // L[P_0] = 1
  for (int n = 1; n <= N; ++n) {
    Rat acc(0);
    for (int k = 0; k < n; ++k) acc += seq.entries[n].coeff(k) * L.moments[k];
    L.moments[n] = -acc / seq.entries[n].coeff(n);
  }
  return L;
}

MomentFunctional best_effort_moments(const PolySequence& seq, int max_degree,
                                     const std::map<int, Rat>& overrides) {
  if (seq.entries.empty()) fail(Errc::BadInput, "empty sequence");
  int K = max_degree;
  for (const auto& p : seq.entries) K = std::max(K, p.degree());
  int cols = K + 1;

  // Rows: [L[P_0] = 1], [L[P_n] = 0], and padding for unattained degrees.
  std::vector<std::vector<Rat>> rows;
  std::set<int> attained;
  for (int n = 0; n < static_cast<int>(seq.entries.size()); ++n) {
    const UPoly& p = seq.entries[n];
    if (p.degree() > K) continue;
    attained.insert(p.degree());
    std::vector<Rat> row(cols + 1, Rat(0));
    for (int k = 0; k <= p.degree(); ++k) row[k] = p.coeff(k);
    row[cols] = Rat(n == 0 ? 1 : 0);
    rows.push_back(std::move(row));
  }
  MomentFunctional L;
  L.overrides = overrides;
  for (int d = 0; d <= K; ++d) {
    if (attained.count(d)) continue;
    std::vector<Rat> row(cols + 1, Rat(0));
    row[d] = Rat(1);
    auto it = overrides.find(d);
    row[cols] = it == overrides.end() ? Rat(0) : it->second;
    rows.push_back(std::move(row));
    L.padded_degrees.push_back(d);
  }

  // Exact Gaussian elimination.
  int nrows = static_cast<int>(rows.size());
  int rank = 0;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int i = rank; i < nrows; ++i)
      if (!rows[i][col].is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat inv = rows[rank][col].inv();
    for (int j = col; j <= cols; ++j) rows[rank][j] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Rat f = rows[i][col];
      for (int j = col; j <= cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  for (int i = rank; i < nrows; ++i)
    if (!rows[i][cols].is_zero())
      fail(Errc::MomentSystemSingular, "moment conditions are inconsistent");
  if (rank < cols)
    fail(Errc::MomentSystemSingular, "moment system underdetermined (rank " +
                                         std::to_string(rank) + " of " +
                                         std::to_string(cols) + ")");

  L.moments.assign(cols, Rat(0));
  // Rows are in reduced echelon form: row r has pivot at some column.
  for (int i = 0; i < rank; ++i) {
    int col = -1;
    for (int j = 0; j < cols; ++j)
      if (!rows[i][j].is_zero()) { col = j; break; }
    if (col >= 0) L.moments[col] = rows[i][cols];
  }
  return L;
}

bool GramMatrix::is_diagonal() const {
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (i != j && !entries[i][j].is_zero()) return false;
  return true;
}

bool GramMatrix::diagonal_nonzero() const {
  for (int i = 0; i < size; ++i)
    if (entries[i][i].is_zero()) return false;
  return true;
}

GramMatrix gram_matrix(const PolySequence& seq, const MomentFunctional& L,
                       int size) {
  if (size > static_cast<int>(seq.entries.size()))
    fail(Errc::BadInput, "Gram size exceeds sequence length");
  GramMatrix G;
  G.size = size;
  G.entries.assign(size, std::vector<Rat>(size, Rat(0)));
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      UPoly prod = seq.entries[i] * seq.entries[j];
      if (prod.degree() >= static_cast<int>(L.moments.size()))
        fail(Errc::InsufficientMoments,
             "need moment m_" + std::to_string(prod.degree()) + ", have " +
                 std::to_string(L.moments.size()));
      Rat acc(0);
      for (int k = 0; k <= prod.degree(); ++k) acc += prod.coeff(k) * L.moments[k];
      G.entries[i][j] = acc;
      G.entries[j][i] = acc;
    }
  return G;
}

std::vector<Rat> TruncationResult::all_points() const {
  std::set<Rat> s;
  for (const auto& r : records) s.insert(r.qes_points.begin(), r.qes_points.end());
  return {s.begin(), s.end()};
}

TruncationResult truncation_scan(const Recurrence& rec,
                                 const std::map<std::string, Rat>& bindings,
                                 int m_max, const Rat& lo, const Rat& hi) {
  Recurrence r = rec.bind(bindings);
  if (r.span != 2 || r.step != 1)
    fail(Errc::WrongShape, "truncation scan needs a span-2, step-1 recurrence");
  check_closed(r);

  const Rat refine_width(1, 1000000000000L);  // 1e-12
  PolySequence seq = generate_sequence(r, {}, m_max + 2);

  TruncationResult result;
  for (int M = 1; M <= m_max; ++M) {
    const UPoly& pm = seq.entries[M];
    UPoly cpoly = coeff_at(r, 2, M + 1);
    if (pm.is_zero()) continue;  // already truncated upstream

    TruncationRecord record;
    record.M = M;
    if (cpoly.degree() >= 1)
      for (auto& iv : isolate_roots(cpoly, lo, hi))
        record.c_factor_roots.push_back(refine_root(cpoly, iv, refine_width));
    if (pm.degree() >= 1)
      for (auto& iv : isolate_roots(pm, lo, hi))
        record.p_roots.push_back(refine_root(pm, iv, refine_width));

    // Exact intersection of the two root sets.
    UPoly common = UPoly::gcd(cpoly, pm);
    if (common.degree() >= 1) {
      for (auto& iv : isolate_roots(common, lo, hi)) {
        RootInterval refined = refine_root(common, iv, refine_width);
        if (!refined.exact) {
          record.numeric_only.push_back(refined);
          continue;
        }
        // Verify by exact regeneration: everything past M must vanish.
        PolySequence num =
            generate_sequence(r, {{r.spectral_var, *refined.exact}}, m_max + 2);
        bool vanish = true;
        for (int k = M + 1; k < static_cast<int>(num.entries.size()); ++k)
          vanish = vanish && num.entries[k].is_zero();
        if (vanish) record.qes_points.push_back(*refined.exact);
      }
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

Rat energy_from_s(const Rat& s, const Rat& mu2) {
  return mu2 * (Rat(1) - s * s);
}

double energy_from_s(double s, double mu) { return mu * mu * (1.0 - s * s); }

double s_from_energy(double energy, double mu) {
  double mu2 = mu * mu;
  if (energy > mu2)
    fail(Errc::SImaginary, "s(E) undefined for E > mu^2 (E = " +
                               std::to_string(energy) + ")");
  return std::sqrt(1.0 - energy / mu2);
}

}  // namespace qheun
