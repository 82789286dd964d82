#include "qheun/serialize.hpp"

#include <iomanip>

namespace qheun {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) fail(Errc::BadInput, "rational must be a \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    for (int x : e)
      if (x < 0) fail(Errc::NotPolynomial, "negative exponent");
    terms.push_back({{"e", e}, {"c", to_json(c)}});
  }
  return {{"vars", p.vars()}, {"terms", std::move(terms)}};
}

MPoly mpoly_from_json(const json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  MPoly p;
  for (const auto& t : j.at("terms")) {
    std::vector<int> e = t.at("e").get<std::vector<int>>();
    if (e.size() != vars.size()) fail(Errc::BadInput, "exponent arity mismatch");
    MPoly mono(rat_from_json(t.at("c")));
    for (size_t i = 0; i < vars.size(); ++i) {
      if (e[i] < 0) fail(Errc::NotPolynomial, "negative exponent in term");
      if (e[i] > 0) mono *= MPoly::var(vars[i], e[i]);
    }
    p += mono;
  }
  return p;
}

json to_json(const UPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"var", p.var()}, {"coeffs", std::move(coeffs)}};
}

UPoly upoly_from_json(const json& j) {
  std::vector<Rat> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(rat_from_json(c));
  return UPoly(j.at("var").get<std::string>(), std::move(cs));
}

json to_json(const LinearOde& ode) {
  json terms = json::array();
  for (const auto& [k, c] : ode.terms)
    terms.push_back({{"order", k}, {"coeff", to_json(c)}});
  return {{"indep", ode.indep}, {"terms", std::move(terms)}};
}

LinearOde ode_from_json(const json& j) {
  std::vector<std::pair<int, MPoly>> terms;
  for (const auto& t : j.at("terms"))
    terms.emplace_back(t.at("order").get<int>(), mpoly_from_json(t.at("coeff")));
  return LinearOde(j.at("indep").get<std::string>(), std::move(terms));
}

json to_json(const Recurrence& rec) {
  json coeffs = json::array();
  json display = json::array();
  for (const auto& c : rec.coeffs) {
    coeffs.push_back(to_json(c));
    display.push_back(factored_coeff_str(c, rec.index_var, rec.spectral_var));
  }
  return {{"span", rec.span},
          {"step", rec.step},
          {"index_var", rec.index_var},
          {"spectral_var", rec.spectral_var},
          {"first_valid", rec.first_valid},
          {"seed_negative_zero", rec.seed_negative_zero},
          {"coeffs", std::move(coeffs)},
          {"display", std::move(display)}};
}

Recurrence recurrence_from_json(const json& j) {
  Recurrence rec;
  rec.span = j.at("span").get<int>();
  rec.step = j.at("step").get<int>();
  rec.index_var = j.at("index_var").get<std::string>();
  rec.spectral_var = j.at("spectral_var").get<std::string>();
  rec.first_valid = j.at("first_valid").get<int>();
  rec.seed_negative_zero = j.value("seed_negative_zero", true);
  for (const auto& c : j.at("coeffs")) rec.coeffs.push_back(mpoly_from_json(c));
  if (static_cast<int>(rec.coeffs.size()) != rec.span + 1)
    fail(Errc::WrongShape, "recurrence needs span+1 coefficients");
  return rec;
}

json to_json(const PolySequence& seq) {
  json entries = json::array();
  for (const auto& p : seq.entries) entries.push_back(to_json(p));
  return {{"spectral_var", seq.spectral_var}, {"entries", std::move(entries)}};
}

PolySequence sequence_from_json(const json& j) {
  PolySequence seq;
  seq.spectral_var = j.at("spectral_var").get<std::string>();
  for (const auto& p : j.at("entries")) seq.entries.push_back(upoly_from_json(p));
  return seq;
}

json to_json(const RootInterval& iv) {
  json j = {{"lo", to_json(iv.lo)},
            {"hi", to_json(iv.hi)},
            {"multiplicity", iv.multiplicity},
            {"approx", iv.midpoint()}};
  if (iv.exact) j["exact"] = to_json(*iv.exact);
  return j;
}

json to_json(const FavardReport& report) {
  json v = json::array();
  for (const auto& x : report.violations)
    v.push_back({{"index", x.index}, {"code", x.code}, {"detail", x.detail}});
  return {{"pass", report.pass},
          {"checked_range", report.checked_range},
          {"violations", std::move(v)}};
}

json to_json(const MomentFunctional& L) {
  json m = json::array();
  for (const auto& x : L.moments) m.push_back(to_json(x));
  json ov = json::object();
  for (const auto& [d, v] : L.overrides) ov[std::to_string(d)] = to_json(v);
  return {{"moments", std::move(m)},
          {"padded_degrees", L.padded_degrees},
          {"overrides", std::move(ov)}};
}

json to_json(const GramMatrix& G) {
  json rows = json::array();
  for (const auto& row : G.entries) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return {{"size", G.size},
          {"entries", std::move(rows)},
          {"diagonal", G.is_diagonal()}};
}

json to_json(const TruncationResult& result) {
  json records = json::array();
  for (const auto& r : result.records) {
    json c = json::array(), p = json::array(), q = json::array(), n = json::array();
    for (const auto& iv : r.c_factor_roots) c.push_back(to_json(iv));
    for (const auto& iv : r.p_roots) p.push_back(to_json(iv));
    for (const auto& x : r.qes_points) q.push_back(to_json(x));
    for (const auto& iv : r.numeric_only) n.push_back(to_json(iv));
    records.push_back({{"M", r.M},
                       {"c_factor_roots", std::move(c)},
                       {"p_roots", std::move(p)},
                       {"qes_points", std::move(q)},
                       {"numeric_only", std::move(n)}});
  }
  json points = json::array();
  for (const auto& x : result.all_points()) points.push_back(to_json(x));
  return {{"records", std::move(records)}, {"qes_points", std::move(points)}};
}

json to_json(const Spectrum& sp) {
  return {{"eigenvalues", sp.eigenvalues},
          {"h", sp.h},
          {"grid_points", sp.grid_points},
          {"boundary", sp.boundary},
          {"potential", sp.potential_tag}};
}

json to_json(const QesState& st) {
  json q = json::array();
  for (const auto& x : st.q_coeffs) q.push_back(to_json(x));
  return {{"system", st.system},
          {"sector", st.sector},
          {"s", to_json(st.s)},
          {"eps2", to_json(st.eps2)},
          {"energy_over_mu2", to_json(st.energy_over_mu2)},
          {"series", std::move(q)},
          {"description", st.description},
          {"verified", st.verified}};
}

void write_sequence_csv(std::ostream& os, const PolySequence& seq) {
  int max_deg = 0;
  for (const auto& p : seq.entries) max_deg = std::max(max_deg, p.degree());
  os << "n,degree";
  for (int k = 0; k <= max_deg; ++k) os << ",c" << k;
  os << "\n";
  for (size_t n = 0; n < seq.entries.size(); ++n) {
    const UPoly& p = seq.entries[n];
    os << n << "," << p.degree();
    for (int k = 0; k <= max_deg; ++k) os << "," << p.coeff(k).str();
    os << "\n";
  }
}

void write_table_csv(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  for (size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << "\n";
  os << std::setprecision(17);
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
}

}  // namespace qheun
