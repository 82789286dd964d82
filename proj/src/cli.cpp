#include "qheun/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qheun/serialize.hpp"

namespace qheun {

namespace {

struct Common {
  std::string out = "-";
  std::string format = "json";
  bool stamp = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("-o,--out", c.out, "output path ('-' = stdout)");
  if (with_format)
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--stamp", c.stamp, "include a timestamp in the header (opt-in)");
}

// Atomic emission: temp file + rename, so partially written artifacts
// never appear under the final name.
void emit(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) fail(Errc::BadInput, "cannot open output path " + path);
    os << payload;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(Errc::BadInput, "cannot move output into place at " + path);
}

json make_header(const std::string& command, const json& params, const Common& c) {
  json j = {{"command", command}, {"params", params}};
  if (c.stamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    j["stamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  return j;
}

void emit_json(const Common& c, json j) { emit(c.out, j.dump(2) + "\n"); }

// Eagerly-parsed rational flag; malformed text is a usage error.
struct RatFlag {
  std::string text;
  Rat value() const { return Rat::parse(text); }
};

struct ModelArgs {
  RatFlag eps2{"1/2"};
  RatFlag a{"2"}, b{"1"}, c{"0"};

  void add_kink(CLI::App* cmd) {
    cmd->add_option("--eps2", eps2.text, "epsilon^2 as p/q (default 1/2)");
  }
  void add_bhaduri(CLI::App* cmd) {
    cmd->add_option("--a", a.text, "Bhaduri a as p/q (default 2)");
    cmd->add_option("--b", b.text, "Bhaduri b as p/q (default 1)");
    cmd->add_option("--c", c.text, "Bhaduri c as p/q (default 0)");
  }
  BhaduriParams bhaduri() const {
    return BhaduriParams::from_abc(a.value(), b.value(), c.value());
  }
};

// Families usable by favard/sequence/gram/truncate.
Recurrence model_recurrence(const std::string& model, const ModelArgs& args) {
  std::map<std::string, Rat> e2 = {{"eps2", args.eps2.value()}};
  if (model == "kink-even") return derived_kink_sectors(args.eps2.value()).first;
  if (model == "kink-odd") return derived_kink_sectors(args.eps2.value()).second;
  if (model == "kink-even-printed") return printed_kink_even_recurrence().bind(e2);
  if (model == "kink-odd-printed") return printed_kink_odd_recurrence().bind(e2);
  if (model == "bhaduri") return derived_bhaduri_recurrence(args.bhaduri());
  if (model == "bhaduri-printed") {
    const BhaduriParams p = args.bhaduri();
    return printed_bhaduri_recurrence().bind(
        {{"a", p.a}, {"b", p.b}, {"c", p.c}});
  }
  if (model == "hermite") {
    // Monic Hermite control: p_n = x p_{n-1} - ((n-1)/2) p_{n-2}.
    Recurrence rec;
    rec.span = 2;
    rec.step = 1;
    rec.index_var = "n";
    rec.spectral_var = "x";
    rec.coeffs = {MPoly(Rat(1)), -MPoly::var("x"),
                  (MPoly::var("n") - MPoly(Rat(1))) * Rat(1, 2)};
    return rec;
  }
  if (model == "chebyshev") {
    // Chebyshev-like control: p_n = x p_{n-1} - (1/4) p_{n-2}.
    Recurrence rec;
    rec.span = 2;
    rec.step = 1;
    rec.index_var = "n";
    rec.spectral_var = "x";
    rec.coeffs = {MPoly(Rat(1)), -MPoly::var("x"), MPoly(Rat(1, 4))};
    return rec;
  }
  fail(Errc::BadInput, "unknown model '" + model + "'");
}

json model_params_json(const std::string& model, const ModelArgs& args) {
  json p = {{"model", model}};
  if (model.rfind("kink", 0) == 0) p["eps2"] = args.eps2.value().str();
  if (model.rfind("bhaduri", 0) == 0) {
    p["a"] = args.a.value().str();
    p["b"] = args.b.value().str();
    p["c"] = args.c.value().str();
  }
  return p;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"symbolic-numeric workbench for quasi-exactly-solvable Heun-type spectra"};
  app.require_subcommand(1);

  // ---- derive ----------------------------------------------------------
  auto* derive = app.add_subcommand("derive", "derive a series recurrence from a model ODE");
  std::string derive_model = "kink-t";
  std::string spectral = "";
  std::string scaling = "factorial";
  std::string s_text = "";
  Common derive_common;
  ModelArgs derive_args;
  derive->add_option("--model", derive_model, "kink-t | kink-heun-y | bhaduri")
      ->check(CLI::IsMember({"kink-t", "kink-heun-y", "bhaduri"}));
  derive->add_option("--spectral", spectral, "spectral variable (default s / beta)");
  derive->add_option("--scaling", scaling, "series scaling")
      ->check(CLI::IsMember({"factorial", "plain"}));
  derive->add_option("--s", s_text, "bind s to p/q (kink models)");
  derive_args.add_kink(derive);
  derive_args.add_bhaduri(derive);
  add_common(derive, derive_common, false);

  // ---- favard ----------------------------------------------------------
  auto* favard = app.add_subcommand("favard", "orthogonality normal-form check");
  std::string favard_model = "kink-odd";
  int favard_range = 40;
  Common favard_common;
  ModelArgs favard_args;
  favard->add_option("--model", favard_model,
                     "kink-even|kink-odd|kink-even-printed|kink-odd-printed|"
                     "bhaduri|bhaduri-printed|hermite|chebyshev");
  favard->add_option("-N,--range", favard_range, "indices to check");
  favard_args.add_kink(favard);
  favard_args.add_bhaduri(favard);
  add_common(favard, favard_common, false);

  // ---- sequence --------------------------------------------------------
  auto* sequence = app.add_subcommand("sequence", "generate the polynomial family");
  std::string seq_model = "kink-odd";
  int seq_count = 10;
  Common seq_common;
  ModelArgs seq_args;
  sequence->add_option("--model", seq_model, "same models as favard");
  sequence->add_option("-N,--count", seq_count, "highest index to generate");
  seq_args.add_kink(sequence);
  seq_args.add_bhaduri(sequence);
  add_common(sequence, seq_common);

  // ---- gram ------------------------------------------------------------
  auto* gram = app.add_subcommand("gram", "moment functional and Gram matrix");
  std::string gram_model = "hermite";
  int gram_size = 8;
  std::vector<std::string> gram_overrides;
  Common gram_common;
  ModelArgs gram_args;
  gram->add_option("--model", gram_model, "same models as favard");
  gram->add_option("--size", gram_size, "Gram matrix size");
  gram->add_option("--override", gram_overrides,
                   "moment override d=p/q for padded degrees (repeatable)");
  gram_args.add_kink(gram);
  gram_args.add_bhaduri(gram);
  add_common(gram, gram_common, false);

  // ---- truncate --------------------------------------------------------
  auto* truncate = app.add_subcommand("truncate", "scan for QES truncation points");
  std::string trunc_model = "kink-odd";
  int trunc_mmax = 10;
  RatFlag trunc_lo{"0"}, trunc_hi{"2"};
  Common trunc_common;
  ModelArgs trunc_args;
  truncate->add_option("--model", trunc_model, "same models as favard");
  truncate->add_option("--mmax", trunc_mmax, "largest truncation index scanned");
  truncate->add_option("--lo", trunc_lo.text, "search interval lower end (p/q)");
  truncate->add_option("--hi", trunc_hi.text, "search interval upper end (p/q)");
  trunc_args.add_kink(truncate);
  trunc_args.add_bhaduri(truncate);
  add_common(truncate, trunc_common, false);

  // ---- spectrum --------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "finite-difference spectra");
  std::string pot = "kink";
  double mu = 1.0;
  double length = 25.0;
  double beta = 1.0;
  int periods = 2;
  int grid_n = 4000;
  int want_k = 5;
  std::string bc = "dirichlet";
  bool richardson = false;
  bool nodes = false;
  Common spec_common;
  ModelArgs spec_args;
  spectrum->add_option("--potential", pot, "kink | periodic | box | radial")
      ->check(CLI::IsMember({"kink", "periodic", "box", "radial"}));
  spectrum->add_option("--mu", mu, "mu scale");
  spectrum->add_option("--L", length, "half-width (kink), box length, or R_max (radial)");
  spectrum->add_option("--beta", beta, "radial beta (radial potential)");
  spectrum->add_option("--periods", periods, "periods of 2 pi/mu covered (periodic)");
  spectrum->add_option("-N,--points", grid_n, "grid point count");
  spectrum->add_option("-k", want_k, "number of eigenvalues");
  spectrum->add_option("--bc", bc, "boundary condition")
      ->check(CLI::IsMember({"dirichlet", "periodic"}));
  spectrum->add_flag("--richardson", richardson, "extrapolate with a doubled grid");
  spectrum->add_flag("--nodes", nodes, "report eigenvector node counts (tridiagonal)");
  spec_args.add_kink(spectrum);
  add_common(spectrum, spec_common);

  // ---- residual --------------------------------------------------------
  auto* residual = app.add_subcommand("residual", "pointwise Schrodinger residual of a QES state");
  std::string state_name = "kink-ground";
  double res_mu = 1.0;
  double res_lo = -12.0, res_hi = 12.0;
  int res_n = 24001;
  Common res_common;
  ModelArgs res_args;
  residual->add_option("--state", state_name,
                       "kink-ground | kink-second | periodic-ground | periodic-second")
      ->check(CLI::IsMember(
          {"kink-ground", "kink-second", "periodic-ground", "periodic-second"}));
  residual->add_option("--mu", res_mu, "mu scale");
  residual->add_option("--lo", res_lo, "grid start");
  residual->add_option("--hi", res_hi, "grid end");
  residual->add_option("-N,--points", res_n, "grid point count");
  res_args.add_kink(residual);
  add_common(residual, res_common, false);

  // ---- antiiso-check ---------------------------------------------------
  auto* antiiso = app.add_subcommand("antiiso-check",
                                     "V_periodic(theta) + V_kink(i theta) identity check");
  std::vector<std::string> anti_eps;
  int anti_points = 10000;
  double anti_mu = 1.0;
  Common anti_common;
  antiiso->add_option("--eps2", anti_eps, "eps2 values p/q (default 1/3 1/2 2)");
  antiiso->add_option("--points", anti_points, "theta grid points");
  antiiso->add_option("--mu", anti_mu, "mu scale");
  add_common(antiiso, anti_common, false);

  // ---- radial-check ----------------------------------------------------
  auto* radial = app.add_subcommand("radial-check",
                                    "radial FD spectra against E = 2 n_r + beta + 2");
  std::vector<double> radial_betas;
  int radial_nrmax = 1;
  double radial_rmax = 10.0;
  int radial_n = 2000;
  Common radial_common;
  radial->add_option("--beta", radial_betas, "beta values (default 1 2)");
  radial->add_option("--nr-max", radial_nrmax, "largest radial quantum number");
  radial->add_option("--rmax", radial_rmax, "domain cutoff R_max");
  radial->add_option("-N,--points", radial_n, "grid point count");
  add_common(radial, radial_common, false);

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // CLI11 prints; exit code nonzero on error
  }

  try {
    // Usage-level validation of rational flags happens before any work.
    try {
      for (ModelArgs* a : {&derive_args, &favard_args, &seq_args, &gram_args,
                           &trunc_args, &spec_args, &res_args}) {
        a->eps2.value();
        a->a.value();
        a->b.value();
        a->c.value();
      }
      trunc_lo.value();
      trunc_hi.value();
      if (!s_text.empty()) Rat::parse(s_text);
      for (const auto& t : anti_eps) Rat::parse(t);
      for (const auto& ov : gram_overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos)
          fail(Errc::BadInput, "override must be d=p/q, got '" + ov + "'");
        (void)std::stoi(ov.substr(0, eq));
        Rat::parse(ov.substr(eq + 1));
      }
    } catch (const Error& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    }

    if (*derive) {
      LinearOde ode = [&]() {
        std::optional<Rat> s_bind;
        if (!s_text.empty()) s_bind = Rat::parse(s_text);
        std::optional<Rat> e2_bind;  // symbolic eps2 unless the flag was given
        if (derive->count("--eps2") > 0) e2_bind = derive_args.eps2.value();
        if (derive_model == "kink-t") return build_kink_t_ode(s_bind, e2_bind);
        if (derive_model == "kink-heun-y") return kink_t_ode_via_heun(s_bind, e2_bind);
        return build_bhaduri_ode(derive_args.bhaduri());
      }();
      std::string spec_var = spectral.empty()
                                 ? (derive_model == "bhaduri" ? "beta" : "s")
                                 : spectral;
      SeriesAnsatz ansatz{scaling == "plain" ? SeriesAnsatz::Scaling::Plain
                                             : SeriesAnsatz::Scaling::Factorial,
                          "n"};
      Recurrence rec = derive_recurrence(ode, ansatz, spec_var);
      json params = model_params_json(derive_model, derive_args);
      params["scaling"] = scaling;
      params["spectral"] = spec_var;
      if (!s_text.empty()) params["s"] = Rat::parse(s_text).str();
      json out = make_header("derive", params, derive_common);
      out["ode"] = to_json(ode);
      out["recurrence"] = to_json(rec);
      out["display"] = rec.display();
      emit_json(derive_common, std::move(out));
      return 0;
    }

    if (*favard) {
      Recurrence rec = model_recurrence(favard_model, favard_args);
      FavardReport report = favard_check(rec, favard_range);
      json out = make_header("favard", model_params_json(favard_model, favard_args),
                             favard_common);
      out["params"]["range"] = favard_range;
      out["report"] = to_json(report);
      emit_json(favard_common, std::move(out));
      return 0;
    }

    if (*sequence) {
      Recurrence rec = model_recurrence(seq_model, seq_args);
      PolySequence seq = generate_sequence(rec, {}, seq_count);
      json params = model_params_json(seq_model, seq_args);
      params["count"] = seq_count;
      if (seq_common.format == "csv") {
        std::ostringstream os;
        write_sequence_csv(os, seq);
        emit(seq_common.out, os.str());
      } else {
        json out = make_header("sequence", params, seq_common);
        out["sequence"] = to_json(seq);
        emit_json(seq_common, std::move(out));
      }
      return 0;
    }

    if (*gram) {
      Recurrence rec = model_recurrence(gram_model, gram_args);
      PolySequence seq = generate_sequence(rec, {}, 2 * (gram_size - 1) + 1);
      std::map<int, Rat> overrides;
      for (const auto& ov : gram_overrides) {
        auto eq = ov.find('=');
        overrides[std::stoi(ov.substr(0, eq))] = Rat::parse(ov.substr(eq + 1));
      }
      MomentFunctional L;
      std::string construction;
      try {
        if (!overrides.empty()) fail(Errc::DegreeDefect, "overrides given");
        L = moments_from_sequence(seq);
        construction = "triangular";
      } catch (const Error&) {
        L = best_effort_moments(seq, 2 * (gram_size - 1), overrides);
        construction = "best-effort-padded";
      }
      GramMatrix G = gram_matrix(seq, L, gram_size);
      json params = model_params_json(gram_model, gram_args);
      params["size"] = gram_size;
      json out = make_header("gram", params, gram_common);
      out["moments"] = to_json(L);
      out["construction"] = construction;
      out["gram"] = to_json(G);
      emit_json(gram_common, std::move(out));
      return 0;
    }

    if (*truncate) {
      Recurrence rec = model_recurrence(trunc_model, trunc_args);
      TruncationResult result =
          truncation_scan(rec, {}, trunc_mmax, trunc_lo.value(), trunc_hi.value());
      json params = model_params_json(trunc_model, trunc_args);
      params["mmax"] = trunc_mmax;
      params["lo"] = trunc_lo.value().str();
      params["hi"] = trunc_hi.value().str();
      json out = make_header("truncate", params, trunc_common);
      out["result"] = to_json(result);
      // Kink models: map verified s-points to energies exactly.
      if (trunc_model.rfind("kink", 0) == 0) {
        json energies = json::array();
        for (const auto& s : result.all_points())
          energies.push_back(energy_from_s(s, Rat(1)).str());
        out["energies_over_mu2"] = std::move(energies);
      }
      emit_json(trunc_common, std::move(out));
      return 0;
    }

    if (*spectrum) {
      KinkParams kp(mu, spec_args.eps2.value());
      std::function<double(double)> V;
      Grid g = Grid::closed(0, 1, 16);
      BoundaryCondition bcond = bc == "periodic" ? BoundaryCondition::Periodic
                                                 : BoundaryCondition::Dirichlet;
      std::string tag = pot;
      if (pot == "kink") {
        V = [kp](double x) { return kink_potential(x, kp); };
        g = bcond == BoundaryCondition::Dirichlet
                ? Grid::closed(-length / mu, length / mu, grid_n)
                : Grid::periodic(-length / mu, length / mu, grid_n);
      } else if (pot == "periodic") {
        V = [kp](double th) { return periodic_potential(th, kp); };
        double span = periods * kTwoPi / mu;
        g = bcond == BoundaryCondition::Periodic ? Grid::periodic(0, span, grid_n)
                                                 : Grid::closed(0, span, grid_n);
      } else if (pot == "box") {
        V = [](double) { return 0.0; };
        g = bcond == BoundaryCondition::Dirichlet ? Grid::closed(0, length, grid_n)
                                                  : Grid::periodic(0, length, grid_n);
      } else {  // radial
        RadialProblem rp = bhaduri_radial_problem(beta);
        V = rp.potential;
        g = Grid::closed(0, length, grid_n);
        bcond = BoundaryCondition::Dirichlet;
        tag = "radial(beta=" + std::to_string(beta) + ")";
      }
      Spectrum sp = solve_spectrum(V, g, bcond, want_k, tag);
      json params = {{"potential", pot}, {"mu", mu},     {"L", length},
                     {"N", grid_n},      {"k", want_k},  {"bc", bc},
                     {"richardson", richardson}};
      if (pot == "kink" || pot == "periodic") params["eps2"] = spec_args.eps2.value().str();
      if (pot == "periodic") params["periods"] = periods;
      if (pot == "radial") params["beta"] = beta;
      json out = make_header("spectrum", params, spec_common);
      if (richardson) {
        Grid g2 = g.mode == Grid::Mode::Closed
                      ? Grid::closed(g.lo, g.hi, 2 * g.N - 1)
                      : Grid::periodic(g.lo, g.hi, 2 * g.N);
        Spectrum fine = solve_spectrum(V, g2, bcond, want_k, tag);
        Spectrum refined = richardson_refine(sp, fine);
        out["spectrum_coarse"] = to_json(sp);
        out["spectrum"] = to_json(refined);
        sp = refined;
      } else {
        out["spectrum"] = to_json(sp);
      }
      if (pot == "radial") {
        json energies = json::array();
        for (double ev : sp.eigenvalues) energies.push_back(ev / 2.0);
        out["energies"] = std::move(energies);  // operator eigenvalues are 2E
      }
      if (nodes && bcond == BoundaryCondition::Dirichlet && !richardson) {
        SymMatrix H = build_hamiltonian(V, g, bcond, tag);
        json counts = json::array();
        for (double ev : sp.eigenvalues)
          counts.push_back(node_count(tridiagonal_eigenvector(H, ev)));
        out["node_counts"] = std::move(counts);
      }
      if (spec_common.format == "csv") {
        std::ostringstream os;
        std::vector<std::vector<double>> rows;
        for (size_t i = 0; i < sp.eigenvalues.size(); ++i)
          rows.push_back({static_cast<double>(i), sp.eigenvalues[i]});
        write_table_csv(os, {"index", "eigenvalue"}, rows);
        emit(spec_common.out, os.str());
      } else {
        emit_json(spec_common, std::move(out));
      }
      return 0;
    }

    if (*residual) {
      KinkParams kp(res_mu, res_args.eps2.value());
      QesState st = [&]() {
        if (state_name == "kink-ground") return kink_ground_state(kp.eps2);
        if (state_name == "kink-second") return kink_second_excited_state();
        if (state_name == "periodic-ground") return periodic_ground_state();
        return periodic_second_excited_state();
      }();
      bool periodic_state = st.system == "kink-periodic";
      double lo = res_lo, hi = res_hi;
      if (periodic_state && residual->count("--lo") == 0 && residual->count("--hi") == 0) {
        lo = 0.0;
        hi = 2.0 * kTwoPi / res_mu;
      }
      Grid g = Grid::closed(lo, hi, res_n);
      auto psi = reconstruct_wavefunction(st, kp);
      std::function<double(double)> V =
          periodic_state
              ? std::function<double(double)>([kp](double th) { return periodic_potential(th, kp); })
              : std::function<double(double)>([kp](double x) { return kink_potential(x, kp); });
      double r = pointwise_residual(psi, st.energy(res_mu), V, g);
      json params = {{"state", state_name}, {"mu", res_mu},  {"eps2", kp.eps2.str()},
                     {"lo", lo},            {"hi", hi},      {"N", res_n}};
      json out = make_header("residual", params, res_common);
      out["state"] = to_json(st);
      out["energy"] = st.energy(res_mu);
      out["max_relative_residual"] = r;
      emit_json(res_common, std::move(out));
      return 0;
    }

    if (*antiiso) {
      std::vector<Rat> eps_list;
      if (anti_eps.empty()) eps_list = {Rat(1, 3), Rat(1, 2), Rat(2)};
      else
        for (const auto& t : anti_eps) eps_list.push_back(Rat::parse(t));
      double worst = 0, worst_im = 0;
      for (const auto& e2 : eps_list) {
        KinkParams kp(anti_mu, e2);
        for (int i = 0; i < anti_points; ++i) {
          double th = -2.0 * kTwoPi + 4.0 * kTwoPi * i / (anti_points - 1);
          std::complex<double> v3 = kink_potential(std::complex<double>(0, th), kp);
          double v22 = periodic_potential(th, kp);
          worst = std::max(worst, std::abs(v22 + v3.real()));
          worst_im = std::max(worst_im, std::abs(v3.imag()));
        }
      }
      json eps_json = json::array();
      for (const auto& e2 : eps_list) eps_json.push_back(e2.str());
      json params = {{"eps2", eps_json}, {"points", anti_points}, {"mu", anti_mu}};
      json out = make_header("antiiso-check", params, anti_common);
      out["max_abs_sum"] = worst;
      out["max_abs_imag"] = worst_im;
      out["pass"] = worst < 1e-12 && worst_im < 1e-12;
      emit_json(anti_common, std::move(out));
      return 0;
    }

    if (*radial) {
      if (radial_betas.empty()) radial_betas = {1.0, 2.0};
      json rows = json::array();
      double worst = 0;
      for (double b : radial_betas) {
        RadialProblem rp = bhaduri_radial_problem(b);
        Grid g = Grid::closed(0, radial_rmax, radial_n);
        Spectrum sp = solve_spectrum(rp.potential, g, BoundaryCondition::Dirichlet,
                                     radial_nrmax + 1, "radial");
        for (int nr = 0; nr <= radial_nrmax; ++nr) {
          double e_fd = sp.eigenvalues[nr] / 2.0;
          double err = std::abs(e_fd - rp.expected_energy(nr));
          worst = std::max(worst, err);
          rows.push_back({{"beta", b},
                          {"n_r", nr},
                          {"E_fd", e_fd},
                          {"E_exact", rp.expected_energy(nr)},
                          {"abs_error", err}});
        }
      }
      json params = {{"betas", radial_betas},
                     {"nr_max", radial_nrmax},
                     {"rmax", radial_rmax},
                     {"N", radial_n}};
      json out = make_header("radial-check", params, radial_common);
      out["rows"] = std::move(rows);
      out["max_abs_error"] = worst;
      emit_json(radial_common, std::move(out));
      return 0;
    }
  } catch (const Error& e) {
    json err = {{"error", e.code_name()}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err = {{"error", "INTERNAL"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qheun
