#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "semiwkb/batch.hpp"
#include "semiwkb/closed.hpp"
#include "semiwkb/oracle.hpp"
#include "semiwkb/output.hpp"
#include "semiwkb/phase.hpp"
#include "semiwkb/quantize.hpp"
#include "semiwkb/regge.hpp"
#include "semiwkb/wavefn.hpp"

namespace semiwkb::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PotentialFlags {
  std::string family = "coulomb";
  std::string coupling = "scalar";
  double mass = 1.0;
  double alpha = 0.0;
  double kappa = 0.0;
  double alpha_s = 0.0;
  bool two_body = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "coulomb|linear|funnel")
        ->check(CLI::IsMember({"coulomb", "linear", "funnel"}));
    cmd->add_option("--coupling", coupling, "vector|scalar")
        ->check(CLI::IsMember({"vector", "scalar"}));
    cmd->add_option("--mass", mass, "rest mass m");
    cmd->add_option("--alpha", alpha, "Coulomb strength (coulomb family)");
    cmd->add_option("--kappa", kappa, "string tension (linear, funnel)");
    cmd->add_option("--alpha-s", alpha_s, "Coulomb strength of the funnel");
    cmd->add_flag("--two-body", two_body, "equal-mass two-body kinetic term E^2/4");
  }

  PotentialSpec build() const {
    const Coupling c = coupling == "vector" ? Coupling::Vector : Coupling::Scalar;
    if (family == "coulomb") {
      if (kappa != 0.0 || alpha_s != 0.0) {
        throw UsageError("--kappa/--alpha-s do not apply to the coulomb family");
      }
      return PotentialSpec::coulomb(c, mass, alpha, two_body);
    }
    if (alpha != 0.0) throw UsageError("--alpha applies to the coulomb family; use --alpha-s");
    if (family == "linear") {
      if (alpha_s != 0.0) throw UsageError("--alpha-s applies to the funnel family");
      return PotentialSpec::linear(c, mass, kappa, two_body);
    }
    return PotentialSpec::funnel(c, mass, alpha_s, kappa, two_body);
  }
};

struct GlobalFlags {
  std::string format = "table";
  double tolerance = 1e-10;
  std::uint64_t seed = 1;
  bool quiet = false;

  OutputFormat output_format() const {
    if (format == "json") return OutputFormat::Json;
    if (format == "csv") return OutputFormat::Csv;
    return OutputFormat::Table;
  }
};

void add_energy_fields(OutputRecord& rec, const PotentialSpec& spec, double energy) {
  rec.add("energy", energy);
  if (spec.family() == Family::Coulomb) {
    rec.add("binding", energy - (spec.two_body() ? 2.0 : 1.0) * spec.mass());
  } else {
    rec.add("energy_sq", energy * energy);
  }
}

bool ode_available(const PotentialSpec& spec) {
  return spec.family() == Family::Coulomb && spec.coupling() == Coupling::Vector &&
         !spec.two_body();
}

// Solves every state with every method; failures go to `err`.
struct SpectrumRun {
  std::vector<SolveOutcome> outcomes;
  bool failed = false;
};

SpectrumRun run_methods(const PotentialSpec& spec, const std::vector<QuantumNumbers>& states,
                        const std::vector<Method>& methods, const GlobalFlags& g,
                        std::ostream& err) {
  QuantizeOptions opt;
  opt.residual_tolerance = g.tolerance;
  const int threads = configured_threads();
  SpectrumRun run;
  for (Method m : methods) {
    auto batch = solve_spectrum(spec, states, m, opt, threads);
    for (auto& o : batch) {
      if (!o.ok()) {
        run.failed = true;
        err << "error: " << to_string(m) << " n_r=" << o.qn.n_r() << " l=" << o.qn.l() << ": "
            << o.error_message << '\n';
      }
      run.outcomes.push_back(std::move(o));
    }
  }
  return run;
}

int spectrum_command(const PotentialFlags& pf, int nr_max, int l_max, const std::string& method,
                     const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  const auto spec = pf.build();
  std::vector<Method> methods;
  if (method == "closed") methods = {Method::ClosedForm};
  if (method == "wkb") methods = {Method::NumericWkb};
  if (method == "ode") {
    if (!ode_available(spec)) {
      throw UsageError("--method ode requires --family coulomb --coupling vector (single body)");
    }
    methods = {Method::OdeOracle};
  }
  if (method == "all") {
    methods = {Method::ClosedForm, Method::NumericWkb};
    if (ode_available(spec)) methods.push_back(Method::OdeOracle);
  }
  const auto states = state_grid(nr_max, l_max);
  auto run = run_methods(spec, states, methods, g, err);

  // Fixed order: by state, then method.
  std::vector<OutputRecord> records;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t m = 0; m < methods.size(); ++m) {
      const auto& o = run.outcomes[m * states.size() + s];
      if (!o.ok()) continue;
      OutputRecord rec;
      rec.add("method", to_string(methods[m]))
          .add("n_r", o.qn.n_r())
          .add("l", o.qn.l())
          .add("n", o.qn.principal());
      add_energy_fields(rec, spec, o.result->energy);
      rec.add("residual", o.result->residual);
      records.push_back(std::move(rec));
    }
  }
  write_records(records, g.output_format(), out);
  return run.failed ? kNumerical : kOk;
}

int compare_command(const PotentialFlags& pf, int nr_max, int l_max, const GlobalFlags& g,
                    std::ostream& out, std::ostream& err) {
  const auto spec = pf.build();
  std::vector<Method> methods = {Method::ClosedForm, Method::NumericWkb};
  if (ode_available(spec)) methods.push_back(Method::OdeOracle);
  const auto states = state_grid(nr_max, l_max);
  auto run = run_methods(spec, states, methods, g, err);
  const bool scalar_linear =
      spec.family() == Family::Linear && spec.coupling() == Coupling::Scalar;

  std::vector<OutputRecord> records;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto& closed = run.outcomes[s];
    const auto& wkb = run.outcomes[states.size() + s];
    if (!closed.ok() || !wkb.ok()) continue;
    const double ec = closed.result->energy;
    OutputRecord rec;
    rec.add("n_r", states[s].n_r()).add("l", states[s].l());
    rec.add("closed", ec).add("wkb", wkb.result->energy);
    rec.add("wkb_minus_closed", wkb.result->energy - ec);
    rec.add("wkb_rel", (wkb.result->energy - ec) / ec);
    if (methods.size() == 3) {
      const auto& ode = run.outcomes[2 * states.size() + s];
      if (ode.ok()) {
        rec.add("ode", ode.result->energy);
        rec.add("ode_minus_closed", ode.result->energy - ec);
        rec.add("ode_rel", (ode.result->energy - ec) / ec);
      }
    }
    if (scalar_linear) {
      try {
        const auto contour = contour_phase_linear(ec, spec, states[s]);
        rec.add("residue_sum", contour.value);
        rec.add("cut_sum", contour.cut_contributions->first + contour.cut_contributions->second);
        rec.add("contour_discrepancy", *contour.discrepancy);
      } catch (const Error& e) {
        err << "warning: contour n_r=" << states[s].n_r() << " l=" << states[s].l() << ": "
            << e.what() << '\n';
      }
    }
    records.push_back(std::move(rec));
  }
  write_records(records, g.output_format(), out);
  return run.failed ? kNumerical : kOk;
}

int table1_command(double rydberg, double inv_alpha, const GlobalFlags& g, std::ostream& out,
                   std::ostream& err) {
  const auto cal = HydrogenCalibration::from_rydberg(rydberg, inv_alpha);
  const auto rows = table1(cal.mass, cal.alpha);
  const auto& ref = hydrogen_table_reference();
  std::vector<OutputRecord> records;
  double worst = 0.0;
  std::string worst_at;
  const char* names[3] = {"nr", "kg", "sc"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const double vals[3] = {row.e_nr, row.e_kg, row.e_sc};
    OutputRecord rec;
    rec.add("l", row.qn.l()).add("n_r", row.qn.n_r());
    rec.add("e_nr", row.e_nr).add("e_kg", row.e_kg).add("e_sc", row.e_sc);
    for (int c = 0; c < 3; ++c) rec.add(std::string("ref_") + names[c], ref[i][c]);
    for (int c = 0; c < 3; ++c) {
      const double dev = vals[c] - ref[i][c];
      rec.add(std::string("dev_") + names[c], dev);
      if (std::abs(dev) > worst) {
        worst = std::abs(dev);
        worst_at = "l=" + std::to_string(row.qn.l()) + " n_r=" + std::to_string(row.qn.n_r()) +
                   " column " + names[c];
      }
    }
    rec.add("kg_minus_nr", row.e_kg - row.e_nr);
    rec.add("sc_minus_nr", row.e_sc - row.e_nr);
    rec.add("fine_structure_sc", fine_structure_sc(row.qn, cal.mass, cal.alpha));
    records.push_back(std::move(rec));
  }
  write_records(records, g.output_format(), out);
  if (!g.quiet) {
    err << "calibration: m alpha^2/2 = " << format_number(rydberg) << " eV, 1/alpha = "
        << format_number(inv_alpha) << ", m = " << format_number(cal.mass) << " eV\n"
        << "max |deviation| from the published levels: " << format_number(worst) << " eV ("
        << worst_at << "); the original constants are not recoverable exactly\n";
  }
  return kOk;
}

int wavefunction_command(const PotentialFlags& pf, int nr, int l, int samples,
                         std::optional<double> r_max, const GlobalFlags& g, std::ostream& out,
                         std::ostream& err) {
  if (samples < 2) throw UsageError("--samples must be >= 2");
  const auto spec = pf.build();
  const QuantumNumbers qn(nr, l);
  QuantizeOptions opt;
  opt.residual_tolerance = g.tolerance;
  const auto eig = solve_radial_eigenvalue(qn, spec, opt);
  const WkbWavefunction wf(spec, qn, eig.energy, std::max(1e-8, g.tolerance));
  const double upper = r_max.value_or(1.5 * wf.r_out());
  if (!(upper > 0.0)) throw UsageError("--r-max must be > 0");
  std::vector<double> radii;
  for (int k = 1; k <= samples; ++k) radii.push_back(upper * k / samples);
  const auto values = sample_wavefunction(wf, radii, configured_threads());

  std::vector<OutputRecord> records;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double r = radii[k];
    const bool inside = r >= wf.r_in() && r <= wf.r_out();
    OutputRecord rec;
    rec.add("r", r).add("R_tilde", values[k]).add("R", values[k] / r);
    rec.add("region", inside ? "allowed" : "forbidden");
    rec.add("standing_wave", inside ? standing_wave(r, wf) : 0.0);
    records.push_back(std::move(rec));
  }
  write_records(records, g.output_format(), out);
  if (!g.quiet) {
    err << "energy = " << format_number(eig.energy) << ", turning points = ["
        << format_number(wf.r_in()) << ", " << format_number(wf.r_out())
        << "], nodes = " << count_nodes(wf) << '\n';
  }
  return kOk;
}

int regge_command(const std::string& fit_path, double kappa, double alpha_s, int nr, int l_max,
                  double noise, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  std::vector<OutputRecord> records;
  auto fit_record = [](const ReggeFit& fit, std::size_t count) {
    OutputRecord rec;
    rec.add("kind", "fit")
        .add("kappa", fit.kappa)
        .add("alpha_s", fit.alpha_s)
        .add("c_sq", fit.c_sq)
        .add("rms_residual", fit.rms_residual)
        .add("records", static_cast<std::int64_t>(count));
    return rec;
  };
  auto warn = [&](const ReggeFit& fit) {
    if (g.quiet) return;
    for (const auto& w : fit.warnings) err << "warning: " << w << '\n';
  };

  if (!fit_path.empty()) {
    const auto data = read_meson_csv_file(fit_path);
    const auto fit = fit_regge(data);
    records.push_back(fit_record(fit, data.size()));
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto& m = data[i];
      OutputRecord rec;
      rec.add("kind", "point").add("name", m.name).add("l", m.l).add("n_r", m.n_r);
      rec.add("mass_gev", m.mass).add("m_sq", m.mass * m.mass);
      rec.add("residual", fit.per_point_residuals[i]);
      records.push_back(std::move(rec));
    }
    warn(fit);
    write_records(records, g.output_format(), out);
    return kOk;
  }

  if (!(kappa > 0.0)) throw UsageError("regge: give --fit <csv> or --kappa > 0");
  const auto points = regge_trajectory(nr, l_max, kappa, alpha_s);
  if (noise > 0.0) {
    // Synthetic masses with relative Gaussian noise, then refit.
    std::mt19937_64 rng(g.seed);
    std::normal_distribution<double> gauss(0.0, noise);
    std::vector<MesonRecord> data;
    for (const auto& p : points) {
      const double m_sq = p.e_sq;
      data.push_back({"l" + std::to_string(p.l), std::sqrt(m_sq) * (1.0 + gauss(rng)), p.l, nr});
    }
    const auto fit = fit_regge(data);
    records.push_back(fit_record(fit, data.size()));
    warn(fit);
    write_records(records, g.output_format(), out);
    return kOk;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    OutputRecord rec;
    rec.add("l", points[i].l).add("n_r", nr).add("e_sq", points[i].e_sq);
    rec.add("energy", std::sqrt(points[i].e_sq));
    if (i > 0) rec.add("delta_e_sq", points[i].e_sq - points[i - 1].e_sq);
    records.push_back(std::move(rec));
  }
  write_records(records, g.output_format(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic semiclassical bound-state solver", "semiwkb"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--format", g.format, "json|csv|table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--tolerance", g.tolerance, "quantization residual tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "RNG seed for noise studies");
  app.add_flag("--quiet", g.quiet, "suppress informational diagnostics");

  PotentialFlags spectrum_pf;
  int nr_max = 0, l_max = 0;
  std::string method = "wkb";
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues over an (n_r, l) range");
  spectrum_pf.attach(spectrum);
  spectrum->add_option("--nr-max", nr_max)->check(CLI::NonNegativeNumber);
  spectrum->add_option("--l-max", l_max)->check(CLI::NonNegativeNumber);
  spectrum->add_option("--method", method, "closed|wkb|ode|all")
      ->check(CLI::IsMember({"closed", "wkb", "ode", "all"}));

  PotentialFlags compare_pf;
  int cmp_nr_max = 0, cmp_l_max = 0;
  auto* compare = app.add_subcommand("compare", "cross-method differences over an (n_r, l) range");
  compare_pf.attach(compare);
  compare->add_option("--nr-max", cmp_nr_max)->check(CLI::NonNegativeNumber);
  compare->add_option("--l-max", cmp_l_max)->check(CLI::NonNegativeNumber);

  double rydberg = 13.6155700;
  double inv_alpha = 137.036;
  auto* t1 = app.add_subcommand("table1", "hydrogen levels: Schrodinger, vector and scalar Coulomb");
  t1->add_option("--calibrate-nr", rydberg, "m alpha^2 / 2 in eV")->check(CLI::PositiveNumber);
  t1->add_option("--inv-alpha", inv_alpha, "1/alpha")->check(CLI::PositiveNumber);

  PotentialFlags wave_pf;
  int wave_nr = 0, wave_l = 0, samples = 200;
  std::optional<double> wave_rmax;
  auto* wave = app.add_subcommand("wavefunction", "sample a WKB eigenfunction on a radius grid");
  wave_pf.attach(wave);
  wave->add_option("--nr", wave_nr)->check(CLI::NonNegativeNumber);
  wave->add_option("--l", wave_l)->check(CLI::NonNegativeNumber);
  wave->add_option("--samples", samples);
  wave->add_option("--r-max", wave_rmax, "upper radius (default 1.5 r_out)");

  std::string fit_path;
  double rg_kappa = 0.0, rg_alpha_s = 0.0, noise = 0.0;
  int rg_nr = 0, rg_l_max = 5;
  auto* regge = app.add_subcommand("regge", "Regge trajectories and fits");
  regge->add_option("--fit", fit_path, "CSV name,mass_gev,l,n_r[,weight]");
  regge->add_option("--kappa", rg_kappa);
  regge->add_option("--alpha-s", rg_alpha_s);
  regge->add_option("--nr", rg_nr)->check(CLI::NonNegativeNumber);
  regge->add_option("--l-max", rg_l_max)->check(CLI::PositiveNumber);
  regge->add_option("--noise", noise, "relative mass noise; fits a noisy synthetic trajectory")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("semiwkb");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) return spectrum_command(spectrum_pf, nr_max, l_max, method, g, out, err);
    if (*compare) return compare_command(compare_pf, cmp_nr_max, cmp_l_max, g, out, err);
    if (*t1) return table1_command(rydberg, inv_alpha, g, out, err);
    if (*wave) {
      return wavefunction_command(wave_pf, wave_nr, wave_l, samples, wave_rmax, g, out, err);
    }
    if (*regge) {
      return regge_command(fit_path, rg_kappa, rg_alpha_s, rg_nr, rg_l_max, noise, g, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::Domain;
    return usage ? kUsage : kNumerical;
  }
  return kUsage;
}

}  // namespace semiwkb::cli
