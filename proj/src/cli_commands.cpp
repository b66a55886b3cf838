#include "gidx/cli_commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gidx/nctorus.hpp"
#include "gidx/report_json.hpp"
#include "gidx/topological.hpp"
#include "gidx/uniformization.hpp"

namespace gidx {

namespace {

const char* action_name(ActionKind k) {
  switch (k) {
    case ActionKind::RotationZ: return "rotation";
    case ActionKind::DilationSphere: return "dilation";
    case ActionKind::CyclicRotation: return "cyclic";
    case ActionKind::CircleOnTorus: return "circle-on-torus";
  }
  return "?";
}

void json_preamble(JsonWriter& w, const JobConfig& cfg, const char* command) {
  w.begin_object();
  w.field("tool", kToolName);
  w.field("version", kToolVersion);
  w.field("schema", kReportSchemaVersion);
  w.field("command", command);
  w.field("config_hash", hash_hex(cfg.raw_text));
  w.field("seed", static_cast<long long>(cfg.seed));
  w.field("threads", cfg.threads);
}

std::string csv_preamble(const JobConfig& cfg, const char* command) {
  std::string s = "# tool=";
  s += kToolName;
  s += " version=";
  s += kToolVersion;
  s += " schema=";
  s += kReportSchemaVersion;
  s += " command=";
  s += command;
  s += " config=";
  s += hash_hex(cfg.raw_text);
  s += "\n";
  return s;
}

void require_action(const JobConfig& cfg, const char* command) {
  if (!cfg.action) fail(Errc::ConfigError, std::string("action: missing required block for ") + command);
}

double sv_gap_of(const IndexRow& r) { return std::min(r.gap_ker, r.gap_coker); }

void write_index_rows_json(JsonWriter& w, const IndexReport& rep) {
  w.key("per_N");
  w.begin_array();
  for (const IndexRow& r : rep.rows) {
    w.begin_object();
    w.field("N", r.N);
    w.field("dim_ker", r.dim_ker);
    w.field("dim_coker", r.dim_coker);
    w.field("index", r.index);
    w.field("gap_ker", r.gap_ker);
    w.field("gap_coker", r.gap_coker);
    w.field("sv_gap", sv_gap_of(r));
    w.field("clean", r.clean);
    w.end_object();
  }
  w.end_array();
}

std::string index_rows_csv(const IndexReport& rep) {
  std::string s = "N,dim_ker,dim_coker,index,sv_gap\n";
  for (const IndexRow& r : rep.rows) {
    s += std::to_string(r.N) + "," + std::to_string(r.dim_ker) + "," +
         std::to_string(r.dim_coker) + "," + std::to_string(r.index) + "," +
         format_double(sv_gap_of(r)) + "\n";
  }
  return s;
}

const char* verdict_string(EllipticityVerdict v) {
  switch (v) {
    case EllipticityVerdict::Elliptic: return "elliptic";
    case EllipticityVerdict::NotElliptic: return "not-elliptic";
    case EllipticityVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

SIntervalOptions interval_options(const JobConfig& cfg) {
  SIntervalOptions opt;
  opt.s_lo = cfg.sweep_lo;
  opt.s_hi = cfg.sweep_hi;
  opt.grid = cfg.sweep_grid;
  if (cfg.tol_override) opt.tol = *cfg.tol_override;
  if (cfg.trunc_override) opt.interior_windows = *cfg.trunc_override;
  return opt;
}

void write_interval_json(JsonWriter& w, const SIntervalResult& r) {
  w.key("interval");
  w.begin_object();
  w.field("empty", r.empty);
  if (!r.empty) {
    w.field("lo", r.lo);
    w.field("hi", r.hi);
    w.field("clipped_lo", r.clipped_lo);
    w.field("clipped_hi", r.clipped_hi);
    w.field("interior_confirmed", r.interior_confirmed);
  } else {
    w.field("reason", r.reason);
  }
  w.end_object();
  w.key("crossings");
  w.begin_array();
  for (double c : r.crossings) w.value(c);
  w.end_array();
  w.key("root_moduli");
  w.begin_array();
  for (double m : r.root_moduli) w.value(m);
  w.end_array();
  w.key("evidence");
  w.begin_array();
  for (const SIntervalRow& row : r.evidence) {
    w.begin_object();
    w.field("s", row.s);
    w.field("pole0_min", row.pole0_min);
    w.field("poleinf_min", row.poleinf_min);
    w.field("inside", row.inside);
    w.end_object();
  }
  w.end_array();
}

std::string interval_rows_csv(const SIntervalResult& r) {
  std::string s = "s,pole0_min,poleinf_min,inside\n";
  for (const SIntervalRow& row : r.evidence) {
    s += format_double(row.s) + "," + format_double(row.pole0_min) + "," +
         format_double(row.poleinf_min) + "," + (row.inside ? "1" : "0") + "\n";
  }
  return s;
}

EllipticityOptions isometric_options(const JobConfig& cfg) {
  EllipticityOptions opt = cfg.ellipticity;
  if (cfg.trunc_override) opt.windows = *cfg.trunc_override;
  if (cfg.tol_override) opt.floor_sv = *cfg.tol_override;
  return opt;
}

struct NcFunction {
  const char* name;
  std::function<Complex(double)> f;
};

std::vector<NcFunction> nct_test_functions() {
  return {
      {"gaussian", [](double x) { return Complex(std::exp(-0.5 * x * x), 0.0); }},
      {"x-gaussian", [](double x) { return Complex(x * std::exp(-0.5 * x * x), 0.0); }},
      {"modulated-gaussian",
       [](double x) {
         return std::polar(std::exp(-0.5 * x * x), 3.0 * x);
       }},
  };
}

}  // namespace

CommandOutput cmd_ellipticity(const JobConfig& cfg) {
  require_action(cfg, "ellipticity");
  const ActionSpec& act = *cfg.action;
  if (act.kind == ActionKind::CircleOnTorus)
    fail(Errc::ConfigError,
         "action.kind: the circle-on-torus example is handled by the uniformize command");
  const GOperatorSpec op = cfg.operator_spec();
  const CrossedSymbol sym = op.symbol();

  CommandOutput out;
  if (act.isometric()) {
    const EllipticityReport rep = check_elliptic_isometric(sym, isometric_options(cfg));
    switch (rep.verdict) {
      case EllipticityVerdict::Elliptic: out.exit_code = kExitOk; break;
      case EllipticityVerdict::NotElliptic: out.exit_code = kExitNotElliptic; break;
      case EllipticityVerdict::Inconclusive: out.exit_code = kExitInconclusive; break;
    }
    if (cfg.format == "csv") {
      std::string s = csv_preamble(cfg, "ellipticity");
      s += "window,min_singular\n";
      for (size_t i = 0; i < rep.windows.size(); ++i)
        s += std::to_string(rep.windows[i]) + "," + format_double(rep.min_singular[i]) + "\n";
      out.text = s;
      return out;
    }
    JsonWriter w;
    json_preamble(w, cfg, "ellipticity");
    w.field("action", action_name(act.kind));
    w.field("verdict", verdict_string(rep.verdict));
    w.key("windows");
    w.begin_array();
    for (int n : rep.windows) w.value(n);
    w.end_array();
    w.key("min_singular");
    w.begin_array();
    for (double v : rep.min_singular) w.value(v);
    w.end_array();
    w.field("final_min_sv", rep.final_min_sv);
    w.field("detail", rep.detail);
    w.end_object();
    out.text = w.str() + "\n";
    return out;
  }

  // Dilation: the elliptic weights form an interval; the verdict is taken at
  // the operator's own Sobolev weight.
  const SIntervalResult r = elliptic_s_interval(sym, interval_options(cfg));
  const bool s_inside = !r.empty && cfg.s > r.lo && cfg.s < r.hi;
  out.exit_code = s_inside ? kExitOk : kExitNotElliptic;
  if (cfg.format == "csv") {
    out.text = csv_preamble(cfg, "ellipticity") + interval_rows_csv(r);
    return out;
  }
  JsonWriter w;
  json_preamble(w, cfg, "ellipticity");
  w.field("action", action_name(act.kind));
  w.field("alpha", act.alpha);
  w.field("dim", act.dim_m);
  w.field("verdict", s_inside ? "elliptic" : "not-elliptic");
  w.field("s", cfg.s);
  w.field("s_inside", s_inside);
  write_interval_json(w, r);
  w.end_object();
  out.text = w.str() + "\n";
  return out;
}

CommandOutput cmd_sweep_s(const JobConfig& cfg) {
  require_action(cfg, "sweep-s");
  const ActionSpec& act = *cfg.action;
  if (act.kind != ActionKind::DilationSphere)
    fail(Errc::ConfigError, "action.kind: sweep-s surveys dilation weights only");
  const GOperatorSpec op = cfg.operator_spec();
  const SIntervalResult r = elliptic_s_interval(op.symbol(), interval_options(cfg));

  CommandOutput out;
  out.exit_code = kExitOk;
  if (cfg.format == "csv") {
    out.text = csv_preamble(cfg, "sweep-s") + interval_rows_csv(r);
    return out;
  }
  JsonWriter w;
  json_preamble(w, cfg, "sweep-s");
  w.field("action", action_name(act.kind));
  w.field("alpha", act.alpha);
  w.field("dim", act.dim_m);
  w.key("range");
  w.begin_array();
  w.value(cfg.sweep_lo);
  w.value(cfg.sweep_hi);
  w.end_array();
  w.field("grid", cfg.sweep_grid);
  write_interval_json(w, r);
  w.end_object();
  out.text = w.str() + "\n";
  return out;
}

CommandOutput cmd_index(const JobConfig& cfg) {
  require_action(cfg, "index");
  const ActionSpec& act = *cfg.action;
  if (act.kind == ActionKind::CircleOnTorus)
    fail(Errc::ConfigError,
         "action.kind: the circle-on-torus example is handled by the uniformize command");
  if (act.kind == ActionKind::DilationSphere)
    fail(Errc::UnsupportedAction,
         "the truncation index route exists for isometric circle actions; "
         "dilation weights are surveyed by the ellipticity and sweep-s commands");

  const GOperatorSpec op = cfg.operator_spec();
  const CrossedSymbol sym = op.symbol();
  const EllipticityReport pre = check_elliptic_isometric(sym, isometric_options(cfg));

  CommandOutput out;
  if (pre.verdict == EllipticityVerdict::NotElliptic) {
    out.exit_code = kExitNotElliptic;
    if (cfg.format == "csv") {
      out.text = csv_preamble(cfg, "index") + "N,dim_ker,dim_coker,index,sv_gap\n";
      return out;
    }
    JsonWriter w;
    json_preamble(w, cfg, "index");
    w.field("action", action_name(act.kind));
    w.key("precheck");
    w.begin_object();
    w.field("verdict", verdict_string(pre.verdict));
    w.field("final_min_sv", pre.final_min_sv);
    w.field("detail", pre.detail);
    w.end_object();
    w.field("refused", true);
    w.end_object();
    out.text = w.str() + "\n";
    return out;
  }

  IndexOptions iopt = cfg.index;
  if (cfg.trunc_override) iopt.ladder = *cfg.trunc_override;
  if (cfg.tol_override) iopt.sv_threshold = *cfg.tol_override;
  const IndexReport rep = analytic_index(op, iopt);

  bool have_topo = false;
  long long topo_index = 0;
  std::string topo_error;
  ZIndexResult zres;
  FiniteIndexResult fres;
  const bool cyclic = act.kind == ActionKind::CyclicRotation;
  try {
    if (cyclic) {
      fres = index_finite_free(sym);
      topo_index = fres.index;
    } else {
      zres = index_formula_Z(sym);
      topo_index = zres.index;
    }
    have_topo = true;
  } catch (const Error& e) {
    topo_error = e.what();
  }

  const bool agree = have_topo && rep.stabilized && rep.index == topo_index;
  if (!rep.stabilized)
    out.exit_code = kExitInconclusive;
  else if (have_topo && !agree)
    out.exit_code = kExitInconclusive;
  else
    out.exit_code = kExitOk;

  if (cfg.format == "csv") {
    out.text = csv_preamble(cfg, "index") + index_rows_csv(rep);
    return out;
  }

  JsonWriter w;
  json_preamble(w, cfg, "index");
  w.field("action", action_name(act.kind));
  w.key("precheck");
  w.begin_object();
  w.field("verdict", verdict_string(pre.verdict));
  w.field("final_min_sv", pre.final_min_sv);
  w.end_object();
  write_index_rows_json(w, rep);
  w.key("analytic");
  w.begin_object();
  w.field("index", rep.index);
  w.field("stabilized", rep.stabilized);
  w.field("stabilized_at", rep.stabilized_at);
  w.field("sv_threshold", rep.sv_threshold);
  w.end_object();
  w.key("topological");
  if (!have_topo) {
    w.begin_object();
    w.field("error", topo_error);
    w.end_object();
  } else if (cyclic) {
    w.begin_object();
    w.field("route", "determinant-winding");
    w.field("index", fres.index);
    w.key("winding_full");
    w.begin_array();
    w.value(fres.winding_full[0]);
    w.value(fres.winding_full[1]);
    w.end_array();
    w.key("winding_quotient");
    w.begin_array();
    w.value(fres.winding_quotient[0]);
    w.value(fres.winding_quotient[1]);
    w.end_array();
    w.end_object();
  } else {
    w.begin_object();
    w.field("route", "winding-e-component");
    w.field("index", zres.index);
    w.field("snap_residual", zres.snap_residual);
    w.end_object();
  }
  if (have_topo)
    w.field("agree", agree);
  else
    w.key("agree").null();
  w.end_object();
  out.text = w.str() + "\n";
  return out;
}

CommandOutput cmd_nctorus(const JobConfig& cfg) {
  const TorusParams par = make_torus_params(cfg.nct_theta, cfg.nct_length);
  const double tol = cfg.tol_override.value_or(1e-6);
  const double seam_tol = 1e-8;

  const auto funcs = nct_test_functions();
  const LineOp ops[] = {LineOp::U, LineOp::V, LineOp::Position, LineOp::Momentum};
  const char* op_names[] = {"U", "V", "position", "momentum"};

  std::vector<LineFunction> samples;
  std::vector<double> seam, roundtrip, commutation;
  std::vector<std::array<double, 4>> residuals(funcs.size());
  double max_resid = 0.0;
  for (size_t fi = 0; fi < funcs.size(); ++fi) {
    samples.push_back(sample_line(par, funcs[fi].f));
    const LineFunction& f = samples.back();
    const TorusSection g = schwartz_to_torus(f, par);
    seam.push_back(g.seam_defect);
    const LineFunction back = torus_to_schwartz(g);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < f.v.size(); ++i) {
      num = std::max(num, std::abs(back.v[i] - f.v[i]));
      den = std::max(den, std::abs(f.v[i]));
    }
    roundtrip.push_back(num / den);
    commutation.push_back(commutation_phase_residual(f, par));
    for (int oi = 0; oi < 4; ++oi) {
      residuals[fi][oi] = verify_correspondence(ops[oi], f, par);
      max_resid = std::max(max_resid, residuals[fi][oi]);
    }
  }

  bool pass = max_resid < tol;
  for (double v : seam) pass = pass && v < seam_tol;
  for (double v : roundtrip) pass = pass && v < tol;
  for (double v : commutation) pass = pass && v < tol;

  CommandOutput out;
  out.exit_code = pass ? kExitOk : kExitInconclusive;

  if (cfg.format == "csv") {
    std::string s = csv_preamble(cfg, "nctorus");
    s += "row,function,residual\n";
    for (int oi = 0; oi < 4; ++oi)
      for (size_t fi = 0; fi < funcs.size(); ++fi)
        s += std::string(op_names[oi]) + "," + funcs[fi].name + "," +
             format_double(residuals[fi][oi]) + "\n";
    for (size_t fi = 0; fi < funcs.size(); ++fi)
      s += std::string("seam,") + funcs[fi].name + "," + format_double(seam[fi]) + "\n";
    for (size_t fi = 0; fi < funcs.size(); ++fi)
      s += std::string("roundtrip,") + funcs[fi].name + "," + format_double(roundtrip[fi]) + "\n";
    for (size_t fi = 0; fi < funcs.size(); ++fi)
      s += std::string("commutation,") + funcs[fi].name + "," + format_double(commutation[fi]) + "\n";
    out.text = s;
    return out;
  }

  JsonWriter w;
  json_preamble(w, cfg, "nctorus");
  w.field("theta_requested", par.theta_requested);
  w.field("theta", par.theta);
  w.field("p", par.p);
  w.field("q", par.q);
  w.key("grid");
  w.begin_object();
  w.field("length", par.grid.L);
  w.field("step", par.grid.h);
  w.field("points", par.grid.n);
  w.field("n_phi", par.n_phi);
  w.field("n_psi", par.n_psi);
  w.end_object();
  w.key("functions");
  w.begin_array();
  for (const auto& f : funcs) w.value(f.name);
  w.end_array();
  w.key("rows");
  w.begin_array();
  for (int oi = 0; oi < 4; ++oi) {
    w.begin_object();
    w.field("op", op_names[oi]);
    w.key("residuals");
    w.begin_array();
    double m = 0.0;
    for (size_t fi = 0; fi < funcs.size(); ++fi) {
      w.value(residuals[fi][oi]);
      m = std::max(m, residuals[fi][oi]);
    }
    w.end_array();
    w.field("max", m);
    w.end_object();
  }
  w.end_array();
  w.key("seam");
  w.begin_array();
  for (double v : seam) w.value(v);
  w.end_array();
  w.key("roundtrip");
  w.begin_array();
  for (double v : roundtrip) w.value(v);
  w.end_array();
  w.key("commutation");
  w.begin_array();
  for (double v : commutation) w.value(v);
  w.end_array();
  w.field("max_residual", max_resid);
  w.field("tolerance", tol);
  w.field("seam_tolerance", seam_tol);
  w.field("pass", pass);
  w.end_object();
  out.text = w.str() + "\n";
  return out;
}

CommandOutput cmd_uniformize(const JobConfig& cfg) {
  AveragedLaplacianSpec spec;
  if (cfg.action) {
    if (cfg.action->kind != ActionKind::CircleOnTorus)
      fail(Errc::ConfigError, "action.kind: uniformize runs the circle-on-torus example");
    spec.action = *cfg.action;
  }
  spec.alpha = cfg.uniform_alpha;

  const TransverseReport tr = transverse_elliptic_check(spec);

  CommandOutput out;
  if (!tr.transversally_elliptic) {
    out.exit_code = kExitNotElliptic;
    if (cfg.format == "csv") {
      out.text = csv_preamble(cfg, "uniformize") + "N,dim_ker,dim_coker,index,sv_gap\n";
      return out;
    }
    JsonWriter w;
    json_preamble(w, cfg, "uniformize");
    w.field("alpha", spec.alpha);
    w.field("transversally_elliptic", false);
    w.field("averaged_value", tr.averaged_value);
    w.field("free_value", tr.free_value);
    w.field("detail", tr.offending);
    w.end_object();
    out.text = w.str() + "\n";
    return out;
  }

  const std::vector<int> trunc = cfg.trunc_override.value_or(cfg.uniform_trunc);
  const IndexReport rep = invariant_restriction_index(spec, trunc);
  out.exit_code = rep.stabilized ? kExitOk : kExitInconclusive;

  if (cfg.format == "csv") {
    out.text = csv_preamble(cfg, "uniformize") + index_rows_csv(rep);
    return out;
  }
  JsonWriter w;
  json_preamble(w, cfg, "uniformize");
  w.field("alpha", spec.alpha);
  w.field("transversally_elliptic", true);
  w.field("averaged_value", tr.averaged_value);
  w.field("free_value", tr.free_value);
  write_index_rows_json(w, rep);
  w.field("index", rep.index);
  w.field("stabilized", rep.stabilized);
  w.end_object();
  out.text = w.str() + "\n";
  return out;
}

namespace {

struct CliFlags {
  std::string config_path;
  std::string trunc;
  double tol = 0.0;
  unsigned long long seed = 0;
  int threads = 0;
  std::string format;
  std::string out;
};

std::vector<int> parse_trunc_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::ConfigError, "--trunc: expected a comma-separated list of positive integers");
    }
  }
  if (out.empty())
    fail(Errc::ConfigError, "--trunc: expected a comma-separated list of positive integers");
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ConfigError:
    case Errc::UnsupportedAction:
    case Errc::ActionMismatch:
      return kExitConfigError;
    case Errc::NotElliptic:
      return kExitNotElliptic;
    default:
      return kExitInconclusive;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"nonlocal-operator ellipticity and index toolkit"};
  app.name("gidx");
  app.require_subcommand(1);

  CliFlags flags;
  const char* names[] = {"ellipticity", "index", "sweep-s", "nctorus", "uniformize"};
  const char* descs[] = {
      "symbol invertibility along trajectories (isometric) or the elliptic weight interval (dilation)",
      "analytic truncation index checked against the topological route",
      "pole-circle minima of a dilation symbol over a range of weights",
      "line <-> twisted-torus correspondence residual table",
      "transverse ellipticity and invariant-restriction index of the averaged torus Laplacian"};
  std::array<CLI::App*, 5> subs{};
  for (int i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("config", flags.config_path, "job configuration file (JSON)")->required();
    sub->add_option("--trunc", flags.trunc, "comma-separated truncation sizes");
    sub->add_option("--tol", flags.tol, "tolerance override for the command's main check");
    sub->add_option("--seed", flags.seed, "seed recorded in the report");
    sub->add_option("--threads", flags.threads, "worker count (1 reproduces bitwise)");
    sub->add_option("--format", flags.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", flags.out, "write the report to this file instead of stdout");
    subs[i] = sub;
  }

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfigError;
  }

  try {
    JobConfig cfg = load_job_config(flags.config_path);

    // Fold the effective overrides into the hashed text so the report hash
    // pins the whole invocation, then apply them.
    std::string overrides;
    const CLI::App* active = nullptr;
    for (CLI::App* sub : subs)
      if (sub->parsed()) active = sub;
    auto given = [&](const char* flag) { return active && active->count(flag) > 0; };
    if (given("--trunc")) {
      cfg.trunc_override = parse_trunc_list(flags.trunc);
      overrides += "\n@trunc=" + flags.trunc;
    }
    if (given("--tol")) {
      if (!(flags.tol > 0.0)) fail(Errc::ConfigError, "--tol: tolerance must be positive");
      cfg.tol_override = flags.tol;
      overrides += "\n@tol=" + format_double(flags.tol);
    }
    if (given("--seed")) {
      cfg.seed = flags.seed;
      overrides += "\n@seed=" + std::to_string(flags.seed);
    }
    if (given("--threads")) {
      if (flags.threads < 1) fail(Errc::ConfigError, "--threads: need at least one worker");
      cfg.threads = flags.threads;
      overrides += "\n@threads=" + std::to_string(flags.threads);
    }
    if (given("--format")) {
      cfg.format = flags.format;
      overrides += "\n@format=" + flags.format;
    }
    if (given("--out")) cfg.out_path = flags.out;
    cfg.raw_text += overrides;

    CommandOutput result;
    if (active == subs[0])
      result = cmd_ellipticity(cfg);
    else if (active == subs[1])
      result = cmd_index(cfg);
    else if (active == subs[2])
      result = cmd_sweep_s(cfg);
    else if (active == subs[3])
      result = cmd_nctorus(cfg);
    else
      result = cmd_uniformize(cfg);

    if (cfg.out_path.empty()) {
      std::cout << result.text;
    } else {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) fail(Errc::ConfigError, "--out: cannot open '" + cfg.out_path + "' for writing");
      f << result.text;
    }
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "gidx: error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "gidx: internal error: " << e.what() << "\n";
    return kExitInconclusive;
  }
}

}  // namespace gidx
