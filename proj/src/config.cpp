#include "gidx/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gidx/expression.hpp"

namespace gidx {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(Errc::ConfigError, path + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing required field");
  return *it;
}

double num_at(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

int int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int>();
}

std::string str_at(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

double opt_num(const json& j, const char* key, double dflt, const std::string& path) {
  auto it = j.find(key);
  return it == j.end() ? dflt : num_at(*it, path + "." + key);
}

int opt_int(const json& j, const char* key, int dflt, const std::string& path) {
  auto it = j.find(key);
  return it == j.end() ? dflt : int_at(*it, path + "." + key);
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of integers");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(int_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

ActionSpec parse_action(const json& j, const std::string& path) {
  const std::string kind = str_at(need(j, "kind", path), path + ".kind");
  if (kind == "rotation") {
    const double turns = num_at(need(j, "theta_turns", path), path + ".theta_turns");
    bool irr = true;
    if (auto it = j.find("irrational"); it != j.end()) {
      if (!it->is_boolean()) bad(path + ".irrational", "expected a boolean");
      irr = it->get<bool>();
    }
    return ActionSpec::rotation(turns, irr, opt_int(j, "grid", 256, path));
  }
  if (kind == "dilation") {
    const double alpha = num_at(need(j, "alpha", path), path + ".alpha");
    const int dim = opt_int(j, "dim", 1, path);
    return ActionSpec::dilation(alpha, dim, opt_int(j, "grid", 256, path));
  }
  if (kind == "cyclic") {
    const int k = int_at(need(j, "k", path), path + ".k");
    return ActionSpec::cyclic(k, opt_int(j, "grid", 256, path));
  }
  if (kind == "circle-on-torus") return ActionSpec::circle_on_torus(opt_int(j, "grid", 64, path));
  bad(path + ".kind",
      "unknown action kind '" + kind +
          "' (expected rotation, dilation, cyclic, or circle-on-torus)");
}

Bandlimited parse_component(const json& j, const std::string& path) {
  if (j.is_number())
    return Bandlimited::constant(Complex(j.get<double>(), 0.0));
  if (!j.is_object()) bad(path, "expected a number or an object");
  if (auto it = j.find("expr"); it != j.end()) {
    const std::string text = str_at(*it, path + ".expr");
    const int bw = opt_int(j, "bandwidth", 16, path);
    const int samples = opt_int(j, "samples", 0, path);
    try {
      return Expression::parse(text).to_bandlimited(bw, samples);
    } catch (const Error& e) {
      bad(path + ".expr", e.what());
    }
  }
  if (auto it = j.find("coeffs"); it != j.end()) {
    if (!it->is_array()) bad(path + ".coeffs", "expected an array of [n, re, im]");
    int bw = 0;
    for (size_t i = 0; i < it->size(); ++i) {
      const json& row = (*it)[i];
      const std::string rp = path + ".coeffs[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != 3) bad(rp, "expected [n, re, im]");
      bw = std::max(bw, std::abs(int_at(row[0], rp)));
    }
    std::vector<Complex> c(2 * bw + 1, Complex(0.0));
    for (const json& row : *it) {
      const int n = row[0].get<int>();
      c[n + bw] += Complex(row[1].get<double>(), row[2].get<double>());
    }
    return Bandlimited(std::move(c));
  }
  bad(path, "expected 'expr' or 'coeffs'");
}

CosphereFunction parse_term_value(const json& j, const std::string& path) {
  CosphereFunction f;
  bool any = false;
  if (auto it = j.find("both"); it != j.end()) {
    f = CosphereFunction::both(parse_component(*it, path + ".both"));
    any = true;
  }
  if (auto it = j.find("plus"); it != j.end()) {
    f.component(0) += parse_component(*it, path + ".plus");
    any = true;
  }
  if (auto it = j.find("minus"); it != j.end()) {
    f.component(1) += parse_component(*it, path + ".minus");
    any = true;
  }
  if (!any) bad(path, "term needs at least one of 'both', 'plus', 'minus'");
  return f;
}

}  // namespace

GOperatorSpec JobConfig::operator_spec() const {
  if (!action) fail(Errc::ConfigError, "action: missing required block");
  GOperatorSpec spec(*action, order, s);
  for (const auto& [g, f] : terms) spec.add_term(g, f);
  spec.smoothing = smoothing;
  return spec;
}

JobConfig parse_job_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(Errc::ConfigError, std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail(Errc::ConfigError, "config root must be an object");

  JobConfig cfg;
  cfg.raw_text = json_text;

  if (auto it = root.find("action"); it != root.end())
    cfg.action = parse_action(*it, "action");

  if (auto it = root.find("operator"); it != root.end()) {
    const json& op = *it;
    const std::string path = "operator";
    if (!op.is_object()) bad(path, "expected an object");
    cfg.order = opt_int(op, "order", 0, path);
    cfg.s = opt_num(op, "s", 0.0, path);
    if (auto t = op.find("terms"); t != op.end()) {
      if (!t->is_array()) bad(path + ".terms", "expected an array");
      for (size_t i = 0; i < t->size(); ++i) {
        const std::string tp = path + ".terms[" + std::to_string(i) + "]";
        const json& term = (*t)[i];
        const int g = int_at(need(term, "g", tp), tp + ".g");
        CosphereFunction f = parse_term_value(term, tp);
        auto found = cfg.terms.find(g);
        if (found == cfg.terms.end())
          cfg.terms.emplace(g, f);
        else
          found->second += f;
      }
    }
    if (auto sm = op.find("smoothing"); sm != op.end()) {
      if (!sm->is_array()) bad(path + ".smoothing", "expected an array");
      for (size_t i = 0; i < sm->size(); ++i) {
        const std::string sp = path + ".smoothing[" + std::to_string(i) + "]";
        const json& e = (*sm)[i];
        SmoothingEntry entry;
        entry.p = int_at(need(e, "p", sp), sp + ".p");
        entry.q = int_at(need(e, "q", sp), sp + ".q");
        entry.v = Complex(opt_num(e, "re", 0.0, sp), opt_num(e, "im", 0.0, sp));
        cfg.smoothing.push_back(entry);
      }
    }
  }

  if (auto it = root.find("ellipticity"); it != root.end()) {
    const json& el = *it;
    const std::string path = "ellipticity";
    if (!el.is_object()) bad(path, "expected an object");
    if (auto w = el.find("windows"); w != el.end())
      cfg.ellipticity.windows = int_list(*w, path + ".windows");
    cfg.ellipticity.probe_points =
        opt_int(el, "probe_points", cfg.ellipticity.probe_points, path);
    cfg.ellipticity.floor_sv = opt_num(el, "floor", cfg.ellipticity.floor_sv, path);
    cfg.ellipticity.s = opt_num(el, "s", cfg.ellipticity.s, path);
    if (cfg.ellipticity.floor_sv <= 0.0) bad(path + ".floor", "tolerance must be positive");
  }

  if (auto it = root.find("index"); it != root.end()) {
    const json& ix = *it;
    const std::string path = "index";
    if (!ix.is_object()) bad(path, "expected an object");
    if (auto t = ix.find("trunc"); t != ix.end())
      cfg.index.ladder = int_list(*t, path + ".trunc");
    cfg.index.N_start = opt_int(ix, "n_start", cfg.index.N_start, path);
    cfg.index.N_step = opt_int(ix, "n_step", cfg.index.N_step, path);
    cfg.index.N_max = opt_int(ix, "n_max", cfg.index.N_max, path);
    cfg.index.sv_threshold = opt_num(ix, "sv_threshold", cfg.index.sv_threshold, path);
    if (cfg.index.sv_threshold <= 0.0)
      bad(path + ".sv_threshold", "tolerance must be positive");
  }

  if (auto it = root.find("sweep"); it != root.end()) {
    const json& sw = *it;
    const std::string path = "sweep";
    if (!sw.is_object()) bad(path, "expected an object");
    if (auto r = sw.find("range"); r != sw.end()) {
      if (!r->is_array() || r->size() != 2) bad(path + ".range", "expected [lo, hi]");
      cfg.sweep_lo = num_at((*r)[0], path + ".range[0]");
      cfg.sweep_hi = num_at((*r)[1], path + ".range[1]");
      if (!(cfg.sweep_lo < cfg.sweep_hi)) bad(path + ".range", "range must be increasing");
    }
    cfg.sweep_grid = opt_int(sw, "grid", cfg.sweep_grid, path);
  }

  if (auto it = root.find("nctorus"); it != root.end()) {
    const json& nc = *it;
    const std::string path = "nctorus";
    if (!nc.is_object()) bad(path, "expected an object");
    cfg.nct_theta = opt_num(nc, "theta", cfg.nct_theta, path);
    cfg.nct_length = opt_num(nc, "length", cfg.nct_length, path);
  }

  if (auto it = root.find("uniformize"); it != root.end()) {
    const json& un = *it;
    const std::string path = "uniformize";
    if (!un.is_object()) bad(path, "expected an object");
    cfg.uniform_alpha = opt_num(un, "alpha", cfg.uniform_alpha, path);
    if (auto t = un.find("trunc"); t != un.end())
      cfg.uniform_trunc = int_list(*t, path + ".trunc");
  }

  if (auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_integer()) bad("seed", "expected an integer");
    cfg.seed = it->get<unsigned long long>();
  }
  if (auto it = root.find("threads"); it != root.end())
    cfg.threads = int_at(*it, "threads");
  if (auto it = root.find("format"); it != root.end()) {
    cfg.format = str_at(*it, "format");
    if (cfg.format != "json" && cfg.format != "csv")
      bad("format", "expected 'json' or 'csv'");
  }
  if (auto it = root.find("out"); it != root.end()) cfg.out_path = str_at(*it, "out");

  return cfg;
}

JobConfig load_job_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ConfigError, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_job_config(ss.str());
}

}  // namespace gidx
