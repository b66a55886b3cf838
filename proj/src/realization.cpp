#include "gidx/realization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

namespace gidx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int mode_component(int q) { return q >= 0 ? 0 : 1; }

double sobolev_weight(int q, double sigma) {
  return std::pow(1.0 + static_cast<double>(q) * q, 0.5 * sigma);
}

void check_mode_action(const ActionSpec& a) {
  if (a.kind != ActionKind::RotationZ && a.kind != ActionKind::CyclicRotation)
    fail(Errc::UnsupportedAction, "mode matrices exist for isometric circle actions");
}

struct KernelCount {
  int dim = 0;
  double gap = 0.0;
  bool clean = false;
};

KernelCount count_small_singulars(const Eigen::MatrixXcd& M, double thr, double gap_min) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  int k = 0;
  while (k < n && sv(n - 1 - k) < thr) ++k;
  KernelCount out;
  out.dim = k;
  const double below = k > 0 ? std::max(sv(n - k), thr * 1e-5) : thr;
  const double above = k < n ? sv(n - 1 - k) : std::numeric_limits<double>::infinity();
  out.gap = above / below;
  out.clean = out.gap >= gap_min;
  return out;
}

}  // namespace

void GOperatorSpec::add_term(int g, const CosphereFunction& f) {
  const int gc = action.canonical(g);
  auto it = terms.find(gc);
  if (it == terms.end())
    terms.emplace(gc, f);
  else
    it->second += f;
}

CrossedSymbol GOperatorSpec::symbol() const {
  CrossedSymbol sym(action, order);
  for (const auto& [g, f] : terms) sym.add_term(g, f);
  return sym;
}

int GOperatorSpec::coefficient_bandwidth() const {
  int b = 0;
  for (const auto& [g, f] : terms) b = std::max(b, f.bandwidth());
  return b;
}

Eigen::MatrixXcd shift_matrix(const ActionSpec& a, int g, int W) {
  check_mode_action(a);
  const double theta = kTwoPi * a.step_turns();
  const int n = 2 * W + 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int q = -W; q <= W; ++q)
    M(q + W, q + W) = std::polar(1.0, -q * g * theta);
  return M;
}

Eigen::MatrixXcd coefficient_matrix(const CosphereFunction& f, int order, int W) {
  const int n = 2 * W + 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int q = -W; q <= W; ++q) {
    const Bandlimited& comp = f.component(mode_component(q));
    const double weight = sobolev_weight(q, order);
    for (int d = -comp.bandwidth(); d <= comp.bandwidth(); ++d) {
      const int p = q + d;
      if (p < -W || p > W) continue;
      M(p + W, q + W) = comp.coefficient(d) * weight;
    }
  }
  return M;
}

Eigen::MatrixXcd operator_matrix(const GOperatorSpec& spec, int W) {
  check_mode_action(spec.action);
  const double theta = kTwoPi * spec.action.step_turns();
  const int n = 2 * W + 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [g, f] : spec.terms) {
    for (int q = -W; q <= W; ++q) {
      const Bandlimited& comp = f.component(mode_component(q));
      const Complex factor =
          std::polar(1.0, -q * g * theta) * sobolev_weight(q, spec.order);
      for (int d = -comp.bandwidth(); d <= comp.bandwidth(); ++d) {
        const int p = q + d;
        if (p < -W || p > W) continue;
        M(p + W, q + W) += comp.coefficient(d) * factor;
      }
    }
  }
  for (const SmoothingEntry& e : spec.smoothing) {
    if (std::abs(e.p) <= W && std::abs(e.q) <= W) M(e.p + W, e.q + W) += e.v;
  }
  for (int p = -W; p <= W; ++p) {
    const double rw = sobolev_weight(p, spec.s - spec.order);
    M.row(p + W) *= rw;
  }
  for (int q = -W; q <= W; ++q) {
    const double cw = sobolev_weight(q, -spec.s);
    M.col(q + W) *= cw;
  }
  return M;
}

IndexReport analytic_index(const GOperatorSpec& spec, const IndexOptions& opt) {
  check_mode_action(spec.action);
  int smooth_reach = 0;
  for (const SmoothingEntry& e : spec.smoothing)
    smooth_reach = std::max({smooth_reach, std::abs(e.p), std::abs(e.q)});
  const int pad = spec.coefficient_bandwidth() + opt.pad_extra + smooth_reach;

  IndexReport rep;
  rep.sv_threshold = opt.sv_threshold;
  rep.pad = pad;

  int run = 0;
  long long run_index = 0;
  int run_start = 0;

  std::vector<int> ladder = opt.ladder;
  if (ladder.empty())
    for (int N = opt.N_start; N <= opt.N_max; N += opt.N_step) ladder.push_back(N);
  std::sort(ladder.begin(), ladder.end());

  for (int N : ladder) {
    if (N < 1) fail(Errc::WindowTooSmall, "truncation sizes must be >= 1");
    const int W = N + pad;
    const Eigen::MatrixXcd big = operator_matrix(spec, W);
    const int cols = 2 * N + 1;
    const Eigen::MatrixXcd fwd = big.middleCols(pad, cols);
    const Eigen::MatrixXcd adj = big.adjoint().middleCols(pad, cols);

    const KernelCount kc = count_small_singulars(fwd, opt.sv_threshold, opt.gap_min);
    const KernelCount cc = count_small_singulars(adj, opt.sv_threshold, opt.gap_min);

    IndexRow row;
    row.N = N;
    row.dim_ker = kc.dim;
    row.dim_coker = cc.dim;
    row.index = static_cast<long long>(kc.dim) - cc.dim;
    row.gap_ker = kc.gap;
    row.gap_coker = cc.gap;
    row.clean = kc.clean && cc.clean;
    rep.rows.push_back(row);

    if (row.clean && (run == 0 || row.index == run_index)) {
      if (run == 0) {
        run_index = row.index;
        run_start = N;
      }
      ++run;
      if (run >= opt.consecutive) {
        rep.index = run_index;
        rep.stabilized = true;
        rep.stabilized_at = run_start;
        return rep;
      }
    } else if (row.clean) {
      run = 1;
      run_index = row.index;
      run_start = N;
    } else {
      run = 0;
    }
  }
  if (!rep.rows.empty()) rep.index = rep.rows.back().index;
  return rep;
}

Eigen::MatrixXcd dilation_shift_matrix(const ActionSpec& a, int g, int N,
                                       int oversample) {
  if (a.kind != ActionKind::DilationSphere || a.dim_m != 1)
    fail(Errc::UnsupportedAction,
         "the mode realization of the dilation shift needs the 1-sphere");
  // angle map of g^{-1} in the global parametrization
  const double beta = std::pow(a.alpha, -g);
  const double stretch = std::max(beta, 1.0 / beta);
  const int n = 2 * N + 1;
  long long Qll = static_cast<long long>(
      std::ceil(static_cast<double>(oversample) * n * stretch));
  if (Qll > (1 << 22)) fail(Errc::QuadratureFailure, "quadrature grid would be too large");
  int Q = static_cast<int>(Qll);
  if (Q % 2 != 0) ++Q;

  Eigen::VectorXd w(Q), f(Q);
  for (int j = 0; j < Q; ++j) {
    const double u = kTwoPi * j / Q;
    const double sh = std::sin(0.5 * u), ch = std::cos(0.5 * u);
    w(j) = 2.0 * std::atan2(beta * sh, ch);
    f(j) = std::sqrt(beta / (ch * ch + beta * beta * sh * sh));
  }

  Eigen::MatrixXcd E(n, Q);
  for (int p = -N; p <= N; ++p)
    for (int j = 0; j < Q; ++j)
      E(p + N, j) = std::polar(1.0 / Q, -p * (kTwoPi * j / Q));
  Eigen::MatrixXcd F(Q, n);
  for (int j = 0; j < Q; ++j)
    for (int q = -N; q <= N; ++q)
      F(j, q + N) = std::polar(f(j), q * w(j));
  return E * F;
}

Eigen::MatrixXcd realize_shift(const ActionSpec& a, int g, double s, int N,
                               int oversample) {
  if (a.kind == ActionKind::DilationSphere) {
    Eigen::MatrixXcd M = dilation_shift_matrix(a, g, N, oversample);
    if (s != 0.0) {
      for (int p = -N; p <= N; ++p) M.row(p + N) *= sobolev_weight(p, -s);
      for (int q = -N; q <= N; ++q) M.col(q + N) *= sobolev_weight(q, s);
    }
    return M;
  }
  return shift_matrix(a, g, N);
}

Eigen::MatrixXcd realize_coefficient(const CosphereFunction& f, int order, double s,
                                     int N) {
  Eigen::MatrixXcd M = coefficient_matrix(f, order, N);
  for (int p = -N; p <= N; ++p) M.row(p + N) *= sobolev_weight(p, s - order);
  for (int q = -N; q <= N; ++q) M.col(q + N) *= sobolev_weight(q, -s);
  return M;
}

TruncatedRealization realize_operator(const GOperatorSpec& spec, int N) {
  TruncatedRealization out;
  out.N = N;
  out.s = spec.s;
  out.matrix = operator_matrix(spec, N);
  return out;
}

}  // namespace gidx
