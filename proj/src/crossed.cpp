#include "gidx/crossed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gidx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double base_angle(const ActionSpec& a, const Point& p) {
  switch (a.kind) {
    case ActionKind::RotationZ:
    case ActionKind::CyclicRotation:
      return p.coord[0];
    case ActionKind::DilationSphere:
      return sphere_angle(p);
    default:
      fail(Errc::UnsupportedAction, "no scalar base angle for this action");
  }
}

}  // namespace

CosphereFunction::CosphereFunction(Bandlimited pos, Bandlimited neg) {
  comp_[0] = std::move(pos);
  comp_[1] = std::move(neg);
}

CosphereFunction CosphereFunction::constant(Complex value) {
  return CosphereFunction(Bandlimited::constant(value), Bandlimited::constant(value));
}

CosphereFunction CosphereFunction::one_sided(int comp, Bandlimited f) {
  CosphereFunction r;
  r.component(comp) = std::move(f);
  return r;
}

CosphereFunction CosphereFunction::both(Bandlimited f) {
  Bandlimited copy = f;
  return CosphereFunction(std::move(copy), std::move(f));
}

const Bandlimited& CosphereFunction::component(int comp) const {
  if (comp != 0 && comp != 1) fail(Errc::PreconditionFailed, "component index must be 0 or 1");
  return comp_[comp];
}

Bandlimited& CosphereFunction::component(int comp) {
  if (comp != 0 && comp != 1) fail(Errc::PreconditionFailed, "component index must be 0 or 1");
  return comp_[comp];
}

int CosphereFunction::bandwidth() const {
  return std::max(comp_[0].bandwidth(), comp_[1].bandwidth());
}

bool CosphereFunction::near_zero(double tol) const {
  return comp_[0].near_zero(tol) && comp_[1].near_zero(tol);
}

double CosphereFunction::sup_norm() const {
  return std::max(comp_[0].sup_norm(), comp_[1].sup_norm());
}

double CosphereFunction::min_abs() const {
  return std::min(comp_[0].min_abs(), comp_[1].min_abs());
}

CosphereFunction CosphereFunction::translated(double t) const {
  return CosphereFunction(comp_[0].translated(t), comp_[1].translated(t));
}

CosphereFunction CosphereFunction::conjugated() const {
  return CosphereFunction(comp_[0].conjugated(), comp_[1].conjugated());
}

CosphereFunction CosphereFunction::derivative() const {
  return CosphereFunction(comp_[0].derivative(), comp_[1].derivative());
}

CosphereFunction& CosphereFunction::operator+=(const CosphereFunction& o) {
  comp_[0] += o.comp_[0];
  comp_[1] += o.comp_[1];
  return *this;
}

CosphereFunction& CosphereFunction::operator*=(Complex c) {
  comp_[0] *= c;
  comp_[1] *= c;
  return *this;
}

CosphereFunction operator-(const CosphereFunction& a, const CosphereFunction& b) {
  return CosphereFunction(a.component(0) - b.component(0), a.component(1) - b.component(1));
}

CosphereFunction operator*(const CosphereFunction& a, const CosphereFunction& b) {
  return CosphereFunction(a.component(0) * b.component(0), a.component(1) * b.component(1));
}

CosphereFunction pullback(const ActionSpec& a, int k, const CosphereFunction& f) {
  switch (a.kind) {
    case ActionKind::RotationZ:
    case ActionKind::CyclicRotation:
      return f.translated(-kTwoPi * k * a.step_turns());
    case ActionKind::DilationSphere:
      // dilations fix the angle components only of constants
      if (f.bandwidth() == 0) return f;
      fail(Errc::UnsupportedAction, "dilation pullback supported for constants only");
    default:
      fail(Errc::UnsupportedAction, "pullback undefined for this action");
  }
}

void CrossedSymbol::add_term(int g, const CosphereFunction& f) {
  const int gc = action.canonical(g);
  auto it = terms.find(gc);
  if (it == terms.end())
    terms.emplace(gc, f);
  else
    it->second += f;
}

const CosphereFunction* CrossedSymbol::term(int g) const {
  auto it = terms.find(action.canonical(g));
  return it == terms.end() ? nullptr : &it->second;
}

CosphereFunction CrossedSymbol::term_or_zero(int g) const {
  const CosphereFunction* t = term(g);
  return t ? *t : CosphereFunction();
}

int CrossedSymbol::support_radius() const {
  int r = 0;
  for (const auto& [g, f] : terms)
    if (!f.near_zero()) r = std::max(r, std::abs(g));
  return r;
}

int CrossedSymbol::coefficient_bandwidth() const {
  int b = 0;
  for (const auto& [g, f] : terms) b = std::max(b, f.bandwidth());
  return b;
}

void CrossedSymbol::prune(double tol) {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.near_zero(tol) ? terms.erase(it) : std::next(it);
}

CrossedSymbol CrossedSymbol::adjoint() const {
  CrossedSymbol out(action, order);
  for (const auto& [h, f] : terms) {
    const int g = action.inverse(h);
    out.add_term(g, pullback(action, g, f.conjugated()));
  }
  return out;
}

CrossedSymbol cp_identity(const ActionSpec& a) {
  CrossedSymbol out(a, 0);
  out.add_term(0, CosphereFunction::constant(1.0));
  return out;
}

CrossedSymbol cp_mul(const CrossedSymbol& A, const CrossedSymbol& B) {
  CrossedSymbol out(A.action, A.order + B.order);
  for (const auto& [k, ak] : A.terms)
    for (const auto& [l, bl] : B.terms)
      out.add_term(A.action.add(k, l), ak * pullback(A.action, k, bl));
  return out;
}

CrossedSymbol cp_add(const CrossedSymbol& A, const CrossedSymbol& B) {
  CrossedSymbol out = A;
  for (const auto& [g, f] : B.terms) out.add_term(g, f);
  return out;
}

CrossedSymbol cp_scale(Complex c, const CrossedSymbol& A) {
  CrossedSymbol out = A;
  for (auto& [g, f] : out.terms) f *= c;
  return out;
}

double cp_sup_distance(const CrossedSymbol& A, const CrossedSymbol& B) {
  double d = 0.0;
  for (const auto& [g, f] : A.terms)
    d = std::max(d, (f - B.term_or_zero(g)).sup_norm());
  for (const auto& [g, f] : B.terms)
    if (!A.term(g)) d = std::max(d, f.sup_norm());
  return d;
}

CrossedSymbol cp_derivative(const CrossedSymbol& A) {
  CrossedSymbol out(A.action, A.order);
  for (const auto& [g, f] : A.terms) out.add_term(g, f.derivative());
  return out;
}

TrajectoryMatrix trajectory_matrix(const CrossedSymbol& A, const CotangentPoint& cp, int N) {
  const ActionSpec& act = A.action;
  TrajectoryMatrix out;

  if (act.finite()) {
    // Regular representation at the anchor: k x k, rows g in {0..k-1}.
    const int k = act.k;
    const double x0 = base_angle(act, cp.base);
    const double step = kTwoPi * act.step_turns();
    const int comp = component_of(act, cp);
    out.N = k;
    out.row_origin = 0;
    out.M = Eigen::MatrixXcd::Zero(k, k);
    for (int g = 0; g < k; ++g)
      for (int c = 0; c < k; ++c) {
        const CosphereFunction* f = A.term(c - g);
        if (f) out.M(g, c) = f->eval(x0 - g * step, comp);
      }
    return out;
  }

  const bool dil = act.kind == ActionKind::DilationSphere;
  if (act.kind != ActionKind::RotationZ && !dil)
    fail(Errc::UnsupportedAction,
         "trajectory windows are built for Z-actions on circle-like bases");
  if (dil && act.dim_m > 1 && A.coefficient_bandwidth() > 0)
    fail(Errc::UnsupportedAction,
         "dilation trajectories in dimension > 1 need constant coefficients");
  if (N < 1) fail(Errc::WindowTooSmall, "window half-size must be >= 1");

  const int n = 2 * N + 1;
  out.N = N;
  out.row_origin = -N;
  out.M = Eigen::MatrixXcd::Zero(n, n);

  std::vector<double> angle(n);
  std::vector<int> comp(n);
  std::vector<double> stretch_pow(n);
  const bool scalar_base = !dil || act.dim_m == 1;
  for (int r = 0; r < n; ++r) {
    const int g = r - N;
    // Row g lives at the g-inverse-moved anchor; the covector component is
    // read off there, and the order homogeneity contributes the stretch power.
    const Point pg = apply_action(act, -g, cp.base);
    angle[r] = scalar_base ? base_angle(act, pg) : 0.0;
    comp[r] = scalar_base ? component_of(act, codifferential(act, -g, cp)) : 0;
    stretch_pow[r] = std::pow(covector_stretch(cp, act, g), A.order);
  }
  for (int r = 0; r < n; ++r) {
    for (const auto& [h, f] : A.terms) {
      const int c = r + h;  // column g' = g + h
      if (c < 0 || c >= n) continue;
      out.M(r, c) = f.eval(angle[r], comp[r]) * stretch_pow[r];
    }
  }
  return out;
}

TrajectoryMatrix unitarized_matrix(const CrossedSymbol& A, const CotangentPoint& cp,
                                   double s, int N) {
  TrajectoryMatrix out = trajectory_matrix(A, cp, N);
  const int n = static_cast<int>(out.M.rows());
  Eigen::VectorXd row_w(n), col_w(n);
  for (int r = 0; r < n; ++r) {
    const int g = out.row_origin + r;
    row_w(r) = std::sqrt(density_mu({cp, s - A.order}, A.action, g));
    col_w(r) = 1.0 / std::sqrt(density_mu({cp, s}, A.action, g));
  }
  out.M = row_w.asDiagonal() * out.M * col_w.asDiagonal();
  return out;
}

CosphereFunction e_component_form(const CrossedSymbol& A, const CrossedSymbol& B_inv) {
  CosphereFunction acc;
  for (const auto& [h, bh] : B_inv.terms) {
    const CosphereFunction da = A.term_or_zero(A.action.inverse(h)).derivative();
    acc += bh * pullback(A.action, h, da);
  }
  return acc;
}

namespace {

// Inverse coefficients for a finite cyclic action: pointwise inversion of the
// k x k regular-representation matrix at each sample, per component.
CrossedSymbol cyclic_inverse(const CrossedSymbol& A, const InverseOptions& opt) {
  const int k = A.action.k;
  const double step = kTwoPi / k;
  int S = std::max(opt.samples, 2 * k);
  const int kMaxSamples = 1 << 15;
  double best_residual = -1.0;
  CrossedSymbol best(A.action, -A.order);

  while (S <= kMaxSamples) {
    CrossedSymbol B(A.action, -A.order);
    std::vector<std::vector<std::vector<Complex>>> vals(
        2, std::vector<std::vector<Complex>>(k, std::vector<Complex>(S)));
    Eigen::MatrixXcd M(k, k);
    for (int c = 0; c < 2; ++c) {
      for (int j = 0; j < S; ++j) {
        const double x = kTwoPi * j / S;
        for (int i = 0; i < k; ++i)
          for (int jj = 0; jj < k; ++jj)
            M(i, jj) = A.term_or_zero(jj - i).eval(x - i * step, c);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
        Eigen::VectorXcd row0 = lu.transpose().solve(Eigen::VectorXcd::Unit(k, 0));
        if (!row0.allFinite())
          fail(Errc::NotInvertible, "cyclic symbol matrix is singular at a sample point");
        for (int h = 0; h < k; ++h) vals[c][h][j] = row0(h);
      }
    }
    const int bw = (S - 1) / 2;
    for (int h = 0; h < k; ++h)
      B.add_term(h, CosphereFunction(Bandlimited::from_samples(vals[0][h], bw),
                                     Bandlimited::from_samples(vals[1][h], bw)));
    B.prune(opt.prune_tol);
    const double res = std::max(cp_sup_distance(cp_mul(A, B), cp_identity(A.action)),
                                cp_sup_distance(cp_mul(B, A), cp_identity(A.action)));
    if (res <= opt.residual_tol) return B;
    if (best_residual < 0.0 || res < best_residual) {
      best_residual = res;
      best = std::move(B);
    }
    S *= 2;
  }
  fail(Errc::InverseResidualTooLarge,
       "inverse residual stayed at " + std::to_string(best_residual) +
           " after sample refinement");
}

}  // namespace

CrossedSymbol cp_inverse(const CrossedSymbol& A, const InverseOptions& opt) {
  if (A.action.finite()) return cyclic_inverse(A, opt);
  if (A.action.kind != ActionKind::RotationZ)
    fail(Errc::UnsupportedAction, "crossed-product inversion needs an isometric circle action");

  const double theta = kTwoPi * A.action.step_turns();
  const int Ra = std::max(1, A.support_radius());
  int R = 4 * Ra + 16;
  int S = opt.samples;
  double best_residual = -1.0;
  int stalls = 0;

  while (R <= opt.max_support) {
    const int n = 2 * R + 1;
    CrossedSymbol B(A.action, -A.order);
    std::vector<std::vector<std::vector<Complex>>> vals(
        2, std::vector<std::vector<Complex>>(n, std::vector<Complex>(S)));
    Eigen::MatrixXcd M(n, n);
    for (int c = 0; c < 2; ++c) {
      for (int j = 0; j < S; ++j) {
        const double x = kTwoPi * j / S;
        M.setZero();
        for (int r = 0; r < n; ++r) {
          const double angle = x - (r - R) * theta;
          for (const auto& [h, f] : A.terms) {
            const int col = r + h;
            if (col >= 0 && col < n) M(r, col) = f.eval(angle, c);
          }
        }
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
        // row R of M^{-1} via one factorization and a transposed solve
        Eigen::VectorXcd row = lu.transpose().solve(Eigen::VectorXcd::Unit(n, R));
        if (!row.allFinite())
          fail(Errc::NotInvertible, "trajectory section is singular at a sample point");
        for (int idx = 0; idx < n; ++idx) vals[c][idx][j] = row(idx);
      }
    }
    const int bw = std::min((S - 1) / 2, S / 2 - 1);
    for (int idx = 0; idx < n; ++idx) {
      // entry (center, center + h) of the inverse section is b_h
      const int h = idx - R;
      CosphereFunction f(Bandlimited::from_samples(vals[0][idx], bw),
                         Bandlimited::from_samples(vals[1][idx], bw));
      if (!f.near_zero(opt.prune_tol)) B.add_term(h, f);
    }
    const double res = std::max(cp_sup_distance(cp_mul(A, B), cp_identity(A.action)),
                                cp_sup_distance(cp_mul(B, A), cp_identity(A.action)));
    if (res <= opt.residual_tol) {
      B.prune(opt.prune_tol);
      return B;
    }
    if (best_residual >= 0.0 && res > 0.5 * best_residual && ++stalls >= 2)
      fail(Errc::InverseResidualTooLarge,
           "inverse residual stalled at " + std::to_string(res));
    if (best_residual < 0.0 || res < best_residual) best_residual = res;
    R *= 2;
    S = std::min(2 * S, 4096);
  }
  fail(Errc::SupportExceeded,
       "inverse support exceeded " + std::to_string(opt.max_support) +
           " (residual " + std::to_string(best_residual) + ")");
}

}  // namespace gidx
