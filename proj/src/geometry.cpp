#include "gidx/geometry.hpp"

#include <cmath>
#include <numbers>

namespace gidx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double vec_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void check_dilation_point(const ActionSpec& a, const Point& p) {
  if (static_cast<int>(p.coord.size()) != a.dim_m)
    fail(Errc::ActionMismatch, "point dimension does not match the sphere dimension");
  if (p.chart != 0 && p.chart != 1) fail(Errc::ConfigError, "sphere chart must be 0 or 1");
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ConfigError: return "config-error";
    case Errc::UnsupportedAction: return "unsupported-action";
    case Errc::ActionMismatch: return "action-mismatch";
    case Errc::ChartOverflow: return "chart-overflow";
    case Errc::WindowTooSmall: return "window-too-small";
    case Errc::BandwidthExceeded: return "bandwidth-exceeded";
    case Errc::NotInvertible: return "not-invertible-at-tolerance";
    case Errc::SupportExceeded: return "support-exceeded";
    case Errc::InverseResidualTooLarge: return "inverse-residual-too-large";
    case Errc::VanishingSymbol: return "vanishing-symbol";
    case Errc::VanishingDeterminant: return "vanishing-determinant";
    case Errc::NotCyclic: return "not-cyclic";
    case Errc::SnapFailure: return "snap-failure";
    case Errc::NoStabilization: return "no-stabilization";
    case Errc::NotElliptic: return "not-elliptic";
    case Errc::QuadratureFailure: return "quadrature-failure";
    case Errc::InsufficientDecay: return "insufficient-decay";
    case Errc::PreconditionFailed: return "precondition-failed";
  }
  return "unknown-error";
}

void ManifoldSpec::validate() const {
  if (grid_size < 16 || grid_size % 2 != 0)
    fail(Errc::ConfigError, "grid_size must be >= 16 and even");
  switch (kind) {
    case ManifoldKind::Circle:
      if (dim != 1) fail(Errc::ConfigError, "circle has dimension 1");
      break;
    case ManifoldKind::Sphere:
      if (dim < 1) fail(Errc::ConfigError, "sphere dimension must be >= 1");
      break;
    case ManifoldKind::Torus2:
      if (dim != 2) fail(Errc::ConfigError, "torus has dimension 2");
      break;
  }
}

ActionSpec ActionSpec::rotation(double theta_turns, bool irrational, int grid) {
  ActionSpec a;
  a.kind = ActionKind::RotationZ;
  a.theta_turns = theta_turns;
  a.irrational = irrational;
  a.manifold = {ManifoldKind::Circle, 1, grid};
  a.validate();
  return a;
}

ActionSpec ActionSpec::dilation(double alpha, int dim_m, int grid) {
  ActionSpec a;
  a.kind = ActionKind::DilationSphere;
  a.alpha = alpha;
  a.dim_m = dim_m;
  a.manifold = {ManifoldKind::Sphere, dim_m, grid};
  a.validate();
  return a;
}

ActionSpec ActionSpec::cyclic(int k, int grid) {
  ActionSpec a;
  a.kind = ActionKind::CyclicRotation;
  a.k = k;
  a.manifold = {ManifoldKind::Circle, 1, grid};
  a.validate();
  return a;
}

ActionSpec ActionSpec::circle_on_torus(int grid) {
  ActionSpec a;
  a.kind = ActionKind::CircleOnTorus;
  a.manifold = {ManifoldKind::Torus2, 2, grid};
  a.validate();
  return a;
}

void ActionSpec::validate() const {
  manifold.validate();
  switch (kind) {
    case ActionKind::RotationZ:
      if (!(theta_turns > 0.0 && theta_turns < 1.0))
        fail(Errc::ConfigError, "rotation angle must lie in (0, 1) turns");
      break;
    case ActionKind::DilationSphere:
      if (!(alpha > 0.0 && alpha < 1.0))
        fail(Errc::ConfigError, "dilation ratio must lie in (0, 1)");
      if (dim_m < 1) fail(Errc::ConfigError, "sphere dimension must be >= 1");
      break;
    case ActionKind::CyclicRotation:
      if (k < 2) fail(Errc::ConfigError, "cyclic order must be >= 2");
      break;
    case ActionKind::CircleOnTorus:
      break;
  }
}

int ActionSpec::add(int a, int b) const { return finite() ? canonical(a + b) : a + b; }

int ActionSpec::inverse(int g) const { return finite() ? canonical(-g) : -g; }

int ActionSpec::canonical(int g) const {
  if (!finite()) return g;
  int r = g % k;
  return r < 0 ? r + k : r;
}

double ActionSpec::step_turns() const {
  switch (kind) {
    case ActionKind::RotationZ: return theta_turns;
    case ActionKind::CyclicRotation: return 1.0 / k;
    default: fail(Errc::UnsupportedAction, "no generator angle for this action");
  }
}

double wrap_2pi(double x) {
  double t = x / kTwoPi;
  t -= std::floor(t);
  return t * kTwoPi;
}

Point circle_point(double x) { return Point{0, {wrap_2pi(x)}}; }

CotangentPoint circle_cotangent(double x, int sign) {
  return CotangentPoint{circle_point(x), {sign >= 0 ? 1.0 : -1.0}};
}

Point torus_point(double x1, double x2) { return Point{0, {wrap_2pi(x1), wrap_2pi(x2)}}; }

Point sphere1_point_from_angle(double u) {
  u = wrap_2pi(u);
  const double c = std::cos(u / 2.0), s = std::sin(u / 2.0);
  if (std::abs(s) <= std::abs(c)) return Point{0, {s / c}};
  return Point{1, {c / s}};
}

double sphere_angle(const Point& p) {
  if (p.coord.size() != 1) fail(Errc::PreconditionFailed, "angle defined for dimension 1 only");
  if (p.chart == 0) return wrap_2pi(2.0 * std::atan(p.coord[0]));
  return wrap_2pi(std::numbers::pi - 2.0 * std::atan(p.coord[0]));
}

Point sphere_pole0(int dim_m) { return Point{0, std::vector<double>(dim_m, 0.0)}; }

Point sphere_poleInf(int dim_m) { return Point{1, std::vector<double>(dim_m, 0.0)}; }

Point sphere_chart_point(int chart, const std::vector<double>& coord) {
  return Point{chart, coord};
}

CotangentPoint sphere_cotangent(const Point& base, const std::vector<double>& xi) {
  const double n = vec_norm(xi);
  if (n == 0.0) fail(Errc::ConfigError, "covector must be nonzero");
  std::vector<double> u(xi);
  for (auto& v : u) v /= n;
  return CotangentPoint{base, u};
}

Point point_in_chart(const Point& p, int chart) {
  if (p.chart == chart) return p;
  const double n = vec_norm(p.coord);
  if (n == 0.0) fail(Errc::PreconditionFailed, "pole has no image in the opposite chart");
  std::vector<double> c(p.coord);
  for (auto& v : c) v /= n * n;
  return Point{chart, c};
}

Point apply_action(const ActionSpec& a, int g, const Point& p) {
  switch (a.kind) {
    case ActionKind::RotationZ:
    case ActionKind::CyclicRotation: {
      if (p.coord.size() != 1) fail(Errc::ActionMismatch, "circle point expected");
      double t = p.coord[0] / kTwoPi + g * a.step_turns();
      t -= std::floor(t);
      return Point{0, {t * kTwoPi}};
    }
    case ActionKind::DilationSphere: {
      check_dilation_point(a, p);
      const double nx = vec_norm(p.coord);
      if (nx == 0.0) return p;  // poles are fixed
      // log of the in-chart scale factor alpha^{+g} (chart 0) / alpha^{-g} (chart 1)
      const double lf = (p.chart == 0 ? g : -g) * std::log(a.alpha);
      const double m_out = lf + std::log(nx);
      if (std::abs(m_out) > 700.0)
        fail(Errc::ChartOverflow, "dilation orbit left the representable range");
      std::vector<double> dir(p.coord);
      for (auto& v : dir) v /= nx;
      if (m_out <= 0.0) {
        for (auto& v : dir) v *= std::exp(m_out);
        return Point{p.chart, dir};
      }
      for (auto& v : dir) v *= std::exp(-m_out);
      return Point{1 - p.chart, dir};
    }
    case ActionKind::CircleOnTorus:
      fail(Errc::UnsupportedAction, "circle factor needs a real group element");
  }
  fail(Errc::UnsupportedAction, "unknown action");
}

Point apply_action_real(const ActionSpec& a, double g, const Point& p) {
  if (a.kind != ActionKind::CircleOnTorus)
    fail(Errc::UnsupportedAction, "real group elements only for the circle factor");
  if (p.coord.size() != 2) fail(Errc::ActionMismatch, "torus point expected");
  return torus_point(p.coord[0], p.coord[1] + g);
}

std::vector<double> action_jacobian(const ActionSpec& a, int g, const Point& p) {
  const int d = static_cast<int>(p.coord.size());
  std::vector<double> jac(d * d, 0.0);
  switch (a.kind) {
    case ActionKind::RotationZ:
    case ActionKind::CyclicRotation:
      jac[0] = 1.0;
      return jac;
    case ActionKind::DilationSphere: {
      check_dilation_point(a, p);
      const double nx = vec_norm(p.coord);
      const double lf = (p.chart == 0 ? g : -g) * std::log(a.alpha);
      if (nx == 0.0) {
        const double c = std::exp(lf);
        for (int i = 0; i < d; ++i) jac[i * d + i] = c;
        return jac;
      }
      const double m_out = lf + std::log(nx);
      if (m_out <= 0.0) {
        const double c = std::exp(lf);
        for (int i = 0; i < d; ++i) jac[i * d + i] = c;
        return jac;
      }
      // chart transition composed with the dilation: scale * (I - 2 dd^T)
      const double c = std::exp(lf - 2.0 * m_out);
      std::vector<double> dir(p.coord);
      for (auto& v : dir) v /= nx;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          jac[i * d + j] = c * ((i == j ? 1.0 : 0.0) - 2.0 * dir[i] * dir[j]);
      return jac;
    }
    case ActionKind::CircleOnTorus:
      for (int i = 0; i < d; ++i) jac[i * d + i] = 1.0;
      return jac;
  }
  fail(Errc::UnsupportedAction, "unknown action");
}

CotangentPoint codifferential(const ActionSpec& a, int g, const CotangentPoint& cp) {
  Point out = apply_action(a, g, cp.base);
  if (a.isometric() || a.kind != ActionKind::DilationSphere)
    return CotangentPoint{out, cp.xi};

  const int d = static_cast<int>(cp.base.coord.size());
  const double nx = vec_norm(cp.base.coord);
  const double lf = (cp.base.chart == 0 ? g : -g) * std::log(a.alpha);
  std::vector<double> y(cp.xi);
  if (nx == 0.0 || lf + std::log(nx) <= 0.0) {
    // J = c I, so (J^T)^{-1} = (1/c) I: direction unchanged
    return CotangentPoint{out, y};
  }
  // J = c (I - 2 dd^T); the reflection is symmetric and involutive
  std::vector<double> dir(cp.base.coord);
  for (auto& v : dir) v /= nx;
  double dot = 0.0;
  for (int i = 0; i < d; ++i) dot += dir[i] * y[i];
  for (int i = 0; i < d; ++i) y[i] -= 2.0 * dot * dir[i];
  const double n = vec_norm(y);
  for (auto& v : y) v /= n;
  return CotangentPoint{out, y};
}

int component_of(const ActionSpec& a, const CotangentPoint& cp) {
  switch (a.kind) {
    case ActionKind::RotationZ:
    case ActionKind::CyclicRotation:
      return cp.xi[0] > 0.0 ? 0 : 1;
    case ActionKind::DilationSphere:
      if (a.dim_m != 1)
        fail(Errc::UnsupportedAction, "cosphere components enumerated for dimension 1 only");
      // chart-1 coordinate reverses the angle orientation
      if (cp.base.chart == 0) return cp.xi[0] > 0.0 ? 0 : 1;
      return cp.xi[0] > 0.0 ? 1 : 0;
    default:
      fail(Errc::UnsupportedAction, "no component enumeration for this action");
  }
}

double density_mu(const WeightSpec& w, const ActionSpec& a, int g) {
  if (a.isometric()) return 1.0;
  check_dilation_point(a, w.p.base);
  const double E = a.dim_m - 2.0 * w.s;
  const double nx = vec_norm(w.p.base.coord);
  if (nx == 0.0) {
    // poles: fixed points, single-chart trajectory
    const double sgn = (w.p.base.chart == 0) ? 1.0 : -1.0;
    return std::pow(a.alpha, sgn * g * E);
  }
  const bool contract_side = (w.p.base.chart == 0) ? (g >= 0) : (g <= 0);
  const double base = std::pow(a.alpha, std::abs(g) * E);
  if (contract_side || g == 0) return base;
  return base * std::pow(nx, 4.0 * w.s - 2.0 * a.dim_m);
}

double covector_stretch(const CotangentPoint& p, const ActionSpec& a, int g) {
  if (a.isometric()) return 1.0;
  check_dilation_point(a, p.base);
  const double nx = vec_norm(p.base.coord);
  const double sgn = (p.base.chart == 0) ? 1.0 : -1.0;
  if (nx == 0.0) return std::pow(a.alpha, -sgn * g);
  const bool contract_side = (p.base.chart == 0) ? (g >= 0) : (g <= 0);
  if (contract_side) return std::pow(a.alpha, -sgn * g);
  return std::pow(a.alpha, sgn * g) * nx * nx;
}

double density_closed_form(const ActionSpec& a, DensityBranch branch, int g, double s) {
  if (a.kind != ActionKind::DilationSphere)
    fail(Errc::UnsupportedAction, "closed-form densities defined for the dilation action");
  const double E = a.dim_m - 2.0 * s;
  switch (branch) {
    case DensityBranch::Interior: return std::pow(a.alpha, std::abs(g) * E);
    case DensityBranch::Pole0: return std::pow(a.alpha, g * E);
    case DensityBranch::PoleInf: return std::pow(a.alpha, -g * E);
  }
  fail(Errc::ConfigError, "unknown density branch");
}

}  // namespace gidx
