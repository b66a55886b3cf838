#include "gidx/ellipticity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gidx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double smallest_singular(const Eigen::MatrixXcd& M) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  return svd.singularValues().tail(1)(0);
}

// Roots of sum_i q[i] w^i (q.front() and q.back() nonzero) via the companion
// matrix.
std::vector<Complex> poly_roots(const std::vector<Complex>& q) {
  const int d = static_cast<int>(q.size()) - 1;
  if (d <= 0) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -q[i] / q[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<Complex> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

// Strips coefficients below tol (relative to the largest) from both ends;
// returns {h_lo, polynomial} or an empty polynomial when everything is tiny.
std::pair<int, std::vector<Complex>> strip_laurent(int h_min,
                                                   const std::vector<Complex>& c) {
  double mx = 0.0;
  for (const Complex& v : c) mx = std::max(mx, std::abs(v));
  const double tol = mx * 1e-13;
  int lo = 0, hi = static_cast<int>(c.size()) - 1;
  while (lo <= hi && std::abs(c[lo]) <= tol) ++lo;
  while (hi >= lo && std::abs(c[hi]) <= tol) --hi;
  if (lo > hi) return {0, {}};
  return {h_min + lo, std::vector<Complex>(c.begin() + lo, c.begin() + hi + 1)};
}

}  // namespace

const char* verdict_name(EllipticityVerdict v) {
  switch (v) {
    case EllipticityVerdict::Elliptic: return "elliptic";
    case EllipticityVerdict::Inconclusive: return "inconclusive";
    case EllipticityVerdict::NotElliptic: return "not-elliptic";
  }
  return "unknown";
}

EllipticityReport check_elliptic_isometric(const CrossedSymbol& A,
                                           const EllipticityOptions& opt) {
  if (!A.action.isometric())
    fail(Errc::UnsupportedAction,
         "stability probe covers isometric actions; dilation ellipticity goes "
         "through pole circles and weight intervals");

  EllipticityReport rep;

  if (A.action.finite()) {
    CyclicMatrixSymbol ms(A);
    const double minsv = ms.min_singular(opt.scan_grid);
    rep.windows = {opt.scan_grid};
    rep.min_singular = {minsv};
    rep.final_min_sv = minsv;
    if (minsv <= opt.vanish_tol) {
      rep.verdict = EllipticityVerdict::NotElliptic;
      rep.detail = "matrix symbol is singular on the base";
    } else {
      rep.verdict = EllipticityVerdict::Elliptic;
      rep.detail = "matrix symbol uniformly invertible (exact finite criterion)";
    }
    return rep;
  }

  const double theta = kTwoPi * A.action.step_turns();

  // Exact obstruction: a whole trajectory column vanishing.
  double col_min = std::numeric_limits<double>::infinity();
  double col_angle = 0.0;
  int col_comp = 0;
  for (int c = 0; c < 2; ++c) {
    for (int j = 0; j < opt.scan_grid; ++j) {
      const double z = kTwoPi * j / opt.scan_grid;
      double colmax = 0.0;
      for (const auto& [h, f] : A.terms)
        colmax = std::max(colmax, std::abs(f.eval(z + h * theta, c)));
      if (colmax < col_min) {
        col_min = colmax;
        col_angle = z;
        col_comp = c;
      }
    }
  }
  if (col_min < opt.vanish_tol) {
    std::ostringstream os;
    os << "trajectory column vanishes near angle " << col_angle << " on component "
       << col_comp;
    rep.verdict = EllipticityVerdict::NotElliptic;
    rep.detail = os.str();
    rep.final_min_sv = 0.0;
    rep.windows = {};
    return rep;
  }

  for (int N : opt.windows) {
    double wmin = std::numeric_limits<double>::infinity();
    for (int c = 0; c < 2; ++c) {
      for (int j = 0; j < opt.probe_points; ++j) {
        const double x = kTwoPi * j / opt.probe_points;
        const CotangentPoint cp = circle_cotangent(x, c == 0 ? +1 : -1);
        TrajectoryMatrix T = unitarized_matrix(A, cp, opt.s, N);
        wmin = std::min(wmin, smallest_singular(T.M));
      }
    }
    rep.windows.push_back(N);
    rep.min_singular.push_back(wmin);
  }
  rep.final_min_sv = rep.min_singular.back();

  bool all_decay = rep.min_singular.size() > 1;
  for (size_t i = 0; i + 1 < rep.min_singular.size(); ++i)
    if (rep.min_singular[i + 1] >= opt.decay_factor * rep.min_singular[i])
      all_decay = false;

  if (all_decay) {
    rep.verdict = EllipticityVerdict::Inconclusive;
    rep.detail = "window minima decay persistently; no stable lower bound";
  } else if (rep.final_min_sv < opt.floor_sv) {
    rep.verdict = EllipticityVerdict::Inconclusive;
    rep.detail = "window minima sit below the stability floor";
  } else {
    rep.verdict = EllipticityVerdict::Elliptic;
    std::ostringstream os;
    os << "window minima stabilize at " << rep.final_min_sv;
    rep.detail = os.str();
  }
  return rep;
}

double PoleSymbol::radius(double s) const {
  const double e = s - 0.5 * dim_m;
  return std::pow(alpha, which == 0 ? e : -e);
}

Complex PoleSymbol::eval(int comp, double s, double phase) const {
  if (comp != 0 && comp != 1) fail(Errc::PreconditionFailed, "component index must be 0 or 1");
  const Complex w = std::polar(radius(s), phase);
  Complex acc = 0.0;
  for (int h = h_min; h <= h_max; ++h)
    acc += coeff[comp][h - h_min] * std::pow(w, Complex(h, 0.0));
  return acc;
}

std::vector<Complex> PoleSymbol::roots(int comp) const {
  if (comp != 0 && comp != 1) fail(Errc::PreconditionFailed, "component index must be 0 or 1");
  auto [h_lo, q] = strip_laurent(h_min, coeff[comp]);
  (void)h_lo;
  return poly_roots(q);
}

PoleSymbol pole_symbol(const CrossedSymbol& A, int which_pole) {
  if (A.action.kind != ActionKind::DilationSphere)
    fail(Errc::UnsupportedAction, "pole data exists for the dilation action");
  if (which_pole != 0 && which_pole != 1)
    fail(Errc::PreconditionFailed, "pole selector must be 0 or 1");
  if (A.terms.empty()) fail(Errc::VanishingSymbol, "symbol has no terms");

  PoleSymbol p;
  p.alpha = A.action.alpha;
  p.dim_m = A.action.dim_m;
  p.which = which_pole;
  p.h_min = A.terms.begin()->first;
  p.h_max = A.terms.rbegin()->first;
  const double angle = which_pole == 0 ? 0.0 : std::numbers::pi;
  for (int c = 0; c < 2; ++c) {
    p.coeff[c].assign(p.h_max - p.h_min + 1, Complex(0.0));
    for (const auto& [h, f] : A.terms) {
      if (A.action.dim_m == 1) {
        p.coeff[c][h - p.h_min] = f.eval(angle, c);
      } else {
        if (f.bandwidth() != 0)
          fail(Errc::UnsupportedAction,
               "higher-dimensional pole data needs constant coefficients");
        p.coeff[c][h - p.h_min] = f.component(c).coefficient(0);
      }
    }
  }
  return p;
}

namespace {

double pole_circle_min(const PoleSymbol& p, double s, int phases = 720) {
  double mn = std::numeric_limits<double>::infinity();
  for (int c = 0; c < 2; ++c)
    for (int j = 0; j < phases; ++j)
      mn = std::min(mn, std::abs(p.eval(c, s, kTwoPi * j / phases)));
  return mn;
}

// Smallest singular values of unitarized trajectory windows at an equatorial
// anchor, over the window ladder; certifies interior invertibility at one s.
bool interior_weight_ok(const CrossedSymbol& A, double s, const SIntervalOptions& opt,
                        std::string* why) {
  Point eq;
  eq.chart = 0;
  eq.coord.assign(A.action.dim_m, 0.0);
  eq.coord[0] = 1.0;
  std::vector<CotangentPoint> anchors;
  if (A.action.dim_m == 1) {
    anchors.push_back({eq, {+1.0}});
    anchors.push_back({eq, {-1.0}});
  } else {
    std::vector<double> xi(A.action.dim_m, 0.0);
    xi[0] = 1.0;
    anchors.push_back({eq, xi});
  }

  std::vector<double> minima;
  for (int N : opt.interior_windows) {
    double wmin = std::numeric_limits<double>::infinity();
    for (const CotangentPoint& cp : anchors)
      wmin = std::min(wmin, smallest_singular(unitarized_matrix(A, cp, s, N).M));
    minima.push_back(wmin);
  }
  bool all_decay = minima.size() > 1;
  for (size_t i = 0; i + 1 < minima.size(); ++i)
    if (minima[i + 1] >= opt.decay_factor * minima[i]) all_decay = false;
  if (all_decay || minima.back() < opt.floor_sv) {
    if (why) {
      std::ostringstream os;
      os << "interior truncation heuristic rejects s = " << s
         << " (window minima down to " << minima.back() << ")";
      *why = os.str();
    }
    return false;
  }
  return true;
}

}  // namespace

SIntervalResult elliptic_s_interval(const CrossedSymbol& A, const SIntervalOptions& opt) {
  if (A.action.kind != ActionKind::DilationSphere)
    fail(Errc::UnsupportedAction, "weight intervals exist for the dilation action");
  for (const auto& [h, f] : A.terms)
    if (f.bandwidth() != 0)
      fail(Errc::UnsupportedAction,
           "weight intervals are computed for constant-coefficient symbols");
  if (A.terms.empty()) fail(Errc::VanishingSymbol, "symbol has no terms");
  if (!(opt.s_lo < opt.s_hi)) fail(Errc::PreconditionFailed, "weight range is empty");

  SIntervalResult res;
  const double half_m = 0.5 * A.action.dim_m;
  const double log_inv_alpha = std::log(1.0 / A.action.alpha);
  const PoleSymbol p0 = pole_symbol(A, 0);
  const PoleSymbol pinf = pole_symbol(A, 1);

  const int n = std::max(2, opt.grid);
  for (int i = 0; i < n; ++i) {
    SIntervalRow row;
    row.s = opt.s_lo + (opt.s_hi - opt.s_lo) * i / (n - 1);
    row.pole0_min = pole_circle_min(p0, row.s);
    row.poleinf_min = pole_circle_min(pinf, row.s);
    res.evidence.push_back(row);
  }

  // Each root modulus rho sends one pole circle through a root at the weights
  // m/2 -+ log(rho)/log(1/alpha); those crossings bound the candidate interval
  // around the central weight m/2.
  for (int c = 0; c < 2; ++c) {
    auto [h_lo, q] = strip_laurent(p0.h_min, p0.coeff[c]);
    (void)h_lo;
    if (q.empty()) {
      res.reason = "symbol component vanishes identically";
      return res;
    }
    for (const Complex& r : poly_roots(q)) {
      const double rho = std::abs(r);
      res.root_moduli.push_back(rho);
      const double v = std::log(rho) / log_inv_alpha;
      res.crossings.push_back(half_m - v);
      res.crossings.push_back(half_m + v);
    }
  }
  std::sort(res.crossings.begin(), res.crossings.end());

  double cand_lo = -std::numeric_limits<double>::infinity();
  double cand_hi = std::numeric_limits<double>::infinity();
  for (double c : res.crossings) {
    if (std::abs(c - half_m) <= opt.tol) {
      res.reason = "symbol root modulus 1 pins both pole circles at the central weight";
      return res;
    }
    if (c < half_m)
      cand_lo = std::max(cand_lo, c);
    else
      cand_hi = std::min(cand_hi, c);
  }

  res.clipped_lo = cand_lo < opt.s_lo;
  res.clipped_hi = cand_hi > opt.s_hi;
  const double lo = std::max(cand_lo, opt.s_lo);
  const double hi = std::min(cand_hi, opt.s_hi);
  if (!(hi - lo > opt.tol)) {
    res.reason = "pole crossings leave no room inside the searched weight range";
    return res;
  }

  // Heuristic interior confirmation at sampled weights strictly inside.
  std::string why;
  for (double t : {1.0 / 6.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 5.0 / 6.0}) {
    const double s = lo + t * (hi - lo);
    if (!interior_weight_ok(A, s, opt, &why)) {
      res.reason = why;
      return res;
    }
  }
  res.interior_confirmed = true;

  res.empty = false;
  res.lo = res.clipped_lo ? lo : cand_lo;
  res.hi = res.clipped_hi ? hi : cand_hi;
  for (SIntervalRow& row : res.evidence)
    row.inside = row.s > res.lo + opt.tol && row.s < res.hi - opt.tol;
  return res;
}

CyclicMatrixSymbol::CyclicMatrixSymbol(CrossedSymbol A) : sym_(std::move(A)) {
  if (!sym_.action.finite())
    fail(Errc::NotCyclic, "matrix symbols exist for finite cyclic actions");
}

Eigen::MatrixXcd CyclicMatrixSymbol::at(double x, int comp) const {
  const int k = sym_.action.k;
  const double step = kTwoPi / k;
  Eigen::MatrixXcd M(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      M(i, j) = sym_.term_or_zero(j - i).eval(x - i * step, comp);
  return M;
}

Complex CyclicMatrixSymbol::det_at(double x, int comp) const {
  return at(x, comp).determinant();
}

double CyclicMatrixSymbol::min_singular(int grid) const {
  double mn = std::numeric_limits<double>::infinity();
  for (int c = 0; c < 2; ++c) {
    for (int j = 0; j < grid; ++j) {
      const double x = kTwoPi * j / grid;
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(at(x, c));
      mn = std::min(mn, svd.singularValues().tail(1)(0));
    }
  }
  return mn;
}

CyclicMatrixSymbol matrix_symbol(const CrossedSymbol& A) { return CyclicMatrixSymbol(A); }

}  // namespace gidx
