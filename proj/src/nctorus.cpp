#include "gidx/nctorus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gidx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDecayTol = 1e-10;

// Best rational approximation p/q, q <= q_max, by walking the continued
// fraction convergents.
std::pair<int, int> snap_fraction(double x, int q_max) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rem = x;
  long long best_p = 1, best_q = 1;
  double best_err = std::abs(x - 1.0);
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(rem);
    const long long a = static_cast<long long>(fl);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > q_max || q2 <= 0) break;
    if (q2 >= 1) {
      const double err = std::abs(x - static_cast<double>(p2) / q2);
      if (err < best_err) {
        best_err = err;
        best_p = p2;
        best_q = q2;
      }
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = rem - fl;
    if (frac < 1e-12) break;
    rem = 1.0 / frac;
  }
  return {static_cast<int>(best_p), static_cast<int>(best_q)};
}

void check_decay(const LineFunction& f) {
  const double cert = f.decay_certificate();
  if (cert >= kDecayTol)
    fail(Errc::InsufficientDecay,
         "edge values reach " + std::to_string(cert) + "; the wrap sum needs decay");
}

void check_compatible(const LineFunction& f, const TorusParams& par) {
  if (f.grid.n != par.grid.n || f.grid.L != par.grid.L)
    fail(Errc::ConfigError, "line function was sampled on a different grid");
}

// Looks up f at the grid point x = i0 * h (i0 counted from 0 at the origin);
// out-of-range reads are zero by the decay certificate.
Complex at_origin_index(const LineFunction& f, long long i0) {
  const long long i = i0 + f.grid.n / 2;
  if (i < 0 || i >= f.grid.n) return 0.0;
  return f.v[static_cast<size_t>(i)];
}

// Spectral derivative on a uniform periodic grid of length `period`.
std::vector<Complex> periodic_derivative(const std::vector<Complex>& v, double period) {
  const int n = static_cast<int>(v.size());
  std::vector<Complex> hat(n, Complex(0.0));
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += v[j] * std::polar(1.0, -kTwoPi * k * j / n);
    hat[k] = acc / static_cast<double>(n);
  }
  std::vector<Complex> out(n, Complex(0.0));
  for (int k = 0; k < n; ++k) {
    int freq = k <= n / 2 ? k : k - n;
    if (2 * std::abs(freq) == n) freq = 0;  // drop the unmatched Nyquist mode
    const Complex factor = Complex(0.0, kTwoPi * freq / period);
    for (int j = 0; j < n; ++j)
      out[j] += factor * hat[k] * std::polar(1.0, kTwoPi * k * j / n);
  }
  return out;
}

}  // namespace

double LineFunction::decay_certificate() const {
  const int edge = std::max(1, grid.n / 10);
  double mx = 0.0;
  for (int i = 0; i < edge; ++i) {
    mx = std::max(mx, std::abs(v[i]));
    mx = std::max(mx, std::abs(v[grid.n - 1 - i]));
  }
  return mx;
}

TorusParams make_torus_params(double theta, double L, int min_per_unit) {
  if (!(theta > 0.0) || theta > 1.0)
    fail(Errc::ConfigError, "theta must lie in (0, 1]");
  if (!(L > 1.0)) fail(Errc::ConfigError, "line half-length must exceed 1");

  TorusParams par;
  par.theta_requested = theta;
  auto [p, q] = snap_fraction(theta, 128);
  par.p = p;
  par.q = q;
  par.theta = static_cast<double>(p) / q;
  par.c = std::max(1, (min_per_unit + q - 1) / q);

  par.grid.h = 1.0 / (static_cast<double>(q) * par.c);
  const int half = static_cast<int>(std::llround(L * q * par.c));
  par.grid.L = half * par.grid.h;  // keep L itself on the grid
  par.grid.n = 2 * half;

  par.n_phi = p * par.c;
  par.n_max = static_cast<int>(std::floor(par.grid.L / par.theta)) + 2;
  par.n_psi = 2 * par.n_max + 2;
  return par;
}

LineFunction sample_line(const TorusParams& par, const std::function<Complex(double)>& f) {
  LineFunction out;
  out.grid = par.grid;
  out.v.resize(par.grid.n);
  for (int i = 0; i < par.grid.n; ++i) out.v[i] = f(par.grid.x(i));
  return out;
}

TorusSection schwartz_to_torus(const LineFunction& f, const TorusParams& par) {
  check_compatible(f, par);
  check_decay(f);

  const int stride = par.n_phi;  // theta-shift in origin-indexed grid steps
  TorusSection g;
  g.par = par;
  g.v = Eigen::MatrixXcd::Zero(par.n_phi, par.n_psi);

  // One extra phi-row at phi = theta feeds the seam check below.
  Eigen::MatrixXcd ext = Eigen::MatrixXcd::Zero(1, par.n_psi);
  for (int i = 0; i <= par.n_phi; ++i) {
    for (int j = 0; j < par.n_psi; ++j) {
      const double psi = static_cast<double>(j) / par.n_psi;
      Complex acc = 0.0;
      for (int n = -par.n_max; n <= par.n_max; ++n) {
        const Complex fv = at_origin_index(f, i + static_cast<long long>(n) * stride);
        if (fv != Complex(0.0)) acc += fv * std::polar(1.0, kTwoPi * n * psi);
      }
      if (i < par.n_phi)
        g.v(i, j) = acc;
      else
        ext(0, j) = acc;
    }
  }
  double defect = 0.0;
  for (int j = 0; j < par.n_psi; ++j) {
    const double psi = static_cast<double>(j) / par.n_psi;
    defect = std::max(defect,
                      std::abs(ext(0, j) - g.v(0, j) * std::polar(1.0, -kTwoPi * psi)));
  }
  g.seam_defect = defect;
  return g;
}

LineFunction torus_to_schwartz(const TorusSection& g) {
  const TorusParams& par = g.par;
  LineFunction f;
  f.grid = par.grid;
  f.v.assign(par.grid.n, Complex(0.0));
  for (int i = 0; i < par.grid.n; ++i) {
    const long long i0 = static_cast<long long>(i) - par.grid.n / 2;
    long long n = i0 / par.n_phi;
    long long r = i0 % par.n_phi;
    if (r < 0) {
      r += par.n_phi;
      --n;
    }
    if (std::llabs(n) > par.n_max) continue;
    Complex acc = 0.0;
    for (int j = 0; j < par.n_psi; ++j) {
      const double psi = static_cast<double>(j) / par.n_psi;
      acc += g.v(static_cast<int>(r), j) * std::polar(1.0, -kTwoPi * n * psi);
    }
    f.v[i] = acc / static_cast<double>(par.n_psi);
  }
  return f;
}

Eigen::MatrixXcd apply_torus_op(LineOp op, const TorusSection& g) {
  const TorusParams& par = g.par;
  const int np = par.n_phi, ns = par.n_psi;
  Eigen::MatrixXcd out(np, ns);

  switch (op) {
    case LineOp::U: {
      // g(phi + 1, psi): the unit shift crosses the seam w times and picks up
      // the bundle phase e^{-2 pi i w psi}.
      const int shift = par.q * par.c;  // one unit in grid steps
      for (int i = 0; i < np; ++i) {
        const int t = i + shift;
        const int w = t / np;
        const int r = t % np;
        for (int j = 0; j < ns; ++j) {
          const double psi = static_cast<double>(j) / ns;
          out(i, j) = g.v(r, j) * std::polar(1.0, -kTwoPi * w * psi);
        }
      }
      return out;
    }
    case LineOp::V: {
      for (int i = 0; i < np; ++i) {
        const double phase = -kTwoPi * static_cast<double>(i) / (par.p * par.c);
        const Complex m = std::polar(1.0, phase);  // e^{-2 pi i phi/theta}
        for (int j = 0; j < ns; ++j) out(i, j) = m * g.v(i, j);
      }
      return out;
    }
    case LineOp::Momentum: {
      // -i d/dphi in the seam-twisted periodic basis: h(phi) =
      // g(phi,psi) e^{2 pi i psi phi/theta} is theta-periodic.
      for (int j = 0; j < ns; ++j) {
        const double psi = static_cast<double>(j) / ns;
        std::vector<Complex> h(np);
        for (int i = 0; i < np; ++i) {
          const double phi = par.grid.h * i;
          h[i] = g.v(i, j) * std::polar(1.0, kTwoPi * psi * phi / par.theta);
        }
        const std::vector<Complex> dh = periodic_derivative(h, par.theta);
        for (int i = 0; i < np; ++i) {
          const double phi = par.grid.h * i;
          const Complex un = std::polar(1.0, -kTwoPi * psi * phi / par.theta);
          const Complex dg = (dh[i] - Complex(0.0, kTwoPi * psi / par.theta) * h[i]) * un;
          out(i, j) = Complex(0.0, -1.0) * dg;
        }
      }
      return out;
    }
    case LineOp::Position: {
      // -i (theta/2 pi) d/dpsi + multiplication by phi; the psi-derivative is
      // spectral and exact because each phi-row is a finite Fourier sum.
      for (int i = 0; i < np; ++i) {
        std::vector<Complex> row(ns);
        for (int j = 0; j < ns; ++j) row[j] = g.v(i, j);
        const std::vector<Complex> dr = periodic_derivative(row, 1.0);
        const double phi = par.grid.h * i;
        for (int j = 0; j < ns; ++j)
          out(i, j) = Complex(0.0, -par.theta / kTwoPi) * dr[j] + phi * g.v(i, j);
      }
      return out;
    }
  }
  fail(Errc::ConfigError, "unknown line operator");
}

LineFunction apply_line_op(LineOp op, const LineFunction& f, const TorusParams& par) {
  check_compatible(f, par);
  LineFunction out;
  out.grid = f.grid;
  out.v.assign(f.grid.n, Complex(0.0));
  switch (op) {
    case LineOp::U: {
      const int shift = par.q * par.c;
      for (int i = 0; i < f.grid.n; ++i) {
        const int t = i + shift;
        out.v[i] = t < f.grid.n ? f.v[t] : Complex(0.0);
      }
      return out;
    }
    case LineOp::V: {
      for (int i = 0; i < f.grid.n; ++i)
        out.v[i] = f.v[i] * std::polar(1.0, -kTwoPi * f.grid.x(i) / par.theta);
      return out;
    }
    case LineOp::Position: {
      for (int i = 0; i < f.grid.n; ++i) out.v[i] = f.grid.x(i) * f.v[i];
      return out;
    }
    case LineOp::Momentum: {
      const std::vector<Complex> d = periodic_derivative(f.v, 2.0 * f.grid.L);
      for (int i = 0; i < f.grid.n; ++i) out.v[i] = Complex(0.0, -1.0) * d[i];
      return out;
    }
  }
  fail(Errc::ConfigError, "unknown line operator");
}

double verify_correspondence(LineOp op, const LineFunction& f, const TorusParams& par) {
  const TorusSection g = schwartz_to_torus(f, par);
  const Eigen::MatrixXcd torus_side = apply_torus_op(op, g);
  const LineFunction of = apply_line_op(op, f, par);
  const TorusSection line_side = schwartz_to_torus(of, par);
  return (torus_side - line_side.v).cwiseAbs().maxCoeff();
}

double commutation_phase_residual(const LineFunction& f, const TorusParams& par) {
  const TorusSection g = schwartz_to_torus(f, par);
  TorusSection tmp = g;
  tmp.v = apply_torus_op(LineOp::V, g);
  const Eigen::MatrixXcd uv = apply_torus_op(LineOp::U, tmp);
  tmp.v = apply_torus_op(LineOp::U, g);
  const Eigen::MatrixXcd vu = apply_torus_op(LineOp::V, tmp);
  const Complex phase = std::polar(1.0, -kTwoPi / par.theta);
  return (uv - phase * vu).cwiseAbs().maxCoeff();
}

}  // namespace gidx
