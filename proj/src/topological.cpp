#include "gidx/topological.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gidx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

long long winding_number(const std::vector<Complex>& loop) {
  if (loop.size() < 4) fail(Errc::QuadratureFailure, "winding loop needs at least 4 samples");
  double mx = 0.0;
  for (const Complex& z : loop) mx = std::max(mx, std::abs(z));
  if (mx == 0.0) fail(Errc::VanishingDeterminant, "winding loop is identically zero");
  double total = 0.0;
  const size_t n = loop.size();
  for (size_t j = 0; j < n; ++j) {
    const Complex a = loop[j];
    const Complex b = loop[(j + 1) % n];
    if (std::abs(a) < 1e-12 * mx)
      fail(Errc::VanishingDeterminant, "winding loop passes through zero");
    const double step = std::arg(b / a);
    if (std::abs(step) > std::numbers::pi / 2.0)
      fail(Errc::QuadratureFailure, "winding sampling too coarse for a reliable count");
    total += step;
  }
  const double turns = total / kTwoPi;
  const long long w = std::llround(turns);
  if (std::abs(turns - w) > 1e-6)
    fail(Errc::SnapFailure, "summed phase does not close to an integer turn count");
  return w;
}

Complex index_density_coefficient(int n) {
  if (n < 1 || n > 3)
    fail(Errc::UnsupportedAction, "index density coefficients tabulated for n <= 3");
  const Complex two_pi_i(0.0, kTwoPi);
  return factorial(n - 1) / (std::pow(two_pi_i, n) * factorial(2 * n - 1));
}

ZIndexResult index_formula_Z(const CrossedSymbol& A, const InverseOptions& inv_opt) {
  if (A.action.kind != ActionKind::RotationZ)
    fail(Errc::UnsupportedAction,
         "the component-loop index form is built for the irrational rotation");

  const CrossedSymbol B = cp_inverse(A, inv_opt);
  const CosphereFunction e = e_component_form(A, B);

  ZIndexResult res;
  Complex raw = 0.0;
  for (int c = 0; c < 2; ++c) {
    // the loop integral of a trigonometric polynomial is its mean coefficient
    const Complex mean = e.component(c).coefficient(0);
    const Complex integral = mean / Complex(0.0, 1.0);  // (1/2 pi i) * 2 pi * mean
    res.component_integrals[c] = integral;
    raw += static_cast<double>(component_sign(c)) * integral;
  }
  raw *= static_cast<double>(orientation_sign());
  const long long snapped = std::llround(raw.real());
  res.snap_residual = std::abs(raw - Complex(static_cast<double>(snapped), 0.0));
  if (res.snap_residual > 1e-6) {
    std::ostringstream os;
    os << "index form evaluates to " << raw.real() << " + " << raw.imag()
       << "i, too far from an integer";
    fail(Errc::SnapFailure, os.str());
  }
  res.index = snapped;
  return res;
}

FiniteIndexResult index_finite_free(const CrossedSymbol& A, int grid) {
  if (!A.action.finite())
    fail(Errc::NotCyclic, "quotient windings exist for finite cyclic actions");
  const int k = A.action.k;
  CyclicMatrixSymbol ms(A);

  FiniteIndexResult res;
  for (int c = 0; c < 2; ++c) {
    int n = grid;
    const int n_cap = 1 << 17;
    long long w = 0;
    for (;;) {
      std::vector<Complex> loop(n);
      for (int j = 0; j < n; ++j) loop[j] = ms.det_at(kTwoPi * j / n, c);
      double mx = 0.0, mn = std::numeric_limits<double>::infinity();
      for (const Complex& z : loop) {
        mx = std::max(mx, std::abs(z));
        mn = std::min(mn, std::abs(z));
      }
      if (mn < 1e-10 * std::max(mx, 1.0))
        fail(Errc::VanishingDeterminant,
             "matrix-symbol determinant vanishes on the base; no finite index");
      try {
        w = winding_number(loop);
        break;
      } catch (const Error& err) {
        if (err.code() != Errc::QuadratureFailure || 2 * n > n_cap) throw;
        n *= 2;
      }
    }
    res.winding_full[c] = w;
    if (w % k != 0)
      fail(Errc::SnapFailure,
           "determinant winding is not divisible by the group order");
    res.winding_quotient[c] = w / k;
  }
  res.index = orientation_sign() * (component_sign(0) * res.winding_quotient[0] +
                                    component_sign(1) * res.winding_quotient[1]);
  return res;
}

}  // namespace gidx
