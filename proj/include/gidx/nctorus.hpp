#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gidx/errors.hpp"

namespace gidx {

using Complex = std::complex<double>;

// Symmetric sample grid [-L, L) with step h; both 1/h and theta/h are kept
// integral so that unit shifts and theta-shifts land exactly on grid points.
struct LineGrid {
  double L = 12.0;
  double h = 0.0;
  int n = 0;
  double x(int i) const { return -L + h * i; }
};

// Rapidly decaying function on the line, sampled on a LineGrid. The decay
// certificate is the largest modulus over the outer 10% of the grid; bridge
// operations demand it below 1e-10.
struct LineFunction {
  LineGrid grid;
  std::vector<Complex> v;

  double decay_certificate() const;
};

// Bridge parameters. The requested angle is snapped to the nearest fraction
// p/q with q <= 128, and that snapped value is used consistently by every
// operator on both sides, so the correspondence residuals are unaffected by
// the snap. theta = 1 degenerates the commutation phase to 1.
struct TorusParams {
  double theta_requested = 0.0;
  double theta = 0.0;  // snapped value p/q
  int p = 0;
  int q = 0;
  int c = 1;           // grid refinement: h = 1/(q*c)
  LineGrid grid;
  int n_phi = 0;       // phi-points on [0, theta): p*c
  int n_psi = 0;       // psi-points on [0, 1)
  int n_max = 0;       // largest |n| contributing to the wrap sum
};

TorusParams make_torus_params(double theta, double L = 12.0, int min_per_unit = 64);

LineFunction sample_line(const TorusParams& par, const std::function<Complex(double)>& f);

// Section of the twisting line bundle over the 2-torus, stored on the grid
// [0, theta) x [0, 1). Extending past the seam multiplies by e^{-2 pi i psi}
// per theta-step; seam_defect records how well the wrap sum honors that.
struct TorusSection {
  TorusParams par;
  Eigen::MatrixXcd v;  // n_phi x n_psi
  double seam_defect = 0.0;
};

// The wrap isomorphism f |-> sum_n f(phi + theta n) e^{2 pi i n psi}.
TorusSection schwartz_to_torus(const LineFunction& f, const TorusParams& par);

// Inverse via psi-Fourier coefficient extraction; exact on the aligned grid.
LineFunction torus_to_schwartz(const TorusSection& g);

// Generators on the line: U = shift by one, V = product with e^{-2 pi i x/theta},
// position = multiplication by x, momentum = -i d/dx (spectral).
enum class LineOp { U, V, Position, Momentum };

Eigen::MatrixXcd apply_torus_op(LineOp op, const TorusSection& g);
LineFunction apply_line_op(LineOp op, const LineFunction& f, const TorusParams& par);

// Sup-norm residual || wrap(op_line f) - op_torus(wrap f) ||_inf for one row
// of the correspondence table. The position row pairs -i (theta/2 pi) d/dpsi
// with multiplication by the fundamental-domain coordinate phi, which is what
// the wrap sum reproduces exactly; phi-derivatives are spectral in the seam-
// twisted periodic basis, psi-derivatives spectral in the Fourier sum.
double verify_correspondence(LineOp op, const LineFunction& f, const TorusParams& par);

// Residual of U V = e^{-2 pi i / theta} V U between the torus realizations.
double commutation_phase_residual(const LineFunction& f, const TorusParams& par);

}  // namespace gidx
