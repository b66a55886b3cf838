#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "gidx/bandlimited.hpp"
#include "gidx/geometry.hpp"

namespace gidx {

// Function on the cosphere bundle of a circle-like base: one trigonometric
// polynomial of the base angle per orientation component (0: positive
// multiples of the angle form, 1: negative).
class CosphereFunction {
 public:
  CosphereFunction() = default;
  CosphereFunction(Bandlimited pos, Bandlimited neg);

  static CosphereFunction constant(Complex value);
  // Nonzero on a single component only.
  static CosphereFunction one_sided(int comp, Bandlimited f);
  static CosphereFunction both(Bandlimited f);

  const Bandlimited& component(int comp) const;
  Bandlimited& component(int comp);
  int bandwidth() const;
  bool near_zero(double tol = 1e-14) const;

  Complex eval(double angle, int comp) const { return component(comp).eval(angle); }
  double sup_norm() const;
  double min_abs() const;

  CosphereFunction translated(double t) const;   // angle -> angle + t, both components
  CosphereFunction conjugated() const;           // pointwise complex conjugate
  CosphereFunction derivative() const;           // d/d(angle)

  CosphereFunction& operator+=(const CosphereFunction& o);
  CosphereFunction& operator*=(Complex c);
  friend CosphereFunction operator+(CosphereFunction a, const CosphereFunction& b) {
    return a += b;
  }
  friend CosphereFunction operator-(const CosphereFunction& a, const CosphereFunction& b);
  friend CosphereFunction operator*(const CosphereFunction& a, const CosphereFunction& b);
  friend CosphereFunction operator*(Complex c, CosphereFunction f) { return f *= c; }

 private:
  Bandlimited comp_[2];
};

// Pullback of a coefficient by the inverse action of k: (P_k f)(x) = f(k^{-1} x).
// For a rotation by angle t per step this is the translate x -> f(x - k t).
CosphereFunction pullback(const ActionSpec& a, int k, const CosphereFunction& f);

// Element of the symbol crossed product: finitely many group terms, each a
// cosphere function, together with the operator order. The product twists the
// right factor by the pullback: (ab)(g) = sum_{k+l=g} a(k) P_k(b(l)).
struct CrossedSymbol {
  ActionSpec action;
  int order = 0;
  std::map<int, CosphereFunction> terms;  // group element -> coefficient

  explicit CrossedSymbol(ActionSpec act, int order_ = 0)
      : action(std::move(act)), order(order_) {}

  void add_term(int g, const CosphereFunction& f);
  const CosphereFunction* term(int g) const;     // nullptr when absent
  CosphereFunction term_or_zero(int g) const;
  int support_radius() const;                    // max |g| over stored terms
  int coefficient_bandwidth() const;             // max bandwidth over terms
  void prune(double tol = 1e-14);

  CrossedSymbol adjoint() const;                 // a*(g) = P_g conj(a(-g))
};

CrossedSymbol cp_identity(const ActionSpec& a);
CrossedSymbol cp_mul(const CrossedSymbol& A, const CrossedSymbol& B);
CrossedSymbol cp_add(const CrossedSymbol& A, const CrossedSymbol& B);
CrossedSymbol cp_scale(Complex c, const CrossedSymbol& A);
double cp_sup_distance(const CrossedSymbol& A, const CrossedSymbol& B);

// Termwise base-variable derivative; a derivation for the twisted product
// because pullbacks are translations and commute with d/dx.
CrossedSymbol cp_derivative(const CrossedSymbol& A);

struct InverseOptions {
  int max_support = 512;        // largest half-support tried for the inverse
  double residual_tol = 1e-9;   // two-sided sup residual accepted
  int samples = 256;            // sample points per coefficient
  double prune_tol = 1e-13;     // coefficient pruning threshold
};

// Inverse in the crossed product, computed pointwise from finite sections of
// the trajectory matrices and projected back to trigonometric coefficients.
// Throws NotInvertible / InverseResidualTooLarge / SupportExceeded.
CrossedSymbol cp_inverse(const CrossedSymbol& A, const InverseOptions& opt = {});

// Trajectory matrix: row g, column g+h hold the term h evaluated at the
// g-inverse-moved anchor (for a rotation: angle x0 - g*theta), scaled by the
// order-homogeneity stretch of row g. Z-actions use the window {-N..N}
// (row_origin = -N); finite cyclic actions use rows {0..k-1} (row_origin = 0).
struct TrajectoryMatrix {
  int N = 0;
  int row_origin = 0;
  Eigen::MatrixXcd M;
};

TrajectoryMatrix trajectory_matrix(const CrossedSymbol& A, const CotangentPoint& cp, int N);

// Conjugated by the weighted-space unitaries: row weight density_mu at s-order,
// column weight density_mu at s. Pure shifts become constant-modulus diagonals.
TrajectoryMatrix unitarized_matrix(const CrossedSymbol& A, const CotangentPoint& cp,
                                   double s, int N);

// e-component of b (da): sum_h b(h) P_h( d/dx a(-h) ), the integrand of the
// index form on the cosphere components.
CosphereFunction e_component_form(const CrossedSymbol& A, const CrossedSymbol& B_inv);

}  // namespace gidx
