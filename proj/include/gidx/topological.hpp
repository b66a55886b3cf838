#pragma once

#include <array>
#include <complex>
#include <vector>

#include "gidx/crossed.hpp"
#include "gidx/ellipticity.hpp"

namespace gidx {

// Orientation bookkeeping for the two cosphere components of circle-like
// bases, calibrated so that the symbol e^{ikx} on the positive component has
// index -k and on the negative component +k.
constexpr int component_sign(int comp) { return comp == 0 ? -1 : +1; }
constexpr int orientation_sign() { return +1; }

// Winding number of a sampled closed loop. Demands a margin from zero and
// per-step phase increments below pi/2 (throws QuadratureFailure when the
// sampling is too coarse, VanishingDeterminant near zero, SnapFailure when
// the summed phase misses an integer multiple of 2 pi).
long long winding_number(const std::vector<Complex>& loop);

// Dimension-indexed normalization of the index density, (n-1)!/((2 pi i)^n (2n-1)!).
Complex index_density_coefficient(int n);

struct ZIndexResult {
  long long index = 0;
  double snap_residual = 0.0;
  std::array<Complex, 2> component_integrals{};  // (1/2 pi i) loop integral per component
};

// Topological index of an elliptic symbol over the irrational rotation: the
// crossed-product inverse feeds the e-component form, whose component means
// combine with the orientation signs.
ZIndexResult index_formula_Z(const CrossedSymbol& A, const InverseOptions& inv_opt = {});

struct FiniteIndexResult {
  long long index = 0;
  std::array<long long, 2> winding_full{};      // determinant winding, full circle
  std::array<long long, 2> winding_quotient{};  // per fundamental domain
};

// Index over a finite cyclic action: determinant windings of the matrix
// symbol per component, reduced to the quotient circle (the determinant is
// periodic with period 2 pi / k, so the full winding divides by k).
FiniteIndexResult index_finite_free(const CrossedSymbol& A, int grid = 4096);

}  // namespace gidx
