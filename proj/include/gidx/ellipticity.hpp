#pragma once

#include <string>
#include <vector>

#include "gidx/crossed.hpp"

namespace gidx {

enum class EllipticityVerdict { Elliptic, Inconclusive, NotElliptic };

const char* verdict_name(EllipticityVerdict v);

struct EllipticityReport {
  EllipticityVerdict verdict = EllipticityVerdict::Inconclusive;
  std::vector<int> windows;          // truncation sizes inspected
  std::vector<double> min_singular;  // per window, min over probe points
  double final_min_sv = 0.0;
  std::string detail;
};

struct EllipticityOptions {
  std::vector<int> windows = {32, 64, 128, 256};
  int probe_points = 16;       // anchor angles per component
  double decay_factor = 0.9;   // a per-step drop below this factor counts as decay
  double floor_sv = 1e-6;      // smallest singular value accepted as stable
  double vanish_tol = 1e-9;    // cutoff for exact symbol vanishing
  double s = 0.0;              // weight parameter for the unitarized windows
  int scan_grid = 1024;        // grid for the exact-vanishing / cyclic scans
};

// Stability probe for isometric actions. Rotations: smallest singular values
// of unitarized trajectory windows over a ladder of sizes; a persistent decay
// is reported as Inconclusive, an exact vanishing of a trajectory column as
// NotElliptic. Cyclic actions get the exact pointwise matrix criterion.
EllipticityReport check_elliptic_isometric(const CrossedSymbol& A,
                                           const EllipticityOptions& opt = {});

// Laurent data of a dilation symbol frozen at one of the two fixed points.
// The associated circle radius is alpha^{s-m/2} at pole 0 and alpha^{m/2-s}
// at pole infinity; a pure one-step shift unitarizes to that constant modulus.
struct PoleSymbol {
  double alpha = 0.5;
  int dim_m = 1;
  int which = 0;  // 0: pole "0", 1: pole "infinity"
  int h_min = 0;
  int h_max = 0;
  std::vector<Complex> coeff[2];  // per orientation component, h_min..h_max

  double radius(double s) const;
  Complex eval(int comp, double s, double phase) const;
  std::vector<Complex> roots(int comp) const;  // of the polynomial factor
};

PoleSymbol pole_symbol(const CrossedSymbol& A, int which_pole);

struct SIntervalOptions {
  double s_lo = -4.0;          // range searched for the interval
  double s_hi = 4.0;
  int grid = 33;               // s-samples used for the evidence table
  double tol = 1e-6;           // tolerance for endpoint location
  std::vector<int> interior_windows = {24, 48, 96};
  double floor_sv = 1e-4;      // smallest window singular value accepted
  double decay_factor = 0.9;   // persistent per-step drop that flags trouble
};

struct SIntervalRow {
  double s = 0.0;
  double pole0_min = 0.0;    // min modulus of the pole-0 symbol on its circle
  double poleinf_min = 0.0;  // same at the opposite pole
  bool inside = false;
};

struct SIntervalResult {
  bool empty = true;
  double lo = 0.0;
  double hi = 0.0;             // open interval (lo, hi) when nonempty
  bool clipped_lo = false;     // endpoint truncated by the searched range
  bool clipped_hi = false;
  std::vector<double> crossings;    // all weights where a pole circle meets a root
  std::vector<double> root_moduli;  // per-component root moduli, both components
  std::vector<SIntervalRow> evidence;
  bool interior_confirmed = false;
  std::string reason;          // populated when empty
};

// Weights s for which a constant-coefficient dilation symbol stays invertible:
// the two pole circles must avoid all symbol roots, which pins candidate
// endpoints around s = m/2, and truncated unitarized trajectory windows at an
// equatorial anchor must stay uniformly invertible at sampled interior weights
// (a heuristic ladder; persistent decay empties the interval). Endpoints are
// themselves excluded.
SIntervalResult elliptic_s_interval(const CrossedSymbol& A, const SIntervalOptions& opt = {});

// Finite cyclic actions: the k x k matrix symbol of the regular
// representation, exactly multiplicative in the crossed product.
class CyclicMatrixSymbol {
 public:
  explicit CyclicMatrixSymbol(CrossedSymbol A);

  int order_k() const { return sym_.action.k; }
  Eigen::MatrixXcd at(double x, int comp) const;
  Complex det_at(double x, int comp) const;
  double min_singular(int grid = 1024) const;  // over both components

 private:
  CrossedSymbol sym_;
};

CyclicMatrixSymbol matrix_symbol(const CrossedSymbol& A);

}  // namespace gidx
