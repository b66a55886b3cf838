#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "gidx/crossed.hpp"

namespace gidx {

// Finite-rank mode-basis perturbation v |e_p><e_q|; smoothing, so it never
// moves the index.
struct SmoothingEntry {
  int p = 0;
  int q = 0;
  Complex v = 0.0;
};

// Concrete operator sum_g Op(a_g) T_g on the circle: per-component coefficient
// symbols quantized at order `order` with the positive weight (1+q^2)^{order/2},
// realized between Sobolev levels s and s-order.
struct GOperatorSpec {
  ActionSpec action;
  int order = 0;
  double s = 0.0;
  std::map<int, CosphereFunction> terms;
  std::vector<SmoothingEntry> smoothing;

  explicit GOperatorSpec(ActionSpec act, int order_ = 0, double s_ = 0.0)
      : action(std::move(act)), order(order_), s(s_) {}

  void add_term(int g, const CosphereFunction& f);
  CrossedSymbol symbol() const;  // principal part; smoothing entries drop out
  int coefficient_bandwidth() const;
};

// Fourier-mode matrices on the window [-W..W] (index = mode + W).

// Shift T_g of an isometric circle action: diagonal phases e^{-i q g theta}.
Eigen::MatrixXcd shift_matrix(const ActionSpec& a, int g, int W);

// Order-m quantization of one cosphere coefficient: entry (p,q) is
// fhat_{comp(q)}(p-q) (1+q^2)^{m/2}; mode 0 joins the positive component.
Eigen::MatrixXcd coefficient_matrix(const CosphereFunction& f, int order, int W);

// Full mode matrix of the operator, conjugated to l^2 by the Sobolev weights
// (1+q^2)^{sigma/2} on both sides.
Eigen::MatrixXcd operator_matrix(const GOperatorSpec& spec, int W);

struct IndexRow {
  int N = 0;
  int dim_ker = 0;
  int dim_coker = 0;
  long long index = 0;
  double gap_ker = 0.0;
  double gap_coker = 0.0;
  bool clean = false;
};

struct IndexReport {
  std::vector<IndexRow> rows;
  long long index = 0;
  bool stabilized = false;
  int stabilized_at = 0;
  double sv_threshold = 0.0;
  int pad = 0;
};

struct IndexOptions {
  int N_start = 16;
  int N_step = 16;
  int N_max = 160;
  std::vector<int> ladder;     // explicit truncation list; overrides the ramp
  double sv_threshold = 1e-7;  // singular values below count as kernel
  double gap_min = 10.0;       // separation demanded around the threshold
  int consecutive = 3;         // equal clean rows required to stabilize
  int pad_extra = 4;
};

// Kernel and cokernel dimensions from column-restricted truncations: the full
// band of rows reachable from modes [-N..N] is kept, so restricted vectors are
// mapped exactly and square-truncation boundary artifacts never appear. The
// cokernel side runs the same count on the adjoint.
IndexReport analytic_index(const GOperatorSpec& spec, const IndexOptions& opt = {});

// Unitary half-density realization of the dilation shift on Fourier modes
// [-N..N]: matrix of u -> u(w(u)) sqrt(w'(u)) for the inverse-dilation angle
// map w. Quadrature is oversampled by the angle-map stretch alpha^{-|g|}.
Eigen::MatrixXcd dilation_shift_matrix(const ActionSpec& a, int g, int N,
                                       int oversample = 8);

// A mode-basis truncation of the realized operator at Sobolev level s.
struct TruncatedRealization {
  int N = 0;
  double s = 0.0;
  Eigen::MatrixXcd matrix;
};

// Shift realization between the same Sobolev level on both sides. Isometric
// actions give exact diagonal phases (the scaling drops out); dilations give
// the quadrature half-density matrix, exactly unitary only at s = 0.
Eigen::MatrixXcd realize_shift(const ActionSpec& a, int g, double s, int N,
                               int oversample = 8);

// One coefficient quantized at `order` and scaled to act H^s -> H^{s-order}.
Eigen::MatrixXcd realize_coefficient(const CosphereFunction& f, int order, double s,
                                     int N);

// The assembled operator: sum of realize_coefficient * realize_shift plus the
// smoothing entries, identical to the matrix the index routine factorizes.
TruncatedRealization realize_operator(const GOperatorSpec& spec, int N);

}  // namespace gidx
