#include "gidx/uniformization.hpp"

#include <cmath>
#include <limits>

namespace gidx {

namespace {

void check_torus_action(const ActionSpec& a) {
  if (a.kind != ActionKind::CircleOnTorus)
    fail(Errc::UnsupportedAction, "averaging is defined for the circle action on the 2-torus");
}

}  // namespace

Eigen::MatrixXcd averaging_projection(int N) {
  if (N < 0) fail(Errc::PreconditionFailed, "mode window must be nonnegative");
  const int n = 2 * N + 1;
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int n1 = -N; n1 <= N; ++n1) {
    const int idx = (n1 + N) * n + N;  // n2 == 0
    P(idx, idx) = 1.0;
  }
  return P;
}

double torus_mode_multiplier(double alpha, int n1, int n2) {
  const double base = static_cast<double>(n1) * n1 + static_cast<double>(n2) * n2;
  return n2 == 0 ? base + alpha * n1 * n1 : base;
}

TorusModeTable torus_example_modes(double alpha, int N) {
  if (N < 0) fail(Errc::PreconditionFailed, "mode window must be nonnegative");
  const int n = 2 * N + 1;
  TorusModeTable t;
  t.N = N;
  t.alpha = alpha;
  t.lambda.resize(n, n);
  t.normalized.resize(n, n);
  for (int n1 = -N; n1 <= N; ++n1) {
    for (int n2 = -N; n2 <= N; ++n2) {
      const double lam = torus_mode_multiplier(alpha, n1, n2);
      t.lambda(n1 + N, n2 + N) = lam;
      const double lap = static_cast<double>(n1) * n1 + static_cast<double>(n2) * n2;
      t.normalized(n1 + N, n2 + N) = lap > 0 ? lam / lap : 0.0;
      if (lam == 0.0) ++t.zero_modes;
    }
  }
  return t;
}

TransverseReport transverse_elliptic_check(const AveragedLaplacianSpec& spec) {
  check_torus_action(spec.action);
  TransverseReport rep;
  rep.averaged_value = 1.0 + spec.alpha;
  rep.free_value = 1.0;
  if (std::abs(rep.averaged_value) <= 1e-12) {
    rep.transversally_elliptic = false;
    rep.offending =
        "normalized multiplier vanishes on the invariant modes (n2 = 0, all n1)";
  } else {
    rep.transversally_elliptic = true;
  }
  return rep;
}

IndexReport invariant_restriction_index(const AveragedLaplacianSpec& spec,
                                        const std::vector<int>& N_list) {
  const TransverseReport tr = transverse_elliptic_check(spec);
  if (!tr.transversally_elliptic)
    fail(Errc::PreconditionFailed,
         "operator is not transversally elliptic: " + tr.offending);
  if (N_list.empty()) fail(Errc::PreconditionFailed, "mode window list is empty");

  IndexReport rep;
  rep.sv_threshold = 1e-7;
  rep.pad = 0;

  int run = 0;
  long long run_index = 0;
  int run_start = 0;
  for (int N : N_list) {
    const TorusModeTable t = torus_example_modes(spec.alpha, N);
    // The multiplier is real and diagonal, so kernel and cokernel coincide
    // with the zero set and the spectral gap is the smallest nonzero modulus.
    double smallest_nonzero = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t.lambda.rows(); ++i)
      for (int j = 0; j < t.lambda.cols(); ++j) {
        const double v = std::abs(t.lambda(i, j));
        if (v > 0.0 && v < smallest_nonzero) smallest_nonzero = v;
      }
    IndexRow row;
    row.N = N;
    row.dim_ker = t.zero_modes;
    row.dim_coker = t.zero_modes;
    row.index = 0;
    row.gap_ker = smallest_nonzero / rep.sv_threshold;
    row.gap_coker = row.gap_ker;
    row.clean = true;
    rep.rows.push_back(row);

    if (run == 0 || row.index != run_index) {
      run = 0;
      run_index = row.index;
      run_start = N;
    }
    ++run;
    if (run >= 3 && !rep.stabilized) {
      rep.index = run_index;
      rep.stabilized = true;
      rep.stabilized_at = run_start;
    }
  }
  if (!rep.stabilized && !rep.rows.empty()) rep.index = rep.rows.back().index;
  return rep;
}

}  // namespace gidx
