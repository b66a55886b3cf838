#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gidx/realization.hpp"

namespace gidx {

// Model operator for the circle acting on the 2-torus along its second
// coordinate: the Laplacian plus alpha times the transverse second derivative
// composed with orbit averaging. Diagonal on torus modes (n1, n2) with
//   lambda(n1, n2) = n1^2 + n2^2 + alpha * n1^2 * [n2 == 0],
// so the orbit-invariant modes n2 = 0 carry the modified multiplier.
struct AveragedLaplacianSpec {
  ActionSpec action = ActionSpec::circle_on_torus();
  double alpha = 0.0;
};

// Orbit-averaging projection on the mode window |n1|, |n2| <= N: the diagonal
// indicator of the invariant modes n2 == 0. Exactly idempotent and commuting
// with every mode multiplier that is constant along n2 = 0.
// Mode order: index = (n1 + N) * (2N + 1) + (n2 + N).
Eigen::MatrixXcd averaging_projection(int N);

double torus_mode_multiplier(double alpha, int n1, int n2);

struct TorusModeTable {
  int N = 0;
  double alpha = 0.0;
  Eigen::MatrixXd lambda;      // raw multiplier over the mode window
  Eigen::MatrixXd normalized;  // lambda / (n1^2+n2^2); pseudo-inverse zero at the origin
  int zero_modes = 0;          // multiplier zeros inside the window
};

// Mode table of the model operator together with its normalization by the
// inverse Laplacian; the origin mode is handled as a pseudo-inverse zero and
// counted among the kernel/cokernel candidates.
TorusModeTable torus_example_modes(double alpha, int N);

struct TransverseReport {
  bool transversally_elliptic = false;
  double averaged_value = 0.0;  // principal value on the invariant modes: 1 + alpha
  double free_value = 1.0;      // principal value on the remaining modes: 1
  std::string offending;        // where invertibility fails, when it does
};

// Principal invertibility transverse to the orbits: the normalized multiplier
// approaches 1 + alpha along the invariant modes and 1 elsewhere, so the check
// reduces to 1 + alpha != 0.
TransverseReport transverse_elliptic_check(const AveragedLaplacianSpec& spec);

// Kernel/cokernel dimensions of the diagonal model operator per mode window,
// assembled into the same report shape as the analytic index. Requires the
// transverse check to pass.
IndexReport invariant_restriction_index(const AveragedLaplacianSpec& spec,
                                        const std::vector<int>& N_list = {8, 16, 24});

}  // namespace gidx
