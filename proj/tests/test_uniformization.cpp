#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gidx/uniformization.hpp"

using namespace gidx;

namespace {

Eigen::MatrixXcd mode_diagonal(double alpha, int N) {
  const int n = 2 * N + 1;
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int n1 = -N; n1 <= N; ++n1)
    for (int n2 = -N; n2 <= N; ++n2) {
      const int idx = (n1 + N) * n + (n2 + N);
      D(idx, idx) = torus_mode_multiplier(alpha, n1, n2);
    }
  return D;
}

}  // namespace

TEST_CASE("averaging projection is an orthogonal projection") {
  const int N = 5;
  const Eigen::MatrixXcd P = averaging_projection(N);
  CHECK((P * P - P).cwiseAbs().maxCoeff() == 0.0);
  CHECK((P - P.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  // Rank = number of invariant modes.
  CHECK(std::lround(P.real().trace()) == 2 * N + 1);
}

TEST_CASE("projection keeps exactly the orbit-invariant modes") {
  const int N = 3;
  const int n = 2 * N + 1;
  const Eigen::MatrixXcd P = averaging_projection(N);
  for (int n1 = -N; n1 <= N; ++n1)
    for (int n2 = -N; n2 <= N; ++n2) {
      const int idx = (n1 + N) * n + (n2 + N);
      CHECK(P(idx, idx) == (n2 == 0 ? 1.0 : 0.0));
    }
}

TEST_CASE("projection commutes with the model operator") {
  for (double alpha : {-0.5, 0.0, 1.0}) {
    const Eigen::MatrixXcd P = averaging_projection(4);
    const Eigen::MatrixXcd D = mode_diagonal(alpha, 4);
    CHECK((P * D - D * P).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("multiplier assembles Laplacian plus averaged transverse term") {
  for (double alpha : {-2.0, -0.5, 0.5, 1.0}) {
    for (int n1 = -4; n1 <= 4; ++n1) {
      for (int n2 = -4; n2 <= 4; ++n2) {
        const double want =
            n1 * n1 + n2 * n2 + (n2 == 0 ? alpha * n1 * n1 : 0.0);
        CHECK(torus_mode_multiplier(alpha, n1, n2) == doctest::Approx(want).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("mode table normalizes by the free Laplacian") {
  const TorusModeTable t = torus_example_modes(0.5, 4);
  const int n = 2 * 4 + 1;
  for (int n1 = -4; n1 <= 4; ++n1) {
    for (int n2 = -4; n2 <= 4; ++n2) {
      const double v = t.normalized(n1 + 4, n2 + 4);
      if (n1 == 0 && n2 == 0)
        CHECK(v == 0.0);  // pseudo-inverse at the origin
      else if (n2 == 0)
        CHECK(v == doctest::Approx(1.5).epsilon(1e-13));
      else
        CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
  CHECK(t.zero_modes == 1);
  CHECK(t.N == 4);
  REQUIRE(t.lambda.rows() == n);
}

TEST_CASE("transverse check reduces to the averaged principal value") {
  for (double alpha : {-2.0, -0.5, 0.0, 0.5, 1.0}) {
    AveragedLaplacianSpec spec;
    spec.alpha = alpha;
    const TransverseReport r = transverse_elliptic_check(spec);
    CHECK(r.transversally_elliptic);
    CHECK(r.averaged_value == doctest::Approx(1.0 + alpha).epsilon(1e-14));
    CHECK(r.free_value == doctest::Approx(1.0).epsilon(1e-14));
  }
  AveragedLaplacianSpec bad;
  bad.alpha = -1.0;
  const TransverseReport r = transverse_elliptic_check(bad);
  CHECK(!r.transversally_elliptic);
  CHECK(!r.offending.empty());
}

TEST_CASE("restricted index is zero and stable whenever transverse") {
  for (double alpha : {-2.0, -0.5, 0.0, 0.5, 1.0}) {
    AveragedLaplacianSpec spec;
    spec.alpha = alpha;
    const IndexReport rep = invariant_restriction_index(spec);
    REQUIRE(rep.stabilized);
    CHECK(rep.index == 0);
    for (const IndexRow& r : rep.rows) {
      CHECK(r.dim_ker == r.dim_coker);
      CHECK(r.clean);
    }
  }
}

TEST_CASE("kernel of the restricted operator is the constant mode") {
  AveragedLaplacianSpec spec;
  spec.alpha = 0.5;
  const IndexReport rep = invariant_restriction_index(spec, {6, 10, 14});
  REQUIRE(rep.stabilized);
  for (const IndexRow& r : rep.rows) {
    CHECK(r.dim_ker == 1);
    CHECK(r.dim_coker == 1);
  }
}

TEST_CASE("failed transverse check blocks the index computation") {
  AveragedLaplacianSpec spec;
  spec.alpha = -1.0;
  CHECK_THROWS_AS(invariant_restriction_index(spec), Error);
}
