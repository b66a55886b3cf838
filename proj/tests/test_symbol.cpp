#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "gidx/crossed.hpp"
#include "gidx/ellipticity.hpp"

using namespace gidx;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// e^{i k x} as a band-limited coefficient.
Bandlimited harm(int k, Complex c = Complex(1.0, 0.0)) {
  std::vector<Complex> coeff(2 * std::abs(k) + 1, Complex(0.0, 0.0));
  coeff[k + std::abs(k)] = c;
  return Bandlimited(std::move(coeff));
}

CosphereFunction random_coefficient(std::mt19937& rng, int bandwidth, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  CosphereFunction f;
  for (int comp = 0; comp < 2; ++comp) {
    std::vector<Complex> coeff(2 * bandwidth + 1);
    for (auto& c : coeff) c = Complex(dist(rng), dist(rng));
    f.component(comp) += Bandlimited(std::move(coeff));
  }
  return f;
}

CrossedSymbol random_symbol(std::mt19937& rng, const ActionSpec& a, int support,
                            int bandwidth, double scale) {
  CrossedSymbol s(a);
  for (int g = -support; g <= support; ++g)
    s.add_term(g, random_coefficient(rng, bandwidth, scale));
  return s;
}

}  // namespace

TEST_CASE("product of single terms twists the right factor") {
  const ActionSpec a = ActionSpec::rotation(0.31);
  const double theta = kTwoPi * 0.31;

  CrossedSymbol A(a), B(a);
  A.add_term(2, CosphereFunction::both(harm(1)));
  B.add_term(1, CosphereFunction::both(harm(1)));
  const CrossedSymbol AB = cp_mul(A, B);

  // (ab)(3)(x) = e^{ix} e^{i(x - 2 theta)}.
  REQUIRE(AB.term(3) != nullptr);
  for (double x : {0.0, 0.7, 2.5}) {
    const Complex want = std::polar(1.0, x) * std::polar(1.0, x - 2 * theta);
    CHECK(std::abs(AB.term(3)->eval(x, 0) - want) < 1e-12);
    CHECK(std::abs(AB.term(3)->eval(x, 1) - want) < 1e-12);
  }
  CHECK(AB.term(2) == nullptr);
}

TEST_CASE("product is noncommutative for position-dependent coefficients") {
  const ActionSpec a = ActionSpec::rotation(0.3137);
  CrossedSymbol A(a), B(a);
  A.add_term(0, CosphereFunction::both(harm(1)));
  B.add_term(1, CosphereFunction::constant(1.0));
  const CrossedSymbol AB = cp_mul(A, B);
  const CrossedSymbol BA = cp_mul(B, A);
  CHECK(cp_sup_distance(AB, BA) > 0.1);
}

TEST_CASE("identity element and scaling") {
  const ActionSpec a = ActionSpec::rotation(0.137);
  std::mt19937 rng(5);
  const CrossedSymbol A = random_symbol(rng, a, 2, 3, 1.0);
  const CrossedSymbol I = cp_identity(a);
  CHECK(cp_sup_distance(cp_mul(I, A), A) < 1e-13);
  CHECK(cp_sup_distance(cp_mul(A, I), A) < 1e-13);
  const CrossedSymbol twice = cp_add(A, A);
  CHECK(cp_sup_distance(twice, cp_scale(2.0, A)) < 1e-13);
}

TEST_CASE("associativity on random symbols") {
  std::mt19937 rng(17);
  for (const ActionSpec& a :
       {ActionSpec::rotation(1.0 / std::sqrt(2.0)), ActionSpec::cyclic(4)}) {
    for (int trial = 0; trial < 8; ++trial) {
      const CrossedSymbol A = random_symbol(rng, a, 2, 3, 1.0);
      const CrossedSymbol B = random_symbol(rng, a, 2, 3, 1.0);
      const CrossedSymbol C = random_symbol(rng, a, 2, 3, 1.0);
      const double d = cp_sup_distance(cp_mul(cp_mul(A, B), C), cp_mul(A, cp_mul(B, C)));
      CHECK(d < 1e-11);
    }
  }
}

TEST_CASE("adjoint is an involutive antihomomorphism") {
  const ActionSpec a = ActionSpec::rotation(0.271);
  std::mt19937 rng(23);
  const CrossedSymbol A = random_symbol(rng, a, 2, 2, 1.0);
  const CrossedSymbol B = random_symbol(rng, a, 2, 2, 1.0);
  CHECK(cp_sup_distance(A.adjoint().adjoint(), A) < 1e-12);
  CHECK(cp_sup_distance(cp_mul(A, B).adjoint(), cp_mul(B.adjoint(), A.adjoint())) < 1e-11);
}

TEST_CASE("derivation property of the base derivative") {
  const ActionSpec a = ActionSpec::rotation(0.4142135623730951);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const CrossedSymbol A = random_symbol(rng, a, 2, 3, 1.0);
    const CrossedSymbol B = random_symbol(rng, a, 2, 3, 1.0);
    const CrossedSymbol lhs = cp_derivative(cp_mul(A, B));
    const CrossedSymbol rhs =
        cp_add(cp_mul(cp_derivative(A), B), cp_mul(A, cp_derivative(B)));
    CHECK(cp_sup_distance(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("constant-coefficient inverse is the alternating shift series") {
  const ActionSpec a = ActionSpec::rotation(0.31);
  CrossedSymbol A(a);
  A.add_term(0, CosphereFunction::constant(1.0));
  A.add_term(1, CosphereFunction::constant(0.5));
  const CrossedSymbol B = cp_inverse(A);
  for (int n = 0; n <= 8; ++n) {
    const CosphereFunction f = B.term_or_zero(n);
    const Complex want = std::pow(Complex(-0.5, 0.0), n);
    CHECK(std::abs(f.eval(0.3, 0) - want) < 1e-9);
  }
  CHECK(B.term_or_zero(-1).sup_norm() < 1e-9);
  CHECK(cp_sup_distance(cp_mul(A, B), cp_identity(a)) < 1e-8);
  CHECK(cp_sup_distance(cp_mul(B, A), cp_identity(a)) < 1e-8);
}

TEST_CASE("variable-coefficient inverse solves both sides") {
  const ActionSpec a = ActionSpec::rotation(1.0 / std::sqrt(5.0));
  CrossedSymbol A(a);
  CosphereFunction diag = CosphereFunction::constant(2.0);
  diag += CosphereFunction::both(harm(1, Complex(0.3, 0.1)));
  A.add_term(0, diag);
  A.add_term(1, CosphereFunction::both(harm(-1, Complex(0.25, 0.0))));
  A.add_term(-1, CosphereFunction::constant(Complex(0.1, 0.2)));
  const CrossedSymbol B = cp_inverse(A);
  CHECK(cp_sup_distance(cp_mul(A, B), cp_identity(a)) < 1e-8);
  CHECK(cp_sup_distance(cp_mul(B, A), cp_identity(a)) < 1e-8);
}

TEST_CASE("inverse refuses a symbol with vanishing trajectory column") {
  const ActionSpec a = ActionSpec::rotation(0.3171);
  CrossedSymbol A(a);
  // sin vanishes at grid points of its own zero set; the trajectory operator
  // annihilates a coordinate there.
  CosphereFunction f;
  f += CosphereFunction::both(harm(1, Complex(0.0, -0.5)));
  f += CosphereFunction::both(harm(-1, Complex(0.0, 0.5)));
  A.add_term(0, f);
  CHECK_THROWS_AS(cp_inverse(A), Error);
}

TEST_CASE("trajectory matrix freezes coefficients along the backward orbit") {
  const ActionSpec a = ActionSpec::rotation(0.31);
  const double theta = kTwoPi * 0.31;
  const double x0 = 0.9;
  CrossedSymbol A(a);
  A.add_term(1, CosphereFunction::both(harm(1)));
  const TrajectoryMatrix T = trajectory_matrix(A, circle_cotangent(x0, +1), 3);
  REQUIRE(T.M.rows() == 7);
  CHECK(T.row_origin == -3);
  for (int r = 0; r < 7; ++r) {
    const int g = r - 3;
    if (r + 1 < 7) {
      const Complex want = std::polar(1.0, x0 - g * theta);
      CHECK(std::abs(T.M(r, r + 1) - want) < 1e-12);
    }
    CHECK(std::abs(T.M(r, r)) < 1e-14);
  }
}

TEST_CASE("trajectory map is a homomorphism on interior indices") {
  const ActionSpec a = ActionSpec::rotation(1.0 / std::sqrt(2.0));
  std::mt19937 rng(31);
  const CrossedSymbol A = random_symbol(rng, a, 2, 2, 0.8);
  const CrossedSymbol B = random_symbol(rng, a, 2, 2, 0.8);
  const CrossedSymbol AB = cp_mul(A, B);
  const CotangentPoint cp = circle_cotangent(0.4, +1);
  const int N = 12;
  const TrajectoryMatrix TA = trajectory_matrix(A, cp, N);
  const TrajectoryMatrix TB = trajectory_matrix(B, cp, N);
  const TrajectoryMatrix TAB = trajectory_matrix(AB, cp, N);
  const Eigen::MatrixXcd P = TA.M * TB.M;
  // Rows within the window reachable without clipping the band: supports are
  // <= 2 each, so rows 4..(2N-4) of the product are exact.
  for (int r = 4; r <= 2 * N - 4; ++r)
    for (int c = 0; c < 2 * N + 1; ++c)
      CHECK(std::abs(P(r, c) - TAB.M(r, c)) < 1e-12);
}

TEST_CASE("unitarized rotation windows are independent of the weight") {
  const ActionSpec a = ActionSpec::rotation(0.31830988618367);
  std::mt19937 rng(37);
  const CrossedSymbol A = random_symbol(rng, a, 2, 3, 1.0);
  const CotangentPoint cp = circle_cotangent(1.3, +1);
  const TrajectoryMatrix T0 = unitarized_matrix(A, cp, 0.0, 8);
  for (double s : {0.5, 1.0}) {
    const TrajectoryMatrix Ts = unitarized_matrix(A, cp, s, 8);
    CHECK((Ts.M - T0.M).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK((T0.M - trajectory_matrix(A, cp, 8).M).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("unitarized pure shift has constant modulus set by the pole weight") {
  const ActionSpec a = ActionSpec::dilation(0.5, 1);
  CrossedSymbol A(a);
  A.add_term(1, CosphereFunction::constant(1.0));

  const CotangentPoint p0 = sphere_cotangent(sphere_pole0(1), {1.0});
  const CotangentPoint pI = sphere_cotangent(sphere_poleInf(1), {1.0});
  for (double s : {0.0, 0.5, 1.0}) {
    const double r0 = std::pow(0.5, s - 0.5);
    const double rI = std::pow(0.5, 0.5 - s);
    const TrajectoryMatrix T0 = unitarized_matrix(A, p0, s, 6);
    const TrajectoryMatrix TI = unitarized_matrix(A, pI, s, 6);
    for (int r = 0; r + 1 < T0.M.rows(); ++r) {
      CHECK(std::abs(T0.M(r, r + 1)) == doctest::Approx(r0).epsilon(1e-10));
      CHECK(std::abs(TI.M(r, r + 1)) == doctest::Approx(rI).epsilon(1e-10));
    }
  }
  // s = 1, m = 1, alpha = 1/2: modulus 2^{-1/2}.
  const TrajectoryMatrix T = unitarized_matrix(A, p0, 1.0, 4);
  CHECK(std::abs(T.M(0, 1)) == doctest::Approx(0.70710678118654752).epsilon(1e-12));
}

TEST_CASE("order-homogeneous identity unitarizes to the identity matrix") {
  const ActionSpec a = ActionSpec::dilation(0.5, 1);
  for (int order : {1, 2}) {
    CrossedSymbol A(a, order);
    A.add_term(0, CosphereFunction::constant(1.0));
    const CotangentPoint cp = sphere_cotangent(sphere_chart_point(0, {0.6}), {1.0});
    for (double s : {0.0, 1.0}) {
      const TrajectoryMatrix T = unitarized_matrix(A, cp, s, 5);
      CHECK((T.M - Eigen::MatrixXcd::Identity(11, 11)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("cyclic trajectory matrix is the matrix symbol at the anchor") {
  const ActionSpec a = ActionSpec::cyclic(4);
  std::mt19937 rng(41);
  const CrossedSymbol A = random_symbol(rng, a, 3, 2, 1.0);
  const double x0 = 0.8;
  const TrajectoryMatrix T = trajectory_matrix(A, circle_cotangent(x0, +1), 9);
  REQUIRE(T.M.rows() == 4);
  CHECK(T.row_origin == 0);
  const CyclicMatrixSymbol M = matrix_symbol(A);
  CHECK((T.M - M.at(x0, 0)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("cyclic matrix symbol is multiplicative") {
  std::mt19937 rng(43);
  for (int k : {2, 4}) {
    const ActionSpec a = ActionSpec::cyclic(k);
    for (int trial = 0; trial < 5; ++trial) {
      const CrossedSymbol A = random_symbol(rng, a, k - 1, 3, 1.0);
      const CrossedSymbol B = random_symbol(rng, a, k - 1, 3, 1.0);
      const CyclicMatrixSymbol MA = matrix_symbol(A);
      const CyclicMatrixSymbol MB = matrix_symbol(B);
      const CyclicMatrixSymbol MAB = matrix_symbol(cp_mul(A, B));
      for (double x : {0.0, 0.9, 2.2, 4.4}) {
        for (int comp = 0; comp < 2; ++comp) {
          const Eigen::MatrixXcd prod = MA.at(x, comp) * MB.at(x, comp);
          CHECK((prod - MAB.at(x, comp)).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("identity-component form of an invertible loop is its winding rate") {
  const ActionSpec a = ActionSpec::rotation(0.31);
  for (int k : {-2, 1, 3}) {
    CrossedSymbol A(a);
    A.add_term(0, CosphereFunction::both(harm(k)));
    const CrossedSymbol B = cp_inverse(A);
    const CosphereFunction e = e_component_form(A, B);
    // b (da) at the identity: e^{-ikx} (ik e^{ikx}) = ik.
    for (int comp = 0; comp < 2; ++comp) {
      CHECK(std::abs(e.eval(0.7, comp) - Complex(0.0, k)) < 1e-9);
      CHECK(std::abs(e.eval(2.9, comp) - Complex(0.0, k)) < 1e-9);
    }
  }
}
