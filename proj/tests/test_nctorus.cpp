#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gidx/nctorus.hpp"

using namespace gidx;

namespace {

Complex gauss(double x) { return Complex(std::exp(-0.5 * x * x), 0.0); }
Complex xgauss(double x) { return Complex(x * std::exp(-0.5 * x * x), 0.0); }
Complex modgauss(double x) { return std::polar(std::exp(-0.5 * x * x), 3.0 * x); }

const std::function<Complex(double)> kFuncs[] = {gauss, xgauss, modgauss};

}  // namespace

TEST_CASE("parameter snapping keeps the shifts on the grid") {
  const TorusParams par = make_torus_params(0.7);
  CHECK(par.p == 7);
  CHECK(par.q == 10);
  CHECK(par.theta == doctest::Approx(0.7).epsilon(1e-15));
  // Both unit and theta shifts are whole numbers of grid steps.
  const double steps_theta = par.theta / par.grid.h;
  const double steps_one = 1.0 / par.grid.h;
  CHECK(steps_theta == doctest::Approx(std::round(steps_theta)).epsilon(1e-12));
  CHECK(steps_one == doctest::Approx(std::round(steps_one)).epsilon(1e-12));
  CHECK(par.n_phi == par.p * par.c);
  CHECK(par.grid.n == static_cast<int>(std::round(2 * par.grid.L / par.grid.h)));
}

TEST_CASE("irrational angles snap to a nearby fraction") {
  const double theta = 1.0 / std::sqrt(2.0);
  const TorusParams par = make_torus_params(theta);
  CHECK(par.q <= 128);
  CHECK(std::abs(par.theta - theta) < 1e-2);
  CHECK(std::abs(static_cast<double>(par.p) / par.q - par.theta) < 1e-15);
  CHECK(par.theta_requested == theta);
}

TEST_CASE("invalid angles are rejected") {
  CHECK_THROWS_AS(make_torus_params(0.0), Error);
  CHECK_THROWS_AS(make_torus_params(1.5), Error);
  CHECK_THROWS_AS(make_torus_params(-0.3), Error);
}

TEST_CASE("slow decay is refused") {
  const TorusParams par = make_torus_params(0.7);
  const LineFunction f =
      sample_line(par, [](double x) { return Complex(1.0 / (1.0 + x * x), 0.0); });
  CHECK(f.decay_certificate() > 1e-10);
  CHECK_THROWS_AS(schwartz_to_torus(f, par), Error);
}

TEST_CASE("wrap sections honor the seam twist") {
  const TorusParams par = make_torus_params(0.7);
  for (const auto& fn : kFuncs) {
    const TorusSection g = schwartz_to_torus(sample_line(par, fn), par);
    CHECK(g.seam_defect < 1e-8);
  }
}

TEST_CASE("wrap followed by unwrap returns the sample") {
  const TorusParams par = make_torus_params(0.7);
  for (const auto& fn : kFuncs) {
    const LineFunction f = sample_line(par, fn);
    const LineFunction back = torus_to_schwartz(schwartz_to_torus(f, par));
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < f.v.size(); ++i) {
      num = std::max(num, std::abs(back.v[i] - f.v[i]));
      den = std::max(den, std::abs(f.v[i]));
    }
    CHECK(num / den < 1e-12);
  }
}

TEST_CASE("wrap is linear") {
  const TorusParams par = make_torus_params(0.7);
  const LineFunction f = sample_line(par, gauss);
  const LineFunction g = sample_line(par, modgauss);
  LineFunction combo = f;
  const Complex a(0.7, -0.2), b(0.1, 0.9);
  for (size_t i = 0; i < combo.v.size(); ++i) combo.v[i] = a * f.v[i] + b * g.v[i];
  const TorusSection left = schwartz_to_torus(combo, par);
  const TorusSection right_f = schwartz_to_torus(f, par);
  const TorusSection right_g = schwartz_to_torus(g, par);
  const Eigen::MatrixXcd diff = left.v - (a * right_f.v + b * right_g.v);
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("all four generator correspondences hold on the test set") {
  const TorusParams par = make_torus_params(0.7);
  const LineOp ops[] = {LineOp::U, LineOp::V, LineOp::Position, LineOp::Momentum};
  for (const auto& fn : kFuncs) {
    const LineFunction f = sample_line(par, fn);
    for (LineOp op : ops) {
      const double r = verify_correspondence(op, f, par);
      CHECK(r < 1e-6);
    }
  }
}

TEST_CASE("shift and phase rows are exact to rounding") {
  const TorusParams par = make_torus_params(0.7);
  const LineFunction f = sample_line(par, modgauss);
  CHECK(verify_correspondence(LineOp::U, f, par) < 1e-12);
  CHECK(verify_correspondence(LineOp::V, f, par) < 1e-12);
}

TEST_CASE("line shift by one step of the torus angle matches the sampled shift") {
  const TorusParams par = make_torus_params(0.7);
  const LineFunction f = sample_line(par, gauss);
  const LineFunction shifted = apply_line_op(LineOp::U, f, par);
  // (U f)(x) = f(x + 1): compare against resampling.
  const LineFunction direct = sample_line(par, [](double x) { return gauss(x + 1.0); });
  double worst = 0.0;
  for (size_t i = 0; i < f.v.size(); ++i)
    worst = std::max(worst, std::abs(shifted.v[i] - direct.v[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("generators satisfy the rotation-algebra commutation phase") {
  const TorusParams par = make_torus_params(0.7);
  for (const auto& fn : kFuncs) {
    const LineFunction f = sample_line(par, fn);
    CHECK(commutation_phase_residual(f, par) < 1e-12);
  }
}

TEST_CASE("correspondences hold for other angles") {
  for (double theta : {0.3, 0.5, 0.9}) {
    const TorusParams par = make_torus_params(theta);
    const LineFunction f = sample_line(par, gauss);
    const LineOp ops[] = {LineOp::U, LineOp::V, LineOp::Position, LineOp::Momentum};
    for (LineOp op : ops) CHECK(verify_correspondence(op, f, par) < 1e-6);
    CHECK(commutation_phase_residual(f, par) < 1e-10);
  }
}
