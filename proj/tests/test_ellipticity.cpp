#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gidx/ellipticity.hpp"

using namespace gidx;

namespace {

Bandlimited sine() {
  std::vector<Complex> c(3);
  c[0] = Complex(0.0, 0.5);
  c[2] = Complex(0.0, -0.5);
  return Bandlimited(std::move(c));
}

CrossedSymbol const_dilation_symbol(double alpha, int m,
                                    const std::vector<std::pair<int, Complex>>& terms) {
  CrossedSymbol A(ActionSpec::dilation(alpha, m));
  for (const auto& [g, c] : terms) A.add_term(g, CosphereFunction::constant(c));
  return A;
}

}  // namespace

TEST_CASE("identity symbol is elliptic") {
  const ActionSpec a = ActionSpec::rotation(0.31);
  const EllipticityReport rep = check_elliptic_isometric(cp_identity(a));
  CHECK(rep.verdict == EllipticityVerdict::Elliptic);
  CHECK(rep.final_min_sv == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dominant diagonal plus small shift stays elliptic") {
  const ActionSpec a = ActionSpec::rotation(0.476190476190476);
  CrossedSymbol A(a);
  A.add_term(0, CosphereFunction::constant(1.0));
  A.add_term(1, CosphereFunction::constant(0.5));
  const EllipticityReport rep = check_elliptic_isometric(A);
  CHECK(rep.verdict == EllipticityVerdict::Elliptic);
  // Neumann bound: the window operator is at distance 1/2 from the identity.
  CHECK(rep.final_min_sv >= 0.45);
}

TEST_CASE("coefficient with zeros is rejected by the exact scan") {
  const ActionSpec a = ActionSpec::rotation(0.31);
  CrossedSymbol A(a);
  A.add_term(0, CosphereFunction::both(sine()));
  const EllipticityReport rep = check_elliptic_isometric(A);
  CHECK(rep.verdict == EllipticityVerdict::NotElliptic);
}

TEST_CASE("pure shift over the rotation stays inconclusive under truncation") {
  // Invertible in the algebra, but every finite window loses one coordinate;
  // the probe must not claim a verdict either way.
  const ActionSpec a = ActionSpec::rotation(0.31);
  CrossedSymbol A(a);
  A.add_term(1, CosphereFunction::constant(1.0));
  const EllipticityReport rep = check_elliptic_isometric(A);
  CHECK(rep.verdict == EllipticityVerdict::Inconclusive);
}

TEST_CASE("cyclic matrix criterion is exact") {
  const ActionSpec a = ActionSpec::cyclic(4);
  CrossedSymbol shift(a);
  shift.add_term(1, CosphereFunction::constant(1.0));
  CHECK(check_elliptic_isometric(shift).verdict == EllipticityVerdict::Elliptic);

  CrossedSymbol sing(a);
  sing.add_term(0, CosphereFunction::both(sine()));
  CHECK(check_elliptic_isometric(sing).verdict == EllipticityVerdict::NotElliptic);
}

TEST_CASE("pole circle radii") {
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{0, 1.0}, {1, 0.5}});
  const PoleSymbol p0 = pole_symbol(A, 0);
  const PoleSymbol pI = pole_symbol(A, 1);
  CHECK(p0.radius(0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p0.radius(1.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p0.radius(-0.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(pI.radius(1.5) == doctest::Approx(2.0).epsilon(1e-14));
  // One-step symbol: value on the circle of radius r has modulus |1 + r/2| at
  // phase zero.
  CHECK(std::abs(p0.eval(0, 1.5, 0.0)) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("weight interval of one plus half shift") {
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{0, 1.0}, {1, 0.5}});
  const SIntervalResult r = elliptic_s_interval(A);
  REQUIRE(!r.empty);
  CHECK(r.lo == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(r.hi == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(!r.clipped_lo);
  CHECK(!r.clipped_hi);
  CHECK(r.interior_confirmed);
  // Evidence rows flag exactly the interior samples.
  for (const SIntervalRow& row : r.evidence) {
    const bool inside = row.s > r.lo + 1e-9 && row.s < r.hi - 1e-9;
    CHECK(row.inside == inside);
    if (inside) {
      CHECK(row.pole0_min > 0.0);
      CHECK(row.poleinf_min > 0.0);
    }
  }
}

TEST_CASE("interval endpoints scale with the coefficient ratio") {
  // Roots move with c: 1 + c T has endpoints m/2 -+ log(1/c)/log(1/alpha).
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{0, 1.0}, {1, 0.25}});
  const SIntervalResult r = elliptic_s_interval(A);
  REQUIRE(!r.empty);
  CHECK(r.lo == doctest::Approx(0.5 - 2.0).epsilon(1e-9));
  CHECK(r.hi == doctest::Approx(0.5 + 2.0).epsilon(1e-9));
}

TEST_CASE("overall scaling does not move the interval") {
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{0, 1.0}, {1, 0.5}});
  const CrossedSymbol B = cp_scale(Complex(0.0, -3.0), A);
  const SIntervalResult ra = elliptic_s_interval(A);
  const SIntervalResult rb = elliptic_s_interval(B);
  REQUIRE(!ra.empty);
  REQUIRE(!rb.empty);
  CHECK(rb.lo == doctest::Approx(ra.lo).epsilon(1e-12));
  CHECK(rb.hi == doctest::Approx(ra.hi).epsilon(1e-12));
}

TEST_CASE("unimodular root pins both circles and empties the interval") {
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{0, 1.0}, {1, 1.0}});
  const SIntervalResult r = elliptic_s_interval(A);
  CHECK(r.empty);
  CHECK(!r.reason.empty());
}

TEST_CASE("pure shift dilation symbol has no elliptic weight") {
  // Every pole circle misses the (absent) roots, but the winding obstruction
  // shows up as collapsing truncation windows at an interior anchor.
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{1, 1.0}});
  const SIntervalResult r = elliptic_s_interval(A);
  CHECK(r.empty);
  CHECK(!r.reason.empty());
}

TEST_CASE("constant invertible symbol is elliptic across the searched range") {
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{0, 2.0}});
  const SIntervalResult r = elliptic_s_interval(A);
  REQUIRE(!r.empty);
  CHECK(r.clipped_lo);
  CHECK(r.clipped_hi);
  CHECK(r.lo == doctest::Approx(-4.0));
  CHECK(r.hi == doctest::Approx(4.0));
}

TEST_CASE("interval respects the searched range") {
  const CrossedSymbol A = const_dilation_symbol(0.5, 1, {{0, 1.0}, {1, 0.25}});
  SIntervalOptions opt;
  opt.s_lo = 0.0;
  opt.s_hi = 1.0;
  const SIntervalResult r = elliptic_s_interval(A, opt);
  REQUIRE(!r.empty);
  CHECK(r.clipped_lo);
  CHECK(r.clipped_hi);
  CHECK(r.lo == doctest::Approx(0.0));
  CHECK(r.hi == doctest::Approx(1.0));
}

TEST_CASE("second dimension shifts the interval center") {
  // m = 2 centers the interval at 1 instead of 1/2.
  const CrossedSymbol A = const_dilation_symbol(0.5, 2, {{0, 1.0}, {1, 0.5}});
  const SIntervalResult r = elliptic_s_interval(A);
  REQUIRE(!r.empty);
  CHECK(r.lo == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.hi == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("interval rejects non-dilation actions") {
  CrossedSymbol A(ActionSpec::rotation(0.31));
  A.add_term(0, CosphereFunction::constant(1.0));
  CHECK_THROWS_AS(elliptic_s_interval(A), Error);
}

TEST_CASE("component-asymmetric roots use the worse bound") {
  // Component 0 carries the wider polynomial, component 1 a narrower one; the
  // interval is the intersection.
  CrossedSymbol A(ActionSpec::dilation(0.5, 1));
  CosphereFunction f0 = CosphereFunction::constant(1.0);
  CosphereFunction f1;
  f1.component(0) += Bandlimited::constant(0.25);
  f1.component(1) += Bandlimited::constant(0.5);
  A.add_term(0, f0);
  A.add_term(1, f1);
  const SIntervalResult r = elliptic_s_interval(A);
  REQUIRE(!r.empty);
  CHECK(r.lo == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(r.hi == doctest::Approx(1.5).epsilon(1e-9));
}
