#pragma once

#include <string>
#include <vector>

#include "gidx/errors.hpp"

namespace gidx {

enum class ManifoldKind { Circle, Sphere, Torus2 };

struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::Circle;
  int dim = 1;
  int grid_size = 256;  // default sampling resolution, >= 16 and even

  void validate() const;
};

enum class ActionKind { RotationZ, DilationSphere, CyclicRotation, CircleOnTorus };

// Group action on a manifold. The group is Z (rotation by an irrational angle,
// dilation), Z/k (cyclic rotation), or the circle (torus shifts).
struct ActionSpec {
  ActionKind kind = ActionKind::RotationZ;
  double theta_turns = 0.0;   // rotation angle as a multiple of 2*pi, in (0,1)
  bool irrational = true;     // declared, not detected
  double alpha = 0.5;         // dilation ratio, in (0,1)
  int dim_m = 1;              // sphere dimension
  int k = 2;                  // cyclic order
  ManifoldSpec manifold;

  static ActionSpec rotation(double theta_turns, bool irrational = true, int grid = 256);
  static ActionSpec dilation(double alpha, int dim_m, int grid = 256);
  static ActionSpec cyclic(int k, int grid = 256);
  static ActionSpec circle_on_torus(int grid = 64);

  void validate() const;

  bool isometric() const { return kind != ActionKind::DilationSphere; }
  bool finite() const { return kind == ActionKind::CyclicRotation; }
  int group_order() const { return finite() ? k : 0; }

  int add(int a, int b) const;
  int inverse(int g) const;
  int canonical(int g) const;  // Z/k: representative in [0, k)

  double step_turns() const;   // rotation/cyclic: generator angle in turns
};

// Chart point. Circle/torus coordinates are angles in [0, 2*pi); sphere points
// carry the chart index (0 = chart around the pole "0", 1 = around "infinity")
// and are kept in the chart where |coord| <= 1, switching at |coord| = 1.
struct Point {
  int chart = 0;
  std::vector<double> coord;
};

struct CotangentPoint {
  Point base;
  std::vector<double> xi;  // unit covector in the chart of base
};

struct WeightSpec {
  CotangentPoint p;
  double s = 0.0;
};

Point circle_point(double x);
CotangentPoint circle_cotangent(double x, int sign);           // sign = +1/-1
Point torus_point(double x1, double x2);

// One-dimensional sphere (two-chart circle) in the angle parametrization
// u in [0, 2*pi), with chart-0 coordinate tan(u/2); u = 0 is pole 0, u = pi
// is pole infinity.
Point sphere1_point_from_angle(double u);
double sphere_angle(const Point& p);                            // dim_m == 1
Point sphere_pole0(int dim_m);
Point sphere_poleInf(int dim_m);
Point sphere_chart_point(int chart, const std::vector<double>& coord);
CotangentPoint sphere_cotangent(const Point& base, const std::vector<double>& xi);

// Converts a sphere point to the requested chart (coord -> coord/|coord|^2).
Point point_in_chart(const Point& p, int chart);

double wrap_2pi(double x);

Point apply_action(const ActionSpec& a, int g, const Point& p);
Point apply_action_real(const ActionSpec& a, double g, const Point& p);  // circle factor

// Jacobian of the chart representation of g at p: the matrix of the map from
// the chart of p to the canonical chart of g(p), row-major dim x dim.
std::vector<double> action_jacobian(const ActionSpec& a, int g, const Point& p);

// Cotangent lift: base moves by g, covector by the transposed-inverse Jacobian,
// then renormalized to the cosphere.
CotangentPoint codifferential(const ActionSpec& a, int g, const CotangentPoint& cp);

// Orientation class of a circle-like covector with respect to the global angle
// coordinate: 0 for positive multiples of the angle form, 1 for negative.
int component_of(const ActionSpec& a, const CotangentPoint& cp);

enum class DensityBranch { Interior, Pole0, PoleInf };

// Trajectory weight at group element g for the dilation action (1 for
// isometric actions): |det J| * |J^{-T} xi|^{2s} with J the forward-map
// Jacobian in the chart pair that follows the trajectory (bounded side
// in-chart, escaping side through the chart transition).
double density_mu(const WeightSpec& w, const ActionSpec& a, int g);

// Closed-form branches alpha^{|g|(m-2s)} (interior), alpha^{g(m-2s)} (pole 0),
// alpha^{-g(m-2s)} (pole infinity).
double density_closed_form(const ActionSpec& a, DensityBranch branch, int g, double s);

// Length |J_g^{-T} xi| of the covector transported along the trajectory, in
// the same chart-pair convention as density_mu (1 for isometric actions).
// Satisfies density_mu(s1) / density_mu(s2) = stretch^{2(s1-s2)}.
double covector_stretch(const CotangentPoint& p, const ActionSpec& a, int g);

}  // namespace gidx
