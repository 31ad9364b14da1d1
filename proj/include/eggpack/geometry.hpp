#pragma once

#include <cmath>

namespace eggpack {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Egg contour parameters: (x/a)^p + exp(t*x) * (y/b)^p = 1 in body frame.
/// a, b are the semi-axes, p an even exponent >= 2, t >= 0 the distortion
/// factor (units 1/length). t must stay small enough that the contour remains
/// convex; check_convexity() decides that numerically.
struct EggShape {
  double a = 1.0;
  double b = 1.0;
  int p = 2;
  double t = 0.0;

  bool params_valid() const;
  void require_valid() const;  // throws std::invalid_argument on bad parameters

  /// Radius (from the body-frame origin) that certainly encloses the contour.
  double radius_bound() const;
};

struct Pose {
  double xc = 0.0;
  double yc = 0.0;
  double theta = 0.0;  // counterclockwise rotation, radians, in [-pi, pi]
};

struct PlacedEgg {
  EggShape shape;
  Pose pose;

  Vec2 center() const { return {pose.xc, pose.yc}; }
};

/// Value and derivatives of the placed-egg function at one point. The pose
/// derivatives with respect to xc/yc are -ex/-ey (the function depends only on
/// x - xc, y - yc), so only the theta derivatives are carried explicitly.
struct EggEval {
  double value;
  double ex, ey;             // d/dx, d/dy
  double exx, exy, eyy;      // second derivatives in x, y
  double etheta;             // d/dtheta
  double ex_theta, ey_theta; // d(ex)/dtheta, d(ey)/dtheta
};

/// Implicit egg function: negative inside, zero on the contour, positive
/// outside. Rejects non-finite points.
double eval_egg(const PlacedEgg& egg, Vec2 point);

/// Analytic gradient of eval_egg with respect to the point.
Vec2 grad_egg(const PlacedEgg& egg, Vec2 point);

/// Full derivative bundle used by the tangency/overlap solves and the model
/// Jacobian.
EggEval eval_egg_full(const PlacedEgg& egg, Vec2 point);

/// The unique contour point on the ray from the egg center at world angle
/// phi, located by bracketing + bisection with a Newton polish;
/// |eval_egg(result)| <= 1e-10. Throws std::runtime_error if no bracket is
/// found within the shape's safety radius (degenerate shape).
Vec2 boundary_point(const PlacedEgg& egg, double phi);

struct AreaEstimate {
  double value;       // area from the doubled-order rule
  double self_check;  // relative gap between the 512- and 1024-node rules
  bool accurate;      // self_check <= 1e-10
};

/// Area enclosed by the contour (pose-independent), via the Green's-theorem
/// line integral 1/2 * integral of r(phi)^2 dphi with Gauss-Legendre
/// quadrature, plus a doubled-order self-check.
AreaEstimate egg_area_checked(const EggShape& shape);
double egg_area(const EggShape& shape);

/// Numerical convexity test: samples the signed curvature of the contour at
/// >= 1024 ray angles (analytic first derivatives, finite-difference second
/// derivatives) and reports whether it keeps one sign. Sign-change candidates
/// get one midpoint refinement before the verdict.
bool check_convexity(const EggShape& shape);

}  // namespace eggpack
