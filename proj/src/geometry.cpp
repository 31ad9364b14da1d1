#include "eggpack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "eggpack/numeric.hpp"

namespace eggpack {

bool EggShape::params_valid() const {
  return std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0 &&
         p >= 2 && p % 2 == 0 && std::isfinite(t) && t >= 0.0;
}

void EggShape::require_valid() const {
  if (!params_valid())
    throw std::invalid_argument(
        "EggShape: need a > 0, b > 0, even p >= 2, t >= 0");
}

double EggShape::radius_bound() const {
  // |x| <= a on the contour; |y| <= b * exp(t*a/p) (the exp(t*x) factor is
  // smallest at x = -a).
  const double ymax = b * std::exp(t * a / p);
  return std::hypot(a, ymax);
}

namespace {

struct LocalEval {
  double value;
  double gu, gv;        // body-frame gradient
  double guu, guv, gvv; // body-frame Hessian
};

LocalEval local_eval(const EggShape& s, double u, double v) {
  const double sa = u / s.a;
  const double sb = v / s.b;
  const double E = std::exp(s.t * u);
  const int p = s.p;
  const double sap1 = ipow(sa, p - 1);
  const double sbp1 = ipow(sb, p - 1);
  const double sap = sap1 * sa;
  const double sbp = sbp1 * sb;
  LocalEval r;
  r.value = sap + E * sbp - 1.0;
  r.gu = p * sap1 / s.a + s.t * E * sbp;
  r.gv = E * p * sbp1 / s.b;
  r.guu = p * (p - 1) * ipow(sa, p - 2) / (s.a * s.a) + s.t * s.t * E * sbp;
  r.guv = s.t * E * p * sbp1 / s.b;
  r.gvv = E * p * (p - 1) * ipow(sb, p - 2) / (s.b * s.b);
  return r;
}

}  // namespace

double eval_egg(const PlacedEgg& egg, Vec2 point) {
  if (!std::isfinite(point.x) || !std::isfinite(point.y))
    throw std::invalid_argument("eval_egg: non-finite point");
  egg.shape.require_valid();
  const double c = std::cos(egg.pose.theta), s = std::sin(egg.pose.theta);
  const double dx = point.x - egg.pose.xc, dy = point.y - egg.pose.yc;
  const double u = c * dx + s * dy;
  const double v = c * dy - s * dx;
  return ipow(u / egg.shape.a, egg.shape.p) +
         std::exp(egg.shape.t * u) * ipow(v / egg.shape.b, egg.shape.p) - 1.0;
}

Vec2 grad_egg(const PlacedEgg& egg, Vec2 point) {
  const double c = std::cos(egg.pose.theta), s = std::sin(egg.pose.theta);
  const double dx = point.x - egg.pose.xc, dy = point.y - egg.pose.yc;
  const LocalEval L = local_eval(egg.shape, c * dx + s * dy, c * dy - s * dx);
  return {c * L.gu - s * L.gv, s * L.gu + c * L.gv};
}

EggEval eval_egg_full(const PlacedEgg& egg, Vec2 point) {
  const double c = std::cos(egg.pose.theta), s = std::sin(egg.pose.theta);
  const double dx = point.x - egg.pose.xc, dy = point.y - egg.pose.yc;
  const double u = c * dx + s * dy;
  const double v = c * dy - s * dx;
  const LocalEval L = local_eval(egg.shape, u, v);

  EggEval out;
  out.value = L.value;
  out.ex = c * L.gu - s * L.gv;
  out.ey = s * L.gu + c * L.gv;
  out.exx = c * c * L.guu - 2.0 * c * s * L.guv + s * s * L.gvv;
  out.exy = c * s * L.guu + (c * c - s * s) * L.guv - c * s * L.gvv;
  out.eyy = s * s * L.guu + 2.0 * c * s * L.guv + c * c * L.gvv;
  // du/dtheta = v, dv/dtheta = -u
  out.etheta = L.gu * v - L.gv * u;
  const double dgu = L.guu * v - L.guv * u;
  const double dgv = L.guv * v - L.gvv * u;
  out.ex_theta = -s * L.gu - c * L.gv + c * dgu - s * dgv;
  out.ey_theta = c * L.gu - s * L.gv + s * dgu + c * dgv;
  return out;
}

Vec2 boundary_point(const PlacedEgg& egg, double phi) {
  egg.shape.require_valid();
  const Vec2 dir{std::cos(phi), std::sin(phi)};
  const Vec2 c = egg.center();
  auto value_at = [&](double r) { return eval_egg(egg, c + r * dir); };

  const double safety = 8.0 * egg.shape.radius_bound();
  double lo = 0.0;  // eval at the center is exactly -1
  double hi = std::max(egg.shape.a, egg.shape.b);
  while (value_at(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > safety)
      throw std::runtime_error(
          "boundary_point: no sign change within safety radius (degenerate "
          "shape)");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (value_at(mid) < 0.0 ? lo : hi) = mid;
  }
  double r = 0.5 * (lo + hi);
  // Newton polish on the ray to push the residual to rounding level
  for (int i = 0; i < 2; ++i) {
    const Vec2 pt = c + r * dir;
    const double e = eval_egg(egg, pt);
    const double de = grad_egg(egg, pt).dot(dir);
    if (de == 0.0 || !std::isfinite(de)) break;
    const double step = e / de;
    if (!std::isfinite(step) || std::abs(step) > 0.5 * (hi - lo) + 1e-12 * r) break;
    r -= step;
  }
  return c + r * dir;
}

AreaEstimate egg_area_checked(const EggShape& shape) {
  shape.require_valid();
  const PlacedEgg egg{shape, {}};
  auto quad_area = [&](int order) {
    const auto& nodes = gauss_legendre(order);
    // 1/2 * integral over [0, 2pi) of r(phi)^2 dphi
    double acc = 0.0;
    for (const auto& nd : nodes) {
      const double phi = std::numbers::pi * (nd.x + 1.0);
      const Vec2 p = boundary_point(egg, phi) - egg.center();
      acc += nd.w * (p.x * p.x + p.y * p.y);
    }
    return 0.5 * acc * std::numbers::pi;
  };
  const double coarse = quad_area(512);
  const double fine = quad_area(1024);
  AreaEstimate est;
  est.value = fine;
  est.self_check = std::abs(fine - coarse) / std::max(std::abs(fine), 1e-300);
  est.accurate = est.self_check <= 1e-10;
  return est;
}

double egg_area(const EggShape& shape) { return egg_area_checked(shape).value; }

bool check_convexity(const EggShape& shape) {
  shape.require_valid();
  const PlacedEgg egg{shape, {}};
  constexpr int kSamples = 1024;

  // Signed curvature numerator/denominator of the level set e = 0, with
  // finite-difference second derivatives of the analytic gradient.
  auto curvature = [&](double phi) {
    const Vec2 pt = boundary_point(egg, phi);
    const double h = 1e-6 * std::max({1.0, std::abs(pt.x), std::abs(pt.y)});
    const Vec2 g = grad_egg(egg, pt);
    const Vec2 gxp = grad_egg(egg, {pt.x + h, pt.y});
    const Vec2 gxm = grad_egg(egg, {pt.x - h, pt.y});
    const Vec2 gyp = grad_egg(egg, {pt.x, pt.y + h});
    const Vec2 gym = grad_egg(egg, {pt.x, pt.y - h});
    const double exx = (gxp.x - gxm.x) / (2.0 * h);
    const double eyy = (gyp.y - gym.y) / (2.0 * h);
    const double exy = 0.5 * ((gyp.x - gym.x) + (gxp.y - gxm.y)) / (2.0 * h);
    const double num = exx * g.y * g.y - 2.0 * exy * g.x * g.y + eyy * g.x * g.x;
    const double den = std::pow(g.x * g.x + g.y * g.y, 1.5);
    return num / den;
  };

  std::vector<double> kappa(kSamples);
  for (int i = 0; i < kSamples; ++i)
    kappa[i] = curvature(2.0 * std::numbers::pi * i / kSamples);

  std::vector<double> mags(kappa.size());
  for (size_t i = 0; i < kappa.size(); ++i) mags[i] = std::abs(kappa[i]);
  std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
  const double scale = std::max(mags[mags.size() / 2], 1e-300);
  const double tol = 1e-6 * scale;

  // The contour is oriented with e < 0 inside, so a convex egg has kappa >= 0
  // everywhere (zero is allowed: p = 4 superellipses have flat axis points).
  double worst = *std::min_element(kappa.begin(), kappa.end());
  for (int i = 0; i < kSamples; ++i) {
    const int j = (i + 1) % kSamples;
    if ((kappa[i] < -tol) != (kappa[j] < -tol)) {
      const double mid =
          2.0 * std::numbers::pi * (i + 0.5) / kSamples;  // one polish
      worst = std::min(worst, curvature(mid));
    }
  }
  return worst >= -tol;
}

}  // namespace eggpack
