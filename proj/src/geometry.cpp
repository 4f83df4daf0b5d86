#include "hwz/geometry.hpp"

#include <cmath>
#include <string>

#include "hwz/error.hpp"

namespace hwz::geometry {

namespace {

struct Partials {
  double e;    // e^{-sqrt6 s}
  double c;    // cos theta
  double sn;   // sin theta
  double f_s, f_theta, h_s, h_theta;
  double g;
};

Partials partials(const Point4& p) {
  Partials d{};
  d.e = std::exp(-kSqrt6 * p.s);
  d.c = std::cos(p.theta);
  d.sn = std::sin(p.theta);
  const double c2 = d.c * d.c;
  const double f = d.e * (1.0 - 3.0 * c2);
  const double h = kSqrt6 * d.e * d.c * d.sn * d.sn;
  d.f_s = -kSqrt6 * f;
  d.f_theta = 6.0 * d.e * d.c * d.sn;
  d.h_s = -kSqrt6 * h;
  d.h_theta = kSqrt6 * d.e * d.sn * (3.0 * c2 - 1.0);
  d.g = kSqrt6 * d.e * std::sqrt(1.0 + 3.0 * c2 * c2);
  return d;
}

bool at_pole(double theta) { return theta <= 0.0 || theta >= kPi; }

}  // namespace

double reduce_angle(double x) {
  constexpr double two_pi = 2.0 * kPi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

Point4 Point4::make(double s, double t, double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw Error(ErrorKind::Domain, "theta outside [0, pi]: " + std::to_string(theta));
  }
  return {s, reduce_angle(t), theta, reduce_angle(phi)};
}

CoordValues coord_functions(const Point4& p) {
  const double e = std::exp(-kSqrt6 * p.s);
  const double c = std::cos(p.theta);
  const double sn = std::sin(p.theta);
  return {e * (1.0 - 3.0 * c * c), kSqrt6 * e * c * sn * sn,
          kSqrt6 * e * std::sqrt(1.0 + 3.0 * c * c * c * c)};
}

double contact_eval(const Point4& p, const Tangent4& v) {
  const double c = std::cos(p.theta);
  const double sn = std::sin(p.theta);
  return -(1.0 - 3.0 * c * c) * v.v_t - kSqrt6 * c * sn * sn * v.v_phi;
}

double omega_eval(const Point4& p, const Tangent4& v, const Tangent4& w) {
  const Partials d = partials(p);
  const double df_v = d.f_s * v.v_s + d.f_theta * v.v_theta;
  const double df_w = d.f_s * w.v_s + d.f_theta * w.v_theta;
  const double dh_v = d.h_s * v.v_s + d.h_theta * v.v_theta;
  const double dh_w = d.h_s * w.v_s + d.h_theta * w.v_theta;
  return (v.v_t * df_w - w.v_t * df_v) + (v.v_phi * dh_w - w.v_phi * dh_v);
}

Tangent4 reeb_vector(const Point4& p) {
  const double c = std::cos(p.theta);
  const double c2 = c * c;
  const double norm = 1.0 + 3.0 * c2 * c2;
  Tangent4 v{0.0, -(1.0 - 3.0 * c2) / norm, 0.0, -kSqrt6 * c / norm};
  if (at_pole(p.theta)) v.v_phi = 0.0;
  return v;
}

Tangent4 apply_J(const Point4& p, const Tangent4& v) {
  if (at_pole(p.theta)) {
    throw Error(ErrorKind::Pole, "J is not represented in (s,t,theta,phi) at theta = " +
                                     std::to_string(p.theta));
  }
  const Partials d = partials(p);
  const double sin2 = d.sn * d.sn;

  // d_f and d_h as combinations of d_s, d_theta: columns of the inverse
  // Jacobian of (f, h) with respect to (s, theta).
  const double det = d.f_s * d.h_theta - d.f_theta * d.h_s;
  const double ds_df = d.h_theta / det;
  const double dth_df = -d.h_s / det;
  const double ds_dh = -d.f_theta / det;
  const double dth_dh = d.f_s / det;

  // Components of v along d_f and d_h.
  const double a_f = d.f_s * v.v_s + d.f_theta * v.v_theta;
  const double a_h = d.h_s * v.v_s + d.h_theta * v.v_theta;

  // J d_t = g d_f, J d_phi = g sin^2 d_h, J d_f = -d_t / g, J d_h = -d_phi / (g sin^2).
  const double coef_f = d.g * v.v_t;
  const double coef_h = d.g * sin2 * v.v_phi;
  Tangent4 out;
  out.v_s = coef_f * ds_df + coef_h * ds_dh;
  out.v_theta = coef_f * dth_df + coef_h * dth_dh;
  out.v_t = -a_f / d.g;
  out.v_phi = -a_h / (d.g * sin2);
  return out;
}

double metric_eval(const Point4& p, const Tangent4& v, const Tangent4& w) {
  const double g = coord_functions(p).g;
  return omega_eval(p, v, apply_J(p, w)) / g;
}

double lambda_of_theta(double theta) {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  return kSqrt6 * c * sn * sn / (1.0 - 3.0 * c * c);
}

BranchId branch_of(double theta) {
  if (theta < kThetaCritical) return BranchId::A;
  if (theta < kPi - kThetaCritical) return BranchId::B;
  return BranchId::C;
}

double theta_from_lambda(double lambda, BranchId branch) {
  double lo = 0.0;
  double hi = 0.0;
  bool in_range = std::isfinite(lambda);
  switch (branch) {
    case BranchId::A:
      lo = 0.0;
      hi = kThetaCritical;
      in_range = in_range && lambda < 0.0;
      break;
    case BranchId::B:
      lo = kThetaCritical;
      hi = kPi - kThetaCritical;
      break;
    case BranchId::C:
      lo = kPi - kThetaCritical;
      hi = kPi;
      in_range = in_range && lambda > 0.0;
      break;
  }
  if (!in_range) {
    throw Error(ErrorKind::Range, "lambda = " + std::to_string(lambda) + " outside branch image");
  }
  // lambda(theta) is strictly decreasing on each branch.
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lambda_of_theta(mid) > lambda) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace hwz::geometry
