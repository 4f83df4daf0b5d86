#include "hwz/curves.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hwz/arith.hpp"
#include "hwz/error.hpp"

namespace hwz::curves {

using geometry::BranchId;
using geometry::kPi;
using geometry::kSqrt6;
using geometry::kThetaCritical;

namespace {

Error domain(const std::string& what) { return Error(ErrorKind::Domain, what); }

// s from the value of f at angle theta: f = e^{-sqrt6 s}(1 - 3cos^2).
double s_from_f(double f, double theta) {
  const double c = std::cos(theta);
  return -std::log(f / (1.0 - 3.0 * c * c)) / kSqrt6;
}

// s from h = sqrt6 e^{-sqrt6 s} cos sin^2.
double s_from_h(double h, double theta) {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  return -std::log(h / (kSqrt6 * c * sn * sn)) / kSqrt6;
}

Point4 example1(const CurveSpec& spec, double tau, double u) {
  const auto& orbit = spec.orbit;
  if (orbit.kind != reeb::OrbitKind::Generic) {
    if (!(u > 0.0)) throw domain("Example 1 at a pole needs u > 0");
    const double theta = orbit.kind == reeb::OrbitKind::PolePlus ? 0.0 : kPi;
    return Point4::make(-std::log(u / 2.0) / kSqrt6, -tau, theta, 0.0);
  }
  const auto at = reeb::orbit_point(orbit, tau);
  if (orbit.pair.m == 0) {
    if (!(u != 0.0 && (u > 0.0) == (orbit.pair.m_prime > 0))) throw domain("Example 1 with p = 0 needs sign(u) = p'");
    return Point4::make(s_from_h(u, orbit.theta0), at.t, orbit.theta0, at.phi);
  }
  if (!(u != 0.0 && (u > 0.0) == (orbit.pair.m > 0))) throw domain("Example 1 needs sign(u) = sign(p)");
  return Point4::make(s_from_f(u, orbit.theta0), at.t, orbit.theta0, at.phi);
}

Point4 example2(const CurveSpec& spec, double tau, double u) {
  if (!(u >= 0.0)) throw domain("Example 2 needs u >= 0");
  const double f = -spec.kappa;
  const double h = spec.sign * u;
  double theta = 0.0;
  if (u == 0.0) {
    theta = spec.sign > 0 ? 0.0 : kPi;
  } else {
    theta = geometry::theta_from_lambda(h / f, spec.sign > 0 ? BranchId::A : BranchId::C);
  }
  const double s = u == 0.0 ? -std::log(spec.kappa / 2.0) / kSqrt6 : s_from_f(f, theta);
  return Point4::make(s, spec.t0, theta, spec.sign * tau);
}

Point4 example3(const CurveSpec& spec, double tau, double u) {
  const double theta = geometry::theta_from_lambda(u / spec.kappa, BranchId::B);
  return Point4::make(s_from_f(spec.kappa, theta), spec.t0, theta, tau);
}

Point4 example4(const CurveSpec& spec, double tau, double u) {
  const double kappa = spec.kappa;
  double theta = 0.0;
  if (u == 0.0) {
    theta = kappa > 0.0 ? kThetaCritical : kPi - kThetaCritical;
  } else {
    const BranchId branch = u > 0.0 ? BranchId::B : (kappa > 0.0 ? BranchId::A : BranchId::C);
    theta = geometry::theta_from_lambda(kappa / u, branch);
  }
  return Point4::make(s_from_h(kappa, theta), tau, theta, spec.phi0);
}

double u_of_theta(std::int64_t p, std::int64_t pp, double anchor, double s_anchor, double theta) {
  const double s = s_of_theta(p, pp, anchor, s_anchor, theta);
  const double c = std::cos(theta);
  return std::exp(-kSqrt6 * s) * (1.0 - 3.0 * c * c);
}

Point4 profile_point(const CurveSpec& spec, double tau, double u) {
  const auto ranges = classify_branches(spec.pair.m, spec.pair.m_prime);
  const ThetaRange& r = ranges.at(spec.range);
  const double anchor = spec.theta_anchor.value_or(0.5 * (r.lo + r.hi));
  const std::int64_t p = spec.pair.m, pp = spec.pair.m_prime;

  // u(theta) is strictly monotone on the range, so bisect in theta.
  constexpr double edge = 1e-8;
  double lo = r.lo + edge, hi = r.hi - edge;
  const double u_lo = u_of_theta(p, pp, anchor, spec.s_anchor, lo);
  const double u_hi = u_of_theta(p, pp, anchor, spec.s_anchor, hi);
  if (!((u - u_lo) * (u - u_hi) <= 0.0)) {
    throw domain("u = " + std::to_string(u) + " is not attained on this cylinder");
  }
  const bool increasing = u_hi > u_lo;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double um = u_of_theta(p, pp, anchor, spec.s_anchor, mid);
    if ((um < u) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double theta = 0.5 * (lo + hi);
  const double s = s_of_theta(p, pp, anchor, spec.s_anchor, theta);
  return Point4::make(s, tau, theta,
                      spec.phi0 + static_cast<double>(pp) / static_cast<double>(p) * tau);
}

// Bisect until each piece's Kronrod error estimate is below an absolute
// 1e-10. A relative target stalls where the integrand loses digits to
// cancellation near the fixed angles.
double adaptive(double alpha, double a, double b, int depth) {
  auto integrand = [alpha](double x) { return profile_integrand(alpha, x); };
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  const double v = gauss_kronrod<double, 15>::integrate(integrand, a, b, 0, 0.0, &err);
  // The estimate comes back for the rule on [-1, 1]; rescale to [a, b].
  if (err * 0.5 * std::abs(b - a) <= 1e-10 || depth == 0) return v;
  const double mid = 0.5 * (a + b);
  return adaptive(alpha, a, mid, depth - 1) + adaptive(alpha, mid, b, depth - 1);
}

double integrate_segment(double alpha, double a, double b) { return adaptive(alpha, a, b, 30); }

void check_spec(const CurveSpec& spec) {
  switch (spec.example_id) {
    case 1: return;
    case 2:
      if (!(spec.kappa > 0.0) || (spec.sign != 1 && spec.sign != -1)) throw domain("Example 2 needs kappa > 0, sign = +-1");
      return;
    case 3:
      if (!(spec.kappa > 0.0)) throw domain("Example 3 needs kappa > 0");
      return;
    case 4:
      if (spec.kappa == 0.0 || !std::isfinite(spec.kappa)) throw domain("Example 4 needs kappa != 0");
      return;
    case 5:
    case 6:
    case 7: {
      const auto ranges = classify_branches(spec.pair.m, spec.pair.m_prime);
      if (spec.range >= ranges.size()) throw domain("range index out of bounds");
      if (ranges[spec.range].example_id != spec.example_id) throw domain("range does not belong to this example");
      return;
    }
    default: throw domain("example id must be 1..7");
  }
}

}  // namespace

std::string to_string(FixedAngle a) {
  switch (a) {
    case FixedAngle::Zero: return "0";
    case FixedAngle::Theta0: return "theta0";
    case FixedAngle::Theta0Bar: return "theta0_bar";
    case FixedAngle::Pi: return "pi";
  }
  return "?";
}

std::vector<ThetaRange> classify_branches(std::int64_t p, std::int64_t p_prime) {
  if (p <= 0 || gcd(p, p_prime) != 1) throw domain("classify_branches needs p > 0 and (p, p') coprime");
  const auto roots = reeb::theta_roots(p, p_prime);
  const double t0 = roots.theta0;
  using F = FixedAngle;
  if (!roots.theta0_bar) {
    return {{0.0, t0, F::Zero, F::Theta0, 5}, {t0, kPi, F::Theta0, F::Pi, 5}};
  }
  const double tb = *roots.theta0_bar;
  if (p_prime > 0) {
    return {{0.0, t0, F::Zero, F::Theta0, 5}, {t0, tb, F::Theta0, F::Theta0Bar, 6}, {tb, kPi, F::Theta0Bar, F::Pi, 7}};
  }
  return {{0.0, tb, F::Zero, F::Theta0Bar, 7}, {tb, t0, F::Theta0Bar, F::Theta0, 6}, {t0, kPi, F::Theta0, F::Pi, 5}};
}

CurveSpec CurveSpec::example1(const reeb::ReebOrbit& orbit) {
  CurveSpec s;
  s.example_id = 1;
  s.orbit = orbit;
  return s;
}

CurveSpec CurveSpec::example2(double t0, double kappa, int sign_p_prime) {
  CurveSpec s;
  s.example_id = 2;
  s.t0 = t0;
  s.kappa = kappa;
  s.sign = sign_p_prime;
  check_spec(s);
  return s;
}

CurveSpec CurveSpec::example3(double t0, double kappa) {
  CurveSpec s;
  s.example_id = 3;
  s.t0 = t0;
  s.kappa = kappa;
  check_spec(s);
  return s;
}

CurveSpec CurveSpec::example4(double phi0, double kappa) {
  CurveSpec s;
  s.example_id = 4;
  s.phi0 = phi0;
  s.kappa = kappa;
  check_spec(s);
  return s;
}

CurveSpec CurveSpec::profile(EndClass pair, std::size_t range, double phi0, double s_anchor,
                             std::optional<double> theta_anchor) {
  const auto ranges = classify_branches(pair.m, pair.m_prime);
  if (range >= ranges.size()) throw domain("range index out of bounds");
  CurveSpec s;
  s.example_id = ranges[range].example_id;
  s.pair = pair;
  s.range = range;
  s.phi0 = phi0;
  s.s_anchor = s_anchor;
  s.theta_anchor = theta_anchor;
  return s;
}

Point4 eval_invariant_curve(const CurveSpec& spec, double tau, double u) {
  check_spec(spec);
  switch (spec.example_id) {
    case 1: return example1(spec, tau, u);
    case 2: return example2(spec, tau, u);
    case 3: return example3(spec, tau, u);
    case 4: return example4(spec, tau, u);
    default: return profile_point(spec, tau, u);
  }
}

double s_max(const CurveSpec& spec) {
  check_spec(spec);
  switch (spec.example_id) {
    case 2: return -std::log(spec.kappa / 2.0) / kSqrt6;
    // f = kappa at theta = pi/2, where 1 - 3cos^2 = 1.
    case 3: return -std::log(spec.kappa) / kSqrt6;
    case 4: return -std::log(3.0 * std::abs(spec.kappa) / (2.0 * std::sqrt(2.0))) / kSqrt6;
    default: throw Error(ErrorKind::WrongExample, "s_max is defined for Examples 2, 3, 4 only");
  }
}

double profile_integrand(double alpha, double theta) {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const double gap = 1.0 - 3.0 * c * c;
  return -(gap + kSqrt6 * alpha * c * sn * sn) / ((kSqrt6 * c - alpha * gap) * sn);
}

double s_of_theta(std::int64_t p, std::int64_t p_prime, double theta_ref, double s_ref, double theta) {
  if (p <= 0) throw domain("s_of_theta needs p > 0");
  if (!(theta > 0.0 && theta < kPi && theta_ref > 0.0 && theta_ref < kPi)) {
    throw Error(ErrorKind::Branch, "theta and theta_ref must lie strictly inside (0, pi)");
  }
  const auto roots = reeb::theta_roots(p, p_prime);
  const double a = std::min(theta, theta_ref);
  const double b = std::max(theta, theta_ref);
  auto crosses = [&](double x) { return a <= x && x <= b; };
  if (crosses(roots.theta0) || (roots.theta0_bar && crosses(*roots.theta0_bar))) {
    throw Error(ErrorKind::Branch, "interval [" + std::to_string(a) + ", " + std::to_string(b) +
                                       "] meets a fixed angle");
  }
  if (theta == theta_ref) return s_ref;
  const double alpha = static_cast<double>(p_prime) / static_cast<double>(p);
  return s_ref + integrate_segment(alpha, theta_ref, theta);
}

Trace integrate_profile(std::int64_t p, std::int64_t p_prime, std::size_t range, double s_anchor,
                        std::size_t n_samples, std::optional<double> theta_anchor, double clip) {
  if (n_samples < 2) throw domain("a trace needs at least 2 samples");
  if (!(clip > 0.0)) throw domain("clip must be positive");
  Trace trace;
  trace.spec = CurveSpec::profile({p, p_prime}, range, 0.0, s_anchor, theta_anchor);
  const ThetaRange r = classify_branches(p, p_prime)[range];
  const double lo = r.lo + clip;
  const double hi = r.hi - clip;
  if (!(hi > lo)) throw domain("clip leaves an empty range");
  const double anchor = theta_anchor.value_or(0.5 * (r.lo + r.hi));
  const double alpha = static_cast<double>(p_prime) / static_cast<double>(p);
  trace.samples.reserve(n_samples);
  // One quadrature from the anchor, then sample to sample.
  double s = s_of_theta(p, p_prime, anchor, s_anchor, lo);
  double prev = lo;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double theta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    if (i > 0) s += integrate_segment(alpha, prev, theta);
    prev = theta;
    const auto fh = geometry::coord_functions({s, 0.0, theta, 0.0});
    trace.samples.push_back({s, 0.0, theta, 0.0, fh.f, fh.h});
  }
  return trace;
}

}  // namespace hwz::curves
