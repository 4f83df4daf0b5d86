#include "hwz/reeb.hpp"

#include <cmath>

#include "hwz/arith.hpp"
#include "hwz/error.hpp"
#include "hwz/geometry.hpp"

namespace hwz {

std::string to_string(const EndClass& e) {
  return "(" + std::to_string(e.m) + "," + std::to_string(e.m_prime) + ")";
}

}  // namespace hwz

namespace hwz::reeb {

using geometry::kPi;
using geometry::kSqrt6;

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::BothZero: return "a:both-zero";
    case Rule::NotCoprime: return "a:not-coprime";
    case Rule::AxisM0: return "a:m=0-needs-m'=+-1";
    case Rule::AxisMPrime0: return "a:m'=0-needs-m=1";
    case Rule::NegativeFlat: return "b/c:m<=0-needs-steep";
  }
  return "?";
}

bool quadrant_ok(std::int64_t m, std::int64_t m_prime) {
  return m > 0 || steep(m, m_prime);
}

PairClassification classify_pair(std::int64_t m, std::int64_t m_prime) {
  PairClassification out;
  if (m == 0 && m_prime == 0) {
    out.violated.push_back(Rule::BothZero);
    return out;
  }
  if (m == 0 && m_prime != 1 && m_prime != -1) out.violated.push_back(Rule::AxisM0);
  if (m_prime == 0 && m != 1) out.violated.push_back(Rule::AxisMPrime0);
  if (m != 0 && m_prime != 0 && gcd(m, m_prime) != 1) out.violated.push_back(Rule::NotCoprime);
  // For a nonzero pair, (c) is the contrapositive of (b): m = 0 is always steep.
  if (!quadrant_ok(m, m_prime)) out.violated.push_back(Rule::NegativeFlat);
  out.admissible = out.violated.empty();
  return out;
}

namespace {

struct QuadraticRoots {
  double same_sign;      // cos with sign(cos) = sign(p')
  double opposite_sign;  // the other root
};

// Roots of 3a c^2 + sqrt6 c - a = 0 (a = p'/p != 0), written to avoid the
// cancellation in -1 + sqrt(1 + 2a^2).
QuadraticRoots quadratic_roots(std::int64_t p, std::int64_t p_prime) {
  const double a = static_cast<double>(p_prime) / static_cast<double>(p);
  const double root = std::sqrt(1.0 + 2.0 * a * a);
  const double small = 2.0 * a / (kSqrt6 * (1.0 + root));   // (4.11), |.| < 1/sqrt3
  const double large = (-1.0 - root) / (kSqrt6 * a);         // (4.12)
  // sign(small) = sign(a); p' c >= 0 picks small when p > 0.
  if (p > 0) return {small, large};
  return {large, small};
}

}  // namespace

double solve_theta0(std::int64_t p, std::int64_t p_prime) {
  if (p == 0 && p_prime == 0) throw Error(ErrorKind::ZeroPair, "(0,0) has no Reeb orbit");
  if (!quadrant_ok(p, p_prime)) {
    throw Error(ErrorKind::InvalidLabel,
                "pair " + to_string(EndClass{p, p_prime}) + " has no closed Reeb orbit");
  }
  if (p_prime == 0) return kPi / 2;
  if (p == 0) return std::acos((p_prime > 0 ? 1.0 : -1.0) / std::sqrt(3.0));
  return std::acos(quadratic_roots(p, p_prime).same_sign);
}

double solve_theta0_bar(std::int64_t p, std::int64_t p_prime) {
  if (p == 0 || !steep(p, p_prime)) {
    throw Error(ErrorKind::OutOfRegime,
                "theta0_bar needs p != 0 and 2p'^2 > 3p^2, got " + to_string(EndClass{p, p_prime}));
  }
  return std::acos(quadratic_roots(p, p_prime).opposite_sign);
}

ThetaRoots theta_roots(std::int64_t p, std::int64_t p_prime) {
  ThetaRoots out{solve_theta0(p, p_prime), std::nullopt};
  if (p != 0 && steep(p, p_prime)) out.theta0_bar = solve_theta0_bar(p, p_prime);
  return out;
}

double theta_residual(std::int64_t p, std::int64_t p_prime, double theta) {
  const double c = std::cos(theta);
  return std::abs(static_cast<double>(p_prime) * (1.0 - 3.0 * c * c) -
                  static_cast<double>(p) * kSqrt6 * c);
}

ReebOrbit ReebOrbit::pole_plus() {
  ReebOrbit o;
  o.kind = OrbitKind::PolePlus;
  o.theta0 = 0.0;
  return o;
}

ReebOrbit ReebOrbit::pole_minus() {
  ReebOrbit o;
  o.kind = OrbitKind::PoleMinus;
  o.theta0 = kPi;
  return o;
}

ReebOrbit ReebOrbit::generic(EndClass end, double upsilon) {
  if (end.is_zero()) throw Error(ErrorKind::ZeroPair, "(0,0) has no Reeb orbit");
  const std::int64_t g = gcd(end.m, end.m_prime);
  const EndClass reduced{end.m / g, end.m_prime / g};
  const auto cls = classify_pair(reduced.m, reduced.m_prime);
  if (!cls.admissible) {
    throw Error(ErrorKind::InvalidLabel, "pair " + to_string(end) + " violates " +
                                             to_string(cls.violated.front()));
  }
  ReebOrbit o;
  o.kind = OrbitKind::Generic;
  o.pair = reduced;
  o.multiplicity = g;
  o.upsilon = geometry::reduce_angle(upsilon);
  o.theta0 = solve_theta0(reduced.m, reduced.m_prime);
  return o;
}

OrbitPoint orbit_point(const ReebOrbit& orbit, double tau) {
  using geometry::reduce_angle;
  switch (orbit.kind) {
    case OrbitKind::PolePlus: return {reduce_angle(tau), 0.0, 0.0};
    case OrbitKind::PoleMinus: return {reduce_angle(tau), kPi, 0.0};
    case OrbitKind::Generic: break;
  }
  const auto p = static_cast<double>(orbit.pair.m);
  const auto pp = static_cast<double>(orbit.pair.m_prime);
  if (orbit.pair.m == 0) {
    return {reduce_angle(orbit.upsilon / pp), orbit.theta0, reduce_angle(tau)};
  }
  const double phi0 = -orbit.upsilon / p;
  return {reduce_angle(tau), orbit.theta0, reduce_angle(phi0 + tau * pp / p)};
}

}  // namespace hwz::reeb
