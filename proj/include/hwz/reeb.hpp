#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hwz {

// The integer pair (m, m') attached to one end of a subvariety. Signs are the
// signs of f and h on the limiting orbit and are never normalized; the pair
// need not be coprime (gcd = covering multiplicity).
struct EndClass {
  std::int64_t m = 0;
  std::int64_t m_prime = 0;

  bool is_zero() const { return m == 0 && m_prime == 0; }
  EndClass operator-() const { return {-m, -m_prime}; }
  friend EndClass operator+(EndClass a, EndClass b) { return {a.m + b.m, a.m_prime + b.m_prime}; }
  friend bool operator==(const EndClass&, const EndClass&) = default;
  friend auto operator<=>(const EndClass&, const EndClass&) = default;
};

std::string to_string(const EndClass& e);

}  // namespace hwz

namespace hwz::reeb {

enum class Rule {
  BothZero,     // (a): at least one entry nonzero
  NotCoprime,   // (a)
  AxisM0,       // (a): m = 0 forces m' = +-1
  AxisMPrime0,  // (a): m' = 0 forces m = 1
  NegativeFlat, // (b)/(c): m <= 0 needs |m'|/|m| > sqrt(3/2)
};

std::string to_string(Rule rule);

struct PairClassification {
  bool admissible = false;
  std::vector<Rule> violated;
};

// The closed-Reeb-orbit constraints on a coprime pair, in exact integer arithmetic.
PairClassification classify_pair(std::int64_t m, std::int64_t m_prime);

// The quadrant part ((b) and (c)) only; meaningful for non-coprime pairs too.
bool quadrant_ok(std::int64_t m, std::int64_t m_prime);

// The root of p'(1 - 3c^2) = p sqrt6 c with p' c >= 0, as an angle in (0, pi).
// For p > 0 this is the arccos of (sqrt6 a)^{-1}(-1 + (1 + 2a^2)^{1/2}), a = p'/p.
double solve_theta0(std::int64_t p, std::int64_t p_prime);

// The other root of the same quadratic; defined when p != 0 and 2p'^2 > 3p^2.
// For p > 0 this is the arccos of (sqrt6 a)^{-1}(-1 - (1 + 2a^2)^{1/2}).
double solve_theta0_bar(std::int64_t p, std::int64_t p_prime);

struct ThetaRoots {
  double theta0;
  std::optional<double> theta0_bar;
};

ThetaRoots theta_roots(std::int64_t p, std::int64_t p_prime);

// |p'(1 - 3cos^2) - p sqrt6 cos|
double theta_residual(std::int64_t p, std::int64_t p_prime, double theta);

enum class OrbitKind { PolePlus, PoleMinus, Generic };

struct ReebOrbit {
  OrbitKind kind = OrbitKind::Generic;
  EndClass pair{1, 0};  // coprime; Generic only
  std::int64_t multiplicity = 1;
  double upsilon = 0.0;
  double theta0 = 0.0;

  static ReebOrbit pole_plus();
  static ReebOrbit pole_minus();
  // Reduces (m, m') to its coprime part; throws Error(InvalidLabel) if the
  // reduction fails classify_pair and Error(ZeroPair) on (0, 0).
  static ReebOrbit generic(EndClass end, double upsilon);
};

struct OrbitPoint {
  double t;
  double theta;
  double phi;
};

// Points along the orbit: (t = tau, phi = phi0 + tau p'/p) with
// p' t - p phi = upsilon; for p = 0, (t = upsilon/p', phi = tau).
OrbitPoint orbit_point(const ReebOrbit& orbit, double tau);

}  // namespace hwz::reeb
