#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwz/geometry.hpp"
#include "hwz/reeb.hpp"

namespace hwz::curves {

using geometry::Point4;

// Angles where the profile equation has constant solutions.
enum class FixedAngle { Zero, Theta0, Theta0Bar, Pi };

std::string to_string(FixedAngle a);

struct ThetaRange {
  double lo;
  double hi;
  FixedAngle lo_label;
  FixedAngle hi_label;
  int example_id;  // 5, 6 or 7
};

// The theta intervals swept by the non-constant solutions for (p, p'), p > 0.
// Two ranges unless 2p'^2 > 3p^2, then three.
std::vector<ThetaRange> classify_branches(std::int64_t p, std::int64_t p_prime);

// Parameters of one of the seven T-invariant examples. Only the fields the
// example uses are read.
struct CurveSpec {
  int example_id = 1;
  reeb::ReebOrbit orbit;  // 1
  double t0 = 0.0;        // 2, 3
  double phi0 = 0.0;      // 4-7
  double kappa = 1.0;     // 2-4; h-level for 4 (nonzero), f-level otherwise (positive)
  int sign = 1;           // 2: sign of p'
  EndClass pair{1, 0};    // 5-7
  std::size_t range = 0;  // index into classify_branches(pair)
  double s_anchor = 0.0;
  std::optional<double> theta_anchor;  // default: the range midpoint

  static CurveSpec example1(const reeb::ReebOrbit& orbit);
  static CurveSpec example2(double t0, double kappa, int sign_p_prime);
  static CurveSpec example3(double t0, double kappa);
  static CurveSpec example4(double phi0, double kappa);
  // Examples 5-7; the example id is read off the chosen range.
  static CurveSpec profile(EndClass pair, std::size_t range, double phi0, double s_anchor,
                           std::optional<double> theta_anchor = std::nullopt);
};

// The point of the example at parameters (tau, u). Throws Error(Domain)
// outside the parameter domain or for a malformed spec.
Point4 eval_invariant_curve(const CurveSpec& spec, double tau, double u);

// Largest s on Examples 2, 3, 4 (attained at u = 0). Throws Error(WrongExample)
// for the others.
double s_max(const CurveSpec& spec);

// The integrand whose antiderivative is s(theta), alpha = p'/p.
double profile_integrand(double alpha, double theta);

// s_ref + integral of profile_integrand from theta_ref to theta. Throws
// Error(Branch) if the closed interval between them meets a fixed angle,
// Error(Domain) unless p > 0.
double s_of_theta(std::int64_t p, std::int64_t p_prime, double theta_ref, double s_ref, double theta);

struct TraceSample {
  double s, t, theta, phi, f, h;
};

struct Trace {
  CurveSpec spec;
  std::vector<TraceSample> samples;
};

// n_samples points, ascending in theta over [lo + clip, hi - clip] of the
// chosen range, at tau = 0. The anchor is the midpoint unless theta_anchor is
// given.
Trace integrate_profile(std::int64_t p, std::int64_t p_prime, std::size_t range, double s_anchor,
                        std::size_t n_samples, std::optional<double> theta_anchor = std::nullopt,
                        double clip = 1e-4);

}  // namespace hwz::curves
