#pragma once

#include <array>

namespace hwz::geometry {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt6 = 2.44948974278317809820;
// cos^2(theta_c) = 1/3: the angles where 1 - 3cos^2 theta changes sign.
inline constexpr double kThetaCritical = 0.95531661812450927816;

// A point of R x (S^1 x S^2) in (s, t, theta, phi) coordinates. t and phi
// are kept reduced to [0, 2pi); theta lies in [0, pi].
struct Point4 {
  double s = 0.0;
  double t = 0.0;
  double theta = kPi / 2;
  double phi = 0.0;

  static Point4 make(double s, double t, double theta, double phi);
};

// Coefficients on (d_s, d_t, d_theta, d_phi).
struct Tangent4 {
  double v_s = 0.0;
  double v_t = 0.0;
  double v_theta = 0.0;
  double v_phi = 0.0;

  static Tangent4 d_s() { return {1, 0, 0, 0}; }
  static Tangent4 d_t() { return {0, 1, 0, 0}; }
  static Tangent4 d_theta() { return {0, 0, 1, 0}; }
  static Tangent4 d_phi() { return {0, 0, 0, 1}; }

  std::array<double, 4> as_array() const { return {v_s, v_t, v_theta, v_phi}; }
  friend Tangent4 operator+(const Tangent4& a, const Tangent4& b) {
    return {a.v_s + b.v_s, a.v_t + b.v_t, a.v_theta + b.v_theta, a.v_phi + b.v_phi};
  }
  friend Tangent4 operator*(double k, const Tangent4& a) {
    return {k * a.v_s, k * a.v_t, k * a.v_theta, k * a.v_phi};
  }
};

// The three theta intervals on which lambda(theta) is monotone:
//   A = (0, theta_c), B = (theta_c, pi - theta_c), C = (pi - theta_c, pi).
enum class BranchId { A, B, C };

double reduce_angle(double x);

struct CoordValues {
  double f;
  double h;
  double g;
};

// f = e^{-sqrt6 s}(1 - 3cos^2), h = sqrt6 e^{-sqrt6 s} cos sin^2,
// g = sqrt6 e^{-sqrt6 s}(1 + 3cos^4)^{1/2}.
CoordValues coord_functions(const Point4& p);

double contact_eval(const Point4& p, const Tangent4& v);

// omega = dt ^ df + dphi ^ dh.
double omega_eval(const Point4& p, const Tangent4& v, const Tangent4& w);

// The Reeb field normalized by alpha(v) = 1. At the poles the d_phi
// coefficient is dropped.
Tangent4 reeb_vector(const Point4& p);

// J d_t = g d_f, J d_phi = g sin^2 d_h. Throws Error(Pole) at theta in {0, pi}.
Tangent4 apply_J(const Point4& p, const Tangent4& v);

// g^{-1} omega(v, J w): reproduces ds^2 + dt^2 + dtheta^2 + sin^2 dphi^2.
double metric_eval(const Point4& p, const Tangent4& v, const Tangent4& w);

// lambda(theta) = sqrt6 cos sin^2 / (1 - 3cos^2), i.e. h/f.
double lambda_of_theta(double theta);

BranchId branch_of(double theta);

// Unique theta on the branch with lambda(theta) = lambda; bisection.
// Throws Error(Range) when lambda is outside the branch's image.
double theta_from_lambda(double lambda, BranchId branch);

}  // namespace hwz::geometry
