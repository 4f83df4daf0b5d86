#include "hwz/model_maps.hpp"

#include <algorithm>
#include <cmath>

#include "hwz/arith.hpp"
#include "hwz/error.hpp"
#include "hwz/geometry.hpp"

namespace hwz::model_maps {

namespace {

void check_params(const ModelMapParams& params) {
  if (params.label.delta() <= 0) throw Error(ErrorKind::Domain, "model map needs Delta > 0");
  if (!(params.r >= 1.0)) throw Error(ErrorKind::Domain, "model map needs r >= 1");
  if (std::abs(std::abs(params.a) - 1.0) > 1e-12 || std::abs(std::abs(params.a_prime) - 1.0) > 1e-12) {
    throw Error(ErrorKind::Domain, "a and a' must have unit modulus");
  }
}

void check_puncture(cplx z) {
  if (z == cplx{0.0, 0.0} || z == cplx{1.0, 0.0}) throw Error(ErrorKind::Puncture, "z is a puncture (0 or 1)");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error(ErrorKind::Puncture, "z is not finite");
}

double relative_gap(cplx x, cplx y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

PhiValue phi_eval(const ModelMapParams& params, cplx z) {
  check_params(params);
  check_puncture(z);
  const auto& l = params.label;
  const double lr = std::log(params.r);
  const double lz = std::log(std::abs(z));
  const double l1z = std::log(std::abs(1.0 - z));
  const double az = std::arg(z);
  const double a1z = std::arg(1.0 - z);
  const auto d = [](std::int64_t n) { return static_cast<double>(n); };

  PhiValue out;
  // Logs are accumulated directly so the linear identities among u, v hold
  // to rounding.
  out.u = std::log(std::abs(params.a)) + d(l.p.m + l.q.m) * lr - d(l.p.m) * lz - d(l.q.m) * l1z;
  out.v = std::log(std::abs(params.a_prime)) + d(l.p.m_prime + l.q.m_prime) * lr - d(l.p.m_prime) * lz -
          d(l.q.m_prime) * l1z;
  const double arg_l = std::arg(params.a) - d(l.p.m) * az - d(l.q.m) * a1z;
  const double arg_lp = std::arg(params.a_prime) - d(l.p.m_prime) * az - d(l.q.m_prime) * a1z;
  out.t = geometry::reduce_angle(-arg_l);
  out.phi = geometry::reduce_angle(-arg_lp);
  out.lambda = params.a * std::pow(params.r, d(l.p.m + l.q.m)) * ipow(z, -l.p.m) * ipow(1.0 - z, -l.q.m);
  out.lambda_prime = params.a_prime * std::pow(params.r, d(l.p.m_prime + l.q.m_prime)) * ipow(z, -l.p.m_prime) *
                     ipow(1.0 - z, -l.q.m_prime);
  return out;
}

ImmersionResidual immersion_residual(const ModelMapParams& params, cplx z) {
  check_puncture(z);
  const auto& l = params.label;
  const auto d = [](std::int64_t n) { return static_cast<double>(n); };
  return {d(l.p.m) / z - d(l.q.m) / (1.0 - z), d(l.p.m_prime) / z - d(l.q.m_prime) / (1.0 - z)};
}

std::vector<DoublePoint> phi_double_points(const ModelMapParams& params, double tol) {
  check_params(params);
  const auto& l = params.label;
  const std::int64_t n = l.delta();
  std::vector<DoublePoint> out;
  for (std::int64_t a = 1; a < n; ++a) {
    for (std::int64_t b = 1; b < n; ++b) {
      if (a == b) continue;
      if (mod(l.p.m * a + l.q.m * b, n) != 0 || mod(l.p.m_prime * a + l.q.m_prime * b, n) != 0) continue;
      const cplx eta = std::polar(1.0, 2.0 * geometry::kPi * static_cast<double>(a) / static_cast<double>(n));
      const cplx eta_p = std::polar(1.0, 2.0 * geometry::kPi * static_cast<double>(b) / static_cast<double>(n));
      const cplx z = (eta_p - 1.0) / (eta_p - eta);
      const cplx w = eta * z;
      const double r1 = relative_gap(ipow(z, l.p.m) * ipow(1.0 - z, l.q.m), ipow(w, l.p.m) * ipow(1.0 - w, l.q.m));
      const double r2 = relative_gap(ipow(z, l.p.m_prime) * ipow(1.0 - z, l.q.m_prime),
                                     ipow(w, l.p.m_prime) * ipow(1.0 - w, l.q.m_prime));
      const double residual = std::max(r1, r2);
      if (!(residual < tol)) {
        throw Error(ErrorKind::Residual, "double point (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") residual " + std::to_string(residual));
      }
      if (!(std::abs(w - std::conj(z)) < tol)) {
        throw Error(ErrorKind::Residual, "double point (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") has w != conj(z)");
      }
      out.push_back({a, b, z, w, residual});
    }
  }
  return out;
}

}  // namespace hwz::model_maps
