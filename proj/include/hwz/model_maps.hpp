#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hwz/moduli.hpp"

namespace hwz::model_maps {

using cplx = std::complex<double>;

struct ModelMapParams {
  moduli::Label2 label;
  double r = 1.0;
  cplx a{1.0, 0.0};
  cplx a_prime{1.0, 0.0};
};

// lambda = e^{u - it}, lambda' = e^{v - i phi}; t and phi reduced to [0, 2pi).
struct PhiValue {
  cplx lambda;
  cplx lambda_prime;
  double u, v, t, phi;
};

// z -> (a r^{p+q} z^{-p}(1-z)^{-q}, a' r^{p'+q'} z^{-p'}(1-z)^{-q'}).
// Throws Error(Puncture) at z = 0 or 1, Error(Domain) for |a|, |a'| != 1,
// r < 1 or a label with Delta <= 0.
PhiValue phi_eval(const ModelMapParams& params, cplx z);

// (p/z - q/(1-z), p'/z - q'/(1-z)); phi is singular only where both vanish.
struct ImmersionResidual {
  cplx d1, d2;
};

ImmersionResidual immersion_residual(const ModelMapParams& params, cplx z);

// An ordered pair z != w with phi(z) = phi(w), built from the residues
// (a, b) of eta = e^{2 pi i a/Delta}, eta' = e^{2 pi i b/Delta}.
struct DoublePoint {
  std::int64_t a, b;
  cplx z, w;
  double residual;  // relative mismatch of z^p(1-z)^q = w^p(1-w)^q, worst of both
};

// Residue pairs by exact enumeration, then the closed form
// z = (eta' - 1)/(eta' - eta), w = eta z. Throws Error(Residual) if either
// equality or w = conj(z) misses by more than tol.
std::vector<DoublePoint> phi_double_points(const ModelMapParams& params, double tol = 1e-9);

}  // namespace hwz::model_maps
