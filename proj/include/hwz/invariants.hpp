#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hwz/moduli.hpp"

namespace hwz::invariants {

using moduli::Label2;
using moduli::OrderedLabel3;

enum class Side { Concave, Convex };

struct GenericEnd {
  EndClass pair;
};

// An end whose limit orbit sits at theta = 0 or pi. multiplicity is m(E);
// winding is nu(E), supplied by the caller (only bounds are known in general).
struct PolarEnd {
  std::int64_t multiplicity = 1;
  std::int64_t winding = 0;
};

struct EndDescriptor {
  Side side = Side::Convex;
  std::variant<GenericEnd, PolarEnd> kind;

  static EndDescriptor generic(Side side, EndClass pair) { return {side, GenericEnd{pair}}; }
  static EndDescriptor polar(Side side, std::int64_t m, std::int64_t nu) {
    return {side, PolarEnd{m, nu}};
  }
  bool is_polar() const { return std::holds_alternative<PolarEnd>(kind); }
};

std::int64_t delta(const Label2& l);
std::int64_t delta(const OrderedLabel3& l);

// gcd(p,p'), gcd(q,q'), gcd(p+q,p'+q').
std::array<std::int64_t, 3> gcd_triple(const Label2& l);

// (Delta - sum of gcds + 2)/2. Throws Error(Parity) if the numerator is odd
// or negative.
std::int64_t double_points_formula(const Label2& l);
std::int64_t double_points_formula(const OrderedLabel3& l);

// Half the number of ordered residue pairs a != b in 1..Delta-1 with
// pa + qb = p'a + q'b = 0 mod Delta. Pure integer arithmetic.
std::int64_t double_points_bruteforce(const Label2& l);
std::int64_t double_points_bruteforce(const OrderedLabel3& l);

// Least n with 2n^2 > 3m^2.
std::int64_t m0_of(std::int64_t m);

// Largest winding an end may carry: -m0 on the concave side, m0 - 1 on the convex side.
std::int64_t winding_bound(Side side, std::int64_t m);

// -nu0 + sum of polar windings. Throws Error(BoundViolation) when a winding
// exceeds its bound, Error(Domain) on a nonpositive multiplicity.
std::int64_t c1_pairing(std::int64_t nu0, const std::vector<EndDescriptor>& ends);

struct IndexTerms {
  std::int64_t aleph = 0;        // convex generic ends
  std::int64_t aleph_plus = 0;   // sum over concave polar ends of 1 - 2m0
  std::int64_t aleph_minus = 0;  // sum over convex polar ends of 2m0 - 1
};

IndexTerms index_terms(const std::vector<EndDescriptor>& ends);

std::int64_t fredholm_index(std::int64_t chi, std::int64_t c1, const std::vector<EndDescriptor>& ends);

std::int64_t index_lower_bound(std::int64_t genus, std::int64_t pole_hits, std::int64_t aleph,
                               std::int64_t aleph0_concave, std::int64_t aleph0_convex,
                               std::int64_t aleph_concave);

// Same bound with the end counts read off the descriptors.
std::int64_t index_lower_bound(std::int64_t genus, std::int64_t pole_hits,
                               const std::vector<EndDescriptor>& ends);

std::int64_t adjunction_e_pairing(std::int64_t chi, std::int64_t c1, std::int64_t m_c);

std::int64_t translate_intersection_count(const Label2& l);
std::int64_t translate_intersection_count(const OrderedLabel3& l);

struct Eigenvalue {
  double value;
  int multiplicity;
};

struct GenericSpectrum {
  double zeta;
  std::int64_t period;
};

struct PolarSpectrum {
  std::int64_t m;
};

using SpectrumCase = std::variant<GenericSpectrum, PolarSpectrum>;

// Sorted ascending. Generic: 1/2(-zeta +- (zeta^2 + 4n^2/period^2)^{1/2}),
// n = 0..n_max. Polar: -sqrt(3/2) + n/m, |n| <= n_max.
std::vector<Eigenvalue> L0_spectrum(const SpectrumCase& c, std::int64_t n_max);

struct AsymptoticData {
  double zeta = 0.0;
  double kappa = 0.0;
  std::optional<double> sigma0;  // needs m != 0
  std::vector<Eigenvalue> spectrum;
};

// zeta, kappa and sigma0 at a generic orbit angle. Throws
// Error(DegenerateAngle) when cos^2 theta0 is within 1e-12 of 1/3, and
// Error(Domain) for theta0 outside (0, pi).
AsymptoticData asymptotic_constants(double theta0, const EndClass& end);

struct InvariantReport {
  std::vector<EndClass> label;
  std::int64_t delta = 0;
  std::array<std::int64_t, 3> gcds{};
  std::int64_t m_c = 0;
  std::int64_t m_c_oracle = 0;
  std::int64_t index = 0;
  std::int64_t lower_bound = 0;
  IndexTerms terms;
  std::int64_t chi = 0;
  std::int64_t c1 = 0;
  std::int64_t e_pairing = 0;
  std::int64_t translate_count = 0;
};

// The thrice-punctured sphere of the label: chi = -1, c1 = 0, generic ends
// p, q convex and p + q concave (aleph = 2), or all three convex (aleph = 3).
// Throws Error(InvalidLabel) if the label is not admissible.
InvariantReport sphere_report(const Label2& l);
InvariantReport sphere_report(const OrderedLabel3& l);

}  // namespace hwz::invariants
