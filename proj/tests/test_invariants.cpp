#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <complex>

#include "hwz/arith.hpp"
#include "hwz/error.hpp"
#include "hwz/invariants.hpp"
#include "hwz/moduli.hpp"

using namespace hwz;
using namespace hwz::invariants;
using moduli::Label3;

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool divisible_end(const Label2& l) {
  const std::int64_t n = l.delta();
  for (const EndClass e : {l.p, l.q, l.k()}) {
    if (e.m % n == 0 && e.m_prime % n == 0) return true;
  }
  return false;
}

// Counts (eta, eta') on the unit circle by direct complex evaluation; only
// for small Delta, as a check on the residue arithmetic.
std::int64_t double_points_complex(const Label2& l) {
  const std::int64_t n = l.delta();
  std::int64_t count = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    for (std::int64_t b = 1; b < n; ++b) {
      if (a == b) continue;
      const auto eta = std::polar(1.0, 2.0 * M_PI * a / n);
      const auto eta2 = std::polar(1.0, 2.0 * M_PI * b / n);
      const auto x = ipow(eta, l.p.m) * ipow(eta2, l.q.m);
      const auto y = ipow(eta, l.p.m_prime) * ipow(eta2, l.q.m_prime);
      if (std::abs(x - 1.0) < 1e-9 && std::abs(y - 1.0) < 1e-9) ++count;
    }
  }
  return count / 2;
}

}  // namespace

TEST_CASE("delta and double-point examples") {
  CHECK(delta(Label2{{2, 1}, {1, 2}}) == 3);
  CHECK(delta(Label2{{1, 0}, {0, 1}}) == 1);
  CHECK(delta(OrderedLabel3{{EndClass{-2, -3}, EndClass{1, -1}, EndClass{1, 4}}}) == 5);

  CHECK(double_points_formula(Label2{{2, 1}, {1, 2}}) == 0);
  CHECK(double_points_formula(Label2{{4, 1}, {1, 1}}) == 1);
  CHECK(double_points_formula(Label2{{1, -1}, {1, 4}}) == 2);
  CHECK(double_points_bruteforce(Label2{{2, 1}, {1, 2}}) == 0);
  CHECK(double_points_bruteforce(Label2{{4, 1}, {1, 1}}) == 1);
  CHECK(double_points_bruteforce(Label2{{1, -1}, {1, 4}}) == 2);

  CHECK(translate_intersection_count(Label2{{2, 1}, {1, 2}}) == 3);
  CHECK(translate_intersection_count(Label2{{4, 1}, {1, 1}}) == 3);
  CHECK(translate_intersection_count(Label2{{1, -1}, {1, 4}}) == 5);
}

TEST_CASE("formula matches brute force on every admissible label up to 6") {
  for (const auto& l : moduli::enumerate_labels2(6)) {
    CAPTURE(moduli::to_string(l));
    const auto mc = double_points_formula(l);
    CHECK(mc >= 0);
    CHECK(mc == double_points_bruteforce(l));
    if (l.delta() <= 40) CHECK(mc == double_points_complex(l));
  }
}

// The embeddedness list holds for primitive labels. Labels whose four
// entries share a factor (e.g. {(2,0),(0,2)}, Delta = 4) have m_C = 0 without
// any end divisible by Delta.
TEST_CASE("m_C vanishes exactly in the embedded cases; prime rule") {
  int primes_seen = 0, imprimitive_zero = 0;
  for (const auto& l : moduli::enumerate_labels2(7)) {
    CAPTURE(moduli::to_string(l));
    const auto n = l.delta();
    const auto mc = double_points_formula(l);
    const bool listed = n <= 2 || divisible_end(l);
    if (gcd(gcd(l.p.m, l.p.m_prime), gcd(l.q.m, l.q.m_prime)) == 1) {
      CHECK((mc == 0) == listed);
    } else {
      if (listed) CHECK(mc == 0);
      if (mc == 0 && !listed) ++imprimitive_zero;
    }
    if (n >= 3 && is_prime(n) && !divisible_end(l)) {
      CHECK(mc == (n - 1) / 2);
      ++primes_seen;
    }
  }
  CHECK(primes_seen > 100);
  CHECK(imprimitive_zero > 0);
  CHECK(double_points_formula(Label2{{2, 0}, {0, 2}}) == 0);
}

TEST_CASE("m_C agrees across the two orderings of a Label3") {
  for (const auto& l : moduli::enumerate_labels3(5)) {
    const auto check = moduli::validate_label3(l);
    REQUIRE(check.orderings.size() == 2);
    CHECK(double_points_formula(check.orderings[0]) == double_points_formula(check.orderings[1]));
  }
}

TEST_CASE("m0 and winding bounds") {
  CHECK(m0_of(1) == 2);
  CHECK(m0_of(2) == 3);
  CHECK(m0_of(5) == 7);
  for (std::int64_t m = 1; m <= 2000; ++m) {
    const auto n = m0_of(m);
    CHECK(2 * n * n > 3 * m * m);
    CHECK(2 * (n - 1) * (n - 1) <= 3 * m * m);
  }
  CHECK_THROWS_AS(m0_of(0), Error);
  CHECK(winding_bound(Side::Concave, 1) == -2);
  CHECK(winding_bound(Side::Convex, 1) == 1);
}

TEST_CASE("c1 pairing") {
  CHECK(c1_pairing(0, {}) == 0);
  CHECK(c1_pairing(1, {EndDescriptor::generic(Side::Convex, {0, 1})}) == -1);
  CHECK(c1_pairing(0, {EndDescriptor::generic(Side::Convex, {-1, -2}),
                       EndDescriptor::polar(Side::Concave, 1, -2)}) == -2);
  try {
    (void)c1_pairing(0, {EndDescriptor::polar(Side::Concave, 1, -1)});
    FAIL("expected BoundViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundViolation);
  }
  try {
    (void)c1_pairing(0, {EndDescriptor::polar(Side::Convex, 2, 3)});
    FAIL("expected BoundViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundViolation);
  }
  CHECK(c1_pairing(0, {EndDescriptor::polar(Side::Convex, 2, 2)}) == 2);
}

TEST_CASE("index examples and the lower bound") {
  const std::vector<EndDescriptor> two{EndDescriptor::generic(Side::Convex, {2, 1}),
                                       EndDescriptor::generic(Side::Convex, {1, 2}),
                                       EndDescriptor::generic(Side::Concave, {3, 3})};
  CHECK(fredholm_index(-1, 0, two) == 3);
  CHECK(index_lower_bound(0, 0, two) == 3);
  const std::vector<EndDescriptor> three{EndDescriptor::generic(Side::Convex, {1, -1}),
                                         EndDescriptor::generic(Side::Convex, {1, 4}),
                                         EndDescriptor::generic(Side::Convex, {-2, -3})};
  CHECK(fredholm_index(-1, 0, three) == 4);
  CHECK(index_lower_bound(0, 0, 3, 0, 0, 0) == 4);
  CHECK(index_lower_bound(0, 0, 2, 0, 0, 1) == 3);
  CHECK(index_lower_bound(0, 0, 1, 0, 0, 1) == 1);
  CHECK(fredholm_index(1, -1, {EndDescriptor::generic(Side::Convex, {0, 1})}) == 2);

  CHECK(adjunction_e_pairing(0, 0, 0) == 0);
  CHECK(adjunction_e_pairing(-1, 0, 0) == 1);
  CHECK(adjunction_e_pairing(-1, 0, 1) == 3);
}

TEST_CASE("every admissible sphere has index aleph + 1, equal to its lower bound") {
  for (const auto& l : moduli::enumerate_labels2(5)) {
    const auto r = sphere_report(l);
    CHECK(r.index == 3);
    CHECK(r.index == r.terms.aleph + 1);
    CHECK(r.lower_bound == r.index);
    CHECK(r.m_c == r.m_c_oracle);
    CHECK(r.e_pairing == -r.chi - r.c1 + 2 * r.m_c);
  }
  for (const auto& l : moduli::enumerate_labels3(4)) {
    for (const auto& o : moduli::validate_label3(l).orderings) {
      const auto r = sphere_report(o);
      CHECK(r.index == 4);
      CHECK(r.terms.aleph == 3);
      CHECK(r.lower_bound == 4);
    }
  }
  CHECK_THROWS_AS(sphere_report(Label2{{1, 2}, {2, 1}}), Error);
}

TEST_CASE("asymptotic constants") {
  const auto mid = asymptotic_constants(M_PI / 2, {1, 0});
  CHECK(mid.zeta == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK(mid.kappa == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
  REQUIRE(mid.sigma0);
  CHECK(std::abs(*mid.sigma0) < 1e-15);

  // The (1,1) orbit: cos theta0 = (sqrt3 - 1)/sqrt6, checked at 50 digits.
  const Big c = (boost::multiprecision::sqrt(Big(3)) - 1) / boost::multiprecision::sqrt(Big(6));
  const Big s2 = 1 - c * c;
  const Big root = boost::multiprecision::sqrt(1 + 3 * c * c * c * c);
  const Big gap = boost::multiprecision::abs(1 - 3 * c * c);
  const Big zeta = boost::multiprecision::sqrt(Big(6)) * s2 * (1 + 3 * c * c) / (root * gap);
  const Big kappa = gap / (boost::multiprecision::sqrt(Big(6)) * root);
  const Big sigma = 4 * c / (1 + s2);
  const double theta = std::acos(static_cast<double>(c));
  CHECK(std::abs(std::cos(theta) - 0.298858) < 1e-6);
  const auto d = asymptotic_constants(theta, {1, 1});
  CHECK(std::abs(d.zeta - static_cast<double>(zeta)) < 1e-13);
  CHECK(std::abs(d.kappa - static_cast<double>(kappa)) < 1e-14);
  REQUIRE(d.sigma0);
  CHECK(std::abs(*d.sigma0 - static_cast<double>(sigma)) < 1e-14);
  CHECK(d.zeta > 0);
  CHECK(d.kappa > 0);
  CHECK_FALSE(asymptotic_constants(theta, {0, 1}).sigma0);

  try {
    (void)asymptotic_constants(std::acos(1.0 / std::sqrt(3.0)), {1, 1});
    FAIL("expected DegenerateAngle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateAngle);
  }
  CHECK_THROWS_AS(asymptotic_constants(0.0, {1, 1}), Error);
  CHECK_THROWS_AS(asymptotic_constants(M_PI, {1, 1}), Error);
}

TEST_CASE("spectra") {
  const auto g = L0_spectrum(GenericSpectrum{2.0, 3}, 0);
  REQUIRE(g.size() == 2);
  CHECK(g[0].value == -2.0);
  CHECK(g[1].value == 0.0);

  for (std::int64_t n : {1, 5, 40}) {
    const auto s = L0_spectrum(GenericSpectrum{1.7, 4}, n);
    CHECK(std::is_sorted(s.begin(), s.end(), [](auto& a, auto& b) { return a.value < b.value; }));
    int zeros = 0;
    for (const auto& e : s) {
      if (e.value == 0.0) {
        ++zeros;
        CHECK(e.multiplicity == 1);
      }
    }
    CHECK(zeros == 1);
  }

  const auto p1 = L0_spectrum(PolarSpectrum{1}, 1);
  REQUIRE(p1.size() == 3);
  CHECK(p1[2].value == doctest::Approx(-0.224745).epsilon(1e-6));
  for (std::int64_t m = 1; m <= 100; ++m) {
    for (const auto& e : L0_spectrum(PolarSpectrum{m}, 3 * m)) {
      CHECK(std::abs(e.value) > 1e-9);
      CHECK(e.multiplicity == 2);
    }
  }
}
