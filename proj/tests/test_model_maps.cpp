#include <doctest.h>

#include <cmath>
#include <random>

#include "hwz/error.hpp"
#include "hwz/invariants.hpp"
#include "hwz/model_maps.hpp"
#include "hwz/moduli.hpp"

using namespace hwz;
using namespace hwz::model_maps;
using moduli::Label2;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Internal;
}

// min over a polar grid of max(|d1|, |d2|) |z| |1 - z|.
double immersion_floor(const Label2& l) {
  double best = 1e300;
  const ModelMapParams params{l};
  for (int i = 1; i <= 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const cplx z = std::polar(0.03 * i, 2 * M_PI * j / 100.0 + 1e-3);
      if (std::abs(z - 1.0) < 1e-9) continue;
      const auto d = immersion_residual(params, z);
      best = std::min(best, std::max(std::abs(d.d1), std::abs(d.d2)) * std::abs(z) * std::abs(1.0 - z));
    }
  }
  return best;
}

// The same quantity minimized over all of C. Both rescaled residuals are
// linear in z, p - (p+q)z and p' - (p'+q')z, so when neither slope vanishes the
// minimum of the larger sits between their roots: Delta/(|p+q| + |p'+q'|).
double immersion_floor_exact(const Label2& l) {
  const auto k = l.k();
  if (k.m == 0) return static_cast<double>(std::abs(l.p.m));
  if (k.m_prime == 0) return static_cast<double>(std::abs(l.p.m_prime));
  return static_cast<double>(l.delta()) / static_cast<double>(std::abs(k.m) + std::abs(k.m_prime));
}

}  // namespace

TEST_CASE("phi_eval example and punctures") {
  const ModelMapParams params{Label2{{1, 0}, {0, 1}}, std::exp(1.0)};
  const auto v = phi_eval(params, cplx{-1.0, 0.0});
  CHECK(std::abs(v.lambda - cplx{-std::exp(1.0), 0.0}) < 1e-12);
  CHECK(v.u == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(v.t == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(std::abs(std::exp(cplx{v.u, -v.t}) - v.lambda) < 1e-12);
  CHECK(std::abs(std::exp(cplx{v.v, -v.phi}) - v.lambda_prime) < 1e-12);

  CHECK(kind_of([&] { (void)phi_eval(params, 0.0); }) == ErrorKind::Puncture);
  CHECK(kind_of([&] { (void)phi_eval(params, 1.0); }) == ErrorKind::Puncture);
  CHECK(kind_of([&] { (void)immersion_residual(params, 1.0); }) == ErrorKind::Puncture);
  CHECK(kind_of([] { (void)phi_eval({Label2{{1, 2}, {2, 1}}}, 0.5); }) == ErrorKind::Domain);
  CHECK(kind_of([] { (void)phi_eval({Label2{{1, 0}, {0, 1}}, 0.5}, 0.5); }) == ErrorKind::Domain);
  CHECK(kind_of([] { (void)phi_eval({Label2{{1, 0}, {0, 1}}, 2.0, cplx{2.0, 0.0}}, 0.5); }) == ErrorKind::Domain);
}

TEST_CASE("log-coordinate identities at random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.05, 5.0), angle(-M_PI, M_PI);
  for (const Label2 l : {Label2{{4, 1}, {1, 1}}, Label2{{2, 1}, {1, 2}}, Label2{{1, -1}, {1, 4}},
                         Label2{{1, 0}, {0, 1}}}) {
    for (double r : {1.0, 3.0, 50.0}) {
      const ModelMapParams params{l, r, std::polar(1.0, 0.4), std::polar(1.0, -1.1)};
      const double n = static_cast<double>(l.delta());
      for (int i = 0; i < 1000; ++i) {
        const cplx z = std::polar(radius(rng), angle(rng));
        const auto v = phi_eval(params, z);
        CHECK(std::abs(l.q.m * v.v - l.q.m_prime * v.u + n * std::log(r / std::abs(z))) < 1e-10);
        CHECK(std::abs(l.p.m * v.v - l.p.m_prime * v.u - n * std::log(r / std::abs(1.0 - z))) < 1e-10);
      }
    }
  }
}

TEST_CASE("the model maps are immersions") {
  const ModelMapParams trivial{Label2{{1, 0}, {0, 1}}};
  for (const cplx z : {cplx{0.5, 0.1}, cplx{-3.0, 2.0}, cplx{0.0, 1.0}}) {
    CHECK(std::abs(immersion_residual(trivial, z).d1 - 1.0 / z) < 1e-14);
  }
  CHECK(immersion_floor_exact(Label2{{2, 1}, {1, 2}}) == 0.5);
  CHECK(immersion_floor_exact(Label2{{4, 1}, {1, 1}}) == doctest::Approx(3.0 / 7.0));
  CHECK(immersion_floor(Label2{{2, 1}, {1, 2}}) == doctest::Approx(0.530001).epsilon(1e-5));
  CHECK(immersion_floor(Label2{{4, 1}, {1, 1}}) == doctest::Approx(0.440002).epsilon(1e-5));
  for (const auto& l : moduli::enumerate_labels2(3)) {
    CAPTURE(moduli::to_string(l));
    const double exact = immersion_floor_exact(l);
    CHECK(exact > 0.0);
    CHECK(immersion_floor(l) >= exact * (1 - 1e-12));
  }
}

TEST_CASE("double point examples") {
  CHECK(phi_double_points({Label2{{2, 1}, {1, 2}}}).empty());

  const auto two = phi_double_points({Label2{{4, 1}, {1, 1}}, 2.0});
  REQUIRE(two.size() == 2);
  CHECK(two[0].a == 1);
  CHECK(two[0].b == 2);
  CHECK(two[1].a == 2);
  CHECK(two[1].b == 1);

  const auto four = phi_double_points({Label2{{1, -1}, {1, 4}}, 2.0});
  REQUIRE(four.size() == 4);
  for (const auto& d : four) CHECK((d.a + d.b) % 5 == 0);
}

TEST_CASE("double points satisfy their defining equations") {
  for (const auto& l : moduli::enumerate_labels2(6)) {
    CAPTURE(moduli::to_string(l));
    const auto pts = phi_double_points({l, 10.0});
    CHECK(static_cast<std::int64_t>(pts.size()) == 2 * invariants::double_points_bruteforce(l));
    for (const auto& d : pts) {
      CHECK(d.residual < 1e-9);
      CHECK(std::abs(d.w - std::conj(d.z)) < 1e-9);
      CHECK(std::abs(d.z - d.w) > 1e-9);
      // The images agree under the map itself, not only the monomials.
      const ModelMapParams params{l, 10.0, std::polar(1.0, 0.3), std::polar(1.0, 2.0)};
      const auto at_z = phi_eval(params, d.z);
      const auto at_w = phi_eval(params, d.w);
      CHECK(std::abs(at_z.lambda - at_w.lambda) < 1e-9 * std::abs(at_z.lambda));
      CHECK(std::abs(at_z.lambda_prime - at_w.lambda_prime) < 1e-9 * std::abs(at_z.lambda_prime));
    }
  }
}

TEST_CASE("double points do not depend on r, a, a'") {
  const Label2 l{{4, 1}, {1, 1}};
  const auto base = phi_double_points({l, 2.0});
  for (double r : {10.0, 100.0}) {
    const auto other = phi_double_points({l, r, std::polar(1.0, 1.0), std::polar(1.0, -0.5)});
    REQUIRE(other.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(other[i].a == base[i].a);
      CHECK(other[i].b == base[i].b);
      CHECK(std::abs(other[i].z - base[i].z) < 1e-15);
    }
  }
}
