#include "hwz/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "hwz/arith.hpp"
#include "hwz/error.hpp"
#include "hwz/geometry.hpp"

namespace hwz::invariants {

std::int64_t delta(const Label2& l) { return l.delta(); }
std::int64_t delta(const OrderedLabel3& l) { return l.delta(); }

std::array<std::int64_t, 3> gcd_triple(const Label2& l) {
  const EndClass k = l.k();
  return {gcd(l.p.m, l.p.m_prime), gcd(l.q.m, l.q.m_prime), gcd(k.m, k.m_prime)};
}

std::int64_t double_points_formula(const Label2& l) {
  const auto g = gcd_triple(l);
  const std::int64_t twice = l.delta() - g[0] - g[1] - g[2] + 2;
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorKind::Parity, "2 m_C = " + std::to_string(twice) + " for " + moduli::to_string(l));
  }
  return twice / 2;
}

std::int64_t double_points_formula(const OrderedLabel3& l) { return double_points_formula(l.first_two()); }

std::int64_t double_points_bruteforce(const Label2& l) {
  const std::int64_t n = l.delta();
  if (n < 1) throw Error(ErrorKind::InvalidLabel, "brute force needs Delta >= 1");
  // Residues are advanced by addition, so the inner loop has no division.
  const std::int64_t p = mod(l.p.m, n), pp = mod(l.p.m_prime, n);
  const std::int64_t q = mod(l.q.m, n), qp = mod(l.q.m_prime, n);
  std::int64_t count = 0;
  std::int64_t ra = 0, rpa = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    ra += p;
    if (ra >= n) ra -= n;
    rpa += pp;
    if (rpa >= n) rpa -= n;
    std::int64_t rb = 0, rpb = 0;
    for (std::int64_t b = 1; b < n; ++b) {
      rb += q;
      if (rb >= n) rb -= n;
      rpb += qp;
      if (rpb >= n) rpb -= n;
      if (a == b) continue;
      const std::int64_t s1 = ra + rb;
      const std::int64_t s2 = rpa + rpb;
      if ((s1 == 0 || s1 == n) && (s2 == 0 || s2 == n)) ++count;
    }
  }
  if (count % 2 != 0) {
    throw Error(ErrorKind::Parity, "odd root-pair count " + std::to_string(count) + " for " +
                                       moduli::to_string(l));
  }
  return count / 2;
}

std::int64_t double_points_bruteforce(const OrderedLabel3& l) { return double_points_bruteforce(l.first_two()); }

std::int64_t m0_of(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::Domain, "m0 needs m >= 1, got " + std::to_string(m));
  auto n = static_cast<std::int64_t>(std::floor(static_cast<double>(m) * std::sqrt(1.5)));
  while (n > 1 && 2 * (n - 1) * (n - 1) > 3 * m * m) --n;
  while (2 * n * n <= 3 * m * m) ++n;
  return n;
}

std::int64_t winding_bound(Side side, std::int64_t m) {
  return side == Side::Concave ? -m0_of(m) : m0_of(m) - 1;
}

std::int64_t c1_pairing(std::int64_t nu0, const std::vector<EndDescriptor>& ends) {
  if (nu0 < 0) throw Error(ErrorKind::Domain, "nu0 must be nonnegative");
  std::int64_t total = -nu0;
  for (const auto& e : ends) {
    const auto* polar = std::get_if<PolarEnd>(&e.kind);
    if (!polar) continue;
    if (polar->multiplicity < 1) throw Error(ErrorKind::Domain, "polar end multiplicity must be positive");
    const std::int64_t bound = winding_bound(e.side, polar->multiplicity);
    if (polar->winding > bound) {
      throw Error(ErrorKind::BoundViolation,
                  std::string(e.side == Side::Concave ? "concave" : "convex") + " polar winding " +
                      std::to_string(polar->winding) + " exceeds " + std::to_string(bound));
    }
    total += polar->winding;
  }
  return total;
}

IndexTerms index_terms(const std::vector<EndDescriptor>& ends) {
  IndexTerms t;
  for (const auto& e : ends) {
    if (const auto* polar = std::get_if<PolarEnd>(&e.kind)) {
      const std::int64_t m0 = m0_of(polar->multiplicity);
      if (e.side == Side::Concave) {
        t.aleph_plus += 1 - 2 * m0;
      } else {
        t.aleph_minus += 2 * m0 - 1;
      }
    } else if (e.side == Side::Convex) {
      ++t.aleph;
    }
  }
  return t;
}

std::int64_t fredholm_index(std::int64_t chi, std::int64_t c1, const std::vector<EndDescriptor>& ends) {
  const IndexTerms t = index_terms(ends);
  return -chi - 2 * c1 + t.aleph + t.aleph_plus + t.aleph_minus;
}

std::int64_t index_lower_bound(std::int64_t genus, std::int64_t pole_hits, std::int64_t aleph,
                               std::int64_t aleph0_concave, std::int64_t aleph0_convex,
                               std::int64_t aleph_concave) {
  return 2 * (-1 + genus + pole_hits + aleph + aleph0_concave + aleph0_convex) + aleph_concave;
}

std::int64_t index_lower_bound(std::int64_t genus, std::int64_t pole_hits,
                               const std::vector<EndDescriptor>& ends) {
  std::int64_t aleph = 0, cc = 0, cv = 0, concave = 0;
  for (const auto& e : ends) {
    const bool concave_side = e.side == Side::Concave;
    if (e.is_polar()) {
      ++(concave_side ? cc : cv);
    } else {
      ++(concave_side ? concave : aleph);
    }
  }
  return index_lower_bound(genus, pole_hits, aleph, cc, cv, concave);
}

std::int64_t adjunction_e_pairing(std::int64_t chi, std::int64_t c1, std::int64_t m_c) {
  return -chi - c1 + 2 * m_c;
}

std::int64_t translate_intersection_count(const Label2& l) {
  const auto g = gcd_triple(l);
  return 1 + 2 * double_points_formula(l) + (g[0] - 1) + (g[1] - 1) + (g[2] - 1);
}

std::int64_t translate_intersection_count(const OrderedLabel3& l) {
  return translate_intersection_count(l.first_two());
}

std::vector<Eigenvalue> L0_spectrum(const SpectrumCase& c, std::int64_t n_max) {
  if (n_max < 0) throw Error(ErrorKind::Domain, "n_max must be nonnegative");
  std::vector<Eigenvalue> out;
  if (const auto* g = std::get_if<GenericSpectrum>(&c)) {
    if (!(g->zeta > 0.0) || g->period < 1) throw Error(ErrorKind::Domain, "generic spectrum needs zeta > 0, period >= 1");
    out.push_back({0.0, 1});
    out.push_back({-g->zeta, 1});
    const auto per = static_cast<double>(g->period);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const double nn = static_cast<double>(n) / per;
      const double root = std::sqrt(g->zeta * g->zeta + 4.0 * nn * nn);
      out.push_back({0.5 * (-g->zeta + root), 2});
      out.push_back({0.5 * (-g->zeta - root), 2});
    }
  } else {
    const auto& polar = std::get<PolarSpectrum>(c);
    if (polar.m < 1) throw Error(ErrorKind::Domain, "polar spectrum needs m >= 1");
    const double base = -std::sqrt(1.5);
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
      out.push_back({base + static_cast<double>(n) / static_cast<double>(polar.m), 2});
    }
  }
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  return out;
}

AsymptoticData asymptotic_constants(double theta0, const EndClass& end) {
  if (!(theta0 > 0.0 && theta0 < geometry::kPi)) {
    throw Error(ErrorKind::Domain, "theta0 must lie in (0, pi)");
  }
  const double c = std::cos(theta0);
  const double sn = std::sin(theta0);
  const double c2 = c * c;
  const double gap = std::abs(1.0 - 3.0 * c2);
  if (std::abs(c2 - 1.0 / 3.0) < 1e-12) {
    throw Error(ErrorKind::DegenerateAngle, "cos^2 theta0 = 1/3: zeta and kappa degenerate");
  }
  const double root = std::sqrt(1.0 + 3.0 * c2 * c2);
  AsymptoticData out;
  out.zeta = geometry::kSqrt6 * sn * sn * (1.0 + 3.0 * c2) / (root * gap);
  out.kappa = gap / (geometry::kSqrt6 * root);
  if (end.m != 0) {
    const double a = static_cast<double>(end.m_prime) / static_cast<double>(end.m);
    out.sigma0 = 4.0 * std::abs(c) * std::abs(a) / (1.0 + a * a * sn * sn);
  }
  return out;
}

namespace {

InvariantReport build(const Label2& first_two, std::vector<EndClass> label, std::vector<EndDescriptor> ends) {
  InvariantReport r;
  r.label = std::move(label);
  r.delta = first_two.delta();
  r.gcds = gcd_triple(first_two);
  r.m_c = double_points_formula(first_two);
  r.m_c_oracle = double_points_bruteforce(first_two);
  r.chi = -1;
  r.c1 = c1_pairing(0, ends);
  r.terms = index_terms(ends);
  r.index = fredholm_index(r.chi, r.c1, ends);
  r.lower_bound = index_lower_bound(0, 0, ends);
  r.e_pairing = adjunction_e_pairing(r.chi, r.c1, r.m_c);
  r.translate_count = translate_intersection_count(first_two);
  return r;
}

}  // namespace

InvariantReport sphere_report(const Label2& l) {
  const auto check = moduli::validate_label2(l);
  if (!check.ok) {
    throw Error(ErrorKind::InvalidLabel, moduli::to_string(l) + " violates " + moduli::to_string(check.violations.front()));
  }
  return build(l, {l.p, l.q},
               {EndDescriptor::generic(Side::Convex, l.p), EndDescriptor::generic(Side::Convex, l.q),
                EndDescriptor::generic(Side::Concave, l.k())});
}

InvariantReport sphere_report(const OrderedLabel3& l) {
  if (!moduli::ordering_qualifies(l)) {
    throw Error(ErrorKind::InvalidLabel, moduli::to_string(l) + " is not an admissible ordering");
  }
  std::vector<EndDescriptor> ends;
  for (const auto& e : l.pairs) ends.push_back(EndDescriptor::generic(Side::Convex, e));
  return build(l.first_two(), {l.pairs.begin(), l.pairs.end()}, std::move(ends));
}

}  // namespace hwz::invariants
