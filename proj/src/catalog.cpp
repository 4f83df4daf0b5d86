#include "hwz/catalog.hpp"

#include "hwz/invariants.hpp"

namespace hwz::catalog {

namespace {

using invariants::Side;

EndDescriptor convex(EndClass e) { return EndDescriptor::generic(Side::Convex, e); }
EndDescriptor concave(EndClass e) { return EndDescriptor::generic(Side::Concave, e); }

// Example 5 cylinder whose theta0 orbit has |p'| just below sqrt(3/2) p. The
// pole end is convex with multiplicity p; its winding is the polar bound
// maximum m0 - 1, the only value that gives index = aleph + 1.
CatalogEntry example5b(EndClass pair) {
  const std::int64_t m0 = invariants::m0_of(pair.m);
  CatalogEntry e;
  e.case_id = "A1.3b";
  e.description = "Example 5 cylinder " + to_string(pair) + ", pole at theta = " + (pair.m_prime > 0 ? "pi" : "0");
  e.example_id = 5;
  e.label = {pair};
  e.ends = {convex(pair), EndDescriptor::polar(Side::Convex, pair.m, m0 - 1)};
  e.expected_index = 2;
  e.expected_aleph = 1;
  e.reverse_engineered = true;
  e.note = "p = 2, 3, 4 give non-coprime pairs and are not listed";
  return e;
}

// Example 7 cylinder: convex end on the theta0_bar orbit, whose (f, h) signs
// give the class (-p, -p'); concave pole end with winding -|k|, k = sign(p) p'.
CatalogEntry example7c(EndClass pair) {
  const std::int64_t k = pair.m_prime < 0 ? -pair.m_prime : pair.m_prime;
  CatalogEntry e;
  e.case_id = "A1.3c";
  e.description = "Example 7 cylinder " + to_string(pair) + ", pole at theta = " + (pair.m_prime > 0 ? "pi" : "0");
  e.example_id = 7;
  e.label = {-pair};
  e.ends = {convex(-pair), EndDescriptor::polar(Side::Concave, pair.m, -k)};
  e.expected_index = 2;
  e.expected_aleph = 1;
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  CatalogEntry pole;
  pole.case_id = "A1.2a";
  pole.description = "R x (theta = 0 orbit)";
  pole.example_id = 1;
  pole.c1 = 0;
  pole.ends = {EndDescriptor::polar(Side::Concave, 1, 0), EndDescriptor::polar(Side::Convex, 1, 0)};
  pole.expected_index = 0;
  pole.expected_aleph = 0;
  pole.lower_bound_applies = false;
  pole.note = "both ends are the cylinder itself; windings are not defined and c1 = 0 is stored";
  out.push_back(pole);

  CatalogEntry orbit;
  orbit.case_id = "A1.2b";
  orbit.description = "R x (1,1) orbit";
  orbit.example_id = 1;
  orbit.label = {{1, 1}};
  orbit.ends = {concave({1, 1}), convex({1, 1})};
  orbit.expected_index = 1;
  orbit.expected_aleph = 1;
  out.push_back(orbit);

  CatalogEntry ex3;
  ex3.case_id = "A1.2c";
  ex3.description = "Example 3 cylinder f = kappa";
  ex3.example_id = 3;
  ex3.label = {{0, 1}, {0, -1}};
  ex3.ends = {convex({0, 1}), convex({0, -1})};
  ex3.expected_index = 2;
  ex3.expected_aleph = 2;
  out.push_back(ex3);

  CatalogEntry ex6;
  ex6.case_id = "A1.2c";
  ex6.description = "Example 6 cylinder (1,2), theta0 to theta0_bar";
  ex6.example_id = 6;
  ex6.label = {{1, 2}, {-1, -2}};
  ex6.ends = {convex({1, 2}), convex({-1, -2})};
  ex6.expected_index = 2;
  ex6.expected_aleph = 2;
  out.push_back(ex6);

  CatalogEntry disk;
  disk.case_id = "A1.3a";
  disk.description = "Example 2 plane, p' = +1";
  disk.example_id = 2;
  disk.label = {{0, 1}};
  disk.chi = 1;
  disk.nu0 = 1;
  disk.pole_hits = 1;
  disk.ends = {convex({0, 1})};
  disk.expected_index = 2;
  disk.expected_aleph = 1;
  out.push_back(disk);

  for (EndClass pair : {EndClass{1, 1}, EndClass{1, -1}, EndClass{5, 6}}) out.push_back(example5b(pair));
  for (EndClass pair : {EndClass{1, 2}, EndClass{1, -2}, EndClass{2, 3}}) out.push_back(example7c(pair));

  CatalogEntry s2;
  s2.case_id = "A1.3d";
  s2.description = "aleph = 2 sphere {(2,1),(1,2)}";
  s2.label = {{2, 1}, {1, 2}};
  s2.chi = -1;
  s2.ends = {convex({2, 1}), convex({1, 2}), concave({3, 3})};
  s2.expected_index = 3;
  s2.expected_aleph = 2;
  out.push_back(s2);

  CatalogEntry s3;
  s3.case_id = "A1.3d";
  s3.description = "aleph = 3 sphere {(1,-1),(1,4),(-2,-3)}";
  s3.label = {{1, -1}, {1, 4}, {-2, -3}};
  s3.chi = -1;
  s3.ends = {convex({1, -1}), convex({1, 4}), convex({-2, -3})};
  s3.expected_index = 4;
  s3.expected_aleph = 3;
  out.push_back(s3);

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::int64_t entry_c1(const CatalogEntry& e) {
  return e.c1 ? *e.c1 : invariants::c1_pairing(e.nu0, e.ends);
}

std::int64_t entry_index(const CatalogEntry& e) {
  return invariants::fredholm_index(e.chi, entry_c1(e), e.ends);
}

std::int64_t entry_aleph(const CatalogEntry& e) { return invariants::index_terms(e.ends).aleph; }

std::int64_t entry_lower_bound(const CatalogEntry& e) {
  return invariants::index_lower_bound(e.genus, e.pole_hits, e.ends);
}

}  // namespace hwz::catalog
