#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwz/invariants.hpp"

namespace hwz::catalog {

using invariants::EndDescriptor;

// One row of the index table for the subvarieties with index <= aleph + 1.
struct CatalogEntry {
  std::string case_id;
  std::string description;
  int example_id = 0;           // 0 for the thrice-punctured spheres
  std::vector<EndClass> label;  // end classes of the generic ends, or the sphere's label
  std::int64_t chi = 0;
  std::int64_t nu0 = 0;
  std::int64_t genus = 0;
  std::int64_t pole_hits = 0;       // Q, intersections with the theta in {0, pi} locus
  std::optional<std::int64_t> c1;   // stored pairing when no winding data applies
  std::vector<EndDescriptor> ends;
  std::int64_t expected_index = 0;
  std::int64_t expected_aleph = 0;
  bool lower_bound_applies = true;
  bool reverse_engineered = false;  // polar windings chosen to reproduce the index
  std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();

// The stored c1 if present, else c1_pairing(nu0, ends).
std::int64_t entry_c1(const CatalogEntry& e);
std::int64_t entry_index(const CatalogEntry& e);
std::int64_t entry_aleph(const CatalogEntry& e);
std::int64_t entry_lower_bound(const CatalogEntry& e);

}  // namespace hwz::catalog
