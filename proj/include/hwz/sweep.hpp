#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hwz/moduli.hpp"

// Exhaustive label sweeps. Each has a serial reference and an OpenMP version
// that must return identical results.
namespace hwz::sweep {

enum class Exec { Serial, Parallel };

std::vector<moduli::Label2> labels2(std::int64_t bound, Exec exec);
std::vector<moduli::Label3> labels3(std::int64_t bound, Exec exec);

struct OracleSweep {
  std::uint64_t labels = 0;
  std::uint64_t mismatches = 0;  // formula != brute force, or either threw
  std::optional<moduli::Label2> first_mismatch;
  friend bool operator==(const OracleSweep&, const OracleSweep&) = default;
};

// double_points_formula against double_points_bruteforce on every admissible
// Label2 with entries in [-bound, bound].
OracleSweep oracle_sweep(std::int64_t bound, Exec exec);

struct Label3Census {
  std::uint64_t candidates = 0;           // sorted zero-sum triples without zero pairs
  std::array<std::uint64_t, 7> by_orderings{};  // histogram of qualifying-ordering counts
  std::uint64_t admissible = 0;
  std::uint64_t boundary_ok = 0;          // both boundary labels admissible and distinct
  std::uint64_t mc_agree = 0;             // m_C equal for both orderings
  std::optional<moduli::Label3> first_failure;
  friend bool operator==(const Label3Census&, const Label3Census&) = default;
};

Label3Census label3_census(std::int64_t bound, Exec exec);

int worker_threads();

}  // namespace hwz::sweep
