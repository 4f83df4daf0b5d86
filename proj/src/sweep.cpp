#include "hwz/sweep.hpp"

#include <algorithm>
#include <utility>

#include "hwz/error.hpp"
#include "hwz/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hwz::sweep {

using moduli::Label2;
using moduli::Label3;

namespace {

Label2 label2_at(std::uint64_t i, std::int64_t bound) {
  const auto c = moduli::decode_candidate(i, bound);
  return {{c[0], c[1]}, {c[2], c[3]}};
}

// Collects f(i) for every candidate index where it yields a value, in index
// order. The parallel path gathers (index, value) per thread and sorts once.
template <typename T, typename F>
std::vector<T> collect(std::int64_t bound, Exec exec, F&& f) {
  const auto n = moduli::candidate_count(bound);
  std::vector<T> out;
  if (exec == Exec::Serial) {
    for (std::uint64_t i = 0; i < n; ++i) {
      if (auto v = f(i)) out.push_back(std::move(*v));
    }
    return out;
  }
  std::vector<std::pair<std::uint64_t, T>> tagged;
#pragma omp parallel
  {
    std::vector<std::pair<std::uint64_t, T>> local;
#pragma omp for schedule(dynamic, 512) nowait
    for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
      const auto i = static_cast<std::uint64_t>(si);
      if (auto v = f(i)) local.emplace_back(i, std::move(*v));
    }
#pragma omp critical
    tagged.insert(tagged.end(), local.begin(), local.end());
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.reserve(tagged.size());
  for (auto& [i, v] : tagged) out.push_back(std::move(v));
  return out;
}

bool oracle_agrees(const Label2& l) {
  try {
    return invariants::double_points_formula(l) == invariants::double_points_bruteforce(l);
  } catch (const Error&) {
    return false;
  }
}

struct Label3Outcome {
  Label3 label;
  int orderings = 0;
  bool boundary_ok = false;
  bool mc_agree = false;
};

Label3Outcome examine(const Label3& l) {
  Label3Outcome out{l};
  const auto check = moduli::validate_label3(l);
  out.orderings = static_cast<int>(check.orderings.size());
  if (!check.ok) return out;
  const Label2 b1 = check.orderings[0].first_two();
  const Label2 b2 = check.orderings[1].first_two();
  out.boundary_ok = moduli::validate_label2(b1).ok && moduli::validate_label2(b2).ok && !(b1 == b2);
  try {
    out.mc_agree = invariants::double_points_formula(check.orderings[0]) ==
                   invariants::double_points_formula(check.orderings[1]);
  } catch (const Error&) {
    out.mc_agree = false;
  }
  return out;
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Label2> labels2(std::int64_t bound, Exec exec) {
  return collect<Label2>(bound, exec, [bound](std::uint64_t i) -> std::optional<Label2> {
    const Label2 l = label2_at(i, bound);
    if (moduli::validate_label2(l).ok) return l;
    return std::nullopt;
  });
}

std::vector<Label3> labels3(std::int64_t bound, Exec exec) {
  return collect<Label3>(bound, exec, [bound](std::uint64_t i) -> std::optional<Label3> {
    Label3 l;
    if (moduli::label3_candidate(i, bound, l) && moduli::validate_label3(l).ok) return l;
    return std::nullopt;
  });
}

OracleSweep oracle_sweep(std::int64_t bound, Exec exec) {
  // Mismatching labels are rare, so collect only those and count the rest.
  OracleSweep out;
  const auto labels = labels2(bound, exec);
  out.labels = labels.size();
  std::vector<std::uint8_t> bad(labels.size(), 0);
  const auto n = static_cast<std::int64_t>(labels.size());
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) bad[static_cast<std::size_t>(i)] = !oracle_agrees(labels[static_cast<std::size_t>(i)]);
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) bad[static_cast<std::size_t>(i)] = !oracle_agrees(labels[static_cast<std::size_t>(i)]);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!bad[i]) continue;
    ++out.mismatches;
    if (!out.first_mismatch) out.first_mismatch = labels[i];
  }
  return out;
}

Label3Census label3_census(std::int64_t bound, Exec exec) {
  const auto outcomes = collect<Label3Outcome>(bound, exec, [bound](std::uint64_t i) -> std::optional<Label3Outcome> {
    Label3 l;
    if (!moduli::label3_candidate(i, bound, l)) return std::nullopt;
    for (const auto& e : l.pairs) {
      if (e.is_zero()) return std::nullopt;
    }
    return examine(l);
  });
  Label3Census c;
  for (const auto& o : outcomes) {
    ++c.candidates;
    ++c.by_orderings[static_cast<std::size_t>(o.orderings)];
    const bool ok = o.orderings == 2;
    c.admissible += ok;
    c.boundary_ok += ok && o.boundary_ok;
    c.mc_agree += ok && o.mc_agree;
    const bool failed = (o.orderings != 0 && o.orderings != 2) || (ok && !(o.boundary_ok && o.mc_agree));
    if (failed && !c.first_failure) c.first_failure = o.label;
  }
  return c;
}

}  // namespace hwz::sweep
