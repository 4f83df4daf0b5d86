#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hwz/reeb.hpp"

namespace hwz::moduli {

// Two end classes of an aleph = 2 thrice-punctured sphere, stored in the
// orientation with delta = pq' - qp' > 0. The third (concave) end is p + q.
struct Label2 {
  EndClass p;
  EndClass q;

  EndClass k() const { return p + q; }
  std::int64_t delta() const { return p.m * q.m_prime - q.m * p.m_prime; }
  friend bool operator==(const Label2&, const Label2&) = default;
  friend auto operator<=>(const Label2&, const Label2&) = default;
};

// An ordering (p, q, k) of an aleph = 3 label; the pairs sum to zero.
struct OrderedLabel3 {
  std::array<EndClass, 3> pairs;

  Label2 first_two() const { return {pairs[0], pairs[1]}; }
  std::int64_t delta() const { return first_two().delta(); }
  friend bool operator==(const OrderedLabel3&, const OrderedLabel3&) = default;
};

// Unordered set of three end classes, held sorted lexicographically.
struct Label3 {
  std::array<EndClass, 3> pairs;

  static Label3 canonical(std::array<EndClass, 3> pairs);
  friend bool operator==(const Label3&, const Label3&) = default;
  friend auto operator<=>(const Label3&, const Label3&) = default;
};

enum class Violation {
  ZeroPairP,
  ZeroPairQ,
  ZeroPairK,
  DeltaNotPositive,    // Delta = pq' - qp' must be positive
  PrimeOrder,          // q' - p' > 0 unless p'q' > 0
  QuadrantP,           // quadrant rule on (p, p')
  QuadrantQ,           // quadrant rule on (q, q')
  QuadrantK,           // quadrant rule on (p + q, p' + q'); implied by the others
};

std::string to_string(Violation v);

struct Label2Check {
  bool ok = false;
  std::vector<Violation> violations;
};

Label2Check validate_label2(const EndClass& p, const EndClass& q);
inline Label2Check validate_label2(const Label2& l) { return validate_label2(l.p, l.q); }

struct Label3Check {
  bool ok = false;
  bool has_zero_pair = false;
  bool sums_to_zero = false;
  std::vector<OrderedLabel3> orderings;  // distinct orderings meeting every condition
};

// An ordering (p, q, k) qualifies when p + q + k = 0, 2k'^2 > 3k^2 (k = 0
// counts: |k'/k| is infinite there), and {p, q} passes validate_label2.
// ok iff exactly two qualify.
Label3Check validate_label3(const std::array<EndClass, 3>& pairs);
inline Label3Check validate_label3(const Label3& l) { return validate_label3(l.pairs); }

bool ordering_qualifies(const OrderedLabel3& o);

// The two aleph = 2 labels compactifying the aleph = 3 component.
// Throws Error(InvalidLabel) unless validate_label3 is ok.
std::pair<Label2, Label2> boundary_labels(const Label3& l);

struct CanonicalPair {
  EndClass pair;
  Label2 partner;
};

// The unique pair (m, m') of l with 2m'^2 > 3m^2 whose partner label is
// admissible. Throws OutOfRegime when k = p + q is zero or not steep, and
// Internal if uniqueness fails.
CanonicalPair canonical_pair(const Label2& l);

std::vector<Label2> enumerate_labels2(std::int64_t bound);
std::vector<Label3> enumerate_labels3(std::int64_t bound);

// Candidate generators shared with the parallel sweeps: index i in
// [0, (2b+1)^4) decodes to four integers in [-b, b].
std::array<std::int64_t, 4> decode_candidate(std::uint64_t index, std::int64_t bound);
std::uint64_t candidate_count(std::int64_t bound);

// For Label3 sweeps: the candidate {p, q, -(p+q)} if it lies in the box and
// p <= q <= k in canonical order (so each unordered set appears once).
bool label3_candidate(std::uint64_t index, std::int64_t bound, Label3& out);

std::string to_string(const Label2& l);
std::string to_string(const Label3& l);
std::string to_string(const OrderedLabel3& l);

}  // namespace hwz::moduli
