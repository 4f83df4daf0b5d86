#include "hwz/moduli.hpp"

#include <algorithm>

#include "hwz/arith.hpp"
#include "hwz/error.hpp"

namespace hwz::moduli {

std::string to_string(Violation v) {
  switch (v) {
    case Violation::ZeroPairP: return "zero-pair:p";
    case Violation::ZeroPairQ: return "zero-pair:q";
    case Violation::ZeroPairK: return "zero-pair:k";
    case Violation::DeltaNotPositive: return "a:delta<=0";
    case Violation::PrimeOrder: return "b:q'-p'<=0-and-p'q'<=0";
    case Violation::QuadrantP: return "c:quadrant-p";
    case Violation::QuadrantQ: return "c:quadrant-q";
    case Violation::QuadrantK: return "c:quadrant-k";
  }
  return "?";
}

Label3 Label3::canonical(std::array<EndClass, 3> pairs) {
  std::sort(pairs.begin(), pairs.end());
  return {pairs};
}

Label2Check validate_label2(const EndClass& p, const EndClass& q) {
  Label2Check out;
  auto& v = out.violations;
  const EndClass k = p + q;
  if (p.is_zero()) v.push_back(Violation::ZeroPairP);
  if (q.is_zero()) v.push_back(Violation::ZeroPairQ);
  if (k.is_zero()) v.push_back(Violation::ZeroPairK);
  if (Label2{p, q}.delta() <= 0) v.push_back(Violation::DeltaNotPositive);
  if (!(q.m_prime - p.m_prime > 0 || p.m_prime * q.m_prime > 0)) v.push_back(Violation::PrimeOrder);
  if (!p.is_zero() && !reeb::quadrant_ok(p.m, p.m_prime)) v.push_back(Violation::QuadrantP);
  if (!q.is_zero() && !reeb::quadrant_ok(q.m, q.m_prime)) v.push_back(Violation::QuadrantQ);
  if (!k.is_zero() && !reeb::quadrant_ok(k.m, k.m_prime)) v.push_back(Violation::QuadrantK);
  out.ok = v.empty();
  return out;
}

bool ordering_qualifies(const OrderedLabel3& o) {
  const auto& [p, q, k] = o.pairs;
  if (!(p + q + k).is_zero()) return false;
  if (!steep(k.m, k.m_prime)) return false;
  return validate_label2(p, q).ok;
}

Label3Check validate_label3(const std::array<EndClass, 3>& pairs) {
  Label3Check out;
  out.has_zero_pair = std::any_of(pairs.begin(), pairs.end(), [](const EndClass& e) { return e.is_zero(); });
  out.sums_to_zero = (pairs[0] + pairs[1] + pairs[2]).is_zero();
  if (out.has_zero_pair || !out.sums_to_zero) return out;

  std::array<EndClass, 3> perm = pairs;
  std::sort(perm.begin(), perm.end());
  do {
    const OrderedLabel3 o{perm};
    if (ordering_qualifies(o)) out.orderings.push_back(o);
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.ok = out.orderings.size() == 2;
  return out;
}

std::pair<Label2, Label2> boundary_labels(const Label3& l) {
  const auto check = validate_label3(l);
  if (!check.ok) throw Error(ErrorKind::InvalidLabel, to_string(l) + " is not an admissible aleph=3 label");
  return {check.orderings[0].first_two(), check.orderings[1].first_two()};
}

CanonicalPair canonical_pair(const Label2& l) {
  const EndClass k = l.k();
  if (k.m == 0 || !steep(k.m, k.m_prime)) {
    throw Error(ErrorKind::OutOfRegime, "k = " + to_string(k) + " of " + to_string(l) +
                                            " does not satisfy 2k'^2 > 3k^2 with k != 0");
  }
  std::vector<CanonicalPair> found;
  if (steep(l.p.m, l.p.m_prime)) {
    const Label2 partner{l.q, -k};
    if (validate_label2(partner).ok) found.push_back({l.p, partner});
  }
  if (steep(l.q.m, l.q.m_prime)) {
    const Label2 partner{-k, l.p};
    if (validate_label2(partner).ok) found.push_back({l.q, partner});
  }
  if (found.size() != 1) {
    throw Error(ErrorKind::Internal, std::to_string(found.size()) +
                                         " candidate pairs for the canonical pair of " + to_string(l));
  }
  return found.front();
}

std::uint64_t candidate_count(std::int64_t bound) {
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  return side * side * side * side;
}

std::array<std::int64_t, 4> decode_candidate(std::uint64_t index, std::int64_t bound) {
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  std::array<std::int64_t, 4> out{};
  for (int i = 3; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % side) - bound;
    index /= side;
  }
  return out;
}

bool label3_candidate(std::uint64_t index, std::int64_t bound, Label3& out) {
  const auto c = decode_candidate(index, bound);
  const EndClass p{c[0], c[1]};
  const EndClass q{c[2], c[3]};
  const EndClass k = -(p + q);
  if (std::abs(k.m) > bound || std::abs(k.m_prime) > bound) return false;
  if (!(p <= q && q <= k)) return false;
  out = Label3{{p, q, k}};
  return true;
}

std::vector<Label2> enumerate_labels2(std::int64_t bound) {
  std::vector<Label2> out;
  const auto n = candidate_count(bound);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto c = decode_candidate(i, bound);
    const Label2 l{{c[0], c[1]}, {c[2], c[3]}};
    if (validate_label2(l).ok) out.push_back(l);
  }
  return out;
}

std::vector<Label3> enumerate_labels3(std::int64_t bound) {
  std::vector<Label3> out;
  const auto n = candidate_count(bound);
  Label3 l;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (label3_candidate(i, bound, l) && validate_label3(l).ok) out.push_back(l);
  }
  return out;
}

std::string to_string(const Label2& l) { return "{" + to_string(l.p) + "," + to_string(l.q) + "}"; }

std::string to_string(const Label3& l) {
  return "{" + to_string(l.pairs[0]) + "," + to_string(l.pairs[1]) + "," + to_string(l.pairs[2]) + "}";
}

std::string to_string(const OrderedLabel3& l) {
  return "(" + to_string(l.pairs[0]) + "," + to_string(l.pairs[1]) + "," + to_string(l.pairs[2]) + ")";
}

}  // namespace hwz::moduli
