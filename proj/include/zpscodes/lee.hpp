#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "zpscodes/rational.hpp"
#include "zpscodes/vector.hpp"

namespace zps {

/// Extended Lee weight on Z_{p^s}:
///   x             if x <= p^{s-1}
///   p^{s-1}       if p^{s-1} <= x <= p^s - p^{s-1}
///   p^s - x       if p^s - p^{s-1} < x
/// For p = 2, s = 2 this is the usual Lee weight on Z_4.
Value lee_weight(const Ring& ring, Value x) noexcept;
Value lee_weight(const Residue& a) noexcept;
/// Sum of coordinate Lee weights.
std::uint64_t lee_weight(const RingVector& v) noexcept;
std::uint64_t lee_distance(const RingVector& u, const RingVector& v);

std::uint64_t hamming_weight(std::span<const Value> v) noexcept;
std::uint64_t hamming_weight(const RingVector& v) noexcept;

/// n_r(v) for every residue r that occurs in v.
std::map<Value, std::uint64_t> complete_weight(const RingVector& v);

/// Per-residue weights a_r of a general weight function, with a_0 = 0.
class WeightAssignment {
 public:
  /// Entries for r = 0 are ignored; every other entry must be positive.
  WeightAssignment(const Ring& ring, std::map<Value, Rational> weights);

  /// a_r = 1 for every nonzero r.
  static WeightAssignment hamming(const Ring& ring);
  /// a_r = lee_weight(r).
  static WeightAssignment lee(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  /// Throws DomainError when r has no entry.
  Rational weight(Value r) const;
  /// A = max a_r (zero when no nonzero entries exist).
  const Rational& max_weight() const noexcept { return max_weight_; }

 private:
  Ring ring_;
  std::map<Value, Rational> weights_;
  Rational max_weight_;
};

/// w(v) = sum_r a_r n_r(v).
Rational general_weight(const RingVector& v, const WeightAssignment& w);

}  // namespace zps
