#include "zpscodes/lee.hpp"

#include <algorithm>
#include <string>

namespace zps {

Value lee_weight(const Ring& ring, Value x) noexcept {
  const Value h = ring.half_power();
  const Value m = ring.modulus();
  if (x <= h) return x;
  if (x <= m - h) return h;
  return m - x;
}

Value lee_weight(const Residue& a) noexcept { return lee_weight(a.ring(), a.value()); }

std::uint64_t lee_weight(const RingVector& v) noexcept {
  std::uint64_t total = 0;
  for (auto x : v.entries()) total += lee_weight(v.ring(), x);
  return total;
}

std::uint64_t lee_distance(const RingVector& u, const RingVector& v) { return lee_weight(u - v); }

std::uint64_t hamming_weight(std::span<const Value> v) noexcept {
  return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](Value x) { return x != 0; }));
}

std::uint64_t hamming_weight(const RingVector& v) noexcept { return hamming_weight(v.entries()); }

std::map<Value, std::uint64_t> complete_weight(const RingVector& v) {
  std::map<Value, std::uint64_t> counts;
  for (auto x : v.entries()) ++counts[x];
  return counts;
}

WeightAssignment::WeightAssignment(const Ring& ring, std::map<Value, Rational> weights)
    : ring_(ring), weights_(std::move(weights)) {
  weights_.erase(0);
  for (const auto& [r, a] : weights_) {
    if (r >= ring_.modulus()) {
      throw DomainError("weight entry for " + std::to_string(r) + " is outside the ring");
    }
    if (a <= Rational(0)) {
      throw DomainError("weight a_" + std::to_string(r) + " must be positive");
    }
    max_weight_ = std::max(max_weight_, a);
  }
}

WeightAssignment WeightAssignment::hamming(const Ring& ring) {
  std::map<Value, Rational> w;
  for (Value r = 1; r < ring.modulus(); ++r) w.emplace(r, Rational(1));
  return WeightAssignment(ring, std::move(w));
}

WeightAssignment WeightAssignment::lee(const Ring& ring) {
  std::map<Value, Rational> w;
  for (Value r = 1; r < ring.modulus(); ++r) {
    w.emplace(r, Rational(static_cast<std::int64_t>(lee_weight(ring, r))));
  }
  return WeightAssignment(ring, std::move(w));
}

Rational WeightAssignment::weight(Value r) const {
  if (r == 0) return Rational(0);
  const auto it = weights_.find(r);
  if (it == weights_.end()) throw DomainError("no weight entry for residue " + std::to_string(r));
  return it->second;
}

Rational general_weight(const RingVector& v, const WeightAssignment& w) {
  if (v.ring() != w.ring()) throw RingMismatch("weight assignment is for a different ring");
  Rational total;
  for (const auto& [r, count] : complete_weight(v)) {
    total += w.weight(r) * Rational(static_cast<std::int64_t>(count));
  }
  return total;
}

}  // namespace zps
