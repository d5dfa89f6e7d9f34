#include "zpscodes/vector.hpp"

#include <algorithm>

namespace zps {

RingVector::RingVector(const Ring& ring, std::initializer_list<std::int64_t> values)
    : RingVector(ring, std::span<const std::int64_t>(values.begin(), values.size())) {}

RingVector::RingVector(const Ring& ring, std::span<const std::int64_t> values) : ring_(ring) {
  entries_.reserve(values.size());
  for (auto x : values) entries_.push_back(ring.reduce(x));
}

RingVector::RingVector(const Ring& ring, std::vector<Value> canonical)
    : ring_(ring), entries_(std::move(canonical)) {
  for (auto& x : entries_) x = ring_.reduce_unsigned(x);
}

bool RingVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Value x) { return x == 0; });
}

void RingVector::require_compatible(const RingVector& other) const {
  if (ring_ != other.ring_) throw RingMismatch("vectors belong to different rings");
  if (entries_.size() != other.entries_.size()) {
    throw LengthMismatch("vector lengths differ: " + std::to_string(entries_.size()) + " vs " +
                         std::to_string(other.entries_.size()));
  }
}

RingVector& RingVector::operator+=(const RingVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = ring_.add(entries_[i], other.entries_[i]);
  return *this;
}

RingVector& RingVector::operator-=(const RingVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = ring_.sub(entries_[i], other.entries_[i]);
  return *this;
}

RingVector& RingVector::add_scaled(Value scalar, const RingVector& other) {
  require_compatible(other);
  scalar = ring_.reduce_unsigned(scalar);
  if (scalar == 0) return *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = ring_.add(entries_[i], ring_.mul(scalar, other.entries_[i]));
  }
  return *this;
}

RingVector RingVector::scaled(Value scalar) const {
  RingVector out(*this);
  scalar = ring_.reduce_unsigned(scalar);
  for (auto& x : out.entries_) x = ring_.mul(x, scalar);
  return out;
}

RingVector operator-(const RingVector& a) {
  RingVector out(a);
  for (auto& x : out.entries_) x = a.ring_.neg(x);
  return out;
}

std::string RingVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

std::size_t hash_values(std::span<const Value> values) noexcept {
  // FNV-1a over the 64-bit words, then a final avalanche.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : values) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

std::size_t RingVectorHash::operator()(const RingVector& v) const noexcept {
  return hash_values(v.entries());
}

Value vector_order(const RingVector& v) noexcept {
  Value order = 1;
  for (auto x : v.entries()) order = std::max(order, v.ring().additive_order(x));
  return order;
}

}  // namespace zps
