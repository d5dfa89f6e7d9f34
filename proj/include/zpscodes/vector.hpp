#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zpscodes/ring.hpp"

namespace zps {

/// A length-n tuple over Z_{p^s}, tagged with its ring. Entries are canonical.
class RingVector {
 public:
  RingVector(const Ring& ring, std::size_t n) : ring_(ring), entries_(n, 0) {}
  RingVector(const Ring& ring, std::initializer_list<std::int64_t> values);
  RingVector(const Ring& ring, std::span<const std::int64_t> values);
  /// Entries must already be canonical.
  RingVector(const Ring& ring, std::vector<Value> canonical);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const Value> entries() const noexcept { return entries_; }
  Value operator[](std::size_t i) const { return entries_[i]; }
  Residue at(std::size_t i) const { return Residue(ring_, static_cast<std::int64_t>(entries_.at(i))); }
  void set(std::size_t i, std::int64_t value) { entries_.at(i) = ring_.reduce(value); }

  bool is_zero() const noexcept;

  RingVector& operator+=(const RingVector& other);
  RingVector& operator-=(const RingVector& other);
  /// Adds scalar * other without allocating.
  RingVector& add_scaled(Value scalar, const RingVector& other);
  RingVector scaled(Value scalar) const;

  friend RingVector operator+(RingVector a, const RingVector& b) { return a += b; }
  friend RingVector operator-(RingVector a, const RingVector& b) { return a -= b; }
  friend RingVector operator-(const RingVector& a);

  friend bool operator==(const RingVector& a, const RingVector& b) noexcept {
    return a.ring_ == b.ring_ && a.entries_ == b.entries_;
  }
  /// Lexicographic on entries; only meaningful within one ring.
  friend bool operator<(const RingVector& a, const RingVector& b) noexcept {
    return a.entries_ < b.entries_;
  }

  std::string to_string() const;

 private:
  void require_compatible(const RingVector& other) const;

  Ring ring_;
  std::vector<Value> entries_;
};

struct RingVectorHash {
  std::size_t operator()(const RingVector& v) const noexcept;
};

std::size_t hash_values(std::span<const Value> values) noexcept;

/// Additive order of v in Z_{p^s}^n: the largest coordinate order.
Value vector_order(const RingVector& v) noexcept;

}  // namespace zps
