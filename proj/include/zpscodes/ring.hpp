#pragma once

#include <cstdint>
#include <optional>

#include "zpscodes/errors.hpp"

namespace zps {

using Value = std::uint64_t;

/// Parameters of the chain ring Z_{p^s}.
///
/// Moduli are capped at 2^32 so that the product of two residues always
/// fits in 64 bits. Two rings are the same ring iff (p, s) agree.
class Ring {
 public:
  static constexpr Value kMaxModulus = Value{1} << 32;

  /// Validates and builds Z_{p^s}. Throws RingError with a distinct kind for a
  /// non-prime p, an exponent below 1, or a modulus above kMaxModulus.
  static Ring make(std::uint64_t p, std::int64_t s);

  Value p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  Value modulus() const noexcept { return modulus_; }
  /// p^{s-1}, the length of one Gray block.
  Value half_power() const noexcept { return half_power_; }
  /// p^k for 0 <= k <= s.
  Value power(unsigned k) const;

  Value reduce(std::int64_t x) const noexcept;
  Value reduce_unsigned(std::uint64_t x) const noexcept { return x % modulus_; }

  Value add(Value a, Value b) const noexcept { return (a + b) % modulus_; }
  Value sub(Value a, Value b) const noexcept { return (a + modulus_ - b) % modulus_; }
  Value mul(Value a, Value b) const noexcept { return (a * b) % modulus_; }
  Value neg(Value a) const noexcept { return a == 0 ? 0 : modulus_ - a; }

  bool is_unit(Value a) const noexcept { return a % p_ != 0; }
  /// Empty for zero.
  std::optional<unsigned> valuation(Value a) const noexcept;
  /// p^{s - v_p(a)}; 1 for zero.
  Value additive_order(Value a) const noexcept;
  /// Multiplicative inverse of a unit. Throws DomainError otherwise.
  Value inverse(Value unit) const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.p_ == b.p_ && a.s_ == b.s_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) noexcept { return !(a == b); }

 private:
  Ring(Value p, unsigned s, Value modulus, Value half_power)
      : p_(p), s_(s), modulus_(modulus), half_power_(half_power) {}

  Value p_;
  unsigned s_;
  Value modulus_;
  Value half_power_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Unique (q, r) with x = q * p^{s-1} + r, 0 <= q < p, 0 <= r < p^{s-1}.
struct Decomposition {
  Value q;
  Value r;
};

/// An element of Z_{p^s} tagged with its ring. Always canonical.
class Residue {
 public:
  Residue(const Ring& ring, std::int64_t value) : ring_(ring), value_(ring.reduce(value)) {}

  const Ring& ring() const noexcept { return ring_; }
  Value value() const noexcept { return value_; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a);
  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  struct Raw {};
  Residue(const Ring& ring, Value value, Raw) : ring_(ring), value_(value) {}

  Ring ring_;
  Value value_;
};

Residue add(const Residue& a, const Residue& b);
Residue sub(const Residue& a, const Residue& b);
Residue mul(const Residue& a, const Residue& b);
Residue neg(const Residue& a);

bool is_unit(const Residue& a) noexcept;
Value additive_order(const Residue& a) noexcept;
std::optional<unsigned> p_adic_valuation(const Residue& a) noexcept;
Decomposition decompose(const Residue& a) noexcept;
Decomposition decompose(const Ring& ring, Value a) noexcept;

}  // namespace zps
