#include "zpscodes/ring.hpp"

#include <string>

namespace zps {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring Ring::make(std::uint64_t p, std::int64_t s) {
  if (!is_prime(p)) {
    throw RingError(RingError::Kind::NotPrime, std::to_string(p) + " is not prime");
  }
  if (s < 1) {
    throw RingError(RingError::Kind::BadExponent,
                    "exponent s must be >= 1, got " + std::to_string(s));
  }
  Value modulus = 1;
  Value half = 1;
  for (std::int64_t i = 0; i < s; ++i) {
    half = modulus;
    if (modulus > kMaxModulus / p) {
      throw RingError(RingError::Kind::Overflow, std::to_string(p) + "^" + std::to_string(s) +
                                                     " exceeds the 2^32 modulus cap");
    }
    modulus *= p;
  }
  return Ring(p, static_cast<unsigned>(s), modulus, half);
}

Value Ring::power(unsigned k) const {
  if (k > s_) throw DomainError("power exponent exceeds s");
  Value r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p_;
  return r;
}

Value Ring::reduce(std::int64_t x) const noexcept {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<Value>(r);
}

std::optional<unsigned> Ring::valuation(Value a) const noexcept {
  if (a == 0) return std::nullopt;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Value Ring::additive_order(Value a) const noexcept {
  const auto v = valuation(a);
  if (!v) return 1;
  Value order = 1;
  for (unsigned i = *v; i < s_; ++i) order *= p_;
  return order;
}

Value Ring::inverse(Value unit) const {
  if (!is_unit(unit)) throw DomainError(std::to_string(unit) + " is not a unit");
  // Extended Euclid on signed 64-bit; both operands are below 2^32.
  std::int64_t old_r = static_cast<std::int64_t>(unit % modulus_);
  std::int64_t r = static_cast<std::int64_t>(modulus_);
  std::int64_t old_t = 1;
  std::int64_t t = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return reduce(old_t);
}

namespace {

void require_same_ring(const Residue& a, const Residue& b) {
  if (a.ring() != b.ring()) throw RingMismatch("residues belong to different rings");
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  return Residue(a.ring_, a.ring_.add(a.value_, b.value_), Residue::Raw{});
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  return Residue(a.ring_, a.ring_.sub(a.value_, b.value_), Residue::Raw{});
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  return Residue(a.ring_, a.ring_.mul(a.value_, b.value_), Residue::Raw{});
}

Residue operator-(const Residue& a) {
  return Residue(a.ring_, a.ring_.neg(a.value_), Residue::Raw{});
}

Residue add(const Residue& a, const Residue& b) { return a + b; }
Residue sub(const Residue& a, const Residue& b) { return a - b; }
Residue mul(const Residue& a, const Residue& b) { return a * b; }
Residue neg(const Residue& a) { return -a; }

bool is_unit(const Residue& a) noexcept { return a.ring().is_unit(a.value()); }

Value additive_order(const Residue& a) noexcept { return a.ring().additive_order(a.value()); }

std::optional<unsigned> p_adic_valuation(const Residue& a) noexcept {
  return a.ring().valuation(a.value());
}

Decomposition decompose(const Ring& ring, Value a) noexcept {
  return {a / ring.half_power(), a % ring.half_power()};
}

Decomposition decompose(const Residue& a) noexcept { return decompose(a.ring(), a.value()); }

}  // namespace zps
