#include "doctest.h"
#include "oracles.hpp"
#include "zpscodes/ring.hpp"

using namespace zps;

namespace {

std::vector<Ring> small_rings() {
  std::vector<Ring> out;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned s = 1; oracle::ipow(p, s) <= 64; ++s) out.push_back(Ring::make(p, s));
  }
  return out;
}

RingError::Kind make_error(std::uint64_t p, std::int64_t s) {
  try {
    Ring::make(p, s);
  } catch (const RingError& e) {
    return e.kind();
  }
  FAIL("no error for (" << p << ", " << s << ")");
  return RingError::Kind::NotPrime;
}

}  // namespace

TEST_CASE("make ring") {
  const auto z9 = Ring::make(3, 2);
  CHECK(z9.modulus() == 9);
  CHECK(z9.half_power() == 3);
  const auto z4 = Ring::make(2, 2);
  CHECK(z4.modulus() == 4);
  CHECK(z4.half_power() == 2);
  CHECK(Ring::make(5, 1).half_power() == 1);
  CHECK(Ring::make(2, 32).modulus() == (std::uint64_t{1} << 32));
}

TEST_CASE("ring construction errors are distinct") {
  CHECK(make_error(4, 2) == RingError::Kind::NotPrime);
  CHECK(make_error(1, 2) == RingError::Kind::NotPrime);
  CHECK(make_error(0, 1) == RingError::Kind::NotPrime);
  CHECK(make_error(3, 0) == RingError::Kind::BadExponent);
  CHECK(make_error(3, -1) == RingError::Kind::BadExponent);
  CHECK(make_error(2, 33) == RingError::Kind::Overflow);
  CHECK(make_error(3, 40) == RingError::Kind::Overflow);
  CHECK(make_error(2, 1000000) == RingError::Kind::Overflow);
}

TEST_CASE("residue arithmetic") {
  const auto z9 = Ring::make(3, 2);
  CHECK(add(Residue(z9, 7), Residue(z9, 5)).value() == 3);
  CHECK(neg(Residue(z9, 4)).value() == 5);
  CHECK(sub(Residue(z9, 2), Residue(z9, 5)).value() == 6);
  const auto z4 = Ring::make(2, 2);
  CHECK(mul(Residue(z4, 2), Residue(z4, 2)).value() == 0);
  CHECK(Residue(z9, -1).value() == 8);
  CHECK(Residue(z9, 20).value() == 2);
  CHECK_THROWS_AS(add(Residue(z9, 1), Residue(z4, 1)), RingMismatch);
  CHECK_THROWS_AS(mul(Residue(z9, 1), Residue(Ring::make(3, 3), 1)), RingMismatch);
}

TEST_CASE("units, orders, valuations") {
  const auto z9 = Ring::make(3, 2);
  CHECK(is_unit(Residue(z9, 4)));
  CHECK_FALSE(is_unit(Residue(z9, 6)));
  CHECK_FALSE(is_unit(Residue(z9, 0)));
  CHECK(additive_order(Residue(z9, 3)) == 3);
  CHECK(additive_order(Residue(z9, 4)) == 9);
  CHECK(additive_order(Residue(z9, 0)) == 1);
  CHECK(p_adic_valuation(Residue(z9, 6)) == 1u);
  CHECK(p_adic_valuation(Residue(z9, 7)) == 0u);
  CHECK_FALSE(p_adic_valuation(Residue(z9, 0)).has_value());
  CHECK(z9.inverse(2) == 5);
  CHECK_THROWS_AS(z9.inverse(3), DomainError);
}

TEST_CASE("decompose") {
  const auto z9 = Ring::make(3, 2);
  auto d = decompose(Residue(z9, 7));
  CHECK(d.q == 2);
  CHECK(d.r == 1);
  d = decompose(Residue(z9, 3));
  CHECK(d.q == 1);
  CHECK(d.r == 0);
  d = decompose(Residue(Ring::make(2, 3), 5));
  CHECK(d.q == 1);
  CHECK(d.r == 1);
}

TEST_CASE("ring laws on exhaustive sweeps") {
  for (const auto& ring : small_rings()) {
    CAPTURE(ring.modulus());
    const auto m = ring.modulus();
    for (Value a = 0; a < m; ++a) {
      const Residue ra(ring, static_cast<std::int64_t>(a));
      CHECK(add(ra, neg(ra)).value() == 0);

      const auto ord = additive_order(ra);
      CHECK(ring.mul(ord % m, a) == 0);
      if (a != 0) CHECK(ring.mul((ord / ring.p()) % m, a) != 0);
      if (a != 0) CHECK(is_unit(ra) == (ord == m));

      const auto d = decompose(ra);
      CHECK(d.q < ring.p());
      CHECK(d.r < ring.half_power());
      CHECK(d.q * ring.half_power() + d.r == a);

      if (is_unit(ra)) CHECK(ring.mul(a, ring.inverse(a)) == 1);

      for (Value b = 0; b < m; ++b) {
        const Residue rb(ring, static_cast<std::int64_t>(b));
        CHECK(add(ra, rb) == add(rb, ra));
        CHECK(mul(ra, rb) == mul(rb, ra));
      }
    }
    if (m <= 27) {
      for (Value a = 0; a < m; ++a) {
        for (Value b = 0; b < m; ++b) {
          for (Value c = 0; c < m; ++c) {
            CHECK(ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)));
            CHECK(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("large modulus arithmetic stays exact") {
  const auto big = Ring::make(65521, 2);
  const Value x = big.modulus() - 1;
  CHECK(big.mul(x, x) == 1);
  CHECK(big.valuation(65521 * 7) == 1u);
}
