#include "doctest.h"
#include "oracles.hpp"
#include "zpscodes/bounds.hpp"
#include "zpscodes/lee.hpp"

using namespace zps;

TEST_CASE("minimum lee distance") {
  const auto z9 = Ring::make(3, 2);
  const auto c = LinearCode::from_rows(z9, 2, {RingVector(z9, {1, 2})});
  const auto d = min_lee_distance(c);
  CHECK(d.distance == 3);
  CHECK((d.witness == RingVector(z9, {1, 2}) || d.witness == RingVector(z9, {8, 7})));
  CHECK(lee_weight(d.witness) == 3);
  CHECK(min_lee_distance(LinearCode::from_rows(z9, 1, {RingVector(z9, {3})})).distance == 3);
  const auto z4 = Ring::make(2, 2);
  CHECK(min_lee_distance(LinearCode::from_rows(z4, 1, {RingVector(z4, {2})})).distance == 2);
  CHECK_THROWS_AS(min_lee_distance(LinearCode::zero(z9, 2)), DomainError);
  CHECK_THROWS_AS(min_lee_distance(LinearCode::ambient(z9, 4), 100), LimitExceeded);
}

TEST_CASE("minimum hamming distance") {
  const auto z9 = Ring::make(3, 2);
  CHECK(min_hamming_distance(LinearCode::from_rows(z9, 2, {RingVector(z9, {1, 2})})).distance == 2);
  CHECK(min_hamming_distance(LinearCode::from_rows(z9, 1, {RingVector(z9, {3})})).distance == 1);
  CHECK(min_hamming_distance(LinearCode::ambient(z9, 3)).distance == 1);
  CHECK_THROWS_AS(min_hamming_distance(LinearCode::zero(z9, 1)), DomainError);
}

TEST_CASE("classification examples") {
  const auto z9 = Ring::make(3, 2);
  auto r = classify(LinearCode::ambient(z9, 1));
  CHECK(r.d_lee == 1);
  CHECK(r.lhs == 0);
  CHECK(r.mlds_slack == Rational(0));
  CHECK(r.is_mlds);

  r = classify(LinearCode::from_rows(z9, 1, {RingVector(z9, {3})}));
  CHECK(r.d_lee == 3);
  CHECK(r.lhs == 0);
  CHECK(r.mldr_slack == 0);
  CHECK(r.is_mldr);
  CHECK(r.log_size == Rational(1, 2));
  CHECK(r.mlds_slack == Rational(1, 2));
  CHECK_FALSE(r.is_mlds);

  const auto z4 = Ring::make(2, 2);
  r = classify(LinearCode::from_rows(z4, 1, {RingVector(z4, {2})}));
  CHECK(r.d_lee == 2);
  CHECK(r.lhs == 0);
  CHECK(r.is_mldr);
  CHECK_THROWS_AS(classify(LinearCode::zero(z4, 2)), DomainError);
}

TEST_CASE("parallel sweep matches the sequential one") {
  for (const auto& code : oracle::corpus()) {
    if (code.is_zero() || *code.size() < 64) continue;
    const auto seq = min_lee_distance(code);
    for (unsigned t : {2u, 3u, 7u}) {
      const auto par = min_lee_distance(code, kDefaultMaxEnum, t);
      CHECK(par.distance == seq.distance);
      CHECK(par.witness == seq.witness);
      CHECK(min_hamming_distance(code, kDefaultMaxEnum, t).witness == min_hamming_distance(code).witness);
    }
  }
}

TEST_CASE("corpus: bound soundness") {
  for (const auto& code : oracle::corpus()) {
    if (code.is_zero()) continue;
    const auto& ring = code.ring();
    const auto span = oracle::span(code);
    const auto r = classify(code);
    CAPTURE(code.type().to_string());
    CHECK(r.d_lee == oracle::min_lee(ring.modulus(), ring.half_power(), span));
    CHECK(r.d_hamming == oracle::min_hamming(span));
    CHECK(r.mlds_slack >= Rational(0));
    CHECK(r.mldr_slack >= 0);
    CHECK(r.is_mlds == (r.mlds_slack == Rational(0)));
    CHECK(r.is_mldr == (r.mldr_slack == 0));
    CHECK(r.d_hamming <= r.d_lee);
    CHECK(r.d_lee <= ring.half_power() * r.d_hamming);
    CHECK(r.lhs <= static_cast<std::int64_t>(code.n() - code.rank()));
    CHECK(Rational(static_cast<std::int64_t>(code.n())) - r.log_size - Rational(r.lhs) == r.mlds_slack);
  }
}
