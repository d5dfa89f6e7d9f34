#include "doctest.h"
#include "oracles.hpp"
#include "zpscodes/bounds.hpp"
#include "zpscodes/gray.hpp"
#include "zpscodes/lee.hpp"

using namespace zps;

namespace {

GrayVector gv(Value p, std::vector<GrayDigit> d) { return GrayVector(p, std::move(d)); }

}  // namespace

TEST_CASE("scalar gray images") {
  const auto z9 = Ring::make(3, 2);
  CHECK(gray_scalar(Residue(z9, 4)) == gv(3, {2, 1, 1}));
  CHECK(gray_scalar(Residue(z9, 7)) == gv(3, {0, 2, 2}));
  CHECK(gray_scalar(Residue(Ring::make(2, 3), 5)) == gv(2, {0, 1, 1, 1}));

  const char* z9_table[] = {"000", "100", "110", "111", "211", "221", "222", "022", "002"};
  for (Value x = 0; x < 9; ++x) CHECK(gray_scalar(z9, x).digits() == z9_table[x]);
  const char* z4_table[] = {"00", "01", "11", "10"};
  for (Value x = 0; x < 4; ++x) CHECK(gray_scalar(Ring::make(2, 2), x).digits() == z4_table[x]);
  CHECK(gray_scalar(Ring::make(5, 1), 3) == gv(5, {3}));
}

TEST_CASE("vector gray images") {
  const auto z9 = Ring::make(3, 2);
  CHECK(gray_vec(RingVector(z9, {0, 0})) == gv(3, {0, 0, 0, 0, 0, 0}));
  CHECK(gray_vec(RingVector(z9, {1, 8})) == gv(3, {1, 0, 0, 0, 0, 2}));
  CHECK(gray_vec(RingVector(Ring::make(2, 2), {2, 3})) == gv(2, {1, 1, 1, 0}));
  CHECK(gray_vec(RingVector(z9, std::size_t{0})).size() == 0);
}

TEST_CASE("digits formatting for large p") {
  CHECK(gv(11, {10, 0, 3}).digits() == "10,0,3");
  CHECK(gv(7, {6, 0, 3}).digits() == "603");
}

TEST_CASE("gray preimage") {
  const auto z9 = Ring::make(3, 2);
  CHECK(gray_preimage(z9, gv(3, {2, 2, 1})) == RingVector(z9, {5}));
  CHECK_FALSE(gray_preimage(z9, gv(3, {0, 1, 0})).has_value());
  CHECK(gray_preimage(z9, gv(3, {0, 0, 0})) == RingVector(z9, {0}));
  CHECK_FALSE(gray_preimage(z9, gv(3, {0, 0})).has_value());
  CHECK_FALSE(gray_preimage(z9, gv(2, {0, 0, 0})).has_value());
  CHECK(gray_preimage(Ring::make(2, 2), gv(2, {1, 0, 0, 1})) == RingVector(Ring::make(2, 2), {3, 1}));
}

TEST_CASE("gray vector arithmetic") {
  CHECK(gv(3, {1, 2, 0}) + gv(3, {2, 2, 1}) == gv(3, {0, 1, 1}));
  CHECK(gv(3, {1, 2, 0}).scaled(2) == gv(3, {2, 1, 0}));
  CHECK(inner_product(gv(3, {1, 1, 1}), gv(3, {2, 2, 2})) == 0);
  CHECK(inner_product(gv(3, {1, 0, 0}), gv(3, {1, 0, 0})) == 1);
  CHECK(hamming_distance(gv(3, {1, 2, 0}), gv(3, {1, 0, 0})) == 1);
  CHECK_THROWS_AS(gv(3, {1}) + gv(3, {1, 2}), LengthMismatch);
  CHECK_THROWS_AS(gv(3, {1}) + gv(5, {1}), RingMismatch);
  CHECK_THROWS_AS(gv(3, {3}), DomainError);
}

TEST_CASE("gray image of small codes") {
  const auto z9 = Ring::make(3, 2);
  const auto c3 = LinearCode::from_rows(z9, 1, {RingVector(z9, {3})});
  const auto img = gray_image(c3, 100);
  CHECK(img.sorted() == std::vector<GrayVector>{gv(3, {0, 0, 0}), gv(3, {1, 1, 1}), gv(3, {2, 2, 2})});
  CHECK(img.source_size() == 3);

  const auto zero = LinearCode::zero(Ring::make(5, 2), 2);
  CHECK(gray_image(zero, 100).sorted() == std::vector<GrayVector>{gv(5, std::vector<GrayDigit>(10, 0))});

  const auto z4 = Ring::make(2, 2);
  const auto c2 = LinearCode::from_rows(z4, 1, {RingVector(z4, {2})});
  CHECK(gray_image(c2, 100).sorted() == std::vector<GrayVector>{gv(2, {0, 0}), gv(2, {1, 1})});

  CHECK_THROWS_AS(gray_image(LinearCode::ambient(z9, 3), 100), LimitExceeded);
}

TEST_CASE("gray map agrees with the step oracle and is an isometry") {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (unsigned s = 1; oracle::ipow(p, s) <= 128; ++s) {
      const auto ring = Ring::make(p, s);
      const auto m = ring.modulus();
      CAPTURE(m);
      std::set<oracle::Digits> seen;
      for (Value a = 0; a < m; ++a) {
        const auto ga = gray_scalar(ring, a);
        CHECK(std::equal(ga.entries().begin(), ga.entries().end(), oracle::gray(p, s, a).begin()));
        seen.emplace(ga.entries().begin(), ga.entries().end());
        CHECK(gray_scalar_preimage(ring, ga.entries()) == a);
        for (Value b = 0; b < m; ++b) {
          CHECK(hamming_distance(ga, gray_scalar(ring, b)) == lee_weight(ring, ring.sub(a, b)));
        }
      }
      CHECK(seen.size() == m);
    }
  }
}

TEST_CASE("preimage inverts gray_vec on small ambient spaces") {
  for (auto [p, s, n] : std::vector<std::tuple<std::uint64_t, int, std::size_t>>{{2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {5, 2, 2}}) {
    const auto ring = Ring::make(p, s);
    oracle::for_each_word(ring.modulus(), n, [&](const oracle::Word& w) {
      const RingVector v(ring, w);
      CHECK(gray_preimage(ring, gray_vec(v)) == v);
    });
  }
}

TEST_CASE("corpus: image size and distance transfer") {
  for (const auto& code : oracle::corpus()) {
    if (code.is_zero()) continue;
    const auto img = gray_image(code, 1 << 12);
    CHECK(img.size() == *code.size());
    std::uint64_t best = UINT64_MAX;
    const auto& all = img.sorted();
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size() && img.size() <= 256; ++j) best = std::min(best, hamming_distance(all[i], all[j]));
    }
    if (img.size() <= 256) CHECK(best == min_lee_distance(code).distance);
    std::uint64_t best_from_zero = UINT64_MAX;
    for (const auto& g : all) {
      if (!g.is_zero()) best_from_zero = std::min(best_from_zero, hamming_weight(g));
    }
    CHECK(best_from_zero == oracle::min_lee(code.ring().modulus(), code.ring().half_power(), oracle::span(code)));
  }
}
