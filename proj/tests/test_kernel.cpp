#include "doctest.h"
#include "oracles.hpp"
#include "zpscodes/kernel.hpp"
#include "zpscodes/rng.hpp"

using namespace zps;

namespace {

GrayVector gv(Value p, std::vector<GrayDigit> d) { return GrayVector(p, std::move(d)); }

std::set<oracle::Digits> digits_of(const std::vector<GrayVector>& gs) {
  std::set<oracle::Digits> out;
  for (const auto& g : gs) out.emplace(g.entries().begin(), g.entries().end());
  return out;
}

bool image_in(const LinearCode& code, const GrayVector& g) {
  const auto pre = gray_preimage(code.ring(), g);
  return pre && contains(code, *pre);
}

}  // namespace

TEST_CASE("kernel examples") {
  const auto z9 = Ring::make(3, 2);
  auto k = kernel_of_gray_image(LinearCode::ambient(z9, 1));
  CHECK(k.kernel_images == std::vector<GrayVector>{gv(3, {0, 0, 0}), gv(3, {1, 1, 1}), gv(3, {2, 2, 2})});
  CHECK(k.dim_m == 1);
  CHECK(k.closed_under_addition);

  k = kernel_of_gray_image(LinearCode::from_rows(z9, 1, {RingVector(z9, {3})}));
  CHECK(k.kernel_images.size() == 3);
  CHECK(k.dim_m == 1);

  k = kernel_of_gray_image(LinearCode::zero(z9, 2));
  CHECK(k.kernel_images == std::vector<GrayVector>{gv(3, std::vector<GrayDigit>(6, 0))});
  CHECK(k.dim_m == 0);

  CHECK_THROWS_AS(kernel_of_gray_image(LinearCode::ambient(z9, 4), 1000), LimitExceeded);
}

TEST_CASE("image linearity") {
  const auto z9 = Ring::make(3, 2);
  CHECK_FALSE(is_gray_image_linear(LinearCode::ambient(z9, 1)));
  CHECK(is_gray_image_linear(LinearCode::from_rows(z9, 1, {RingVector(z9, {3})})));
  CHECK(is_gray_image_linear(LinearCode::zero(z9, 3)));
  // Z_4 maps onto all of F_2^2
  CHECK(is_gray_image_linear(LinearCode::ambient(Ring::make(2, 2), 1)));
}

TEST_CASE("kernel dimension bounds") {
  CHECK(kernel_dim_bounds(CodeType{{1, 0}}) == std::set<std::size_t>{1, 2});
  CHECK(kernel_dim_bounds(CodeType{{0, 3}}) == std::set<std::size_t>{3});
  CHECK(kernel_dim_bounds(CodeType{{0, 0, 2}}) == std::set<std::size_t>{2});
  CHECK(kernel_dim_bounds(CodeType{{1, 2, 0}}) == std::set<std::size_t>{3, 5});
  CHECK(kernel_dim_bounds(CodeType{{0, 4, 1}}) == std::set<std::size_t>{5, 6, 7, 9});
  CHECK_THROWS_AS(kernel_dim_bounds(CodeType{{2}}), DomainError);
}

TEST_CASE("modular independence") {
  const auto z9 = Ring::make(3, 2);
  const std::vector<RingVector> a{RingVector(z9, {1, 0}), RingVector(z9, {0, 3})};
  const std::vector<RingVector> b{RingVector(z9, {1, 0}), RingVector(z9, {2, 0})};
  const std::vector<RingVector> c{RingVector(z9, {3, 0})};
  CHECK(modular_independent(a));
  CHECK_FALSE(modular_independent(b));
  CHECK(modular_independent(c));
  CHECK_FALSE(modular_independent(std::vector<RingVector>{RingVector(z9, {0, 0})}));
  CHECK_THROWS_AS(modular_independent(std::vector<RingVector>{}), DomainError);
  CHECK(oracle::modular_independent(3, 9, {{1, 0}, {0, 3}}));
  CHECK_FALSE(oracle::modular_independent(3, 9, {{1, 0}, {2, 0}}));
  CHECK(oracle::modular_independent(3, 9, {{3, 0}}));
}

TEST_CASE("modular independence agrees with the coefficient sweep") {
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    const auto ring = Ring::make(p, s);
    for (std::uint64_t i = 0; i < 150; ++i) {
      auto rng = SplitMix64::keyed(7, i * 31 + p * s);
      const std::size_t t = 1 + rng.below(3);
      const std::size_t n = 1 + rng.below(3);
      std::vector<oracle::Word> raw;
      std::vector<RingVector> vs;
      for (std::size_t j = 0; j < t; ++j) {
        oracle::Word w(n);
        for (auto& x : w) x = (rng.below(ring.modulus()) * ring.power(rng.below(s))) % ring.modulus();
        raw.push_back(w);
        vs.emplace_back(ring, w);
      }
      CHECK(modular_independent(vs) == oracle::modular_independent(p, ring.modulus(), raw));
    }
  }
}

TEST_CASE("phi independence") {
  const auto z9 = Ring::make(3, 2);
  CHECK(phi_independent(std::vector<RingVector>{RingVector(z9, {1}), RingVector(z9, {3})}));
  CHECK_FALSE(phi_independent(std::vector<RingVector>{RingVector(z9, {3}), RingVector(z9, {6})}));
  CHECK_FALSE(phi_independent(std::vector<RingVector>{RingVector(z9, {0, 0})}));
  CHECK(rank_mod_p({gv(3, {1, 0, 0}), gv(3, {1, 1, 1}), gv(3, {2, 1, 1})}) == 2);
}

TEST_CASE("sum identity") {
  const auto z9 = Ring::make(3, 2);
  const auto r = check_sum_identity(LinearCode::ambient(z9, 1), 0, 1);
  CHECK(r.exhaustive);
  CHECK(r.pairs_checked == 81);
  CHECK(r.violations == 0);
  const auto z8 = Ring::make(2, 3);
  for (Value w = 0; w < 8; ++w) {
    CHECK(gray_scalar(z8, z8.add(0, w)) == gray_scalar(z8, 0) + gray_scalar(z8, w));
    CHECK(gray_scalar(z8, z8.mul(4, w)) + gray_scalar(z8, 0) == gray_scalar(z8, z8.mul(4, w)));
  }
  const auto sampled = check_sum_identity(LinearCode::ambient(Ring::make(3, 3), 3), 500, 9);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.pairs_checked == 500);
  CHECK(sampled.violations == 0);
}

TEST_CASE("self-orthogonal image") {
  const auto z9 = Ring::make(3, 2);
  CHECK(self_orthogonal_image(LinearCode::from_rows(z9, 1, {RingVector(z9, {3})})));
  CHECK_FALSE(self_orthogonal_image(LinearCode::ambient(z9, 1)));
  CHECK(self_orthogonal_image(LinearCode::zero(z9, 2)));
  CHECK_THROWS_AS(self_orthogonal_image(LinearCode::ambient(z9, 4), 100), LimitExceeded);
}

TEST_CASE("kernel dimension can land on the excluded value for p = 2") {
  const auto z8 = Ring::make(2, 3);
  const auto code = LinearCode::from_rows(
      z8, 3, {RingVector(z8, {1, 4, 1}), RingVector(z8, {0, 6, 0}), RingVector(z8, {2, 0, 0})});
  REQUIRE(code.type() == CodeType{{1, 2, 0}});
  const auto k = kernel_of_gray_image(code);
  CHECK(k.kernel_images.size() == 16);
  CHECK(digits_of(k.kernel_images) == oracle::kernel(2, 3, oracle::span(code)));
  CHECK(k.dim_m == 4);
  CHECK(k.allowed_dims == std::set<std::size_t>{3, 5});
  CHECK_FALSE(k.dim_in_bounds);
}

TEST_CASE("corpus: kernel properties") {
  std::size_t dim_failures_p2 = 0;
  for (const auto& code : oracle::corpus()) {
    const auto& ring = code.ring();
    const auto p = ring.p();
    const auto s = ring.s();
    CAPTURE(p);
    CAPTURE(s);
    CAPTURE(code.type().to_string());
    const auto k = kernel_of_gray_image(code);
    const auto oracle_kernel = oracle::kernel(p, s, oracle::span(code));
    CHECK(digits_of(k.kernel_images) == oracle_kernel);
    CHECK(k.closed_under_addition);
    CHECK(k.size_is_power_of_p);
    CHECK(oracle::ipow(p, k.dim_m) == oracle_kernel.size());

    for (const auto& v : enumerate_codewords(k.lower_code)) CHECK(oracle_kernel.count(oracle::gray_word(p, s, {v.entries().begin(), v.entries().end()})));
    CHECK(k.lower_contained);
    std::set<oracle::Word> torsion;
    for (const auto& w : oracle::span(code)) {
      if (std::all_of(w.begin(), w.end(), [&](auto x) { return x * p % ring.modulus() == 0; })) torsion.insert(w);
    }
    CHECK(oracle::to_set(enumerate_codewords(k.lower_code)) == torsion);
    for (const auto& g : k.kernel_images) {
      CHECK(image_in(k.upper_code, g));
      CHECK(image_in(k.inclusion_code, g));
    }

    GraySet kernel_set(k.kernel_images.begin(), k.kernel_images.end());
    const auto p2 = p * p;
    std::size_t order_violations = 0;
    std::size_t scalar_violations = 0;
    for_each_codeword(code, 1 << 12, [&](const RingVector& v) {
      const bool in_k = kernel_set.count(gray_vec(v)) == 1;
      if (vector_order(v) > p2 && in_k) ++order_violations;
      if (in_k) return;
      for (Value lambda = 0; lambda < ring.modulus(); ++lambda) {
        const auto lv = v.scaled(lambda);
        if ((kernel_set.count(gray_vec(lv)) == 1) != (vector_order(lv) <= p)) ++scalar_violations;
      }
    });
    CHECK(order_violations == 0);
    CHECK(scalar_violations == 0);

    if (*code.size() <= 256) {
      const auto sum = check_sum_identity(code, 0, 0);
      CHECK(sum.exhaustive);
      CHECK(sum.violations == 0);
    }

    if (s >= 3) {
      if (p == 2 && !k.dim_in_bounds) {
        ++dim_failures_p2;
        const auto& d = code.type().deltas;
        CHECK(k.dim_m + 1 == code.rank() + d[s - 2]);
      } else {
        CHECK(k.dim_in_bounds);
      }
    }

    if (!code.is_zero()) CHECK(phi_independent(code.standard_rows()));
  }
  MESSAGE("corpus codes with s >= 3 whose kernel dimension is the excluded value: " << dim_failures_p2);
}

TEST_CASE("corpus: image properties") {
  for (const auto& code : oracle::corpus()) {
    const auto& ring = code.ring();
    const auto& d = code.type().deltas;
    CAPTURE(code.type().to_string());
    const bool linear = is_gray_image_linear(code);
    for (unsigned i = 0; i + 3 <= ring.s(); ++i) {
      if (d[i] > 0) CHECK_FALSE(linear);
    }
    if (ring.p() > 2 && d[0] > 0 && code.rank() == d[0]) CHECK_FALSE(linear);
    if (d[0] == 0) CHECK(self_orthogonal_image(code, 1 << 12));

    if (*code.size() > 512) continue;
    bool self_orth = true;
    const auto img = gray_image(code, 1 << 12);
    for (const auto& a : img.sorted()) {
      for (const auto& b : img.sorted()) {
        std::uint64_t ip = 0;
        for (std::size_t i = 0; i < a.size(); ++i) ip += std::uint64_t{a[i]} * b[i];
        self_orth = self_orth && ip % ring.p() == 0;
      }
      if (!self_orth) break;
    }
    CHECK(self_orthogonal_image(code, 1 << 12) == self_orth);
  }
}
