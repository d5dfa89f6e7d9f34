#include "zpscodes/kernel.hpp"

#include <algorithm>
#include <unordered_set>

#include "zpscodes/rng.hpp"

namespace zps {

namespace {

/// Byte-string keys for Gray images so that membership of a freshly computed
/// sum needs no allocation.
class ImageIndex {
 public:
  ImageIndex(Value p, std::size_t length) : p_(p), length_(length), width_(p <= 256 ? 1 : 4) {}

  void encode(std::span<const GrayDigit> digits, std::string& out) const {
    out.resize(length_ * width_);
    for (std::size_t i = 0; i < length_; ++i) put(out, i, digits[i]);
  }

  /// out = a + b mod p, where a and b are encoded keys.
  void encode_sum(const std::string& a, const std::string& b, std::string& out) const {
    out.resize(length_ * width_);
    for (std::size_t i = 0; i < length_; ++i) put(out, i, static_cast<GrayDigit>((get(a, i) + get(b, i)) % p_));
  }

  void insert(std::string key) { keys_.insert(std::move(key)); }
  bool contains(const std::string& key) const { return keys_.count(key) != 0; }

 private:
  void put(std::string& out, std::size_t i, GrayDigit d) const {
    for (std::size_t b = 0; b < width_; ++b) out[i * width_ + b] = static_cast<char>((d >> (8 * b)) & 0xff);
  }
  Value get(const std::string& s, std::size_t i) const {
    Value d = 0;
    for (std::size_t b = 0; b < width_; ++b) d |= Value{static_cast<unsigned char>(s[i * width_ + b])} << (8 * b);
    return d;
  }

  Value p_;
  std::size_t length_;
  std::size_t width_;
  std::unordered_set<std::string> keys_;
};

/// Multiplies each standard row of class i by p^{shift(i)}.
template <typename Shift>
LinearCode rescale_by_class(const LinearCode& code, Shift shift) {
  const Ring& ring = code.ring();
  std::vector<RingVector> rows;
  for (std::size_t k = 0; k < code.standard_rows().size(); ++k) {
    const unsigned i = code.pivot_valuations()[k];
    rows.push_back(code.standard_rows()[k].scaled(ring.power(shift(i))));
  }
  return LinearCode::from_rows(ring, code.n(), std::move(rows));
}

bool images_within(const LinearCode& code, const std::vector<RingVector>& preimages) {
  return std::all_of(preimages.begin(), preimages.end(), [&](const RingVector& v) { return contains(code, v); });
}

Value inverse_mod_prime(Value a, Value p) {
  Value result = 1;
  Value base = a % p;
  for (Value e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace

LinearCode kernel_lower_code(const LinearCode& code) {
  const unsigned s = code.ring().s();
  return rescale_by_class(code, [s](unsigned i) { return s - 1 - i; });
}

LinearCode kernel_upper_code(const LinearCode& code) {
  const unsigned s = code.ring().s();
  return rescale_by_class(code, [s](unsigned i) { return i + 3 <= s ? s - 1 - i : 0u; });
}

LinearCode kernel_inclusion_code(const LinearCode& code) {
  const unsigned s = code.ring().s();
  return rescale_by_class(code, [s](unsigned i) { return i + 2 <= s ? s - 2 - i : 0u; });
}

std::set<std::size_t> kernel_dim_bounds(const CodeType& type) {
  const std::size_t s = type.deltas.size();
  if (s < 2) throw DomainError("kernel dimension bounds need s >= 2");
  const std::size_t total = type.rank();
  const std::size_t d = type.deltas[s - 2];
  std::set<std::size_t> dims;
  for (std::size_t m = total; m <= total + d; ++m) dims.insert(m);
  if (d >= 2) dims.erase(total + d - 1);
  return dims;
}

KernelResult kernel_of_gray_image(const LinearCode& code, std::uint64_t max_codewords) {
  const Ring& ring = code.ring();
  const std::size_t length = code.n() * ring.half_power();
  const auto words = enumerate_codewords(code, max_codewords);

  ImageIndex index(ring.p(), length);
  std::vector<GrayVector> images;
  std::vector<std::string> keys;
  images.reserve(words.size());
  keys.reserve(words.size());
  for (const auto& w : words) {
    images.push_back(gray_vec(w));
    std::string key;
    index.encode(images.back().entries(), key);
    index.insert(key);
    keys.push_back(std::move(key));
  }

  KernelResult result{
      .lower_code = kernel_lower_code(code),
      .upper_code = kernel_upper_code(code),
      .inclusion_code = kernel_inclusion_code(code),
  };

  std::string sum;
  ImageIndex kernel_index(ring.p(), length);
  std::vector<std::size_t> kernel_positions;
  for (std::size_t v = 0; v < words.size(); ++v) {
    bool stabilizes = true;
    for (std::size_t w = 0; w < words.size() && stabilizes; ++w) {
      index.encode_sum(keys[v], keys[w], sum);
      stabilizes = index.contains(sum);
    }
    if (stabilizes) {
      kernel_positions.push_back(v);
      kernel_index.insert(keys[v]);
      result.kernel_preimages.push_back(words[v]);
      result.kernel_images.push_back(images[v]);
    }
  }
  std::sort(result.kernel_images.begin(), result.kernel_images.end());

  for (std::size_t a : kernel_positions) {
    for (std::size_t b : kernel_positions) {
      index.encode_sum(keys[a], keys[b], sum);
      if (!kernel_index.contains(sum)) {
        result.closed_under_addition = false;
        result.discrepancies.push_back("kernel is not closed under addition");
        break;
      }
    }
    if (!result.closed_under_addition) break;
  }

  std::uint64_t size = result.kernel_images.size();
  while (size % ring.p() == 0) {
    size /= ring.p();
    ++result.dim_m;
  }
  if (size != 1) {
    result.size_is_power_of_p = false;
    result.discrepancies.push_back("kernel size " + std::to_string(result.kernel_images.size()) +
                                   " is not a power of p");
  }

  // Every lower-code word must have its image in the kernel; every kernel
  // preimage must lie in the upper and inclusion codes.
  std::unordered_set<RingVector, RingVectorHash> kernel_words(result.kernel_preimages.begin(),
                                                              result.kernel_preimages.end());
  for_each_codeword(result.lower_code, max_codewords, [&](const RingVector& c) {
    if (!kernel_words.count(c)) result.lower_contained = false;
  });
  result.within_upper = images_within(result.upper_code, result.kernel_preimages);
  result.within_inclusion = images_within(result.inclusion_code, result.kernel_preimages);
  if (!result.lower_contained) result.discrepancies.push_back("p^{s-1}-scaled code is not inside the kernel");
  if (!result.within_inclusion) result.discrepancies.push_back("kernel leaves the code of elements of order <= p^2");
  if (!result.within_upper) result.discrepancies.push_back("kernel leaves the upper code");

  if (ring.s() >= 2) {
    result.allowed_dims = kernel_dim_bounds(code.type());
    result.dim_in_bounds = result.size_is_power_of_p && result.allowed_dims->count(result.dim_m) != 0;
    if (!result.dim_in_bounds) {
      result.discrepancies.push_back("kernel dimension " + std::to_string(result.dim_m) +
                                     " is outside the admissible set for type " + code.type().to_string());
    }
  }
  return result;
}

bool is_gray_image_linear(const LinearCode& code, std::uint64_t max_codewords) {
  const auto kernel = kernel_of_gray_image(code, max_codewords);
  return kernel.kernel_images.size() == checked_size(code, max_codewords);
}

bool modular_independent(std::span<const RingVector> vectors) {
  if (vectors.empty()) throw DomainError("modular independence of an empty list");
  const auto code = LinearCode::from_rows(vectors.front().ring(), vectors.front().size(),
                                          std::vector<RingVector>(vectors.begin(), vectors.end()));
  return code.rank() == vectors.size();
}

std::size_t rank_mod_p(std::vector<GrayVector> vectors) {
  if (vectors.empty()) return 0;
  const Value p = vectors.front().p();
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<Value>> m;
  for (const auto& g : vectors) {
    if (g.p() != p || g.size() != cols) throw LengthMismatch("Gray vectors of different shapes");
    m.emplace_back(g.entries().begin(), g.entries().end());
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const Value inv = inverse_mod_prime(m[rank][c], p);
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Value f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

bool phi_independent(std::span<const RingVector> vectors) {
  if (vectors.empty()) throw DomainError("phi-independence of an empty list");
  std::vector<GrayVector> images;
  for (const auto& v : vectors) {
    if (v.ring() != vectors.front().ring()) throw RingMismatch("vectors belong to different rings");
    images.push_back(gray_vec(v));
  }
  return rank_mod_p(std::move(images)) == vectors.size();
}

SumIdentityReport check_sum_identity(const LinearCode& code, std::uint64_t trials, std::uint64_t seed,
                                     std::uint64_t exhaustive_limit) {
  const Value top = code.ring().half_power();
  SumIdentityReport report;
  auto check = [&](const RingVector& v, const RingVector& w) {
    const RingVector scaled = v.scaled(top);
    ++report.pairs_checked;
    if (gray_vec(scaled + w) != gray_vec(scaled) + gray_vec(w)) ++report.violations;
  };

  const auto size = code.size();
  if (size && *size <= exhaustive_limit) {
    report.exhaustive = true;
    const auto words = enumerate_codewords(code, exhaustive_limit);
    for (const auto& v : words) {
      for (const auto& w : words) check(v, w);
    }
    return report;
  }
  const std::uint64_t bound = size.value_or(std::uint64_t{1} << 62);
  auto rng = SplitMix64::keyed(seed, 0);
  auto pick = [&]() {
    std::optional<RingVector> out;
    const std::uint64_t i = rng.below(bound);
    for_each_codeword_in_range(code, i, i + 1, [&](std::uint64_t, const RingVector& c) { out = c; });
    return *out;
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto v = pick();
    const auto w = pick();
    check(v, w);
  }
  return report;
}

bool self_orthogonal_image(const LinearCode& code, std::uint64_t max_codewords) {
  std::vector<GrayVector> images;
  for_each_codeword(code, max_codewords, [&](const RingVector& c) { images.push_back(gray_vec(c)); });
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i; j < images.size(); ++j) {
      if (inner_product(images[i], images[j]) != 0) return false;
    }
  }
  return true;
}

}  // namespace zps
