#include "zpscodes/gray.hpp"

#include <algorithm>

#include "zpscodes/code.hpp"

namespace zps {

namespace {

bool classical_z4(const Ring& ring) noexcept { return ring.p() == 2 && ring.s() == 2; }

}  // namespace

GrayVector::GrayVector(Value p, std::vector<GrayDigit> entries) : p_(p), entries_(std::move(entries)) {
  for (auto d : entries_) {
    if (d >= p_) throw DomainError("Gray digit " + std::to_string(d) + " out of range for p = " + std::to_string(p_));
  }
}

bool GrayVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](GrayDigit d) { return d == 0; });
}

void GrayVector::require_compatible(const GrayVector& other) const {
  if (p_ != other.p_) throw RingMismatch("Gray vectors over different primes");
  if (entries_.size() != other.entries_.size()) throw LengthMismatch("Gray vector lengths differ");
}

GrayVector& GrayVector::operator+=(const GrayVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = static_cast<GrayDigit>((Value{entries_[i]} + other.entries_[i]) % p_);
  }
  return *this;
}

GrayVector GrayVector::scaled(Value scalar) const {
  GrayVector out(*this);
  scalar %= p_;
  for (auto& d : out.entries_) d = static_cast<GrayDigit>((Value{d} * scalar) % p_);
  return out;
}

std::string GrayVector::digits() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (p_ > 10 && i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::size_t GrayVectorHash::operator()(const GrayVector& g) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto d : g.entries()) {
    h ^= d;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

void gray_digits(const Ring& ring, Value x, std::span<GrayDigit> out) noexcept {
  const Value h = ring.half_power();
  const Value p = ring.p();
  const auto [q, r] = decompose(ring, x);
  const auto high = static_cast<GrayDigit>((q + 1) % p);
  const auto low = static_cast<GrayDigit>(q);
  for (Value i = 0; i < h; ++i) out[i] = i < r ? high : low;
  if (classical_z4(ring)) std::reverse(out.begin(), out.end());
}

GrayVector gray_scalar(const Ring& ring, Value x) {
  std::vector<GrayDigit> digits(ring.half_power());
  gray_digits(ring, ring.reduce_unsigned(x), digits);
  return GrayVector(ring.p(), std::move(digits));
}

GrayVector gray_scalar(const Residue& a) { return gray_scalar(a.ring(), a.value()); }

GrayVector gray_vec(const RingVector& v) {
  const Ring& ring = v.ring();
  const std::size_t h = ring.half_power();
  std::vector<GrayDigit> digits(v.size() * h);
  for (std::size_t i = 0; i < v.size(); ++i) {
    gray_digits(ring, v[i], std::span<GrayDigit>(digits).subspan(i * h, h));
  }
  return GrayVector(ring.p(), std::move(digits));
}

std::optional<Value> gray_scalar_preimage(const Ring& ring, std::span<const GrayDigit> block) {
  const Value h = ring.half_power();
  const Value p = ring.p();
  if (block.size() != h) return std::nullopt;
  std::vector<GrayDigit> b(block.begin(), block.end());
  if (classical_z4(ring)) std::reverse(b.begin(), b.end());
  if (std::any_of(b.begin(), b.end(), [p](GrayDigit d) { return d >= p; })) return std::nullopt;
  // Every image ends in its q digit, and the first r digits are q + 1.
  const Value q = b[h - 1];
  const auto high = static_cast<GrayDigit>((q + 1) % p);
  Value r = 0;
  while (r < h && b[r] == high) ++r;
  for (Value i = r; i < h; ++i) {
    if (b[i] != q) return std::nullopt;
  }
  if (r == h) return std::nullopt;  // unreachable for valid images, whose last digit is q
  return q * h + r;
}

std::optional<RingVector> gray_preimage(const Ring& ring, const GrayVector& g) {
  const std::size_t h = ring.half_power();
  if (g.p() != ring.p() || g.size() % h != 0) return std::nullopt;
  std::vector<Value> values;
  values.reserve(g.size() / h);
  for (std::size_t i = 0; i < g.size(); i += h) {
    const auto x = gray_scalar_preimage(ring, g.entries().subspan(i, h));
    if (!x) return std::nullopt;
    values.push_back(*x);
  }
  return RingVector(ring, std::move(values));
}

std::uint64_t hamming_distance(const GrayVector& a, const GrayVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("Gray vector lengths differ");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::uint64_t hamming_weight(const GrayVector& g) noexcept {
  return static_cast<std::uint64_t>(
      std::count_if(g.entries().begin(), g.entries().end(), [](GrayDigit d) { return d != 0; }));
}

Value inner_product(const GrayVector& a, const GrayVector& b) {
  if (a.p() != b.p()) throw RingMismatch("Gray vectors over different primes");
  if (a.size() != b.size()) throw LengthMismatch("Gray vector lengths differ");
  Value acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + Value{a[i]} * b[i]) % a.p();
  return acc;
}

GrayImageSet::GrayImageSet(std::vector<GrayVector> images, std::uint64_t source_size)
    : sorted_(std::move(images)), source_size_(source_size) {
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
  if (sorted_.size() != source_size_) {
    throw InvariantViolation("Gray map is not injective on this code: " + std::to_string(sorted_.size()) +
                             " images for " + std::to_string(source_size_) + " codewords");
  }
  set_.reserve(sorted_.size());
  set_.insert(sorted_.begin(), sorted_.end());
}

GrayImageSet gray_image(const LinearCode& code, std::uint64_t max_codewords) {
  std::vector<GrayVector> images;
  for_each_codeword(code, max_codewords, [&](const RingVector& c) { images.push_back(gray_vec(c)); });
  const std::uint64_t count = images.size();
  return GrayImageSet(std::move(images), count);
}

}  // namespace zps
