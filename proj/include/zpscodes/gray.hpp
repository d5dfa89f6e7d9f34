#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "zpscodes/vector.hpp"

namespace zps {

class LinearCode;

using GrayDigit = std::uint32_t;

/// A vector over F_p, typically the Gray image of a vector over Z_{p^s}.
class GrayVector {
 public:
  GrayVector() = default;
  /// Entries must lie in [0, p).
  GrayVector(Value p, std::vector<GrayDigit> entries);

  Value p() const noexcept { return p_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const GrayDigit> entries() const noexcept { return entries_; }
  GrayDigit operator[](std::size_t i) const { return entries_[i]; }
  bool is_zero() const noexcept;

  /// Entrywise addition mod p.
  GrayVector& operator+=(const GrayVector& other);
  friend GrayVector operator+(GrayVector a, const GrayVector& b) { return a += b; }
  GrayVector scaled(Value scalar) const;

  friend bool operator==(const GrayVector& a, const GrayVector& b) noexcept {
    return a.p_ == b.p_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const GrayVector& a, const GrayVector& b) noexcept {
    return a.entries_ < b.entries_;
  }

  /// Digits concatenated for p <= 10, comma separated otherwise.
  std::string digits() const;

 private:
  void require_compatible(const GrayVector& other) const;

  Value p_ = 2;
  std::vector<GrayDigit> entries_;
};

struct GrayVectorHash {
  std::size_t operator()(const GrayVector& g) const noexcept;
};

using GraySet = std::unordered_set<GrayVector, GrayVectorHash>;

/// Writes the p^{s-1} Gray digits of x into out (which must have that length).
///
/// x = q p^{s-1} + r maps to the constant-q block plus ones in the first r
/// places, mod p. Z_4 uses the classical table 0->00, 1->01, 2->11, 3->10,
/// which is the same construction with the two coordinates swapped.
void gray_digits(const Ring& ring, Value x, std::span<GrayDigit> out) noexcept;

GrayVector gray_scalar(const Ring& ring, Value x);
GrayVector gray_scalar(const Residue& a);
/// Concatenation of the coordinate images, length n p^{s-1}.
GrayVector gray_vec(const RingVector& v);

/// Inverse of gray_vec on its image; empty when g is not the image of any
/// vector of the ambient space (or its length is not a multiple of p^{s-1}).
std::optional<RingVector> gray_preimage(const Ring& ring, const GrayVector& g);
std::optional<Value> gray_scalar_preimage(const Ring& ring, std::span<const GrayDigit> block);

std::uint64_t hamming_distance(const GrayVector& a, const GrayVector& b);
std::uint64_t hamming_weight(const GrayVector& g) noexcept;
/// sum a_i b_i mod p.
Value inner_product(const GrayVector& a, const GrayVector& b);

/// The image phi(C) of a code, with its images in sorted order.
class GrayImageSet {
 public:
  GrayImageSet(std::vector<GrayVector> images, std::uint64_t source_size);

  std::uint64_t source_size() const noexcept { return source_size_; }
  std::size_t size() const noexcept { return sorted_.size(); }
  bool contains(const GrayVector& g) const { return set_.count(g) != 0; }
  const std::vector<GrayVector>& sorted() const noexcept { return sorted_; }
  const GraySet& set() const noexcept { return set_; }

 private:
  std::vector<GrayVector> sorted_;
  GraySet set_;
  std::uint64_t source_size_;
};

/// Throws LimitExceeded when |C| exceeds max_codewords, InvariantViolation if
/// two codewords share an image.
GrayImageSet gray_image(const LinearCode& code, std::uint64_t max_codewords);

}  // namespace zps
