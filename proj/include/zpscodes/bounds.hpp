#pragma once

#include <cstdint>

#include "zpscodes/code.hpp"
#include "zpscodes/rational.hpp"

namespace zps {

struct DistanceResult {
  std::uint64_t distance;
  /// First codeword in enumeration order attaining the distance.
  RingVector witness;
};

/// Minimum Lee weight over nonzero codewords (equal to the minimum Lee
/// distance by linearity). `threads` > 1 splits the sweep into index chunks;
/// the result is identical to the sequential sweep.
DistanceResult min_lee_distance(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxEnum,
                                unsigned threads = 1);
DistanceResult min_hamming_distance(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxEnum,
                                    unsigned threads = 1);

/// Position of a code against the two Singleton-type bounds for the extended
/// Lee weight:
///   floor((d - 1) / p^{s-1}) <= n - log_{p^s} |C|   (MLDS when equal)
///   floor((d - 1) / p^{s-1}) <= n - rank(C)         (MLDR when equal)
struct BoundReport {
  std::uint64_t d_lee = 0;
  std::uint64_t d_hamming = 0;
  RingVector witness;
  Rational log_size;
  std::int64_t lhs = 0;
  Rational mlds_slack;
  std::int64_t mldr_slack = 0;
  bool is_mlds = false;
  bool is_mldr = false;
};

/// log_{p^s} |C| = sum (s - i) delta_i / s.
Rational log_size(const LinearCode& code);

/// Throws DomainError for the zero code, LimitExceeded past the limit, and
/// InvariantViolation if either slack comes out negative.
BoundReport classify(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxEnum, unsigned threads = 1);

}  // namespace zps
