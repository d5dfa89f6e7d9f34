#include "zpscodes/bounds.hpp"

#include <future>
#include <limits>
#include <optional>

#include "zpscodes/lee.hpp"

namespace zps {

namespace {

struct ChunkMin {
  std::uint64_t weight = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t index = 0;
  std::optional<RingVector> witness;
};

template <typename WeightFn>
ChunkMin sweep(const LinearCode& code, std::uint64_t begin, std::uint64_t end, WeightFn weight) {
  ChunkMin best;
  for_each_codeword_in_range(code, begin, end, [&](std::uint64_t index, const RingVector& c) {
    if (index == 0) return;  // index 0 is the zero codeword
    const std::uint64_t w = weight(c);
    if (w < best.weight) {
      best.weight = w;
      best.index = index;
      best.witness = c;
    }
  });
  return best;
}

template <typename WeightFn>
DistanceResult min_weight(const LinearCode& code, std::uint64_t max_codewords, unsigned threads, WeightFn weight) {
  if (code.is_zero()) throw DomainError("minimum distance of the zero code is undefined");
  const std::uint64_t size = checked_size(code, max_codewords);
  ChunkMin best;
  if (threads <= 1 || size < 2 * threads) {
    best = sweep(code, 0, size, weight);
  } else {
    std::vector<std::future<ChunkMin>> parts;
    const std::uint64_t chunk = (size + threads - 1) / threads;
    for (std::uint64_t begin = 0; begin < size; begin += chunk) {
      const std::uint64_t end = std::min(size, begin + chunk);
      parts.push_back(std::async(std::launch::async, [&code, begin, end, weight] { return sweep(code, begin, end, weight); }));
    }
    // Chunks are in index order, so a strict comparison keeps the earliest witness.
    for (auto& part : parts) {
      auto r = part.get();
      if (r.witness && r.weight < best.weight) best = std::move(r);
    }
  }
  return {best.weight, *best.witness};
}

}  // namespace

DistanceResult min_lee_distance(const LinearCode& code, std::uint64_t max_codewords, unsigned threads) {
  return min_weight(code, max_codewords, threads, [](const RingVector& c) { return lee_weight(c); });
}

DistanceResult min_hamming_distance(const LinearCode& code, std::uint64_t max_codewords, unsigned threads) {
  return min_weight(code, max_codewords, threads, [](const RingVector& c) { return hamming_weight(c); });
}

Rational log_size(const LinearCode& code) {
  return Rational(static_cast<std::int64_t>(code.size_exponent()), static_cast<std::int64_t>(code.ring().s()));
}

BoundReport classify(const LinearCode& code, std::uint64_t max_codewords, unsigned threads) {
  const auto lee = min_lee_distance(code, max_codewords, threads);
  const auto ham = min_hamming_distance(code, max_codewords, threads);
  const auto lhs = static_cast<std::int64_t>((lee.distance - 1) / code.ring().half_power());
  const auto n = static_cast<std::int64_t>(code.n());
  const Rational log = log_size(code);
  BoundReport report{lee.distance, ham.distance, lee.witness, log, lhs,
                     Rational(n) - log - Rational(lhs), n - static_cast<std::int64_t>(code.rank()) - lhs};
  if (report.mlds_slack < Rational(0) || report.mldr_slack < 0) {
    throw InvariantViolation("Singleton-type bound violated: mlds slack " + report.mlds_slack.to_string() +
                             ", mldr slack " + std::to_string(report.mldr_slack));
  }
  report.is_mlds = report.mlds_slack == Rational(0);
  report.is_mldr = report.mldr_slack == 0;
  return report;
}

}  // namespace zps
