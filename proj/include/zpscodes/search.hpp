#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zpscodes/code.hpp"
#include "zpscodes/report.hpp"

namespace zps {

enum class Target { Mlds, Mldr, SelfDual, SelfOrthogonalImage, LinearImage };

std::string to_string(Target t);
/// Accepts "mlds", "mldr", "self-dual", "self-orthogonal-image", "linear-image".
std::optional<Target> parse_target(std::string_view name);

enum class SearchMode { Exhaustive, Random };

/// Largest exhaustive candidate space (all n x n matrices over Z_{p^s}).
inline constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 22;
/// Seed of the shared property-test corpus.
inline constexpr std::uint64_t kCorpusSeed = 20240611;

struct SearchSpec {
  Ring ring;
  std::size_t n = 1;
  std::optional<CodeType> type_constraint{};
  SearchMode mode = SearchMode::Random;
  std::uint64_t budget = 1000;
  std::uint64_t seed = 1;
  std::set<Target> targets{};
  /// Random mode only: redraw types whose code would be larger than this.
  std::optional<std::uint64_t> max_size{};
  AnalysisOptions analysis{};

  /// Throws DomainError for a zero budget, an unsatisfiable type constraint,
  /// or an exhaustive space above kExhaustiveCap.
  void validate() const;
};

struct SearchRecord {
  std::uint64_t index = 0;
  std::vector<RingVector> rows;
  AnalysisReport report;
  std::map<Target, bool> verdicts;
};

struct SkippedCandidate {
  std::uint64_t index;
  std::string reason;
};

struct SearchResult {
  std::uint64_t candidates = 0;
  std::uint64_t distinct_codes = 0;
  std::vector<SearchRecord> records;
  std::vector<SkippedCandidate> skipped;
};

/// Deterministic in (seed, index). Draws a type (or uses the constraint),
/// builds rows of class i as p^i times a vector with a unit pivot in the
/// block shape of the standard form, mixes them with random row operations
/// and reduces. Throws DomainError when the constraint needs more than n pivots.
LinearCode random_code(const SearchSpec& spec, std::uint64_t index);

/// Candidate `index` of the exhaustive space: an n x n matrix whose entries
/// are the base-p^s digits of index, first entry least significant.
LinearCode exhaustive_candidate(const SearchSpec& spec, std::uint64_t index);

/// Verdict of one target on a report; false when the analysis was skipped.
bool verdict(const AnalysisReport& report, Target target);

SearchResult run_search(const SearchSpec& spec);

nlohmann::json to_json(const SearchRecord& record);
/// One record per line, in index order.
std::string to_ndjson(const SearchResult& result);

/// The fixed corpus for property suites: codes over Z_4, Z_8, Z_9, Z_27 and
/// Z_25 of length 1..3 with 1 <= |C| <= max_size.
std::vector<LinearCode> build_corpus(std::uint64_t seed = kCorpusSeed, std::size_t per_family = 36,
                                     std::uint64_t max_size = std::uint64_t{1} << 12);

}  // namespace zps
