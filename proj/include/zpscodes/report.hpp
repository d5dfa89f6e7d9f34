#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zpscodes/code.hpp"
#include "zpscodes/duality.hpp"
#include "zpscodes/rational.hpp"

namespace zps {

struct AnalysisOptions {
  std::uint64_t max_enum = kDefaultMaxEnum;
  /// Cap for the quadratic analyses (kernel, image self-orthogonality).
  std::uint64_t max_kernel = kDefaultMaxKernel;
  unsigned threads = 1;
};

struct SkippedAnalysis {
  std::string analysis;
  std::string reason;
};

/// Every derived statistic of a code. Optional fields are empty when the
/// analysis was skipped (limits) or is undefined (zero code).
struct AnalysisReport {
  Value p = 0;
  unsigned s = 0;
  std::size_t n = 0;
  std::vector<std::vector<Value>> generators;
  std::vector<std::vector<Value>> standard_form;
  std::vector<std::size_t> column_permutation;
  CodeType type;
  std::size_t rank = 0;
  std::size_t free_rank = 0;
  std::uint64_t size_log_p = 0;
  std::optional<std::uint64_t> size;

  std::optional<std::uint64_t> d_lee;
  std::optional<std::uint64_t> d_hamming;
  std::optional<std::vector<Value>> witness;
  Rational log_size;
  std::optional<std::int64_t> bound_lhs;
  std::optional<Rational> mlds_slack;
  std::optional<std::int64_t> mldr_slack;
  std::optional<bool> is_mlds;
  std::optional<bool> is_mldr;

  bool is_self_dual = false;
  bool is_self_orthogonal = false;
  RankNullityReport rank_nullity{};
  CodeType dual_type;
  std::vector<std::vector<Value>> dual_generators;

  std::optional<unsigned> kernel_dim;
  std::optional<std::set<std::size_t>> kernel_allowed_dims;
  std::optional<bool> kernel_dim_in_bounds;
  std::optional<bool> image_linear;
  std::optional<bool> image_self_orthogonal;
  /// |phi(C)|^2 = p^{p^{s-1} n}, the size a self-dual image would need.
  bool self_dual_image_cardinality = false;

  std::vector<SkippedAnalysis> skipped;
  /// Observations that disagree with an unproven or out-of-scope claim.
  std::vector<std::string> discrepancies;
  /// Failed guaranteed properties. Non-empty means an internal error.
  std::vector<std::string> violations;
};

AnalysisReport analyze(const LinearCode& code, const AnalysisOptions& options = {});

nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const Rational& r);

/// Matrix file: first line `p s n k`, then k rows of n integers. `#` starts a
/// comment; blank lines are ignored. Out-of-range entries are reduced mod p^s
/// and reported through `warnings`.
GeneratorMatrix parse_matrix_file(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Inverse of parse_matrix_file.
std::string format_matrix_file(const Ring& ring, std::size_t n, const std::vector<RingVector>& rows);

}  // namespace zps
