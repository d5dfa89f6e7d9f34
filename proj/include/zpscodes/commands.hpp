#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "zpscodes/report.hpp"
#include "zpscodes/search.hpp"

namespace zps::cli {

/// Exit codes of the `zpscodes` binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;
  /// Warnings and summaries meant for stderr.
  std::string err;
};

/// One line "x -> (digits)" per value; every residue of the ring when `values` is empty.
std::string gray_table(const Ring& ring, std::span<const std::int64_t> values);

/// Weights of the vector `values` over `ring`.
CommandOutput cmd_weight(const Ring& ring, std::span<const std::int64_t> values, bool json);

CommandOutput cmd_gray(const Ring& ring, std::span<const std::int64_t> values);

/// The three commands below take the text of a matrix file.
CommandOutput cmd_analyze(std::string_view matrix_text, const AnalysisOptions& options, bool json);
/// Plain output is itself a matrix file, so it can be fed back in.
CommandOutput cmd_dual(std::string_view matrix_text, bool json);
CommandOutput cmd_kernel(std::string_view matrix_text, const AnalysisOptions& options, bool json);

/// `out` holds the NDJSON records, `err` the per-target summary.
CommandOutput cmd_search(const SearchSpec& spec);

/// "1,0,2" -> CodeType{1,0,2}.
CodeType parse_type(std::string_view text);

}  // namespace zps::cli
