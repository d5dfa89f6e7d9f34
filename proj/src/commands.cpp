#include "zpscodes/commands.hpp"

#include <charconv>
#include <sstream>

#include "zpscodes/duality.hpp"
#include "zpscodes/gray.hpp"
#include "zpscodes/kernel.hpp"
#include "zpscodes/lee.hpp"

namespace zps::cli {

namespace {

struct ParsedCode {
  LinearCode code;
  std::string warnings;
};

ParsedCode parse_code(std::string_view text) {
  std::vector<std::string> warnings;
  auto matrix = parse_matrix_file(text, &warnings);
  std::string err;
  for (const auto& w : warnings) err += "warning: " + w + "\n";
  return {code_from_rows(matrix), err};
}

std::string plain(const nlohmann::json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) out += key + ": " + value.dump() + "\n";
  return out;
}

std::vector<std::vector<Value>> rows_of(const std::vector<RingVector>& rows) {
  std::vector<std::vector<Value>> out;
  for (const auto& r : rows) out.emplace_back(r.entries().begin(), r.entries().end());
  return out;
}

}  // namespace

std::string gray_table(const Ring& ring, std::span<const std::int64_t> values) {
  std::string out;
  auto line = [&](Value x) { out += std::to_string(x) + " -> (" + gray_scalar(ring, x).digits() + ")\n"; };
  if (values.empty()) {
    for (Value x = 0; x < ring.modulus(); ++x) line(x);
  } else {
    for (auto v : values) line(ring.reduce(v));
  }
  return out;
}

CommandOutput cmd_gray(const Ring& ring, std::span<const std::int64_t> values) {
  return {kExitOk, gray_table(ring, values), {}};
}

CommandOutput cmd_weight(const Ring& ring, std::span<const std::int64_t> values, bool json) {
  const RingVector v(ring, values);
  const auto image = gray_vec(v);
  nlohmann::json complete = nlohmann::json::object();
  for (const auto& [value, count] : complete_weight(v)) complete[std::to_string(value)] = count;
  const nlohmann::json j = {{"vector", std::vector<Value>(v.entries().begin(), v.entries().end())},
                            {"lee_weight", lee_weight(v)},
                            {"hamming_weight", hamming_weight(v)},
                            {"complete_weight", complete},
                            {"gray", image.digits()},
                            {"gray_hamming_weight", hamming_weight(image)}};
  return {kExitOk, json ? j.dump(2) + "\n" : plain(j), {}};
}

CommandOutput cmd_analyze(std::string_view matrix_text, const AnalysisOptions& options, bool json) {
  auto [code, warnings] = parse_code(matrix_text);
  const auto report = analyze(code, options);
  const auto j = to_json(report);
  CommandOutput result{kExitOk, json ? j.dump(2) + "\n" : plain(j), warnings};
  for (const auto& v : report.violations) result.err += "violation: " + v + "\n";
  if (!report.violations.empty()) result.exit_code = kExitViolation;
  return result;
}

CommandOutput cmd_dual(std::string_view matrix_text, bool json) {
  auto [code, warnings] = parse_code(matrix_text);
  const auto dual = dual_code(code);
  if (!json) return {kExitOk, format_matrix_file(dual.ring(), dual.n(), dual.standard_rows()), warnings};
  const auto nullity = rank_nullity_check(code);
  const nlohmann::json j = {{"ring", {{"p", code.ring().p()}, {"s", code.ring().s()}}},
                            {"n", code.n()},
                            {"type", code.type().deltas},
                            {"dual_type", dual.type().deltas},
                            {"dual_generators", rows_of(dual.standard_rows())},
                            {"is_self_orthogonal", is_self_orthogonal(code)},
                            {"is_self_dual", is_self_dual(code)},
                            {"rank_nullity_holds", nullity.holds}};
  return {kExitOk, j.dump(2) + "\n", warnings};
}

CommandOutput cmd_kernel(std::string_view matrix_text, const AnalysisOptions& options, bool json) {
  auto [code, warnings] = parse_code(matrix_text);
  const auto k = kernel_of_gray_image(code, options.max_kernel);
  nlohmann::json members = nlohmann::json::array();
  for (const auto& v : k.kernel_preimages) {
    members.push_back({{"codeword", std::vector<Value>(v.entries().begin(), v.entries().end())},
                       {"image", gray_vec(v).digits()}});
  }
  const nlohmann::json j = {
      {"kernel_dim", k.dim_m},
      {"kernel_size", k.kernel_images.size()},
      {"allowed_dims", k.allowed_dims ? nlohmann::json(*k.allowed_dims) : nlohmann::json(nullptr)},
      {"dim_in_bounds", k.allowed_dims ? nlohmann::json(k.dim_in_bounds) : nlohmann::json(nullptr)},
      {"closed_under_addition", k.closed_under_addition},
      {"lower_contained", k.lower_contained},
      {"within_upper", k.within_upper},
      {"within_inclusion", k.within_inclusion},
      {"lower_code", rows_of(k.lower_code.standard_rows())},
      {"upper_code", rows_of(k.upper_code.standard_rows())},
      {"members", members},
      {"discrepancies", k.discrepancies}};

  CommandOutput result{kExitOk, {}, warnings};
  if (json) {
    result.out = j.dump(2) + "\n";
  } else {
    for (const auto& [key, value] : j.items()) {
      if (key != "members") result.out += key + ": " + value.dump() + "\n";
    }
    result.out += "members:\n";
    for (const auto& m : members) {
      result.out += "  " + m["codeword"].dump() + " -> (" + m["image"].get<std::string>() + ")\n";
    }
  }
  if (!k.closed_under_addition || !k.lower_contained || !k.within_inclusion) result.exit_code = kExitViolation;
  return result;
}

CommandOutput cmd_search(const SearchSpec& spec) {
  const auto result = run_search(spec);
  CommandOutput out{kExitOk, to_ndjson(result), {}};
  std::ostringstream summary;
  summary << "candidates: " << result.candidates << "\n"
          << "distinct codes: " << result.distinct_codes << "\n"
          << "records: " << result.records.size() << "\n"
          << "skipped: " << result.skipped.size() << "\n";
  std::map<Target, std::size_t> hits;
  for (const auto& r : result.records) {
    for (const auto& [t, v] : r.verdicts) hits[t] += v ? 1 : 0;
    if (!r.report.violations.empty()) out.exit_code = kExitViolation;
  }
  for (const auto& [t, count] : hits) summary << to_string(t) << ": " << count << "\n";
  out.err = summary.str();
  return out;
}

CodeType parse_type(std::string_view text) {
  CodeType type;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("type entry '" + std::string(token) + "' is not a non-negative integer");
    }
    type.deltas.push_back(value);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (type.deltas.empty()) throw ParseError("empty type");
  return type;
}

}  // namespace zps::cli
