#include "zpscodes/report.hpp"

#include <charconv>
#include <sstream>

#include "zpscodes/bounds.hpp"
#include "zpscodes/gray.hpp"
#include "zpscodes/kernel.hpp"

namespace zps {

namespace {

std::vector<std::vector<Value>> rows_of(const std::vector<RingVector>& rows) {
  std::vector<std::vector<Value>> out;
  for (const auto& r : rows) out.emplace_back(r.entries().begin(), r.entries().end());
  return out;
}

/// p^{p^{s-1} n} compared against |C|^2 through exponents of p.
bool image_has_self_dual_size(const LinearCode& code) {
  return 2 * code.size_exponent() == code.ring().half_power() * code.n();
}

}  // namespace

AnalysisReport analyze(const LinearCode& code, const AnalysisOptions& options) {
  const Ring& ring = code.ring();
  AnalysisReport r;
  r.p = ring.p();
  r.s = ring.s();
  r.n = code.n();
  r.generators = rows_of(code.generators());
  r.standard_form = rows_of(code.standard_rows());
  r.column_permutation = code.column_permutation();
  r.type = code.type();
  r.rank = code.rank();
  r.free_rank = code.free_rank();
  r.size_log_p = code.size_exponent();
  r.size = code.size();
  r.log_size = log_size(code);

  const auto dual = dual_code(code);
  r.dual_type = dual.type();
  r.dual_generators = rows_of(dual.standard_rows());
  r.is_self_orthogonal = is_self_orthogonal(code);
  r.is_self_dual = is_self_dual(code);
  r.rank_nullity = {code.rank(), dual.free_rank(), code.n(), code.rank() + dual.free_rank() == code.n()};
  if (!r.rank_nullity.holds) r.violations.push_back("rank(C) + free_rank(C^perp) != n");
  if (r.is_self_dual != same_code(code, dual)) r.violations.push_back("self-duality test disagrees with C == C^perp");
  r.self_dual_image_cardinality = image_has_self_dual_size(code);
  if (r.is_self_dual && r.self_dual_image_cardinality && !(ring.s() == 1 || (ring.p() == 2 && ring.s() == 2))) {
    r.violations.push_back("self-dual code whose image has self-dual cardinality outside p = s = 2");
  }

  const bool enumerable = r.size && *r.size <= options.max_enum;
  if (code.is_zero()) {
    r.skipped.push_back({"distance", "zero code: minimum distance is undefined"});
  } else if (!enumerable) {
    r.skipped.push_back({"distance", "code size exceeds max-enum " + std::to_string(options.max_enum)});
  } else {
    try {
      const auto bounds = classify(code, options.max_enum, options.threads);
      r.d_lee = bounds.d_lee;
      r.d_hamming = bounds.d_hamming;
      r.witness = std::vector<Value>(bounds.witness.entries().begin(), bounds.witness.entries().end());
      r.bound_lhs = bounds.lhs;
      r.mlds_slack = bounds.mlds_slack;
      r.mldr_slack = bounds.mldr_slack;
      r.is_mlds = bounds.is_mlds;
      r.is_mldr = bounds.is_mldr;
    } catch (const InvariantViolation& e) {
      r.violations.push_back(e.what());
    }
  }

  if (!(r.size && *r.size <= options.max_kernel)) {
    const std::string reason = "code size exceeds max-kernel " + std::to_string(options.max_kernel);
    r.skipped.push_back({"kernel", reason});
    r.skipped.push_back({"image_self_orthogonal", reason});
  } else {
    const auto kernel = kernel_of_gray_image(code, options.max_kernel);
    r.kernel_dim = kernel.dim_m;
    r.kernel_allowed_dims = kernel.allowed_dims;
    if (kernel.allowed_dims) r.kernel_dim_in_bounds = kernel.dim_in_bounds;
    r.image_linear = kernel.kernel_images.size() == *r.size;
    r.image_self_orthogonal = self_orthogonal_image(code, options.max_kernel);

    if (!kernel.closed_under_addition) r.violations.push_back("kernel is not closed under addition");
    if (!kernel.lower_contained) r.violations.push_back("p^{s-1}-scaled code is not inside the kernel");
    if (!kernel.within_inclusion) r.violations.push_back("kernel element of order > p^2");
    if (!kernel.within_upper) r.discrepancies.push_back("kernel is not inside the upper code");
    if (!kernel.size_is_power_of_p) r.discrepancies.push_back("kernel size is not a power of p");
    if (kernel.allowed_dims && !kernel.dim_in_bounds) {
      r.discrepancies.push_back("kernel dimension " + std::to_string(kernel.dim_m) + " outside the admissible set");
    }

    const auto& deltas = code.type().deltas;
    bool low_class = false;
    for (unsigned i = 0; i + 3 <= ring.s(); ++i) low_class = low_class || deltas[i] > 0;
    if (low_class && *r.image_linear) r.violations.push_back("code with delta_i > 0 for i <= s-3 has a linear image");
    const bool free_code = deltas[0] > 0 && code.rank() == deltas[0];
    if (ring.p() > 2 && ring.s() >= 2 && free_code && *r.image_linear) {
      r.violations.push_back("free code with p > 2 has a linear image");
    }
    if (deltas[0] == 0 && !*r.image_self_orthogonal) {
      r.violations.push_back("code with delta_0 = 0 has an image that is not self-orthogonal");
    }
  }
  return r;
}

nlohmann::json to_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  auto opt = [](const auto& value) -> json { return value ? json(*value) : json(nullptr); };
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"analysis", s.analysis}, {"reason", s.reason}});

  json j;
  j["ring"] = {{"p", r.p}, {"s", r.s}};
  j["n"] = r.n;
  j["generators"] = r.generators;
  j["standard_form"] = r.standard_form;
  j["column_permutation"] = r.column_permutation;
  j["type"] = r.type.deltas;
  j["rank"] = r.rank;
  j["free_rank"] = r.free_rank;
  j["size"] = opt(r.size);
  j["size_log_p"] = r.size_log_p;
  j["d_lee"] = opt(r.d_lee);
  j["d_hamming"] = opt(r.d_hamming);
  j["witness"] = opt(r.witness);
  j["log_size"] = to_json(r.log_size);
  j["bound_lhs"] = opt(r.bound_lhs);
  j["mlds_slack"] = r.mlds_slack ? to_json(*r.mlds_slack) : json(nullptr);
  j["mldr_slack"] = opt(r.mldr_slack);
  j["is_mlds"] = opt(r.is_mlds);
  j["is_mldr"] = opt(r.is_mldr);
  j["is_self_dual"] = r.is_self_dual;
  j["is_self_orthogonal"] = r.is_self_orthogonal;
  j["rank_nullity"] = {{"rank", r.rank_nullity.rank},
                       {"dual_free_rank", r.rank_nullity.dual_free_rank},
                       {"n", r.rank_nullity.n},
                       {"holds", r.rank_nullity.holds}};
  j["dual_type"] = r.dual_type.deltas;
  j["dual_generators"] = r.dual_generators;
  j["kernel_dim"] = opt(r.kernel_dim);
  j["kernel_allowed_dims"] = opt(r.kernel_allowed_dims);
  j["kernel_dim_in_bounds"] = opt(r.kernel_dim_in_bounds);
  j["image_linear"] = opt(r.image_linear);
  j["image_self_orthogonal"] = opt(r.image_self_orthogonal);
  j["self_dual_image_cardinality"] = r.self_dual_image_cardinality;
  j["skipped"] = skipped;
  j["discrepancies"] = r.discrepancies;
  j["violations"] = r.violations;
  return j;
}

namespace {

std::int64_t parse_integer(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": '" + std::string(token) + "' is not an integer");
  }
  return value;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

GeneratorMatrix parse_matrix_file(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.emplace_back(number, std::move(toks));
  }
  if (lines.empty()) throw ParseError("missing header line 'p s n k'");
  const auto& [header_line, header] = lines.front();
  if (header.size() != 4) {
    throw ParseError("line " + std::to_string(header_line) + ": header must be 'p s n k', got " +
                     std::to_string(header.size()) + " fields");
  }
  const auto p = parse_integer(header[0], header_line);
  const auto s = parse_integer(header[1], header_line);
  const auto n = parse_integer(header[2], header_line);
  const auto k = parse_integer(header[3], header_line);
  if (p < 0 || n < 0 || k < 0) throw ParseError("header values must be non-negative");
  const Ring ring = Ring::make(static_cast<std::uint64_t>(p), s);

  if (lines.size() - 1 != static_cast<std::size_t>(k)) {
    throw ParseError("header declares " + std::to_string(k) + " rows, file has " + std::to_string(lines.size() - 1));
  }
  GeneratorMatrix matrix{ring, static_cast<std::size_t>(n), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line_no, toks] = lines[i];
    if (toks.size() != matrix.n) {
      throw ParseError("line " + std::to_string(line_no) + ": row has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(matrix.n));
    }
    std::vector<std::int64_t> values;
    for (auto t : toks) {
      const auto v = parse_integer(t, line_no);
      if ((v < 0 || static_cast<Value>(v) >= ring.modulus()) && warnings) {
        warnings->push_back("line " + std::to_string(line_no) + ": entry " + std::to_string(v) + " reduced mod " +
                            std::to_string(ring.modulus()));
      }
      values.push_back(v);
    }
    matrix.rows.emplace_back(ring, std::span<const std::int64_t>(values));
  }
  return matrix;
}

std::string format_matrix_file(const Ring& ring, std::size_t n, const std::vector<RingVector>& rows) {
  std::ostringstream out;
  out << ring.p() << ' ' << ring.s() << ' ' << n << ' ' << rows.size() << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace zps
