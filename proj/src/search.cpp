#include "zpscodes/search.hpp"

#include <algorithm>
#include <numeric>

#include "zpscodes/rng.hpp"

namespace zps {

std::string to_string(Target t) {
  switch (t) {
    case Target::Mlds: return "mlds";
    case Target::Mldr: return "mldr";
    case Target::SelfDual: return "self-dual";
    case Target::SelfOrthogonalImage: return "self-orthogonal-image";
    case Target::LinearImage: return "linear-image";
  }
  return "unknown";
}

std::optional<Target> parse_target(std::string_view name) {
  for (auto t : {Target::Mlds, Target::Mldr, Target::SelfDual, Target::SelfOrthogonalImage, Target::LinearImage}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

/// m^e, or empty past `cap`.
std::optional<std::uint64_t> capped_power(std::uint64_t m, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (out > cap / m) return std::nullopt;
    out *= m;
  }
  return out;
}

std::uint64_t exhaustive_space(const SearchSpec& spec) {
  return capped_power(spec.ring.modulus(), spec.n * spec.n, kExhaustiveCap).value_or(kExhaustiveCap + 1);
}

CodeType draw_type(const SearchSpec& spec, SplitMix64& rng) {
  const unsigned s = spec.ring.s();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    CodeType type{std::vector<std::size_t>(s, 0)};
    const std::size_t rank = spec.n == 0 ? 0 : 1 + rng.below(spec.n);
    for (std::size_t j = 0; j < rank; ++j) ++type.deltas[rng.below(s)];
    if (!spec.max_size || capped_power(spec.ring.p(), type.size_exponent(), *spec.max_size)) return type;
  }
  throw DomainError("no code type fits under the size cap");
}

}  // namespace

void SearchSpec::validate() const {
  if (budget == 0) throw DomainError("search budget must be at least 1");
  if (type_constraint) {
    if (type_constraint->deltas.size() != ring.s()) {
      throw DomainError("type constraint needs " + std::to_string(ring.s()) + " entries");
    }
    if (type_constraint->rank() > n) {
      throw DomainError("type constraint has " + std::to_string(type_constraint->rank()) + " pivots for length " +
                        std::to_string(n));
    }
  }
  if (mode == SearchMode::Exhaustive && exhaustive_space(*this) > kExhaustiveCap) {
    throw DomainError("exhaustive space of " + std::to_string(n) + "x" + std::to_string(n) + " matrices over Z_" +
                      std::to_string(ring.modulus()) + " exceeds the cap of " + std::to_string(kExhaustiveCap));
  }
}

LinearCode random_code(const SearchSpec& spec, std::uint64_t index) {
  if (spec.type_constraint) spec.validate();
  const Ring& ring = spec.ring;
  const std::size_t n = spec.n;
  const Value m = ring.modulus();
  auto rng = SplitMix64::keyed(spec.seed, index);
  const CodeType type = spec.type_constraint ? *spec.type_constraint : draw_type(spec, rng);

  std::vector<unsigned> classes;
  for (unsigned i = 0; i < type.deltas.size(); ++i) classes.insert(classes.end(), type.deltas[i], i);
  const std::size_t rank = classes.size();

  std::vector<std::size_t> columns(n);
  std::iota(columns.begin(), columns.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(columns[i - 1], columns[rng.below(i)]);

  std::vector<RingVector> rows;
  for (std::size_t j = 0; j < rank; ++j) {
    RingVector row(ring, n);
    for (std::size_t c = 0; c < n; ++c) {
      const auto owner = std::find(columns.begin(), columns.begin() + rank, c) - columns.begin();
      const bool pivot_col = static_cast<std::size_t>(owner) < rank;
      if (pivot_col && static_cast<std::size_t>(owner) == j) {
        Value u = 0;
        while (!ring.is_unit(u)) u = rng.below(m);
        row.set(c, static_cast<std::int64_t>(u));
      } else if (pivot_col && classes[owner] <= classes[j]) {
        // zero: earlier block or same identity block
      } else {
        row.set(c, static_cast<std::int64_t>(rng.below(m)));
      }
    }
    rows.push_back(row.scaled(ring.power(classes[j])));
  }

  if (rank >= 2) {
    for (std::size_t t = 0; t < rank; ++t) {
      const std::size_t a = rng.below(rank);
      std::size_t b = rng.below(rank - 1);
      if (b >= a) ++b;
      rows[a].add_scaled(rng.below(m), rows[b]);
    }
  }
  if (rank >= 1 && rng.below(4) == 0) {
    RingVector extra(ring, n);
    for (const auto& row : rows) extra.add_scaled(rng.below(m), row);
    rows.push_back(std::move(extra));
  }
  for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1], rows[rng.below(i)]);

  auto code = LinearCode::from_rows(ring, n, std::move(rows));
  if (code.type() != type) {
    throw InvariantViolation("random code has type " + code.type().to_string() + ", drew " + type.to_string());
  }
  return code;
}

LinearCode exhaustive_candidate(const SearchSpec& spec, std::uint64_t index) {
  const Value m = spec.ring.modulus();
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < spec.n; ++i) {
    RingVector row(spec.ring, spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) {
      row.set(j, static_cast<std::int64_t>(index % m));
      index /= m;
    }
    rows.push_back(std::move(row));
  }
  return LinearCode::from_rows(spec.ring, spec.n, std::move(rows));
}

bool verdict(const AnalysisReport& report, Target target) {
  switch (target) {
    case Target::Mlds: return report.is_mlds.value_or(false);
    case Target::Mldr: return report.is_mldr.value_or(false);
    case Target::SelfDual: return report.is_self_dual;
    case Target::SelfOrthogonalImage: return report.image_self_orthogonal.value_or(false);
    case Target::LinearImage: return report.image_linear.value_or(false);
  }
  return false;
}

SearchResult run_search(const SearchSpec& spec) {
  spec.validate();
  std::set<Target> targets = spec.targets;
  if (targets.empty()) {
    targets = {Target::Mlds, Target::Mldr, Target::SelfDual, Target::SelfOrthogonalImage, Target::LinearImage};
  }
  const bool exhaustive = spec.mode == SearchMode::Exhaustive;
  const std::uint64_t count = exhaustive ? std::min(exhaustive_space(spec), spec.budget) : spec.budget;

  SearchResult result;
  std::set<std::vector<Value>> seen;
  for (std::uint64_t index = 0; index < count; ++index) {
    ++result.candidates;
    const auto code = exhaustive ? exhaustive_candidate(spec, index) : random_code(spec, index);
    if (exhaustive && spec.type_constraint && code.type() != *spec.type_constraint) continue;
    const auto size = code.size();
    if (!size || *size > spec.analysis.max_enum) {
      result.skipped.push_back({index, "code size exceeds max-enum " + std::to_string(spec.analysis.max_enum)});
      continue;
    }
    std::vector<Value> fingerprint;
    for (const auto& c : codeword_set(code, spec.analysis.max_enum)) {
      fingerprint.insert(fingerprint.end(), c.entries().begin(), c.entries().end());
    }
    if (!seen.insert(std::move(fingerprint)).second) continue;
    ++result.distinct_codes;

    SearchRecord record{index, code.generators(), analyze(code, spec.analysis), {}};
    bool hit = false;
    for (auto t : targets) {
      const bool v = verdict(record.report, t);
      record.verdicts[t] = v;
      hit = hit || v;
    }
    if (hit) result.records.push_back(std::move(record));
  }
  return result;
}

nlohmann::json to_json(const SearchRecord& record) {
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [t, v] : record.verdicts) verdicts[to_string(t)] = v;
  std::vector<std::vector<Value>> rows;
  for (const auto& r : record.rows) rows.emplace_back(r.entries().begin(), r.entries().end());
  return {{"index", record.index},
          {"ring", {{"p", record.report.p}, {"s", record.report.s}}},
          {"n", record.report.n},
          {"rows", rows},
          {"verdicts", verdicts},
          {"report", to_json(record.report)}};
}

std::string to_ndjson(const SearchResult& result) {
  std::string out;
  for (const auto& r : result.records) out += to_json(r).dump() + "\n";
  return out;
}

std::vector<LinearCode> build_corpus(std::uint64_t seed, std::size_t per_family, std::uint64_t max_size) {
  static constexpr std::pair<std::uint64_t, unsigned> kRings[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}};
  std::vector<LinearCode> corpus;
  std::uint64_t family = 0;
  for (const auto& [p, s] : kRings) {
    for (std::size_t n = 1; n <= 3; ++n, ++family) {
      SearchSpec spec{.ring = Ring::make(p, s), .n = n, .seed = SplitMix64::mix(seed + family)};
      spec.max_size = max_size;
      for (std::size_t i = 0; i < per_family; ++i) corpus.push_back(random_code(spec, i));
    }
  }
  return corpus;
}

}  // namespace zps
