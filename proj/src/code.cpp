#include "zpscodes/code.hpp"

#include <algorithm>
#include <numeric>

namespace zps {

void GeneratorMatrix::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].ring() != ring) throw RingMismatch("row " + std::to_string(i) + " is over a different ring");
    if (rows[i].size() != n) {
      throw LengthMismatch("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                           ", expected " + std::to_string(n));
    }
  }
}

std::size_t CodeType::rank() const noexcept { return std::accumulate(deltas.begin(), deltas.end(), std::size_t{0}); }

std::uint64_t CodeType::size_exponent() const noexcept {
  std::uint64_t e = 0;
  const auto s = deltas.size();
  for (std::size_t i = 0; i < s; ++i) e += (s - i) * deltas[i];
  return e;
}

std::string CodeType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(deltas[i]);
  }
  return out + ")";
}

LinearCode LinearCode::from_rows(const Ring& ring, std::size_t n, std::vector<RingVector> rows) {
  return from_rows(GeneratorMatrix{ring, n, std::move(rows)});
}

LinearCode LinearCode::from_rows(const GeneratorMatrix& matrix) {
  matrix.validate();
  const Ring& ring = matrix.ring;
  const std::size_t n = matrix.n;
  LinearCode code(ring, n);
  code.generators_ = matrix.rows;

  std::vector<std::vector<Value>> m;
  m.reserve(matrix.rows.size());
  for (const auto& row : matrix.rows) m.emplace_back(row.entries().begin(), row.entries().end());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  auto sub_scaled = [&ring](std::vector<Value>& target, Value factor, const std::vector<Value>& source) {
    factor = ring.reduce_unsigned(factor);
    if (factor == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) target[j] = ring.sub(target[j], ring.mul(factor, source[j]));
  };

  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (; r < rows && r < n; ++r) {
    // Minimal valuation over the unprocessed block; ties go to the leftmost
    // column, then the lowest row.
    std::optional<unsigned> best;
    std::size_t best_row = 0;
    std::size_t best_col = 0;
    for (std::size_t j = r; j < n; ++j) {
      for (std::size_t i = r; i < rows; ++i) {
        const auto v = ring.valuation(m[i][j]);
        if (v && (!best || *v < *best)) {
          best = v;
          best_row = i;
          best_col = j;
        }
      }
    }
    if (!best) break;

    std::swap(m[r], m[best_row]);
    if (best_col != r) {
      for (auto& row : m) std::swap(row[r], row[best_col]);
      std::swap(perm[r], perm[best_col]);
    }

    const Value pivot_power = ring.power(*best);
    const Value unit = ring.inverse(m[r][r] / pivot_power);
    for (auto& x : m[r]) x = ring.mul(x, unit);

    for (std::size_t i = r + 1; i < rows; ++i) sub_scaled(m[i], m[i][r] / pivot_power, m[r]);
    // Earlier rows keep only the part of this column below p^v.
    for (std::size_t i = 0; i < r; ++i) sub_scaled(m[i], m[i][r] / pivot_power, m[r]);
    code.valuations_.push_back(*best);
  }

  code.permutation_ = perm;
  code.type_.deltas.assign(ring.s(), 0);
  for (std::size_t k = 0; k < r; ++k) {
    ++code.type_.deltas[code.valuations_[k]];
    code.standard_form_.emplace_back(ring, m[k]);
    std::vector<Value> original(n);
    for (std::size_t j = 0; j < n; ++j) original[perm[j]] = m[k][j];
    code.standard_rows_.emplace_back(ring, std::move(original));
  }
  return code;
}

LinearCode LinearCode::zero(const Ring& ring, std::size_t n) { return from_rows(ring, n, {}); }

LinearCode LinearCode::ambient(const Ring& ring, std::size_t n) {
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RingVector e(ring, n);
    e.set(i, 1);
    rows.push_back(std::move(e));
  }
  return from_rows(ring, n, std::move(rows));
}

std::optional<std::uint64_t> LinearCode::size() const noexcept {
  std::uint64_t size = 1;
  const std::uint64_t limit = std::uint64_t{1} << 63;
  for (std::uint64_t e = size_exponent(); e > 0; --e) {
    if (size > limit / ring_.p()) return std::nullopt;
    size *= ring_.p();
  }
  return size;
}

std::uint64_t checked_size(const LinearCode& code, std::uint64_t max_codewords) {
  const auto size = code.size();
  if (!size || *size > max_codewords) {
    throw LimitExceeded("code has " + (size ? std::to_string(*size) : std::string("more than 2^63")) +
                            " codewords, above the enumeration limit " + std::to_string(max_codewords),
                        size.value_or(UINT64_MAX), max_codewords);
  }
  return *size;
}

namespace {

std::vector<Value> radices(const LinearCode& code) {
  std::vector<Value> out;
  for (auto v : code.pivot_valuations()) out.push_back(code.ring().power(code.ring().s() - v));
  return out;
}

}  // namespace

void for_each_codeword_in_range(const LinearCode& code, std::uint64_t begin, std::uint64_t end,
                                const std::function<void(std::uint64_t, const RingVector&)>& visit) {
  const auto& rows = code.standard_rows();
  const auto radix = radices(code);
  std::vector<Value> digit(rows.size(), 0);
  RingVector current(code.ring(), code.n());
  std::uint64_t rest = begin;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    digit[j] = rest % radix[j];
    rest /= radix[j];
    current.add_scaled(digit[j], rows[j]);
  }
  for (std::uint64_t index = begin; index < end; ++index) {
    visit(index, current);
    // Odometer step. A wrapping digit needs no correction because
    // radix_j * g_j = 0 in Z_{p^s}^n.
    for (std::size_t j = 0; j < rows.size(); ++j) {
      current += rows[j];
      if (++digit[j] < radix[j]) break;
      digit[j] = 0;
    }
  }
}

void for_each_codeword(const LinearCode& code, std::uint64_t max_codewords,
                       const std::function<void(const RingVector&)>& visit) {
  const auto size = checked_size(code, max_codewords);
  for_each_codeword_in_range(code, 0, size, [&](std::uint64_t, const RingVector& c) { visit(c); });
}

std::vector<RingVector> enumerate_codewords(const LinearCode& code, std::uint64_t max_codewords) {
  std::vector<RingVector> out;
  out.reserve(checked_size(code, max_codewords));
  for_each_codeword(code, max_codewords, [&](const RingVector& c) { out.push_back(c); });
  return out;
}

bool contains(const LinearCode& code, const RingVector& v) {
  if (v.ring() != code.ring()) throw RingMismatch("vector is over a different ring");
  if (v.size() != code.n()) {
    throw LengthMismatch("vector has length " + std::to_string(v.size()) + ", code has length " +
                         std::to_string(code.n()));
  }
  const Ring& ring = code.ring();
  RingVector rest(v);
  const auto& rows = code.standard_rows();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Value pivot_power = ring.power(code.pivot_valuations()[k]);
    const Value e = rest[code.pivot_column(k)];
    if (e % pivot_power != 0) return false;
    rest.add_scaled(ring.neg(e / pivot_power), rows[k]);
  }
  return rest.is_zero();
}

LinearCode scaled_generator_code(const LinearCode& code, unsigned k) {
  if (k >= code.ring().s()) {
    throw DomainError("scale exponent " + std::to_string(k) + " must be below s = " + std::to_string(code.ring().s()));
  }
  const Value factor = code.ring().power(k);
  std::vector<RingVector> rows;
  for (const auto& row : code.standard_rows()) rows.push_back(row.scaled(factor));
  return LinearCode::from_rows(code.ring(), code.n(), std::move(rows));
}

std::vector<RingVector> codeword_set(const LinearCode& code, std::uint64_t max_codewords) {
  auto words = enumerate_codewords(code, max_codewords);
  std::sort(words.begin(), words.end());
  return words;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.ring() != b.ring() || a.n() != b.n() || a.type() != b.type()) return false;
  return std::all_of(b.standard_rows().begin(), b.standard_rows().end(),
                     [&](const RingVector& row) { return contains(a, row); });
}

}  // namespace zps
