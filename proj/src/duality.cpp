#include "zpscodes/duality.hpp"

namespace zps {

Residue inner_product(const RingVector& u, const RingVector& v) {
  if (u.ring() != v.ring()) throw RingMismatch("vectors belong to different rings");
  if (u.size() != v.size()) throw LengthMismatch("inner product of vectors with different lengths");
  const Ring& ring = u.ring();
  Value acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = ring.add(acc, ring.mul(u[i], v[i]));
  return Residue(ring, static_cast<std::int64_t>(acc));
}

LinearCode dual_code(const LinearCode& code) {
  const Ring& ring = code.ring();
  const std::size_t n = code.n();
  const std::size_t k = code.standard_form().size();

  std::vector<std::vector<Value>> g;
  for (const auto& row : code.standard_form()) g.emplace_back(row.entries().begin(), row.entries().end());
  // Columns of v, stored as vectors: v[j] is column j of V.
  std::vector<std::vector<Value>> v(n, std::vector<Value>(n, 0));
  for (std::size_t j = 0; j < n; ++j) v[j][j] = 1;

  // Clear each pivot row to the right and left of its pivot, last row first.
  // Column j of G is nonzero only in rows <= j once later rows are diagonal,
  // so each column operation only disturbs rows still to be processed.
  for (std::size_t t = k; t-- > 0;) {
    const Value pivot_power = ring.power(code.pivot_valuations()[t]);
    for (std::size_t c = 0; c < n; ++c) {
      if (c == t || g[t][c] == 0) continue;
      const Value factor = g[t][c] / pivot_power;
      for (std::size_t i = 0; i < k; ++i) g[i][c] = ring.sub(g[i][c], ring.mul(factor, g[i][t]));
      for (std::size_t i = 0; i < n; ++i) v[c][i] = ring.sub(v[c][i], ring.mul(factor, v[t][i]));
    }
  }

  std::vector<RingVector> rows;
  const auto& perm = code.column_permutation();
  auto emit = [&](const std::vector<Value>& column, Value scale) {
    std::vector<Value> original(n);
    for (std::size_t i = 0; i < n; ++i) original[perm[i]] = ring.mul(column[i], scale);
    rows.emplace_back(ring, std::move(original));
  };
  for (std::size_t j = 0; j < n; ++j) {
    if (j < k) {
      const unsigned v_j = code.pivot_valuations()[j];
      if (v_j == 0) continue;
      emit(v[j], ring.power(ring.s() - v_j));
    } else {
      emit(v[j], 1);
    }
  }
  return LinearCode::from_rows(ring, n, std::move(rows));
}

bool is_self_orthogonal(const LinearCode& code) {
  const auto& rows = code.standard_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (inner_product(rows[i], rows[j]).value() != 0) return false;
    }
  }
  return true;
}

bool is_self_dual(const LinearCode& code) {
  // |C|^2 = p^{sn}  <=>  2 log_p|C| = s n.
  return is_self_orthogonal(code) && 2 * code.size_exponent() == code.ring().s() * code.n();
}

RankNullityReport rank_nullity_check(const LinearCode& code) {
  const auto dual = dual_code(code);
  RankNullityReport report{code.rank(), dual.free_rank(), code.n(), false};
  report.holds = report.rank + report.dual_free_rank == report.n;
  return report;
}

}  // namespace zps
