#pragma once

#include "zpscodes/code.hpp"

namespace zps {

/// sum u_i v_i mod p^s.
Residue inner_product(const RingVector& u, const RingVector& v);

/// The annihilator C^perp of C under the standard bilinear form.
///
/// Column operations turn the standard form into diag(p^{v_1}, ..., p^{v_k})
/// via a unimodular V; then G x = 0 iff y = V^{-1} x has y_j in p^{s - v_j} Z
/// for j <= k and y_j free beyond k, so C^perp is spanned by p^{s - v_j} V e_j
/// and V e_j.
LinearCode dual_code(const LinearCode& code);

bool is_self_orthogonal(const LinearCode& code);
/// Self-orthogonal and |C|^2 = p^{sn}.
bool is_self_dual(const LinearCode& code);

struct RankNullityReport {
  std::size_t rank;
  std::size_t dual_free_rank;
  std::size_t n;
  bool holds;
};

/// rank(C) + free_rank(C^perp) = n.
RankNullityReport rank_nullity_check(const LinearCode& code);

}  // namespace zps
