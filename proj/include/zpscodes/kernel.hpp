#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "zpscodes/code.hpp"
#include "zpscodes/gray.hpp"

namespace zps {

/// The kernel K(phi(C)) = { phi(v) : v in C, phi(v) + phi(C) = phi(C) } of a
/// Gray image, together with the codes that bound it.
struct KernelResult {
  /// Sorted.
  std::vector<GrayVector> kernel_images{};
  /// In codeword enumeration order.
  std::vector<RingVector> kernel_preimages{};
  /// log_p |K|; exact when size_is_power_of_p.
  unsigned dim_m = 0;
  bool size_is_power_of_p = true;
  bool closed_under_addition = true;
  /// Every row scaled to pivot p^{s-1}: the p-torsion of C.
  LinearCode lower_code;
  /// Rows of class i <= s-3 scaled to pivot p^{s-1}; other rows kept.
  LinearCode upper_code;
  /// Rows of class i <= s-2 scaled to pivot p^{s-2}: the elements of order <= p^2.
  LinearCode inclusion_code;
  bool lower_contained = true;
  bool within_upper = true;
  bool within_inclusion = true;
  /// Empty for s = 1.
  std::optional<std::set<std::size_t>> allowed_dims{};
  bool dim_in_bounds = true;
  std::vector<std::string> discrepancies{};
};

/// Brute force over all codewords: O(|C|^2) membership tests.
/// Throws LimitExceeded when |C| > max_codewords.
KernelResult kernel_of_gray_image(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxKernel);

/// phi(C) is linear iff its kernel is all of phi(C).
bool is_gray_image_linear(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxKernel);

/// Admissible kernel dimensions for a code of the given type (s >= 2):
/// S = sum delta_i, D = delta_{s-2}; all of S..S+D except S+D-1 when D >= 2.
std::set<std::size_t> kernel_dim_bounds(const CodeType& type);

LinearCode kernel_lower_code(const LinearCode& code);
LinearCode kernel_upper_code(const LinearCode& code);
LinearCode kernel_inclusion_code(const LinearCode& code);

/// sum a_i v_i = 0 forces every a_i into <p>. Decided by the rank of the
/// stacked vectors: they are modular independent iff they form a minimal
/// generating set.
bool modular_independent(std::span<const RingVector> vectors);

/// The Gray images are linearly independent over F_p.
bool phi_independent(std::span<const RingVector> vectors);

/// Rank over F_p by Gaussian elimination.
std::size_t rank_mod_p(std::vector<GrayVector> vectors);

struct SumIdentityReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  bool exhaustive = false;
};

/// Checks phi(p^{s-1} v + w) = phi(p^{s-1} v) + phi(w) for v, w in C: on all
/// pairs when |C| <= exhaustive_limit, otherwise on `trials` seeded samples.
SumIdentityReport check_sum_identity(const LinearCode& code, std::uint64_t trials, std::uint64_t seed,
                                     std::uint64_t exhaustive_limit = 256);

/// <phi(u), phi(v)> = 0 mod p for all u, v in C.
bool self_orthogonal_image(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxEnum);

}  // namespace zps
