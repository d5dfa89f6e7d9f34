#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zpscodes/vector.hpp"

namespace zps {

inline constexpr std::uint64_t kDefaultMaxEnum = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultMaxKernel = std::uint64_t{1} << 12;

/// Generator rows as supplied by the user. Rows may be redundant or zero.
struct GeneratorMatrix {
  Ring ring;
  std::size_t n;
  std::vector<RingVector> rows;

  /// Throws RingMismatch / LengthMismatch for rows that do not fit.
  void validate() const;
};

/// Exponents (delta_0, ..., delta_{s-1}) of a code of type
/// (p^s)^{delta_0} (p^{s-1})^{delta_1} ... p^{delta_{s-1}}.
struct CodeType {
  std::vector<std::size_t> deltas;

  std::size_t rank() const noexcept;
  std::size_t free_rank() const noexcept { return deltas.empty() ? 0 : deltas[0]; }
  /// log_p |C| = sum (s - i) delta_i.
  std::uint64_t size_exponent() const noexcept;
  std::string to_string() const;

  friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// A linear code over Z_{p^s}, held in standard form.
///
/// The standard form is block upper triangular with pivot blocks p^i I after
/// the recorded column permutation: row k has pivot p^{v_k} in permuted
/// column k, zeros in every earlier permuted column, and all of its entries
/// divisible by p^{v_k}. Rows are sorted by pivot valuation.
class LinearCode {
 public:
  /// Reduces the rows to standard form. The row span is preserved exactly.
  static LinearCode from_rows(const GeneratorMatrix& matrix);
  static LinearCode from_rows(const Ring& ring, std::size_t n, std::vector<RingVector> rows);
  static LinearCode zero(const Ring& ring, std::size_t n);
  static LinearCode ambient(const Ring& ring, std::size_t n);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }

  /// The rows the code was built from.
  const std::vector<RingVector>& generators() const noexcept { return generators_; }
  /// Standard-form rows in permuted coordinates (the literal block shape).
  const std::vector<RingVector>& standard_form() const noexcept { return standard_form_; }
  /// column_permutation()[j] is the original column placed at position j.
  const std::vector<std::size_t>& column_permutation() const noexcept { return permutation_; }
  /// Standard-form rows in the original coordinates.
  const std::vector<RingVector>& standard_rows() const noexcept { return standard_rows_; }
  /// p-adic valuation of each standard row's pivot.
  const std::vector<unsigned>& pivot_valuations() const noexcept { return valuations_; }
  /// Original column holding the pivot of each standard row.
  std::size_t pivot_column(std::size_t row) const { return permutation_.at(row); }

  const CodeType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return type_.rank(); }
  std::size_t free_rank() const noexcept { return type_.free_rank(); }
  std::uint64_t size_exponent() const noexcept { return type_.size_exponent(); }
  /// |C|, or empty when it does not fit in 63 bits.
  std::optional<std::uint64_t> size() const noexcept;
  bool is_zero() const noexcept { return standard_rows_.empty(); }

 private:
  LinearCode(const Ring& ring, std::size_t n) : ring_(ring), n_(n) {}

  Ring ring_;
  std::size_t n_;
  std::vector<RingVector> generators_;
  std::vector<RingVector> standard_form_;
  std::vector<std::size_t> permutation_;
  std::vector<RingVector> standard_rows_;
  std::vector<unsigned> valuations_;
  CodeType type_;
};

inline LinearCode code_from_rows(const GeneratorMatrix& matrix) { return LinearCode::from_rows(matrix); }

/// Throws LimitExceeded when |C| > max_codewords.
std::uint64_t checked_size(const LinearCode& code, std::uint64_t max_codewords);

/// Visits every codeword once as sum c_j g_j over the standard rows, with
/// c_j in [0, p^{s - v_j}) and c_0 varying fastest.
void for_each_codeword(const LinearCode& code, std::uint64_t max_codewords,
                       const std::function<void(const RingVector&)>& visit);

/// Visits the codewords with enumeration index in [begin, end), passing the index.
void for_each_codeword_in_range(const LinearCode& code, std::uint64_t begin, std::uint64_t end,
                                const std::function<void(std::uint64_t, const RingVector&)>& visit);

std::vector<RingVector> enumerate_codewords(const LinearCode& code,
                                            std::uint64_t max_codewords = kDefaultMaxEnum);

/// Row-span membership by reduction against the standard form.
bool contains(const LinearCode& code, const RingVector& v);

/// The code generated by p^k times each standard-form row, 0 <= k < s.
LinearCode scaled_generator_code(const LinearCode& code, unsigned k);

/// Sorted codeword list, used to compare codes as sets.
std::vector<RingVector> codeword_set(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxEnum);

/// Same ring, length and codeword set, decided by mutual containment of generators.
bool same_code(const LinearCode& a, const LinearCode& b);

}  // namespace zps
