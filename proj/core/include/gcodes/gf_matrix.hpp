#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcodes/field.hpp"

namespace gcodes {

/// Dense matrix over GF(q). GF(2) instances are stored as bit-packed
/// 64-bit words per row; other fields use one uint16 per entry. Both
/// representations expose identical behavior. Values are immutable inputs
/// to the elimination routines, which allocate fresh outputs.
class GFMatrix {
 public:
  GFMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static GFMatrix identity(FieldPtr field, std::size_t n);
  static GFMatrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint16_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  bool gf2_packed() const { return packed_; }

  std::uint16_t get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint16_t value);

  GFMatrix transposed() const;
  GFMatrix multiply(const GFMatrix& other) const;
  /// M * v for a column vector v of length cols().
  std::vector<std::uint16_t> apply(std::span<const std::uint16_t> vec) const;
  /// Rows of `other` appended below this matrix.
  GFMatrix vstack(const GFMatrix& other) const;
  GFMatrix permute_columns(const std::vector<std::size_t>& perm) const;

  std::vector<std::uint16_t> row(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, std::uint16_t s);
  /// row[dst] += s * row[src]
  void add_scaled_row(std::size_t dst, std::size_t src, std::uint16_t s);

  bool operator==(const GFMatrix& other) const;

  // Direct word access for the packed GF(2) hot loops.
  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> packed_row(std::size_t r) const;
  std::span<std::uint64_t> packed_row_mut(std::size_t r);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool packed_ = false;
  std::size_t words_ = 0;             // per row, packed only
  std::vector<std::uint64_t> bits_;   // packed storage
  std::vector<std::uint16_t> vals_;   // generic storage, row-major
};

struct RrefResult {
  GFMatrix matrix;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form; preserves the row space.
RrefResult rref(const GFMatrix& m);
std::size_t rank(const GFMatrix& m);
/// Basis of {v : M v = 0}; vectors are linearly independent and there are
/// exactly cols - rank of them.
std::vector<std::vector<std::uint16_t>> kernel_basis(const GFMatrix& m);

}  // namespace gcodes
