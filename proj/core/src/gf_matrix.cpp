#include "gcodes/gf_matrix.hpp"

#include <algorithm>
#include <bit>

namespace gcodes {

GFMatrix::GFMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (!field_) throw UsageError("matrix requires a field");
  packed_ = field_->order() == 2;
  if (packed_) {
    words_ = (cols_ + 63) / 64;
    bits_.assign(rows_ * words_, 0);
  } else {
    vals_.assign(rows_ * cols_, 0);
  }
}

GFMatrix GFMatrix::identity(FieldPtr field, std::size_t n) {
  GFMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GFMatrix GFMatrix::from_rows(FieldPtr field,
                             const std::vector<std::vector<std::uint16_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  GFMatrix m(std::move(field), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw UsageError("ragged row lengths");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] >= m.field_->order()) throw UsageError("entry out of field range");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

std::uint16_t GFMatrix::get(std::size_t r, std::size_t c) const {
  if (packed_) return std::uint16_t(bits_[r * words_ + c / 64] >> (c % 64) & 1);
  return vals_[r * cols_ + c];
}

void GFMatrix::set(std::size_t r, std::size_t c, std::uint16_t value) {
  if (packed_) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t(1) << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
  } else {
    vals_[r * cols_ + c] = value;
  }
}

GFMatrix GFMatrix::transposed() const {
  GFMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, get(i, j));
  return t;
}

GFMatrix GFMatrix::multiply(const GFMatrix& other) const {
  if (!(*field_ == *other.field_)) throw UsageError("matrix product across different fields");
  if (cols_ != other.rows_) throw UsageError("matrix product shape mismatch");
  GFMatrix out(field_, rows_, other.cols_);
  if (packed_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      auto dst = out.packed_row_mut(i);
      auto lhs = packed_row(i);
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = lhs[w];
        while (word) {
          const std::size_t j = w * 64 + std::size_t(std::countr_zero(word));
          word &= word - 1;
          auto src = other.packed_row(j);
          for (std::size_t k = 0; k < other.words_; ++k) dst[k] ^= src[k];
        }
      }
    }
    return out;
  }
  const FieldSpec& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::uint16_t a = get(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < other.cols_; ++k) {
        const std::uint16_t prod = f.mul(a, other.get(j, k));
        out.set(i, k, f.add(out.get(i, k), prod));
      }
    }
  return out;
}

std::vector<std::uint16_t> GFMatrix::apply(std::span<const std::uint16_t> vec) const {
  if (vec.size() != cols_) throw UsageError("vector length does not match matrix columns");
  std::vector<std::uint16_t> out(rows_, 0);
  if (packed_) {
    std::vector<std::uint64_t> packed(words_, 0);
    for (std::size_t j = 0; j < cols_; ++j)
      if (vec[j]) packed[j / 64] |= std::uint64_t(1) << (j % 64);
    for (std::size_t i = 0; i < rows_; ++i) {
      auto r = packed_row(i);
      std::uint64_t parity = 0;
      for (std::size_t w = 0; w < words_; ++w) parity ^= std::uint64_t(std::popcount(r[w] & packed[w]));
      out[i] = std::uint16_t(parity & 1);
    }
    return out;
  }
  const FieldSpec& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint16_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = f.add(acc, f.mul(get(i, j), vec[j]));
    out[i] = acc;
  }
  return out;
}

GFMatrix GFMatrix::vstack(const GFMatrix& other) const {
  if (!(*field_ == *other.field_) || cols_ != other.cols_)
    throw UsageError("vstack requires equal fields and column counts");
  GFMatrix out(field_, rows_ + other.rows_, cols_);
  if (packed_) {
    std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
    std::copy(other.bits_.begin(), other.bits_.end(), out.bits_.begin() + rows_ * words_);
  } else {
    std::copy(vals_.begin(), vals_.end(), out.vals_.begin());
    std::copy(other.vals_.begin(), other.vals_.end(), out.vals_.begin() + rows_ * cols_);
  }
  return out;
}

GFMatrix GFMatrix::permute_columns(const std::vector<std::size_t>& perm) const {
  if (perm.size() != cols_) throw UsageError("column permutation length mismatch");
  GFMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, get(i, perm[j]));
  return out;
}

std::vector<std::uint16_t> GFMatrix::row(std::size_t r) const {
  std::vector<std::uint16_t> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = get(r, j);
  return out;
}

bool GFMatrix::row_is_zero(std::size_t r) const {
  if (packed_) {
    auto w = packed_row(r);
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  }
  for (std::size_t j = 0; j < cols_; ++j)
    if (get(r, j)) return false;
  return true;
}

bool GFMatrix::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!row_is_zero(i)) return false;
  return true;
}

void GFMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (packed_) {
    std::swap_ranges(bits_.begin() + a * words_, bits_.begin() + (a + 1) * words_,
                     bits_.begin() + b * words_);
  } else {
    std::swap_ranges(vals_.begin() + a * cols_, vals_.begin() + (a + 1) * cols_,
                     vals_.begin() + b * cols_);
  }
}

void GFMatrix::scale_row(std::size_t r, std::uint16_t s) {
  if (packed_) {
    if (s == 0) std::fill_n(bits_.begin() + r * words_, words_, 0);
    return;  // s == 1 is the only other scalar
  }
  const FieldSpec& f = *field_;
  for (std::size_t j = 0; j < cols_; ++j) vals_[r * cols_ + j] = f.mul(vals_[r * cols_ + j], s);
}

void GFMatrix::add_scaled_row(std::size_t dst, std::size_t src, std::uint16_t s) {
  if (s == 0) return;
  if (packed_) {
    auto d = packed_row_mut(dst);
    auto sp = packed_row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= sp[w];
    return;
  }
  const FieldSpec& f = *field_;
  for (std::size_t j = 0; j < cols_; ++j) {
    const std::uint16_t add = f.mul(s, vals_[src * cols_ + j]);
    vals_[dst * cols_ + j] = f.add(vals_[dst * cols_ + j], add);
  }
}

bool GFMatrix::operator==(const GFMatrix& other) const {
  if (!(*field_ == *other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j) != other.get(i, j)) return false;
  return true;
}

std::span<const std::uint64_t> GFMatrix::packed_row(std::size_t r) const {
  return {bits_.data() + r * words_, words_};
}

std::span<std::uint64_t> GFMatrix::packed_row_mut(std::size_t r) {
  return {bits_.data() + r * words_, words_};
}

RrefResult rref(const GFMatrix& m) {
  GFMatrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows(), cols = a.cols();
  const FieldSpec& f = *a.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.get(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
    const std::uint16_t lead = a.get(r, c);
    if (lead != 1) a.scale_row(r, f.inv(lead));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint16_t v = a.get(i, c);
      if (v) a.add_scaled_row(i, r, f.neg(v));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const GFMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<std::vector<std::uint16_t>> kernel_basis(const GFMatrix& m) {
  auto [red, pivots] = rref(m);
  const std::size_t cols = m.cols();
  const FieldSpec& f = *m.field();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint16_t>> basis;
  basis.reserve(cols - pivots.size());
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint16_t> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red.get(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gcodes
