#include "gcodes/linear_code.hpp"

#include <algorithm>

namespace gcodes {

unsigned GFVector::weight() const {
  unsigned w = 0;
  for (std::uint16_t s : symbols) w += s != 0;
  return w;
}

bool GFVector::operator==(const GFVector& other) const {
  return *field == *other.field && symbols == other.symbols;
}

GFVector operator+(const GFVector& a, const GFVector& b) {
  if (!(*a.field == *b.field)) throw UsageError("vector sum across different fields");
  if (a.size() != b.size()) throw UsageError("vector sum length mismatch");
  GFVector out{a.field, std::vector<std::uint16_t>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) out.symbols[i] = a.field->add(a.symbols[i], b.symbols[i]);
  return out;
}

LinearCode::LinearCode(GFMatrix generator, GFMatrix parity)
    : generator_(std::move(generator)), parity_(std::move(parity)) {}

LinearCode LinearCode::from_generator(GFMatrix generator) {
  const std::size_t k = generator.rows(), n = generator.cols();
  if (k < 1 || k > n) throw UsageError("generator must have 1 <= k <= n rows");
  if (rank(generator) != k) throw UsageError("generator rows are linearly dependent");
  GFMatrix parity(generator.field(), 0, n);
  auto dual = kernel_basis(generator);
  if (!dual.empty()) parity = GFMatrix::from_rows(generator.field(), dual);
  return LinearCode(std::move(generator), std::move(parity));
}

LinearCode LinearCode::from_parity_check(GFMatrix parity) {
  const std::size_t n = parity.cols();
  auto null_space = kernel_basis(parity);
  if (null_space.empty()) throw UsageError("parity check admits only the zero code (k = 0)");
  GFMatrix generator = GFMatrix::from_rows(parity.field(), null_space);
  // Store the canonical full-rank parity check, dropping redundant rows.
  auto [reduced, pivots] = rref(parity);
  GFMatrix canonical(parity.field(), pivots.size(), n);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) canonical.set(i, j, reduced.get(i, j));
  return LinearCode(std::move(generator), std::move(canonical));
}

LinearCode LinearCode::hamming_binary(unsigned r) {
  if (r < 2) throw UsageError("Hamming construction requires r >= 2");
  if (r > 16) throw CapacityError("Hamming construction limited to r <= 16");
  const std::size_t n = (std::size_t(1) << r) - 1;
  GFMatrix parity(FieldSpec::prime_field(2), r, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t pattern = j + 1;
    for (unsigned i = 0; i < r; ++i)
      if (pattern >> i & 1) parity.set(i, j, 1);
  }
  return from_parity_check(std::move(parity));
}

LinearCode LinearCode::even_weight(unsigned n) {
  if (n < 2) throw UsageError("even-weight code requires n >= 2");
  GFMatrix parity(FieldSpec::prime_field(2), 1, n);
  for (unsigned j = 0; j < n; ++j) parity.set(0, j, 1);
  return from_parity_check(std::move(parity));
}

LinearCode LinearCode::repetition_binary(unsigned n) {
  if (n < 1) throw UsageError("repetition code requires n >= 1");
  GFMatrix generator(FieldSpec::prime_field(2), 1, n);
  for (unsigned j = 0; j < n; ++j) generator.set(0, j, 1);
  return from_generator(std::move(generator));
}

LinearCode LinearCode::direct_sum(const LinearCode& other) const {
  if (!(*field() == *other.field())) throw UsageError("direct sum across different fields");
  const std::size_t n1 = length(), n2 = other.length();
  const std::size_t k1 = dimension(), k2 = other.dimension();
  GFMatrix generator(field(), k1 + k2, n1 + n2);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < n1; ++j) generator.set(i, j, generator_.get(i, j));
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < n2; ++j) generator.set(k1 + i, n1 + j, other.generator_.get(i, j));
  return from_generator(std::move(generator));
}

bool LinearCode::is_codeword(std::span<const std::uint16_t> v) const {
  if (v.size() != length()) throw UsageError("codeword length mismatch");
  auto syndrome = parity_.apply(v);
  return std::all_of(syndrome.begin(), syndrome.end(), [](std::uint16_t s) { return s == 0; });
}

bool LinearCode::is_codeword(const GFVector& v) const {
  if (!(*v.field == *field())) throw UsageError("codeword from a different field");
  return is_codeword(std::span<const std::uint16_t>(v.symbols));
}

std::vector<std::uint16_t> LinearCode::encode(std::span<const std::uint16_t> message) const {
  if (message.size() != dimension()) throw UsageError("message length mismatch");
  const FieldSpec& f = *field();
  std::vector<std::uint16_t> out(length(), 0);
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < length(); ++j)
      out[j] = f.add(out[j], f.mul(message[i], generator_.get(i, j)));
  }
  return out;
}

unsigned LinearCode::min_distance(const DistanceOptions& options) const {
  return min_distance_.get_or_compute([&] { return compute_min_distance(*this, options); });
}

}  // namespace gcodes
