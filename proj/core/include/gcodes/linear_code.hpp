#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gcodes/cache.hpp"
#include "gcodes/field.hpp"
#include "gcodes/gf_matrix.hpp"

namespace gcodes {

/// Vector of field symbols; doubles as a codeword and as an edge
/// assignment.
struct GFVector {
  FieldPtr field;
  std::vector<std::uint16_t> symbols;

  std::size_t size() const { return symbols.size(); }
  unsigned weight() const;
  bool operator==(const GFVector& other) const;
};

GFVector operator+(const GFVector& a, const GFVector& b);

enum class DistanceEngine { Auto, Exhaustive, BrouwerZimmermann };

struct DistanceOptions {
  DistanceEngine engine = DistanceEngine::Auto;
  unsigned workers = 1;
  /// Called after each completed enumeration round with the proven lower
  /// bound and the best (upper) weight found so far.
  std::function<void(unsigned lower, unsigned upper)> progress;
};

/// An [n, k, d] linear code stored by generator matrix (k x n, full row
/// rank) with the canonical (n-k) x n parity check derived from it. The
/// minimum distance is computed lazily and cached; the cache is safe to
/// publish across threads.
class LinearCode {
 public:
  static LinearCode from_generator(GFMatrix generator);
  static LinearCode from_parity_check(GFMatrix parity);

  /// Binary Hamming code [2^r-1, 2^r-1-r, 3]; parity-check column j holds
  /// the bits of j+1, so columns run through the nonzero r-bit patterns in
  /// increasing integer order.
  static LinearCode hamming_binary(unsigned r);
  /// The [n, n-1, 2] binary code of all even-weight vectors.
  static LinearCode even_weight(unsigned n);
  /// The [n, 1, n] binary repetition code.
  static LinearCode repetition_binary(unsigned n);

  LinearCode direct_sum(const LinearCode& other) const;

  const FieldPtr& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const GFMatrix& generator() const { return generator_; }
  const GFMatrix& parity_check() const { return parity_; }

  bool is_codeword(std::span<const std::uint16_t> v) const;
  bool is_codeword(const GFVector& v) const;
  std::vector<std::uint16_t> encode(std::span<const std::uint16_t> message) const;

  unsigned min_distance(const DistanceOptions& options = {}) const;
  std::optional<unsigned> cached_min_distance() const { return min_distance_.peek(); }

 private:
  LinearCode(GFMatrix generator, GFMatrix parity);

  GFMatrix generator_;
  GFMatrix parity_;
  CachedValue<unsigned> min_distance_;
};

/// Exact minimum distance by enumerating all q^k - 1 nonzero messages.
/// Rejects instances with q^k > 2^22.
unsigned min_distance_exhaustive(const LinearCode& code);

/// Exact minimum distance for binary codes by enumeration over multiple
/// information sets with a proven lower-bound cutoff. Always terminates.
unsigned min_distance_bz(const LinearCode& code, const DistanceOptions& options = {});

/// Engine dispatch: exhaustive when q^k <= 2^22, otherwise the information-
/// set search (binary only).
unsigned compute_min_distance(const LinearCode& code, const DistanceOptions& options = {});

}  // namespace gcodes
