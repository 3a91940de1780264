#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gcodes/errors.hpp"

namespace gcodes {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Arithmetic in GF(q) for prime q <= 2^16 and binary extension fields
/// GF(2^e), e <= 16. Elements are canonical integers in [0, q): for prime
/// fields the residue, for extension fields the bit pattern of the
/// polynomial representative. Immutable after construction and safe to
/// share across threads.
class FieldSpec {
 public:
  static FieldPtr prime_field(std::uint32_t p);
  /// GF(2^e) with the default reduction polynomial: the lexicographically
  /// smallest monic irreducible of degree e (smallest bit encoding).
  static FieldPtr binary_field(std::uint32_t e);
  /// GF(2^e) with an explicit reduction polynomial, coefficients ascending
  /// (c0..ce, ce = 1). Irreducibility is verified by exhaustive trial
  /// division.
  static FieldPtr binary_field(std::uint32_t e, const std::vector<std::uint32_t>& poly);
  /// Dispatch on q: prime -> prime field, power of two -> binary extension.
  /// Odd-characteristic extension orders are rejected.
  static FieldPtr from_order(std::uint32_t q);
  /// Parse "q=<int>" with optional "poly=<c0>,<c1>,...,<ce>".
  static FieldPtr parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// Ascending coefficient list, empty for prime fields.
  std::vector<std::uint32_t> reduction_polynomial() const;
  std::string to_string() const;

  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && e_ == other.e_ && poly_bits_ == other.poly_bits_;
  }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    if (q_ == 2) return a ^ b;  // hot path
    if (e_ == 1) {
      std::uint32_t s = std::uint32_t(a) + b;
      return std::uint16_t(s >= q_ ? s - q_ : s);
    }
    return a ^ b;
  }
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
    if (e_ > 1 || q_ == 2) return a ^ b;
    return std::uint16_t(a >= b ? a - b : a + q_ - b);
  }
  std::uint16_t neg(std::uint16_t a) const {
    if (e_ > 1 || q_ == 2) return a;
    return std::uint16_t(a == 0 ? 0 : q_ - a);
  }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    if (q_ == 2) return a & b;
    if (e_ == 1) return std::uint16_t((std::uint64_t(a) * b) % q_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint16_t inv(std::uint16_t a) const;
  std::uint16_t pow(std::uint16_t a, std::uint64_t k) const;

 private:
  FieldSpec() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t poly_bits_ = 0;      // bit i = coefficient of x^i; 0 for prime fields
  std::vector<std::uint16_t> exp_;   // ext fields: exp_[i] = g^i, doubled to skip one modulo
  std::vector<std::uint16_t> log_;   // ext fields: log_[g^i] = i
};

/// A field element tagged with its field, for contract-checked scalar
/// arithmetic. Bulk carriers (matrices, codewords) hold raw values and a
/// single field pointer instead.
struct FieldElement {
  FieldPtr field;
  std::uint16_t value = 0;

  bool operator==(const FieldElement& other) const {
    return *field == *other.field && value == other.value;
  }
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement inverse(const FieldElement& a);

}  // namespace gcodes
