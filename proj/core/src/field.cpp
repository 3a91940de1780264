#include "gcodes/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gcodes {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(2) as bit patterns, bit i = coefficient of x^i.
std::uint32_t poly_degree(std::uint32_t f) {
  return f == 0 ? 0 : 31 - std::uint32_t(__builtin_clz(f));
}

std::uint64_t poly_mul2(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t poly_mod2(std::uint64_t a, std::uint32_t f) {
  const int df = int(poly_degree(f));
  for (int d = 63; d >= df; --d)
    if (a >> d & 1) a ^= std::uint64_t(f) << (d - df);
  return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible2(std::uint32_t f) {
  const std::uint32_t deg = poly_degree(f);
  if (deg == 0) return false;
  if ((f & 1) == 0) return deg == 1;  // divisible by x
  for (std::uint32_t dd = 1; 2 * dd <= deg; ++dd) {
    for (std::uint32_t g = 1u << dd; g < (2u << dd); ++g) {
      // remainder of f mod g
      std::uint64_t r = f;
      const int dg = int(dd);
      for (int d = int(deg); d >= dg; --d)
        if (r >> d & 1) r ^= std::uint64_t(g) << (d - dg);
      if (r == 0) return false;
    }
  }
  return true;
}

std::uint32_t default_reduction_poly(std::uint32_t e) {
  for (std::uint32_t f = (1u << e) + 1; f < (2u << e); f += 2)
    if (poly_irreducible2(f)) return f;
  throw NumericError("no irreducible polynomial found");  // unreachable for e <= 16
}

std::uint16_t prime_pow(std::uint32_t a, std::uint64_t k, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return std::uint16_t(r);
}

}  // namespace

FieldPtr FieldSpec::prime_field(std::uint32_t p) {
  if (p > kMaxOrder) throw UsageError("field order exceeds 2^16");
  if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->e_ = 1;
  spec->q_ = p;
  return spec;
}

FieldPtr FieldSpec::binary_field(std::uint32_t e) {
  if (e == 1) return prime_field(2);
  if (e < 1 || e > 16) throw UsageError("binary extension degree must be in [1, 16]");
  std::uint32_t f = default_reduction_poly(e);
  std::vector<std::uint32_t> coeffs(e + 1);
  for (std::uint32_t i = 0; i <= e; ++i) coeffs[i] = f >> i & 1;
  return binary_field(e, coeffs);
}

FieldPtr FieldSpec::binary_field(std::uint32_t e, const std::vector<std::uint32_t>& poly) {
  if (e < 2 || e > 16) throw UsageError("binary extension degree must be in [2, 16]");
  if (poly.size() != e + 1) throw UsageError("reduction polynomial must have degree e");
  std::uint32_t bits = 0;
  for (std::uint32_t i = 0; i <= e; ++i) {
    if (poly[i] > 1) throw UsageError("reduction polynomial coefficients must be 0 or 1");
    bits |= poly[i] << i;
  }
  if ((bits >> e & 1) == 0) throw UsageError("reduction polynomial must be monic of degree e");
  if (!poly_irreducible2(bits)) throw UsageError("reduction polynomial is reducible over GF(2)");

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = 2;
  spec->e_ = e;
  spec->q_ = 1u << e;
  spec->poly_bits_ = bits;

  const std::uint32_t q = spec->q_;
  // Find a generator of the multiplicative group, then tabulate.
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t r = q - 1;
    for (std::uint32_t d = 2; d * d <= r; ++d)
      if (r % d == 0) {
        prime_factors.push_back(d);
        while (r % d == 0) r /= d;
      }
    if (r > 1) prime_factors.push_back(r);
  }
  auto pow_mod_f = [&](std::uint64_t a, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k) {
      if (k & 1) r = poly_mod2(poly_mul2(r, a), bits);
      a = poly_mod2(poly_mul2(a, a), bits);
      k >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    bool primitive = true;
    for (std::uint32_t pf : prime_factors)
      if (pow_mod_f(cand, (q - 1) / pf) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) throw NumericError("no multiplicative generator found");

  spec->exp_.assign(2 * (q - 1), 0);
  spec->log_.assign(q, 0);
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    spec->exp_[i] = std::uint16_t(acc);
    spec->exp_[i + (q - 1)] = std::uint16_t(acc);
    spec->log_[acc] = std::uint16_t(i);
    acc = poly_mod2(poly_mul2(acc, gen), bits);
  }
  return spec;
}

FieldPtr FieldSpec::from_order(std::uint32_t q) {
  if (q < 2 || q > kMaxOrder) throw UsageError("field order must be in [2, 2^16]");
  if (is_prime(q)) return prime_field(q);
  if ((q & (q - 1)) == 0) return binary_field(std::uint32_t(poly_degree(q)));
  // Prime-power check just to produce a precise message.
  for (std::uint32_t p = 3; p * p <= q; p += 2) {
    if (!is_prime(p)) continue;
    std::uint32_t r = q;
    while (r % p == 0) r /= p;
    if (r == 1)
      throw UsageError("odd-characteristic extension fields are not supported (q=" +
                       std::to_string(q) + ")");
  }
  throw UsageError("field order " + std::to_string(q) + " is not a prime power");
}

FieldPtr FieldSpec::parse(std::string_view text) {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> poly;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.rfind("q=", 0) == 0) {
      auto body = token.substr(2);
      auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), q);
      if (ec != std::errc() || p != body.data() + body.size())
        throw UsageError("bad field order in '" + token + "'");
    } else if (token.rfind("poly=", 0) == 0) {
      std::string body = token.substr(5);
      std::istringstream coeffs(body);
      std::string c;
      while (std::getline(coeffs, c, ',')) {
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
        if (ec != std::errc() || p != c.data() + c.size())
          throw UsageError("bad polynomial coefficient '" + c + "'");
        poly.push_back(v);
      }
    } else {
      throw UsageError("unrecognized field spec token '" + token + "'");
    }
  }
  if (q == 0) throw UsageError("field spec must contain q=<order>");
  if (poly.empty()) return from_order(q);
  if ((q & (q - 1)) != 0 || q < 4)
    throw UsageError("poly= is only meaningful for binary extension fields");
  return binary_field(std::uint32_t(poly_degree(q)), poly);
}

std::vector<std::uint32_t> FieldSpec::reduction_polynomial() const {
  std::vector<std::uint32_t> coeffs;
  if (e_ <= 1) return coeffs;
  coeffs.resize(e_ + 1);
  for (std::uint32_t i = 0; i <= e_; ++i) coeffs[i] = poly_bits_ >> i & 1;
  return coeffs;
}

std::string FieldSpec::to_string() const {
  if (e_ == 1) return "GF(" + std::to_string(q_) + ")";
  std::string s = "GF(2^" + std::to_string(e_) + ")";
  return s;
}

std::uint16_t FieldSpec::inv(std::uint16_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (q_ == 2) return 1;
  if (e_ == 1) return prime_pow(a, q_ - 2, q_);
  return exp_[(q_ - 1) - log_[a]];
}

std::uint16_t FieldSpec::pow(std::uint16_t a, std::uint64_t k) const {
  if (e_ == 1) return prime_pow(a, k, q_);
  if (a == 0) return k == 0 ? 1 : 0;
  return exp_[std::uint64_t(log_[a]) * (k % (q_ - 1)) % (q_ - 1)];
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field || !b.field) throw UsageError("field element without a field");
  if (!(*a.field == *b.field)) throw UsageError("field elements from different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field, a.field->add(a.value, b.value)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field, a.field->sub(a.value, b.value)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field, a.field->mul(a.value, b.value)};
}

FieldElement operator-(const FieldElement& a) { return {a.field, a.field->neg(a.value)}; }

FieldElement inverse(const FieldElement& a) { return {a.field, a.field->inv(a.value)}; }

}  // namespace gcodes
