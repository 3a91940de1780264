#include "gcodes/certificate.hpp"

#include <algorithm>
#include <cmath>

namespace gcodes {

namespace {
constexpr double kNumericSlack = 1e-6;
}

std::vector<std::vector<std::uint32_t>> extract_supports(const GraphCode& code,
                                                         const GFVector& codeword) {
  if (codeword.weight() == 0) throw DomainError("supports of the zero codeword");
  if (codeword.size() != code.length()) throw UsageError("codeword length mismatch");
  const PartiteGraph& graph = code.graph();
  std::vector<std::uint8_t> touched(graph.vertex_count(), 0);
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    if (codeword.symbols[i] == 0) continue;
    const Edge& e = graph.edges()[i];
    touched[e.u] = 1;
    touched[e.v] = 1;
  }
  std::vector<std::vector<std::uint32_t>> supports(graph.ell());
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
    if (touched[v]) supports[graph.part_of(v)].push_back(v);
  return supports;
}

PaddedSupports pad_and_build_x(const std::vector<std::vector<std::uint32_t>>& supports,
                               std::uint32_t m, std::uint32_t ell) {
  if (supports.size() != ell) throw UsageError("one support set per part required");
  std::uint32_t a = 0;
  for (const auto& s : supports) a = std::max(a, std::uint32_t(s.size()));
  if (a == 0) throw DomainError("all supports empty");
  if (a > m) throw UsageError("support larger than its part");

  PaddedSupports out;
  out.a = a;
  out.padded.resize(ell);
  out.x.assign(std::size_t(ell) * m, -(long long)(a));
  for (std::uint32_t i = 0; i < ell; ++i) {
    auto& set = out.padded[i];
    set = supports[i];
    std::vector<std::uint8_t> in_set(m, 0);
    for (std::uint32_t v : set) {
      if (v < i * m || v >= (i + 1) * m) throw UsageError("support vertex outside its part");
      in_set[v - i * m] = 1;
    }
    for (std::uint32_t local = 0; local < m && set.size() < a; ++local)
      if (!in_set[local]) {
        in_set[local] = 1;
        set.push_back(i * m + local);
      }
    std::sort(set.begin(), set.end());
    for (std::uint32_t v : set) out.x[v] = (long long)(m) - a;
  }
  out.x_norm_sq = (long long)(ell) * a * m * ((long long)(m) - a);
  return out;
}

long long quadratic_form(const PartiteGraph& graph, std::span<const long long> x) {
  if (x.size() != graph.vertex_count()) throw UsageError("x length does not match vertex count");
  long long total = 0;
  for (const Edge& e : graph.edges()) total += 2 * x[e.u] * x[e.v];
  return total;
}

std::vector<EdgeBoundRecord> check_edge_bounds(
    const GraphCode& code, const PaddedSupports& padded,
    const std::vector<std::vector<std::uint32_t>>& true_supports, unsigned inner_distance) {
  const PartiteGraph& graph = code.graph();
  const long long m = graph.m(), n = graph.n(), ell = graph.ell(), d = inner_distance;
  const long long a = padded.a;

  std::vector<std::vector<std::uint32_t>> complements(graph.ell());
  for (std::uint32_t i = 0; i < graph.ell(); ++i) {
    std::vector<std::uint8_t> in_set(graph.m(), 0);
    for (std::uint32_t v : padded.padded[i]) in_set[v - i * graph.m()] = 1;
    for (std::uint32_t local = 0; local < graph.m(); ++local)
      if (!in_set[local]) complements[i].push_back(i * graph.m() + local);
  }

  std::vector<EdgeBoundRecord> records;
  records.reserve(graph.ell());
  for (std::uint32_t i = 0; i < graph.ell(); ++i) {
    std::vector<std::uint32_t> other_supp, other_cosupp;
    for (std::uint32_t j = 0; j < graph.ell(); ++j) {
      if (j == i) continue;
      other_supp.insert(other_supp.end(), padded.padded[j].begin(), padded.padded[j].end());
      other_cosupp.insert(other_cosupp.end(), complements[j].begin(), complements[j].end());
    }
    EdgeBoundRecord rec;
    rec.part = i;
    rec.asserted = true_supports[i].size() == padded.a;
    rec.supp_to_supp = (long long)(graph.edge_count_between(padded.padded[i], other_supp));
    rec.supp_to_cosupp = (long long)(graph.edge_count_between(padded.padded[i], other_cosupp));
    rec.cosupp_to_supp = (long long)(graph.edge_count_between(complements[i], other_supp));
    rec.cosupp_to_cosupp = (long long)(graph.edge_count_between(complements[i], other_cosupp));
    rec.supp_to_supp_min = d * a;
    rec.supp_to_cosupp_max = (ell - 1) * a * n - d * a;
    rec.cosupp_to_supp_max = (ell - 1) * a * n - d * a;
    rec.cosupp_to_cosupp_min = (ell - 1) * m * n - 2 * (ell - 1) * a * n + d * a;
    rec.ok_supp_to_supp = rec.supp_to_supp >= rec.supp_to_supp_min;
    rec.ok_supp_to_cosupp = rec.supp_to_cosupp <= rec.supp_to_cosupp_max;
    rec.ok_cosupp_to_supp = rec.cosupp_to_supp <= rec.cosupp_to_supp_max;
    rec.ok_cosupp_to_cosupp = rec.cosupp_to_cosupp >= rec.cosupp_to_cosupp_min;
    records.push_back(rec);
  }
  return records;
}

bool rayleigh_check(const RealSymMatrix& p, std::span<const double> y, double tol) {
  if (y.size() != p.order()) throw UsageError("vector length does not match matrix order");
  if (tol <= 0) throw UsageError("tolerance must be positive");
  const auto eig = symmetric_eigensystem(p);
  if (eig.values.empty()) return true;

  double norm_sq = 0.0;
  for (double v : y) norm_sq += v * v;
  if (norm_sq == 0.0) return true;

  double dot = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * eig.vectors[0][i];
  if (std::abs(dot) > tol * std::sqrt(norm_sq) * (1.0 + std::abs(eig.values[0])))
    throw UsageError("vector is not orthogonal to the top eigenvector");

  std::vector<double> yv(y.begin(), y.end());
  const auto py = p.apply(yv);
  double quad = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) quad += y[i] * py[i];

  const double theta2 = eig.values.size() > 1 ? eig.values[1] : eig.values[0];
  return quad <= theta2 * norm_sq + tol * (1.0 + std::abs(theta2)) * norm_sq;
}

FinalBoundCheck final_bound_check(std::uint32_t a, unsigned d, std::uint32_t m, std::uint32_t n,
                                  std::uint32_t ell, const RationalOrReal& lambda2) {
  FinalBoundCheck out;
  const long long degree = (long long)(ell - 1) * n;
  if (lambda2.is_exact()) {
    const Rational denom = Rational(degree) - *lambda2.exact;
    if (!(Rational(0) < denom)) {
      out.vacuous = true;
      out.a_ok = true;
      return out;
    }
    const Rational rhs = (Rational(m) * (Rational(d) - *lambda2.exact)) / denom;
    out.rhs = RationalOrReal::from_exact(rhs);
    out.a_ok = !(Rational((long long)(a)) < rhs);
    return out;
  }
  const double denom = double(degree) - lambda2.value;
  if (denom <= 0) {
    out.vacuous = true;
    out.a_ok = true;
    return out;
  }
  const double rhs = double(m) * (double(d) - lambda2.value) / denom;
  out.rhs = RationalOrReal::from_double(rhs);
  out.a_ok = double(a) + kNumericSlack >= rhs;
  return out;
}

SupportCertificate certify(const GraphCode& code, const GFVector& codeword) {
  const auto membership = code.verify_membership(codeword);
  if (!membership.ok)
    throw UsageError("assignment is not a codeword (" +
                     std::to_string(membership.failed_vertices.size()) +
                     " vertices fail their local check)");
  const auto bound = code.spectral_bound();
  if (!bound.applicable && bound.reason == "inner codes have different parameters")
    throw UsageError("certificate requires identical inner code parameters");

  const PartiteGraph& graph = code.graph();
  SupportCertificate cert;
  cert.ell = graph.ell();
  cert.m = graph.m();
  cert.n = graph.n();
  cert.inner_distance = code.inner_codes().front().min_distance();
  cert.codeword_weight = codeword.weight();

  cert.supports_true = extract_supports(code, codeword);
  auto padded = pad_and_build_x(cert.supports_true, cert.m, cert.ell);
  cert.a = padded.a;
  cert.supports_padded = padded.padded;
  cert.x = padded.x;
  cert.x_norm_sq = padded.x_norm_sq;

  cert.quad_form = quadratic_form(graph, cert.x);
  const long long m = cert.m, n = cert.n, ell = cert.ell, d = cert.inner_distance,
                  a = cert.a;
  cert.quad_lower = ell * (m * m * d * a - (ell - 1) * m * n * a * a);
  const auto lambda = graph.lambda2();
  const long long norm_factor = ell * a * m * (m - a);
  if (lambda.is_exact()) {
    const Rational upper = *lambda.exact * Rational(norm_factor);
    cert.quad_upper = RationalOrReal::from_exact(upper);
    cert.quad_le_upper = !(upper < Rational(cert.quad_form));
  } else {
    const double upper = lambda.value * double(norm_factor);
    cert.quad_upper = RationalOrReal::from_double(upper);
    cert.quad_le_upper = double(cert.quad_form) <= upper + kNumericSlack;
  }
  cert.quad_ge_lower = cert.quad_form >= cert.quad_lower;

  cert.edge_bounds = check_edge_bounds(code, padded, cert.supports_true, cert.inner_distance);
  cert.final_bound = final_bound_check(cert.a, cert.inner_distance, cert.m, cert.n, cert.ell, lambda);
  cert.weight_ge_da = cert.codeword_weight >= (unsigned long long)(d) * a;
  return cert;
}

}  // namespace gcodes
