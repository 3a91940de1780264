#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcodes/eigen_sym.hpp"
#include "gcodes/graph_code.hpp"

namespace gcodes {

/// One part playing the role of "part 1" in the four edge-count bounds.
/// `asserted` is true only when the role part needed no padding; bounds on
/// padded parts are recorded as observations, never as requirements.
struct EdgeBoundRecord {
  std::uint32_t part = 0;
  bool asserted = false;
  long long supp_to_supp = 0;         // |E(S_i, union of other S_j)|
  long long supp_to_supp_min = 0;     // >= d*a
  long long supp_to_cosupp = 0;       // |E(S_i, union of other complements)|
  long long supp_to_cosupp_max = 0;   // <= (ell-1)*a*n - d*a
  long long cosupp_to_supp = 0;       // |E(complement of S_i, union of other S_j)|
  long long cosupp_to_supp_max = 0;   // <= (ell-1)*a*n - d*a
  long long cosupp_to_cosupp = 0;     // |E(complement, union of complements)|
  long long cosupp_to_cosupp_min = 0; // >= (ell-1)*m*n - 2(ell-1)*a*n + d*a
  bool ok_supp_to_supp = false;
  bool ok_supp_to_cosupp = false;
  bool ok_cosupp_to_supp = false;
  bool ok_cosupp_to_cosupp = false;

  bool all_hold() const {
    return ok_supp_to_supp && ok_supp_to_cosupp && ok_cosupp_to_supp && ok_cosupp_to_cosupp;
  }
};

struct FinalBoundCheck {
  RationalOrReal rhs;   // m(d - lambda2) / ((ell-1)n - lambda2)
  bool vacuous = false; // denominator not positive
  bool a_ok = false;    // a >= rhs
};

/// Everything counted and checked while replaying the minimum-distance
/// argument on one concrete codeword.
struct SupportCertificate {
  std::uint32_t ell = 0, m = 0, n = 0;
  unsigned inner_distance = 0;
  std::uint32_t a = 0;
  unsigned codeword_weight = 0;
  std::vector<std::vector<std::uint32_t>> supports_true;    // global ids, per part
  std::vector<std::vector<std::uint32_t>> supports_padded;  // each of size a
  std::vector<long long> x;            // m-a on padded supports, -a elsewhere
  long long x_norm_sq = 0;             // = ell*a*m*(m-a), identity checked by tests
  long long quad_form = 0;             // x^T A x, edge-wise, exact integer
  long long quad_lower = 0;            // ell*(m^2*d*a - (ell-1)*m*n*a^2)
  RationalOrReal quad_upper;           // lambda2 * ell * a * m * (m-a)
  bool quad_ge_lower = false;          // observed, not asserted
  bool quad_le_upper = false;          // asserted (Rayleigh route)
  std::vector<EdgeBoundRecord> edge_bounds;
  FinalBoundCheck final_bound;
  bool weight_ge_da = false;

  bool asserted_bounds_hold() const {
    for (const auto& rec : edge_bounds)
      if (rec.asserted && !rec.all_hold()) return false;
    return true;
  }
  bool valid() const {
    return weight_ge_da && quad_le_upper && final_bound.a_ok && asserted_bounds_hold();
  }
};

/// Per-part vertices incident to at least one nonzero edge of the
/// codeword. Rejects the zero codeword.
std::vector<std::vector<std::uint32_t>> extract_supports(const GraphCode& code,
                                                         const GFVector& codeword);

struct PaddedSupports {
  std::vector<std::vector<std::uint32_t>> padded;
  std::uint32_t a = 0;
  std::vector<long long> x;
  long long x_norm_sq = 0;
};

/// Pads every support up to a = max |S_i| with the lowest-index vertices of
/// its part and builds the signed indicator vector x. Parts are the index
/// ranges [i*m, (i+1)*m).
PaddedSupports pad_and_build_x(const std::vector<std::vector<std::uint32_t>>& supports,
                               std::uint32_t m, std::uint32_t ell);

/// x^T A x evaluated edge-wise as the sum of 2 x(u) x(v) over edges.
long long quadratic_form(const PartiteGraph& graph, std::span<const long long> x);

std::vector<EdgeBoundRecord> check_edge_bounds(const GraphCode& code,
                                               const PaddedSupports& padded,
                                               const std::vector<std::vector<std::uint32_t>>& true_supports,
                                               unsigned inner_distance);

/// y^T P y <= theta2 |y|^2 within a relative tolerance. The vector must be
/// orthogonal to the top eigenvector (within tol), else UsageError.
bool rayleigh_check(const RealSymMatrix& p, std::span<const double> y, double tol);

FinalBoundCheck final_bound_check(std::uint32_t a, unsigned d, std::uint32_t m, std::uint32_t n,
                                  std::uint32_t ell, const RationalOrReal& lambda2);

/// Full pipeline on a verified member codeword.
SupportCertificate certify(const GraphCode& code, const GFVector& codeword);

}  // namespace gcodes
