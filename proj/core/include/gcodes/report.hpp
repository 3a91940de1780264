#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcodes/certificate.hpp"
#include "gcodes/graph_code.hpp"

namespace gcodes {

/// Everything a parameter report carries; rendered to JSON or text.
struct ParameterReport {
  std::uint32_t q = 0, ell = 0, m = 0, n = 0;
  std::size_t N = 0;
  std::size_t K = 0;
  std::optional<unsigned> D;
  std::optional<std::pair<unsigned, unsigned>> D_bracket;  // when D is not exact
  RationalOrReal lambda2;
  BoundValue bound;
  std::optional<bool> bound_satisfied;
  std::string order_convention;
  std::string engine = "none";
  std::vector<ClaimCheck> claims;

  bool claims_ok() const {
    for (const auto& c : claims)
      if (!c.match) return false;
    return true;
  }
};

/// Assembles the report values. Computes N, K, lambda2 and the bound
/// always; the exact distance only when `with_distance` is set.
ParameterReport make_parameter_report(
    const GraphCode& code, bool with_distance, const DistanceOptions& distance_options = {},
    const std::vector<std::pair<std::string, std::string>>& claims = {});

std::string to_json(const ParameterReport& report);
std::string to_text(const ParameterReport& report);

std::string certificate_to_json(const SupportCertificate& cert,
                                const std::string& order_convention);
std::string certificate_to_text(const SupportCertificate& cert);

std::string membership_to_json(const MembershipResult& result, unsigned weight,
                               const std::string& order_convention);
std::string membership_to_text(const MembershipResult& result, unsigned weight);

const char* order_convention_name(EdgeOrderMode mode);

}  // namespace gcodes
