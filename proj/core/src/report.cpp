#include "gcodes/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace gcodes {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

std::string scalar_to_string(const RationalOrReal& v) {
  if (v.is_exact()) return v.exact->to_string();
  return format_double(v.value);
}

ordered_json scalar_to_json(const RationalOrReal& v) {
  if (v.is_exact()) {
    if (v.exact->is_integer()) return v.exact->num();
    return v.exact->to_string();
  }
  return v.value;
}

ordered_json bound_to_json(const BoundValue& bound) {
  if (!bound.applicable) return nullptr;
  if (bound.exact) {
    if (bound.exact->is_integer()) return bound.exact->num();
    return bound.exact->to_string();
  }
  return bound.value;
}

std::string engine_name(const LinearCode& flat, const DistanceOptions& options) {
  switch (options.engine) {
    case DistanceEngine::Exhaustive:
      return "exhaustive";
    case DistanceEngine::BrouwerZimmermann:
      return "information-set";
    case DistanceEngine::Auto:
      break;
  }
  double bits = double(flat.dimension()) * std::log2(double(flat.field()->order()));
  return bits <= 22.0 ? "exhaustive" : "information-set";
}

}  // namespace

const char* order_convention_name(EdgeOrderMode mode) {
  return mode == EdgeOrderMode::Canonical ? "canonical-maxmin-ascending" : "file-order";
}

ParameterReport make_parameter_report(
    const GraphCode& code, bool with_distance, const DistanceOptions& distance_options,
    const std::vector<std::pair<std::string, std::string>>& claims) {
  ParameterReport rep;
  const PartiteGraph& graph = code.graph();
  rep.q = code.field()->order();
  rep.ell = graph.ell();
  rep.m = graph.m();
  rep.n = graph.n();
  rep.N = code.length();
  rep.K = code.dimension();
  rep.lambda2 = graph.lambda2();
  rep.bound = code.spectral_bound();
  rep.order_convention = order_convention_name(graph.order_mode());
  if (with_distance && rep.K > 0) {
    rep.D = code.minimum_distance(distance_options);
    rep.engine = engine_name(code.as_linear_code(), distance_options);
  }
  if (rep.D && rep.bound.applicable) {
    if (rep.bound.exact)
      rep.bound_satisfied = !(Rational((long long)(*rep.D)) < *rep.bound.exact);
    else
      rep.bound_satisfied = double(*rep.D) + 1e-9 >= rep.bound.value;
  }

  for (const auto& [name, claimed] : claims) {
    ClaimCheck check;
    check.name = name;
    check.claimed = claimed;
    if (name == "N")
      check.computed = std::to_string(rep.N);
    else if (name == "K")
      check.computed = std::to_string(rep.K);
    else if (name == "D")
      check.computed = rep.D ? std::to_string(*rep.D) : "(not computed)";
    else if (name == "lambda2")
      check.computed = scalar_to_string(rep.lambda2);
    else if (name == "bound")
      check.computed = rep.bound.to_string();
    else
      check.computed = "(unknown claim)";
    check.match = check.computed == check.claimed;
    rep.claims.push_back(std::move(check));
  }
  return rep;
}

std::string to_json(const ParameterReport& rep) {
  ordered_json j;
  j["q"] = rep.q;
  j["ell"] = rep.ell;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["N"] = rep.N;
  j["K"] = rep.K;
  if (rep.D)
    j["D"] = *rep.D;
  else if (rep.D_bracket)
    j["D_bracket"] = {rep.D_bracket->first, rep.D_bracket->second};
  j["lambda2"] = scalar_to_json(rep.lambda2);
  j["bound"] = bound_to_json(rep.bound);
  j["bound_applicable"] = rep.bound.applicable;
  if (!rep.bound.applicable) j["bound_reason"] = rep.bound.reason;
  if (rep.bound_satisfied)
    j["bound_satisfied"] = *rep.bound_satisfied;
  else
    j["bound_satisfied"] = nullptr;
  j["order_convention"] = rep.order_convention;
  j["engine"] = rep.engine;
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.claims)
    checks.push_back({{"name", c.name}, {"claimed", c.claimed}, {"computed", c.computed},
                      {"match", c.match}});
  j["paper_claim_checks"] = checks;
  return j.dump(2) + "\n";
}

std::string to_text(const ParameterReport& rep) {
  std::ostringstream out;
  out << "code over GF(" << rep.q << ") on " << rep.ell << "-partite graph, m=" << rep.m
      << ", n=" << rep.n << "\n";
  out << "N = " << rep.N << "\n";
  out << "K = " << rep.K << "\n";
  if (rep.D)
    out << "D = " << *rep.D << "  (engine: " << rep.engine << ")\n";
  else if (rep.D_bracket)
    out << "D in [" << rep.D_bracket->first << ", " << rep.D_bracket->second << "]\n";
  out << "lambda2 = " << scalar_to_string(rep.lambda2) << "\n";
  out << "bound = " << rep.bound.to_string() << "\n";
  if (rep.bound_satisfied)
    out << "bound satisfied: " << (*rep.bound_satisfied ? "yes" : "NO") << "\n";
  out << "edge order: " << rep.order_convention << "\n";
  for (const auto& c : rep.claims)
    out << "check " << c.name << ": claimed " << c.claimed << ", computed " << c.computed << " ["
        << (c.match ? "match" : "MISMATCH") << "]\n";
  return out.str();
}

namespace {

ordered_json supports_to_json(const std::vector<std::vector<std::uint32_t>>& supports) {
  ordered_json out = ordered_json::array();
  for (const auto& part : supports) {
    ordered_json ids = ordered_json::array();
    for (std::uint32_t v : part) ids.push_back(v + 1);  // 1-based labels in reports
    out.push_back(ids);
  }
  return out;
}

}  // namespace

std::string certificate_to_json(const SupportCertificate& cert,
                                const std::string& order_convention) {
  ordered_json j;
  j["ell"] = cert.ell;
  j["m"] = cert.m;
  j["n"] = cert.n;
  j["inner_distance"] = cert.inner_distance;
  j["codeword_weight"] = cert.codeword_weight;
  j["a"] = cert.a;
  j["supports_true"] = supports_to_json(cert.supports_true);
  j["supports_padded"] = supports_to_json(cert.supports_padded);
  j["x"] = cert.x;
  j["x_norm_sq"] = cert.x_norm_sq;
  j["quad_form"] = cert.quad_form;
  j["quad_lower"] = cert.quad_lower;
  j["quad_upper"] = scalar_to_json(cert.quad_upper);
  j["quad_ge_lower"] = cert.quad_ge_lower;
  j["quad_le_upper"] = cert.quad_le_upper;
  ordered_json bounds = ordered_json::array();
  for (const auto& rec : cert.edge_bounds) {
    ordered_json b;
    b["part"] = rec.part + 1;
    b["asserted"] = rec.asserted;
    b["supp_to_supp"] = {{"value", rec.supp_to_supp}, {"min", rec.supp_to_supp_min},
                         {"ok", rec.ok_supp_to_supp}};
    b["supp_to_cosupp"] = {{"value", rec.supp_to_cosupp}, {"max", rec.supp_to_cosupp_max},
                           {"ok", rec.ok_supp_to_cosupp}};
    b["cosupp_to_supp"] = {{"value", rec.cosupp_to_supp}, {"max", rec.cosupp_to_supp_max},
                           {"ok", rec.ok_cosupp_to_supp}};
    b["cosupp_to_cosupp"] = {{"value", rec.cosupp_to_cosupp}, {"min", rec.cosupp_to_cosupp_min},
                             {"ok", rec.ok_cosupp_to_cosupp}};
    bounds.push_back(b);
  }
  j["edge_bounds"] = bounds;
  ordered_json fb;
  fb["rhs"] = cert.final_bound.vacuous ? ordered_json(nullptr)
                                       : scalar_to_json(cert.final_bound.rhs);
  fb["vacuous"] = cert.final_bound.vacuous;
  fb["a_ok"] = cert.final_bound.a_ok;
  j["final_bound"] = fb;
  j["weight_ge_da"] = cert.weight_ge_da;
  j["asserted_bounds_hold"] = cert.asserted_bounds_hold();
  j["valid"] = cert.valid();
  j["order_convention"] = order_convention;
  return j.dump(2) + "\n";
}

std::string certificate_to_text(const SupportCertificate& cert) {
  std::ostringstream out;
  out << "certificate: weight " << cert.codeword_weight << ", a = " << cert.a << ", d = "
      << cert.inner_distance << "\n";
  out << "supports (true):";
  for (std::uint32_t i = 0; i < cert.supports_true.size(); ++i) {
    out << " |S" << i + 1 << "|=" << cert.supports_true[i].size();
  }
  out << "\n";
  out << "x^T A x = " << cert.quad_form << "  in [" << cert.quad_lower << ", "
      << scalar_to_string(cert.quad_upper) << "]"
      << (cert.quad_le_upper ? "" : "  UPPER VIOLATED") << "\n";
  for (const auto& rec : cert.edge_bounds) {
    out << "part " << rec.part + 1 << (rec.asserted ? " (asserted)" : " (observed)") << ": "
        << rec.supp_to_supp << ">=" << rec.supp_to_supp_min << (rec.ok_supp_to_supp ? "" : " FAIL")
        << ", " << rec.supp_to_cosupp << "<=" << rec.supp_to_cosupp_max
        << (rec.ok_supp_to_cosupp ? "" : " FAIL") << ", " << rec.cosupp_to_supp << "<="
        << rec.cosupp_to_supp_max << (rec.ok_cosupp_to_supp ? "" : " FAIL") << ", "
        << rec.cosupp_to_cosupp << ">=" << rec.cosupp_to_cosupp_min
        << (rec.ok_cosupp_to_cosupp ? "" : " FAIL") << "\n";
  }
  out << "final bound: a = " << cert.a << " >= "
      << (cert.final_bound.vacuous ? std::string("(vacuous)")
                                   : scalar_to_string(cert.final_bound.rhs))
      << " [" << (cert.final_bound.a_ok ? "ok" : "FAIL") << "]\n";
  out << "weight >= d*a: " << (cert.weight_ge_da ? "ok" : "FAIL") << "\n";
  out << "certificate " << (cert.valid() ? "VALID" : "INVALID") << "\n";
  return out.str();
}

std::string membership_to_json(const MembershipResult& result, unsigned weight,
                               const std::string& order_convention) {
  ordered_json j;
  j["member"] = result.ok;
  j["weight"] = weight;
  ordered_json failed = ordered_json::array();
  for (std::uint32_t v : result.failed_vertices) failed.push_back(v + 1);
  j["failed_vertices"] = failed;
  j["order_convention"] = order_convention;
  return j.dump(2) + "\n";
}

std::string membership_to_text(const MembershipResult& result, unsigned weight) {
  std::ostringstream out;
  out << "member: " << (result.ok ? "yes" : "no") << "\n";
  out << "weight: " << weight << "\n";
  if (!result.ok) {
    out << "failing vertices:";
    for (std::uint32_t v : result.failed_vertices) out << " v" << v + 1;
    out << "\n";
  }
  return out.str();
}

}  // namespace gcodes
