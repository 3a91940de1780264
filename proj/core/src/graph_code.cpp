#include "gcodes/graph_code.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace gcodes {

std::string BoundValue::to_string() const {
  if (!applicable) return "not applicable (" + reason + ")";
  if (exact) return exact->to_string();
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

GraphCode::GraphCode(std::shared_ptr<const PartiteGraph> graph, std::vector<LinearCode> inner,
                     GFMatrix parity)
    : graph_(std::move(graph)), inner_(std::move(inner)), global_parity_(std::move(parity)) {}

GraphCode GraphCode::build(std::shared_ptr<const PartiteGraph> graph,
                           std::vector<LinearCode> inner) {
  if (!graph) throw UsageError("graph code requires a graph");
  const auto report = graph->validate_balanced();
  if (!report.valid())
    throw UsageError("graph is not balanced: " + report.violations.front().detail);
  const std::uint32_t ell = graph->ell();
  if (graph->n() == 0) throw UsageError("graph has no cross edges");

  if (inner.size() == 1)
    inner.resize(ell, inner.front());
  else if (inner.size() != ell)
    throw UsageError("need one inner code or exactly one per part");

  const std::size_t local_len = std::size_t(ell - 1) * graph->n();
  const FieldPtr& field = inner.front().field();
  std::size_t parity_rows = 0;
  for (const auto& code : inner) {
    if (!(*code.field() == *field)) throw UsageError("inner codes use different fields");
    if (code.length() != local_len)
      throw UsageError("inner code length " + std::to_string(code.length()) +
                       " does not match (ell-1)n = " + std::to_string(local_len));
    parity_rows += code.parity_check().rows() * graph->m();
  }

  const std::size_t n_edges = graph->edges().size();
  GFMatrix parity(field, parity_rows, n_edges);
  std::size_t out_row = 0;
  for (std::uint32_t part = 0; part < ell; ++part) {
    const GFMatrix& local = inner[part].parity_check();
    for (std::uint32_t off = 0; off < graph->m(); ++off) {
      const std::uint32_t v = graph->part_offset(part) + off;
      const auto inc = graph->incident(v);
      for (std::size_t r = 0; r < local.rows(); ++r) {
        for (std::size_t t = 0; t < local.cols(); ++t) {
          const std::uint16_t value = local.get(r, t);
          if (value) parity.set(out_row, inc[t].edge_index, value);
        }
        ++out_row;
      }
    }
  }
  return GraphCode(std::move(graph), std::move(inner), std::move(parity));
}

std::size_t GraphCode::dimension() const {
  return dimension_.get_or_compute([&] {
    const std::size_t direct = rank(global_parity_);
    std::vector<std::size_t> perm(length());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ length());
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t shuffled = rank(global_parity_.permute_columns(perm));
    if (direct != shuffled)
      throw NumericError("rank cross-validation mismatch: " + std::to_string(direct) + " vs " +
                         std::to_string(shuffled));
    return length() - direct;
  });
}

const LinearCode& GraphCode::as_linear_code() const {
  return flat_code_.get_or_compute([&] {
    auto basis = kernel_basis(global_parity_);
    if (basis.empty()) throw DomainError("graph code is the zero code");
    return LinearCode::from_generator(GFMatrix::from_rows(field(), basis));
  });
}

unsigned GraphCode::minimum_distance(const DistanceOptions& options) const {
  return distance_.get_or_compute([&] { return as_linear_code().min_distance(options); });
}

std::optional<unsigned> GraphCode::cached_minimum_distance() const { return distance_.peek(); }

BoundValue GraphCode::spectral_bound() const {
  return bound_.get_or_compute([&]() -> BoundValue {
    const auto& first = inner_.front();
    for (const auto& code : inner_) {
      if (code.length() != first.length() || code.dimension() != first.dimension()) {
        BoundValue b;
        b.reason = "inner codes have different parameters";
        return b;
      }
    }
    const unsigned d = first.min_distance();
    for (const auto& code : inner_) {
      if (code.min_distance() != d) {
        BoundValue b;
        b.reason = "inner codes have different parameters";
        return b;
      }
    }

    const long long m = graph_->m();
    const long long degree = (long long)(graph_->ell() - 1) * graph_->n();
    const auto lambda = graph_->lambda2();

    BoundValue b;
    if (lambda.is_exact()) {
      const Rational denom = Rational(degree) - *lambda.exact;
      if (!(Rational(0) < denom)) {
        b.reason = "second eigenvalue reaches the regularity degree";
        return b;
      }
      Rational bound = (Rational(d) * Rational(m) * (Rational(d) - *lambda.exact)) / denom;
      if (graph_->ell() == 2) {
        // Bipartite special case: the valency-based form must coincide.
        const Rational bipartite =
            (Rational(d) * Rational(m) * (Rational(d) - *lambda.exact)) /
            (Rational(graph_->n()) - *lambda.exact);
        if (!(bipartite == bound)) throw NumericError("bipartite bound specialization mismatch");
      }
      b.applicable = true;
      b.exact = bound;
      b.value = bound.to_double();
      return b;
    }
    const double denom = double(degree) - lambda.value;
    if (denom <= 0) {
      b.reason = "second eigenvalue reaches the regularity degree";
      return b;
    }
    b.applicable = true;
    b.value = double(d) * double(m) * (double(d) - lambda.value) / denom;
    return b;
  });
}

std::vector<std::uint16_t> GraphCode::local_view(const GFVector& assignment,
                                                 std::uint32_t v) const {
  if (assignment.size() != length()) throw UsageError("assignment length mismatch");
  if (v >= graph_->vertex_count()) throw UsageError("vertex out of range");
  const auto inc = graph_->incident(v);
  std::vector<std::uint16_t> view(inc.size());
  for (std::size_t t = 0; t < inc.size(); ++t) view[t] = assignment.symbols[inc[t].edge_index];
  return view;
}

MembershipResult GraphCode::verify_membership(const GFVector& assignment) const {
  if (!(*assignment.field == *field())) throw UsageError("assignment from a different field");
  if (assignment.size() != length()) throw UsageError("assignment length mismatch");
  MembershipResult result;
  for (std::uint32_t v = 0; v < graph_->vertex_count(); ++v) {
    const auto view = local_view(assignment, v);
    if (!inner_[graph_->part_of(v)].is_codeword(view)) result.failed_vertices.push_back(v);
  }
  result.ok = result.failed_vertices.empty();
  return result;
}

GFVector GraphCode::zero_assignment() const {
  return {field(), std::vector<std::uint16_t>(length(), 0)};
}

std::optional<std::uint32_t> find_edge_index(const PartiteGraph& graph, std::uint32_t u,
                                             std::uint32_t v) {
  if (u > v) std::swap(u, v);
  const auto& edges = graph.edges();
  for (std::uint32_t i = 0; i < edges.size(); ++i)
    if (edges[i].u == u && edges[i].v == v) return i;
  return std::nullopt;
}

// --- Worked instances ------------------------------------------------

GraphCode fixture_k777() {
  auto graph = std::make_shared<const PartiteGraph>(PartiteGraph::complete_multipartite(3, 7));
  const LinearCode hamming = LinearCode::hamming_binary(3);
  return GraphCode::build(std::move(graph), {hamming.direct_sum(hamming)});
}

GraphCode fixture_k333() {
  auto graph = std::make_shared<const PartiteGraph>(PartiteGraph::complete_multipartite(3, 3));
  return GraphCode::build(std::move(graph), {LinearCode::even_weight(6)});
}

namespace {

void set_edge(GFVector& assignment, const PartiteGraph& graph, std::uint32_t u_1based,
              std::uint32_t v_1based, std::uint16_t value) {
  const auto idx = find_edge_index(graph, u_1based - 1, v_1based - 1);
  if (!idx) throw UsageError("no such edge");
  assignment.symbols[*idx] = value;
}

}  // namespace

GFVector k777_min_weight_witness(const GraphCode& code) {
  // First weight-3 codeword of the [7,4,3] Hamming inner half, scanned in
  // message order; placed as symbol vectors on parts 1 and 2.
  const LinearCode hamming = LinearCode::hamming_binary(3);
  std::vector<std::uint16_t> word;
  for (std::uint16_t msg = 1; msg < 16 && word.empty(); ++msg) {
    std::vector<std::uint16_t> message(4);
    for (unsigned i = 0; i < 4; ++i) message[i] = msg >> i & 1;
    auto cw = hamming.encode(message);
    unsigned w = 0;
    for (auto s : cw) w += s != 0;
    if (w == 3) word = cw;
  }
  GFVector assignment = code.zero_assignment();
  const auto& graph = code.graph();
  for (std::uint32_t i = 0; i < 7; ++i)
    for (std::uint32_t j = 0; j < 7; ++j)
      if (word[i] && word[j]) set_edge(assignment, graph, i + 1, j + 8, 1);
  return assignment;
}

GFVector k333_triangle_witness(const GraphCode& code) {
  GFVector assignment = code.zero_assignment();
  const auto& graph = code.graph();
  set_edge(assignment, graph, 1, 4, 1);
  set_edge(assignment, graph, 4, 7, 1);
  set_edge(assignment, graph, 1, 7, 1);
  return assignment;
}

GFVector k333_even_assignment(const GraphCode& code) {
  static constexpr std::pair<std::uint32_t, std::uint32_t> kOnes[] = {
      {1, 4}, {1, 9}, {2, 5}, {2, 6}, {2, 7}, {2, 9}, {3, 5}, {3, 7}, {3, 8},
      {3, 9}, {4, 7}, {4, 8}, {4, 9}, {5, 8}, {5, 9}, {6, 7}, {6, 8}, {6, 9},
  };
  GFVector assignment = code.zero_assignment();
  const auto& graph = code.graph();
  for (auto [u, v] : kOnes) set_edge(assignment, graph, u, v, 1);
  return assignment;
}

Fixture make_fixture(const std::string& name) {
  if (name == "k777") {
    return Fixture{
        "k777",
        fixture_k777(),
        {{"N", "147"}, {"K", "48"}, {"D", "9"}, {"lambda2", "0"}, {"bound", "9/2"}},
    };
  }
  if (name == "k333") {
    return Fixture{
        "k333",
        fixture_k333(),
        {{"N", "27"}, {"D", "3"}, {"lambda2", "0"}, {"bound", "2"}},
    };
  }
  throw UsageError("unknown example '" + name + "' (expected k777 or k333)");
}

}  // namespace gcodes
