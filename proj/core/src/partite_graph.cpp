#include "gcodes/partite_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gcodes/errors.hpp"

namespace gcodes {

std::strong_ordering edge_order_compare(const Edge& a, const Edge& b) {
  const std::uint32_t amax = std::max(a.u, a.v), amin = std::min(a.u, a.v);
  const std::uint32_t bmax = std::max(b.u, b.v), bmin = std::min(b.u, b.v);
  if (auto c = amax <=> bmax; c != 0) return c;
  return amin <=> bmin;
}

PartiteGraph::PartiteGraph(std::vector<std::uint32_t> part_sizes, std::vector<Edge> edges,
                           EdgeOrderMode order)
    : part_sizes_(std::move(part_sizes)), edges_(std::move(edges)), order_(order) {
  if (part_sizes_.size() < 2) throw UsageError("a partite graph needs at least 2 parts");
  offsets_.resize(part_sizes_.size() + 1, 0);
  for (std::size_t i = 0; i < part_sizes_.size(); ++i) {
    if (part_sizes_[i] == 0) throw UsageError("empty part");
    offsets_[i + 1] = offsets_[i] + part_sizes_[i];
  }
  vertex_count_ = offsets_.back();

  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= vertex_count_) throw UsageError("edge endpoint out of range");
    if (e.u == e.v) throw UsageError("self-loop");
    if (part_of(e.u) == part_of(e.v))
      throw UsageError("edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                       "} joins two vertices of the same part");
    if (!seen.insert({e.u, e.v}).second)
      throw UsageError("duplicate edge {" + std::to_string(e.u + 1) + "," +
                       std::to_string(e.v + 1) + "}");
  }
  if (order_ == EdgeOrderMode::Canonical) {
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return edge_order_compare(a, b) == std::strong_ordering::less;
    });
  }

  incidence_.resize(vertex_count_);
  valency_table_.assign(vertex_count_, std::vector<std::uint32_t>(part_sizes_.size(), 0));
  for (std::uint32_t idx = 0; idx < edges_.size(); ++idx) {
    const Edge& e = edges_[idx];
    incidence_[e.u].push_back({idx, e.v});
    incidence_[e.v].push_back({idx, e.u});
    valency_table_[e.u][part_of(e.v)]++;
    valency_table_[e.v][part_of(e.u)]++;
  }
  for (auto& inc : incidence_)
    std::sort(inc.begin(), inc.end(),
              [](const IncidentEdge& a, const IncidentEdge& b) { return a.edge_index < b.edge_index; });

  // Cross valency if constant over all vertex/foreign-part pairs.
  cross_valency_ = 0;
  bool regular = true;
  bool first = true;
  for (std::uint32_t v = 0; v < vertex_count_ && regular; ++v)
    for (std::uint32_t j = 0; j < part_sizes_.size() && regular; ++j) {
      if (j == part_of(v)) continue;
      if (first) {
        cross_valency_ = valency_table_[v][j];
        first = false;
      } else if (valency_table_[v][j] != cross_valency_) {
        regular = false;
      }
    }
  if (!regular) cross_valency_ = 0;
}

PartiteGraph PartiteGraph::complete_multipartite(std::uint32_t ell, std::uint32_t m) {
  if (ell < 2) throw UsageError("complete multipartite graph needs ell >= 2");
  if (m < 1) throw UsageError("complete multipartite graph needs m >= 1");
  std::vector<Edge> edges;
  edges.reserve(std::size_t(ell) * (ell - 1) * m * m / 2);
  for (std::uint32_t u = 0; u < ell * m; ++u)
    for (std::uint32_t v = u + 1; v < ell * m; ++v)
      if (u / m != v / m) edges.push_back({u, v});
  return PartiteGraph(std::vector<std::uint32_t>(ell, m), std::move(edges),
                      EdgeOrderMode::Canonical);
}

std::uint32_t PartiteGraph::part_of(std::uint32_t v) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), v);
  return std::uint32_t(it - offsets_.begin()) - 1;
}

std::span<const IncidentEdge> PartiteGraph::incident(std::uint32_t v) const {
  return incidence_[v];
}

ValidationReport PartiteGraph::validate_balanced() const {
  ValidationReport report;
  const std::uint32_t m0 = part_sizes_[0];
  for (std::uint32_t i = 0; i < ell(); ++i)
    if (part_sizes_[i] != m0)
      report.violations.push_back({BalanceViolation::Kind::PartSize, i, 0,
                                   "part " + std::to_string(i + 1) + " has " +
                                       std::to_string(part_sizes_[i]) + " vertices, expected " +
                                       std::to_string(m0)});
  // Condition (ii): constant cross-part valency, measured against the
  // modal observed value so isolated defects are the ones flagged.
  std::map<std::uint32_t, std::uint32_t> freq;
  for (std::uint32_t v = 0; v < vertex_count_; ++v)
    for (std::uint32_t j = 0; j < ell(); ++j)
      if (j != part_of(v)) freq[valency_table_[v][j]]++;
  std::uint32_t expected = 0, expected_count = 0;
  for (auto [value, count] : freq)
    if (count > expected_count) {
      expected = value;
      expected_count = count;
    }
  for (std::uint32_t v = 0; v < vertex_count_; ++v)
    for (std::uint32_t j = 0; j < ell(); ++j) {
      if (j == part_of(v)) continue;
      if (valency_table_[v][j] != expected)
        report.violations.push_back(
            {BalanceViolation::Kind::CrossValency, j, v,
             "vertex " + std::to_string(v + 1) + " has " + std::to_string(valency_table_[v][j]) +
                 " neighbors in part " + std::to_string(j + 1) + ", expected " +
                 std::to_string(expected)});
    }
  return report;
}

bool PartiteGraph::is_complete_multipartite() const {
  const std::uint32_t m0 = part_sizes_[0];
  for (std::uint32_t s : part_sizes_)
    if (s != m0) return false;
  const std::uint64_t expected =
      std::uint64_t(ell()) * (ell() - 1) * m0 * m0 / 2;
  if (edges_.size() != expected) return false;
  return cross_valency_ == m0;
}

RealSymMatrix PartiteGraph::adjacency_matrix() const {
  RealSymMatrix a(vertex_count_);
  for (const Edge& e : edges_) a.set(e.u, e.v, 1.0);
  return a;
}

std::vector<double> PartiteGraph::spectrum() const {
  if (is_complete_multipartite()) {
    const double m0 = m();
    std::vector<double> values;
    values.reserve(vertex_count_);
    values.push_back(double(ell() - 1) * m0);
    for (std::uint32_t i = 0; i < ell() * (m() - 1); ++i) values.push_back(0.0);
    for (std::uint32_t i = 0; i + 1 < ell(); ++i) values.push_back(-m0);
    return values;
  }
  return symmetric_eigenvalues(adjacency_matrix());
}

RationalOrReal PartiteGraph::lambda2() const {
  return lambda2_.get_or_compute([&]() -> RationalOrReal {
    if (is_complete_multipartite()) {
      // Spectrum {(ell-1)m, 0^(ell(m-1)), (-m)^(ell-1)}; the second entry
      // of the descending list is 0 unless m = 1.
      if (m() >= 2) return RationalOrReal::from_exact(Rational(0));
      return RationalOrReal::from_exact(Rational(-(long long)(m())));
    }
    const auto values = symmetric_eigenvalues(adjacency_matrix());
    return RationalOrReal::from_double(values.at(1));
  });
}

std::uint64_t PartiteGraph::edge_count_between(std::span<const std::uint32_t> first,
                                               std::span<const std::uint32_t> second) const {
  std::vector<std::uint8_t> in_first(vertex_count_, 0), in_second(vertex_count_, 0);
  for (std::uint32_t v : first) {
    if (v >= vertex_count_) throw UsageError("vertex out of range");
    in_first[v] = 1;
  }
  for (std::uint32_t v : second) {
    if (v >= vertex_count_) throw UsageError("vertex out of range");
    if (in_first[v]) throw UsageError("edge_count_between requires disjoint vertex sets");
    in_second[v] = 1;
  }
  std::uint64_t count = 0;
  for (const Edge& e : edges_)
    count += (in_first[e.u] && in_second[e.v]) || (in_first[e.v] && in_second[e.u]);
  return count;
}

}  // namespace gcodes
