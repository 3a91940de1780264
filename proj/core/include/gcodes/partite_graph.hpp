#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gcodes/cache.hpp"
#include "gcodes/eigen_sym.hpp"
#include "gcodes/rational.hpp"

namespace gcodes {

/// Undirected cross-part edge; u < v as global 0-based vertex indices.
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  bool operator==(const Edge&) const = default;
};

/// The canonical total order on edges. An edge precedes another when its
/// larger endpoint has the smaller label, ties broken the same way on the
/// smaller endpoint. `less` means "precedes"; the coordinate order of edge
/// assignments is ascending in this order, so coordinate 1 holds the
/// first edge.
std::strong_ordering edge_order_compare(const Edge& a, const Edge& b);

enum class EdgeOrderMode { Canonical, FileOrder };

struct IncidentEdge {
  std::uint32_t edge_index = 0;  // position in the active edge order
  std::uint32_t neighbor = 0;
};

struct BalanceViolation {
  enum class Kind { PartSize, CrossValency };
  Kind kind;
  std::uint32_t part = 0;    // offending part (PartSize) or target part (CrossValency)
  std::uint32_t vertex = 0;  // offending vertex, CrossValency only (global, 0-based)
  std::string detail;
};

struct ValidationReport {
  std::vector<BalanceViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// An ell-partite graph: parts hold consecutive global vertex indices
/// (part i covers [offset_i, offset_i + size_i)), no edge joins two
/// vertices of the same part. Balance (equal part sizes m and constant
/// cross-part valency n) is validated as data, not enforced at
/// construction. Immutable and safe to share once built.
class PartiteGraph {
 public:
  PartiteGraph(std::vector<std::uint32_t> part_sizes, std::vector<Edge> edges,
               EdgeOrderMode order = EdgeOrderMode::Canonical);

  static PartiteGraph complete_multipartite(std::uint32_t ell, std::uint32_t m);

  std::uint32_t ell() const { return std::uint32_t(part_sizes_.size()); }
  std::uint32_t part_size(std::uint32_t i) const { return part_sizes_[i]; }
  /// Vertices per part; meaningful when parts are balanced.
  std::uint32_t m() const { return part_sizes_.empty() ? 0 : part_sizes_[0]; }
  /// Cross-part valency; 0 when the graph is not cross-regular.
  std::uint32_t n() const { return cross_valency_; }
  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t part_of(std::uint32_t v) const;
  std::uint32_t part_offset(std::uint32_t i) const { return offsets_[i]; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const IncidentEdge> incident(std::uint32_t v) const;
  EdgeOrderMode order_mode() const { return order_; }

  ValidationReport validate_balanced() const;
  bool is_complete_multipartite() const;

  RealSymMatrix adjacency_matrix() const;
  /// Full adjacency spectrum, descending. Closed form for complete
  /// multipartite graphs, Jacobi otherwise.
  std::vector<double> spectrum() const;
  /// Second largest adjacency eigenvalue, with multiplicity. Exact for
  /// complete multipartite graphs.
  RationalOrReal lambda2() const;

  /// Edges with one endpoint in each set; the sets must be disjoint.
  std::uint64_t edge_count_between(std::span<const std::uint32_t> first,
                                   std::span<const std::uint32_t> second) const;

 private:
  std::vector<std::uint32_t> part_sizes_;
  std::vector<std::uint32_t> offsets_;
  std::uint32_t vertex_count_ = 0;
  std::uint32_t cross_valency_ = 0;
  std::vector<Edge> edges_;
  EdgeOrderMode order_ = EdgeOrderMode::Canonical;
  std::vector<std::vector<IncidentEdge>> incidence_;
  std::vector<std::vector<std::uint32_t>> valency_table_;  // vertex x part neighbor counts
  CachedValue<RationalOrReal> lambda2_;
};

/// Part-scoped vertex subset (members are global indices within the part).
struct VertexSubset {
  std::uint32_t part = 0;
  std::vector<std::uint32_t> members;
};

}  // namespace gcodes
