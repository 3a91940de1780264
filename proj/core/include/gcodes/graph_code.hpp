#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcodes/linear_code.hpp"
#include "gcodes/partite_graph.hpp"
#include "gcodes/rational.hpp"

namespace gcodes {

/// Result of the spectral minimum-distance bound. Inapplicable when the
/// inner codes do not share identical [n, k, d] parameters or when the
/// graph's second eigenvalue reaches its regularity degree.
struct BoundValue {
  bool applicable = false;
  std::string reason;
  std::optional<Rational> exact;
  double value = 0.0;

  std::string to_string() const;
};

struct MembershipResult {
  bool ok = false;
  std::vector<std::uint32_t> failed_vertices;  // global 0-based
};

/// Linear code whose coordinates are the edges of a balanced ell-partite
/// graph in a fixed order, constrained so that the local view at every
/// part-i vertex lies in the inner code C_i. Immutable after build; the
/// dimension, distance and bound caches publish safely to concurrent
/// readers.
class GraphCode {
 public:
  /// `inner` holds either one code (shared by all parts) or exactly ell
  /// codes. The graph must pass validate_balanced and every inner length
  /// must equal (ell-1)n.
  static GraphCode build(std::shared_ptr<const PartiteGraph> graph,
                         std::vector<LinearCode> inner);

  const PartiteGraph& graph() const { return *graph_; }
  const std::shared_ptr<const PartiteGraph>& graph_ptr() const { return graph_; }
  const std::vector<LinearCode>& inner_codes() const { return inner_; }
  const FieldPtr& field() const { return inner_.front().field(); }

  std::size_t length() const { return graph_->edges().size(); }
  const GFMatrix& global_parity() const { return global_parity_; }

  /// K = N - rank(global parity); the rank is cross-validated by a second
  /// elimination over a shuffled column order.
  std::size_t dimension() const;
  unsigned minimum_distance(const DistanceOptions& options = {}) const;
  std::optional<unsigned> cached_minimum_distance() const;
  BoundValue spectral_bound() const;

  /// Symbols on the edges incident to v, in ascending edge position.
  std::vector<std::uint16_t> local_view(const GFVector& assignment, std::uint32_t v) const;
  MembershipResult verify_membership(const GFVector& assignment) const;

  /// The same code as a plain linear code over the edge coordinates, with
  /// a generator derived from the kernel of the global parity check.
  const LinearCode& as_linear_code() const;

  GFVector zero_assignment() const;

 private:
  GraphCode(std::shared_ptr<const PartiteGraph> graph, std::vector<LinearCode> inner,
            GFMatrix parity);

  std::shared_ptr<const PartiteGraph> graph_;
  std::vector<LinearCode> inner_;
  GFMatrix global_parity_;
  CachedValue<std::size_t> dimension_;
  CachedValue<unsigned> distance_;
  CachedValue<BoundValue> bound_;
  CachedValue<LinearCode> flat_code_;
};

/// Index of edge {u, v} in the graph's active edge order.
std::optional<std::uint32_t> find_edge_index(const PartiteGraph& graph, std::uint32_t u,
                                             std::uint32_t v);

// --- Worked instances ------------------------------------------------

/// Complete 3-partite graph on 21 vertices with the side-by-side pair of
/// [7,4,3] Hamming codes as the inner code; a [147, 48, 9] code.
GraphCode fixture_k777();
/// Complete 3-partite graph on 9 vertices with the [6,5,2] even-weight
/// inner code; a [27, 19, 3] code.
GraphCode fixture_k333();

/// Weight-9 assignment supported on an outer product of two weight-3
/// Hamming codewords across parts 1 and 2, part 3 silent.
GFVector k777_min_weight_witness(const GraphCode& code);
/// Weight-3 triangle assignment on edges {v1,v4}, {v4,v7}, {v1,v7}.
GFVector k333_triangle_witness(const GraphCode& code);
/// The published weight-18 assignment for the 9-vertex instance.
GFVector k333_even_assignment(const GraphCode& code);

/// A reference value shipped with a fixture, checked against the computed
/// value in reports.
struct ClaimCheck {
  std::string name;
  std::string claimed;
  std::string computed;
  bool match = false;
};

struct Fixture {
  std::string name;
  GraphCode code;
  std::vector<std::pair<std::string, std::string>> claims;  // name -> claimed value
};

/// "k777" or "k333".
Fixture make_fixture(const std::string& name);

}  // namespace gcodes
