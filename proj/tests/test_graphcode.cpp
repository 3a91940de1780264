#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gcodes/certificate.hpp"
#include "gcodes/graph_code.hpp"
#include "gcodes/io.hpp"

using namespace gcodes;

namespace {

std::shared_ptr<const PartiteGraph> share(PartiteGraph graph) {
  return std::make_shared<const PartiteGraph>(std::move(graph));
}

GFVector random_codeword(const GraphCode& code, std::mt19937_64& rng, bool nonzero = true) {
  const auto& generator = code.as_linear_code().generator();
  std::uniform_int_distribution<std::uint32_t> dist(0, code.field()->order() - 1);
  for (;;) {
    std::vector<std::uint16_t> message(generator.rows());
    for (auto& x : message) x = std::uint16_t(dist(rng));
    GFVector cw{code.field(), code.as_linear_code().encode(message)};
    if (!nonzero || cw.weight() > 0) return cw;
  }
}

// Independent oracle for the rank of a GF(2) matrix: the row space of an
// r-row matrix has 2^rank distinct subset XORs.
std::size_t rank_by_subset_span(const GFMatrix& m) {
  REQUIRE(m.rows() <= 16);
  std::set<std::vector<std::uint16_t>> span;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m.rows()); ++mask) {
    std::vector<std::uint16_t> acc(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (mask >> r & 1)
        for (std::size_t c = 0; c < m.cols(); ++c) acc[c] ^= m.get(r, c);
    span.insert(acc);
  }
  std::size_t rank = 0;
  while ((std::size_t(1) << rank) < span.size()) ++rank;
  REQUIRE((std::size_t(1) << rank) == span.size());
  return rank;
}

GraphCode build_k44_even() {
  return GraphCode::build(share(PartiteGraph::complete_multipartite(2, 4)),
                          {LinearCode::even_weight(4)});
}

}  // namespace

TEST_CASE("build worked examples") {
  const auto k777 = fixture_k777();
  CHECK(k777.length() == 147);
  CHECK(k777.global_parity().rows() == 126);  // 21 vertices x 6 checks
  CHECK(k777.global_parity().cols() == 147);

  const auto k333 = fixture_k333();
  CHECK(k333.length() == 27);
  CHECK(k333.global_parity().rows() == 9);  // 9 vertices x 1 check

  // Unconstrained single-edge instance: full code of length 1 at both ends.
  const auto full1 = LinearCode::from_generator(GFMatrix::identity(FieldSpec::prime_field(2), 1));
  const auto k11 = GraphCode::build(share(PartiteGraph::complete_multipartite(2, 1)), {full1});
  CHECK(k11.length() == 1);
  CHECK(k11.global_parity().rows() == 0);
  CHECK(k11.dimension() == 1);
  CHECK(k11.minimum_distance() == 1);
}

TEST_CASE("build rejects bad inputs") {
  auto edges = PartiteGraph::complete_multipartite(3, 3).edges();
  std::erase(edges, Edge{0, 3});
  auto unbalanced = share(PartiteGraph(std::vector<std::uint32_t>(3, 3), edges));
  CHECK_THROWS_AS(GraphCode::build(unbalanced, {LinearCode::even_weight(6)}), UsageError);

  auto k333 = share(PartiteGraph::complete_multipartite(3, 3));
  CHECK_THROWS_AS(GraphCode::build(k333, {LinearCode::even_weight(4)}), UsageError);

  const auto gf4_inner = LinearCode::from_generator(GFMatrix::identity(FieldSpec::from_order(4), 6));
  CHECK_THROWS_AS(
      GraphCode::build(k333, {LinearCode::even_weight(6), LinearCode::even_weight(6), gf4_inner}),
      UsageError);

  CHECK_THROWS_AS(GraphCode::build(k333, {LinearCode::even_weight(6), LinearCode::even_weight(6)}),
                  UsageError);
}

TEST_CASE("local views") {
  const auto k333 = fixture_k333();
  const auto zero = k333.zero_assignment();
  for (std::uint32_t v = 0; v < 9; ++v) {
    const auto view = k333.local_view(zero, v);
    CHECK(view == std::vector<std::uint16_t>(6, 0));
  }

  // Row v1 of the published assignment, read over v1's six cross edges.
  const auto m_assignment = k333_even_assignment(k333);
  CHECK(k333.local_view(m_assignment, 0) == std::vector<std::uint16_t>{1, 0, 0, 0, 0, 1});

  // A single-edge indicator has weight-1 views exactly at its endpoints.
  GFVector indicator = k333.zero_assignment();
  const auto idx = find_edge_index(k333.graph(), 1, 5);
  REQUIRE(idx.has_value());
  indicator.symbols[*idx] = 1;
  for (std::uint32_t v = 0; v < 9; ++v) {
    GFVector view{k333.field(), k333.local_view(indicator, v)};
    CHECK(view.weight() == ((v == 1 || v == 5) ? 1u : 0u));
  }
}

TEST_CASE("dimension with an independent rank oracle") {
  const auto k333 = fixture_k333();
  // 9 parity rows; every edge appears in exactly two of them, so their sum
  // vanishes and the rank drops to 8.
  CHECK(rank_by_subset_span(k333.global_parity()) == 8);
  CHECK(k333.dimension() == 19);

  const auto k777 = fixture_k777();
  CHECK(k777.dimension() == 48);
  // Rank + kernel dimension adds up.
  CHECK(rank(k777.global_parity()) == 147 - 48);
}

TEST_CASE("minimum distances of the worked instances") {
  const auto k333 = fixture_k333();
  DistanceOptions exhaustive;
  exhaustive.engine = DistanceEngine::Exhaustive;
  CHECK(k333.minimum_distance(exhaustive) == 3);
  // Cross-engine agreement on the same instance.
  CHECK(min_distance_bz(k333.as_linear_code()) == 3);

  const auto k777 = fixture_k777();
  CHECK(k777.minimum_distance() == 9);  // auto policy picks the information-set engine
  CHECK(min_distance_bz(k777.as_linear_code()) == 9);

  // Upper-bound sanity: the triangle witness is a member of weight 3.
  const auto triangle = k333_triangle_witness(k333);
  CHECK(triangle.weight() == 3);
  CHECK(k333.verify_membership(triangle).ok);
}

TEST_CASE("spectral bound worked examples") {
  const auto k777_bound = fixture_k777().spectral_bound();
  REQUIRE(k777_bound.applicable);
  REQUIRE(k777_bound.exact.has_value());
  CHECK(*k777_bound.exact == Rational(9, 2));

  const auto k333_bound = fixture_k333().spectral_bound();
  REQUIRE(k333_bound.applicable);
  CHECK(*k333_bound.exact == Rational(2));

  // lambda2 = d makes the bound vacuous: the 6-cycle with the full [2,2,1]
  // inner code has d = 1 = lambda2.
  const PartiteGraph c6({3, 3}, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}},
                        EdgeOrderMode::Canonical);
  const auto full2 = LinearCode::from_generator(GFMatrix::identity(FieldSpec::prime_field(2), 2));
  const auto trivial = GraphCode::build(share(PartiteGraph(c6)), {full2});
  const auto bound = trivial.spectral_bound();
  REQUIRE(bound.applicable);
  CHECK(std::abs(bound.value) <= 1e-9);
  CHECK(trivial.minimum_distance() == 1);

  // Mixed inner parameters refuse the bound but not the construction.
  const auto k44_mixed = GraphCode::build(
      share(PartiteGraph::complete_multipartite(2, 4)),
      {LinearCode::even_weight(4), LinearCode::repetition_binary(4)});
  const auto mixed_bound = k44_mixed.spectral_bound();
  CHECK_FALSE(mixed_bound.applicable);
  CHECK(mixed_bound.reason == "inner codes have different parameters");
  CHECK(k44_mixed.dimension() > 0);
}

TEST_CASE("membership verdicts") {
  const auto k333 = fixture_k333();
  const auto published = k333_even_assignment(k333);
  CHECK(published.weight() == 18);
  CHECK(k333.verify_membership(published).ok);

  GFVector single = k333.zero_assignment();
  single.symbols[*find_edge_index(k333.graph(), 0, 3)] = 1;
  const auto single_result = k333.verify_membership(single);
  CHECK_FALSE(single_result.ok);
  CHECK(single_result.failed_vertices == std::vector<std::uint32_t>{0, 3});

  // Edges {v1,v4} and {v1,v5}: v1 sees weight 2, v4 and v5 see weight 1.
  GFVector two = k333.zero_assignment();
  two.symbols[*find_edge_index(k333.graph(), 0, 3)] = 1;
  two.symbols[*find_edge_index(k333.graph(), 0, 4)] = 1;
  const auto two_result = k333.verify_membership(two);
  CHECK_FALSE(two_result.ok);
  CHECK(two_result.failed_vertices == std::vector<std::uint32_t>{3, 4});
}

TEST_CASE("fixture witnesses") {
  const auto k777 = fixture_k777();
  const auto witness = k777_min_weight_witness(k777);
  CHECK(witness.weight() == 9);
  CHECK(k777.verify_membership(witness).ok);

  const auto fixture = make_fixture("k777");
  CHECK(fixture.name == "k777");
  CHECK_THROWS_AS(make_fixture("k555"), UsageError);
}

TEST_CASE("linearity: sums of codewords stay codewords") {
  std::mt19937_64 rng(8);
  for (const auto* name : {"k777", "k333"}) {
    const auto code = make_fixture(name).code;
    for (int trial = 0; trial < 25; ++trial) {
      const auto c1 = random_codeword(code, rng, false);
      const auto c2 = random_codeword(code, rng, false);
      REQUIRE(code.verify_membership(c1 + c2).ok);
    }
  }
}

TEST_CASE("support bound: weight dominates d times the largest support") {
  std::mt19937_64 rng(9);
  for (const auto* name : {"k777", "k333"}) {
    const auto code = make_fixture(name).code;
    const unsigned d = code.inner_codes().front().min_distance();
    for (int trial = 0; trial < 40; ++trial) {
      const auto cw = random_codeword(code, rng);
      const auto supports = extract_supports(code, cw);
      std::size_t largest = 0;
      for (const auto& s : supports) largest = std::max(largest, s.size());
      REQUIRE(cw.weight() >= d * largest);
    }
  }
}

TEST_CASE("dimension lower bound from the row count") {
  for (const auto* name : {"k777", "k333"}) {
    const auto code = make_fixture(name).code;
    const auto& graph = code.graph();
    const auto& inner = code.inner_codes().front();
    const long long floor_k = (long long)(code.length()) -
                              (long long)(graph.ell()) * graph.m() *
                                  ((long long)(inner.length()) - inner.dimension());
    CHECK((long long)(code.dimension()) >= floor_k);
  }
}

TEST_CASE("D respects the bound where both are computed") {
  for (const GraphCode& code : {fixture_k333(), build_k44_even()}) {
    const auto bound = code.spectral_bound();
    REQUIRE(bound.applicable);
    const unsigned d = code.minimum_distance();
    REQUIRE(bound.exact.has_value());
    CHECK_FALSE(Rational(d) < *bound.exact);
  }
}

TEST_CASE("bipartite instances reproduce the two-sided definition") {
  const auto code = build_k44_even();
  const auto& graph = code.graph();

  // Independent membership check straight from the bipartite definition:
  // gather each vertex's incident symbols from the raw edge list and test
  // the side's inner code.
  auto bipartite_member = [&](const GFVector& c) {
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
      std::vector<std::pair<std::uint32_t, std::uint16_t>> found;
      for (std::uint32_t e = 0; e < graph.edges().size(); ++e) {
        const Edge& edge = graph.edges()[e];
        if (edge.u == v || edge.v == v) found.emplace_back(e, c.symbols[e]);
      }
      std::sort(found.begin(), found.end());
      std::vector<std::uint16_t> view;
      for (auto& [e, s] : found) view.push_back(s);
      if (!code.inner_codes()[graph.part_of(v)].is_codeword(view)) return false;
    }
    return true;
  };

  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> bit(0, 1);
  int members = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GFVector c{code.field(), std::vector<std::uint16_t>(code.length())};
    for (auto& s : c.symbols) s = std::uint16_t(bit(rng));
    const bool direct = bipartite_member(c);
    REQUIRE(code.verify_membership(c).ok == direct);
    members += direct;
  }
  for (int trial = 0; trial < 50; ++trial)
    REQUIRE(bipartite_member(random_codeword(code, rng, false)));
}

TEST_CASE("every kernel row of the global parity is a codeword") {
  for (const auto* name : {"k777", "k333"}) {
    const auto code = make_fixture(name).code;
    const auto& generator = code.as_linear_code().generator();
    for (std::size_t r = 0; r < generator.rows(); ++r) {
      GFVector row{code.field(), generator.row(r)};
      REQUIRE(code.verify_membership(row).ok);
    }
  }
}

TEST_CASE("file edge order changes coordinates but not parameters") {
  const auto canonical = fixture_k333();

  auto edges = PartiteGraph::complete_multipartite(3, 3).edges();
  std::mt19937_64 rng(55);
  std::shuffle(edges.begin(), edges.end(), rng);
  const auto scrambled = GraphCode::build(
      share(PartiteGraph(std::vector<std::uint32_t>(3, 3), edges, EdgeOrderMode::FileOrder)),
      {LinearCode::even_weight(6)});
  CHECK(scrambled.graph().order_mode() == EdgeOrderMode::FileOrder);
  CHECK(scrambled.length() == canonical.length());
  CHECK(scrambled.dimension() == canonical.dimension());
  DistanceOptions exhaustive;
  exhaustive.engine = DistanceEngine::Exhaustive;
  CHECK(scrambled.minimum_distance(exhaustive) == canonical.minimum_distance(exhaustive));
}

TEST_CASE("non-binary graph codes work end to end") {
  // Equal-symbol inner code {(a, a)} over GF(4) on the 4-cycle: every
  // codeword is constant over all four edges, so [4, 1, 4] and the bound
  // 2*2*(2-0)/(2-0) = 4 is tight.
  auto gf4 = FieldSpec::from_order(4);
  auto generator = GFMatrix::from_rows(gf4, {{1, 1}});
  const auto inner = LinearCode::from_generator(std::move(generator));
  CHECK(inner.min_distance() == 2);

  const auto code =
      GraphCode::build(share(PartiteGraph::complete_multipartite(2, 2)), {inner});
  CHECK(code.length() == 4);
  CHECK(code.dimension() == 1);
  CHECK(code.minimum_distance() == 4);  // generic odometer enumeration over GF(4)

  const auto bound = code.spectral_bound();
  REQUIRE(bound.applicable);
  CHECK(*bound.exact == Rational(4));

  GFVector constant{gf4, {2, 2, 2, 2}};
  CHECK(code.verify_membership(constant).ok);
  GFVector mixed{gf4, {2, 2, 2, 3}};
  CHECK_FALSE(code.verify_membership(mixed).ok);

  const auto cert = certify(code, constant);
  CHECK(cert.a == 2);
  CHECK(cert.valid());
}

TEST_CASE("distance engine capacity fallbacks") {
  const auto k777 = fixture_k777();
  DistanceOptions exhaustive;
  exhaustive.engine = DistanceEngine::Exhaustive;
  CHECK_THROWS_AS(k777.minimum_distance(exhaustive), CapacityError);  // 2^48 messages

  DistanceOptions parallel;
  parallel.workers = 4;
  CHECK(fixture_k777().minimum_distance(parallel) == 9);
}
