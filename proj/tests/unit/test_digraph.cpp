#include "doctest.h"
#include "oracles.hpp"
#include "snc/error.hpp"
#include "snc/generators.hpp"
#include "snc/rng.hpp"

using namespace snc;
using namespace snc::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("add_arc enforces loop, digon and duplicate bans") {
  Digraph d(2);
  d.add_arc(0, 1);
  CHECK(d.arc_count() == 1);
  CHECK(d.has_arc(0, 1));
  CHECK(code_of([&] { d.add_arc(1, 0); }) == ErrorCode::DigonRejected);
  CHECK(code_of([&] { d.add_arc(0, 1); }) == ErrorCode::DuplicateArc);
  CHECK(code_of([&] { d.add_arc(1, 1); }) == ErrorCode::LoopRejected);
  CHECK(code_of([&] { d.add_arc(0, 2); }) == ErrorCode::VertexOutOfRange);
  CHECK(d.arc_count() == 1);
}

TEST_CASE("undirected graph rejects loops and parallel edges") {
  UndirectedGraph g(3);
  g.add_edge(2, 0);
  CHECK(g.has_edge(0, 2));
  CHECK(code_of([&] { g.add_edge(0, 2); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([&] { g.add_edge(1, 1); }) == ErrorCode::LoopRejected);
  CHECK(g.edges() == std::vector<Arc>{{0, 2}});
}

TEST_CASE("reverse and remove keep both adjacency directions in sync") {
  Digraph d = three_cycle();
  d.reverse_arc(0, 1);
  CHECK(d.has_arc(1, 0));
  CHECK(out_neighborhood(d, 1) == VertexSet{0, 2});
  CHECK(in_neighborhood(d, 0) == VertexSet{1, 2});
  CHECK(d.remove_arc(1, 0));
  CHECK_FALSE(d.remove_arc(1, 0));
  CHECK(d.arc_count() == 2);
}

TEST_CASE("out-neighborhoods") {
  CHECK(out_neighborhood(three_cycle(), 0) == VertexSet{1});
  CHECK(out_neighborhood(transitive_triangle(), 0) == VertexSet{1, 2});
  CHECK(out_neighborhood(Digraph(3), 1).empty());
  CHECK(in_neighborhood(transitive_triangle(), 2) == VertexSet{0, 1});
}

TEST_CASE("second out-neighborhoods") {
  CHECK(second_out_neighborhood(three_cycle(), 0) == VertexSet{2});
  CHECK(second_out_neighborhood(transitive_triangle(), 0).empty());
  const Digraph path = make_digraph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(second_out_neighborhood(path, 0) == VertexSet{2});
  CHECK(second_in_neighborhood(path, 3) == VertexSet{1});
}

TEST_CASE("second out-neighborhood matches breadth-first distance 2") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const Digraph d = random_digraph(n, seed);
    for (VertexId v = 0; v < n; ++v) {
      CHECK(second_out_neighborhood(d, v) == at_distance(d, v, 2));
      const VertexSet first = out_neighborhood(d, v);
      const VertexSet second = second_out_neighborhood(d, v);
      CHECK(first == at_distance(d, v, 1));
      VertexSet both;
      std::set_intersection(first.begin(), first.end(), second.begin(), second.end(),
                            std::back_inserter(both));
      CHECK(both.empty());
      CHECK_FALSE(std::binary_search(second.begin(), second.end(), v));
    }
  }
}

TEST_CASE("missing graph") {
  CHECK(missing_graph(three_cycle()).graph.edge_count() == 0);
  const MissingGraph m = missing_graph(make_digraph(3, {{2, 0}, {2, 1}}));
  CHECK(m.graph.edges() == std::vector<Arc>{{0, 1}});
  CHECK(m.support == VertexSet{0, 1});
  CHECK(missing_graph(Digraph(3)).graph.edges() ==
        std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("missing edges and arcs partition the pairs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const Digraph d = random_digraph(n, seed);
    const UndirectedGraph m = missing_graph(d).graph;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        CHECK(m.has_edge(u, v) != d.adjacent(u, v));
      }
    }
    CHECK(d.is_tournament() == (m.edge_count() == 0));
    if (d.is_tournament()) CHECK(d.arc_count() == n * (n - 1) / 2);
  }
}

TEST_CASE("weighted SNP evaluation") {
  const auto one = [](const Digraph& d) {
    return WeightedDigraph(d, WeightMap::uniform(d.size()));
  };
  SnpEvaluation e = has_weighted_snp(one(three_cycle()), 0);
  CHECK(e.holds);
  CHECK(e.out_weight == 1);
  CHECK(e.second_weight == 1);
  e = has_weighted_snp(one(transitive_triangle()), 0);
  CHECK_FALSE(e.holds);
  CHECK(e.out_weight == 2);
  CHECK(e.second_weight == 0);
  e = has_weighted_snp(one(transitive_triangle()), 2);
  CHECK(e.holds);
  CHECK(e.out_weight == 0);
  CHECK(e.second_weight == 0);
}

TEST_CASE("weights are exact and nonnegative") {
  CHECK(code_of([] { make_weights({1, -1}); }) == ErrorCode::NegativeWeight);
  WeightMap w = WeightMap::uniform(2);
  CHECK(code_of([&] { w.set(0, Rational(-1, 3)); }) == ErrorCode::NegativeWeight);
  CHECK_THROWS_AS(WeightedDigraph(Digraph(3), WeightMap::uniform(2)), std::invalid_argument);
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Rational a(static_cast<long long>(rng.between(0, 50)) - 25,
                     static_cast<long long>(rng.between(1, 30)));
    const Rational b(static_cast<long long>(rng.between(0, 50)) - 25,
                     static_cast<long long>(rng.between(1, 30)));
    const BigInt common = denominator_of(a) * denominator_of(b);
    const Rational via_common(numerator_of(a) * denominator_of(b) + numerator_of(b) * denominator_of(a),
                              common);
    CHECK(a + b == via_common);
  }
}
