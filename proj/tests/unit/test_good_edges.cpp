#include "doctest.h"
#include "oracles.hpp"
#include "snc/error.hpp"
#include "snc/generators.hpp"
#include "snc/good_edges.hpp"
#include "snc/oracle.hpp"
#include "snc/rng.hpp"

using namespace snc;
using namespace snc::testing;

namespace {

// arcs 2→0, 2→1; missing {0,1}
Digraph fan() { return make_digraph(3, {{2, 0}, {2, 1}}); }

// missing {0,1}, {2,3}
Digraph two_k2() { return make_digraph(4, {{2, 0}, {3, 1}, {1, 2}, {0, 3}}); }

// missing {0,1}, {0,2}
Digraph star_missing() { return make_digraph(4, {{1, 2}, {3, 0}, {1, 3}, {2, 3}}); }

WeightedDigraph unit_weights(const Digraph& d) {
  return WeightedDigraph(d, WeightMap::uniform(d.size()));
}

}  // namespace

TEST_CASE("classify a fan edge") {
  const MissingEdgeStatus s = classify_missing_edge(fan(), 0, 1);
  CHECK(s.satisfies_i);
  CHECK(s.satisfies_ii);
  CHECK(s.good());
  CHECK_FALSE(s.witness_against_i);
}

TEST_CASE("classify the 2K2 edge") {
  const MissingEdgeStatus s = classify_missing_edge(two_k2(), 0, 1);
  CHECK_FALSE(s.satisfies_i);
  CHECK_FALSE(s.satisfies_ii);
  CHECK_FALSE(s.good());
  CHECK(s.witness_against_i == VertexId{2});
  CHECK(s.witness_against_ii == VertexId{3});
  CHECK(out_neighborhood(two_k2(), 2) == VertexSet{0});
  CHECK(second_out_neighborhood(two_k2(), 2) == VertexSet{3});
}

TEST_CASE("edge with no in-arcs at either end is vacuously good") {
  const Digraph d = make_digraph(3, {{0, 2}, {1, 2}});
  const MissingEdgeStatus s = classify_missing_edge(d, 0, 1);
  CHECK(s.satisfies_i);
  CHECK(s.satisfies_ii);
}

TEST_CASE("classify rejects present arcs") {
  try {
    classify_missing_edge(fan(), 2, 0);
    FAIL("expected NotMissing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMissing);
  }
}

TEST_CASE("all missing edges good") {
  const GoodEdgesReport t = all_missing_edges_good(three_cycle());
  CHECK(t.all_good);
  CHECK(t.statuses.empty());
  const GoodEdgesReport f = all_missing_edges_good(fan());
  CHECK(f.all_good);
  CHECK(f.statuses.size() == 1);
  const GoodEdgesReport k = all_missing_edges_good(two_k2());
  CHECK_FALSE(k.all_good);
  REQUIRE(k.statuses.size() == 2);
  CHECK_FALSE(k.statuses[0].good());
  CHECK_FALSE(k.statuses[1].good());
}

TEST_CASE("classification matches the definition evaluated with BFS") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Digraph d = random_digraph(2 + seed % 8, seed);
    for (const auto& s : all_missing_edges_good(d).statuses) {
      CHECK(s.good() == good_by_definition(d, s.a, s.b));
      if (s.witness_against_i) {
        const VertexId v = *s.witness_against_i;
        CHECK(d.has_arc(v, s.a));
        CHECK_FALSE(reaches_within_two_bfs(d, v, s.b));
      }
      if (s.witness_against_ii) {
        const VertexId v = *s.witness_against_ii;
        CHECK(d.has_arc(v, s.b));
        CHECK_FALSE(reaches_within_two_bfs(d, v, s.a));
      }
    }
  }
}

TEST_CASE("completion picks the condition (i) orientation first") {
  const Completion c = complete_to_tournament(fan());
  CHECK(c.tournament.is_tournament());
  CHECK(c.tournament.has_arc(0, 1));
  REQUIRE(c.orientations.size() == 1);
  CHECK(c.orientations[0].arc == Arc{0, 1});

  CHECK(complete_to_tournament(three_cycle()).tournament == three_cycle());

  const Completion s = complete_to_tournament(star_missing());
  CHECK(s.tournament.has_arc(1, 0));
  CHECK(s.tournament.has_arc(2, 0));
  for (const auto& o : s.orientations) CHECK(is_convenient(star_missing(), o.arc));

  try {
    complete_to_tournament(two_k2());
    FAIL("expected NotAllGood");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAllGood);
  }
}

TEST_CASE("reorientation at the feed vertex") {
  const Digraph t = complete_to_tournament(fan()).tournament;
  const UndirectedGraph m = missing_graph(fan()).graph;
  CHECK(reorient_at_feed(t, m, 2) == t);
  CHECK(reorient_at_feed(t, m, 1) == t);
  const Digraph flipped = reorient_at_feed(t, m, 0);
  CHECK(flipped.has_arc(1, 0));
  CHECK(flipped.has_arc(2, 0));
  CHECK(flipped.has_arc(2, 1));
}

TEST_CASE("witness on the fan") {
  const WitnessCertificate c = find_witness_good(unit_weights(fan()));
  CHECK(c.lhs <= c.rhs);
  CHECK(c.recheck_t_prime.empty());
  const VertexSet ok = brute_force_snp_vertices(unit_weights(fan()));
  CHECK(std::binary_search(ok.begin(), ok.end(), c.witness));
  CHECK(verify_certificate(c).ok);
}

TEST_CASE("witness on a tournament is the feed vertex") {
  const Digraph t = random_tournament(7, 5);
  const WitnessCertificate c = find_witness_good(unit_weights(t));
  CHECK(c.witness == feed_vertex(c.order));
  CHECK(c.reoriented_edges.empty());
  CHECK(c.tournament == t);
}

TEST_CASE("witness on the star-missing instance") {
  const WitnessCertificate c = find_witness_good(unit_weights(star_missing()));
  const VertexSet ok = brute_force_snp_vertices(unit_weights(star_missing()));
  CHECK(std::binary_search(ok.begin(), ok.end(), c.witness));
}

TEST_CASE("dispatch falls back on non-good instances") {
  const WitnessResult r = find_witness(unit_weights(two_k2()));
  CHECK_FALSE(r.certified);
  CHECK_FALSE(r.certificate);
  CHECK(has_weighted_snp(unit_weights(two_k2()), r.witness).holds);
  const WitnessResult g = find_witness(unit_weights(fan()));
  CHECK(g.certified);
  CHECK(g.certificate);
  CHECK(find_witness(unit_weights(three_cycle())).certified);
}

TEST_CASE("certificates from generated good instances re-verify") {
  Rng rng(99);
  for (int k = 0; k < 150; ++k) {
    const StarProfile p = random_star_profile(12, rng);
    const GeneratedStar s = gen_generalized_star(p);
    const std::size_t n = s.graph.size();
    const WeightedDigraph d(random_digraph_missing(s.graph, rng.next()),
                            random_weights(n, rng.next(), 6));
    const GoodEdgesReport report = all_missing_edges_good(d.digraph);
    CHECK(report.all_good);
    for (const auto& st : report.statuses) CHECK(good_by_definition(d.digraph, st.a, st.b));
    const WitnessCertificate c = find_witness_good(d);
    CHECK(verify_certificate(c).ok);
    const VertexSet ok = brute_force_snp_vertices(d);
    CHECK(std::binary_search(ok.begin(), ok.end(), c.witness));
    for (const auto& o : c.orientations) CHECK(is_convenient(d.digraph, o.arc));
    // closure: the feed vertex keeps its out-neighborhood in T′
    Digraph t_prime = c.tournament;
    for (auto [u, f] : c.reoriented_edges) t_prime.reverse_arc(f, u);
    CHECK(out_neighborhood(t_prime, c.witness) == out_neighborhood(d.digraph, c.witness));
  }
}

TEST_CASE("tampered certificates fail verification") {
  WitnessCertificate c = find_witness_good(unit_weights(fan()));
  WitnessCertificate wrong_rhs = c;
  wrong_rhs.rhs += 1;
  CHECK_FALSE(verify_certificate(wrong_rhs).ok);
  WitnessCertificate wrong_order = c;
  wrong_order.order.order = Order({2, 1, 0});
  CHECK_FALSE(verify_certificate(wrong_order).ok);
}
