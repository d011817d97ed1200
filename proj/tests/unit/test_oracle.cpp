#include "doctest.h"
#include "oracles.hpp"
#include "snc/error.hpp"
#include "snc/generators.hpp"
#include "snc/oracle.hpp"

#include <set>

using namespace snc;
using namespace snc::testing;

TEST_CASE("brute-force SNP vertices") {
  CHECK(brute_force_snp_vertices(WeightedDigraph(three_cycle(), uniform_weights(3))) ==
        VertexSet{0, 1, 2});
  // vertex 1 has N⁺ = {2} and N⁺⁺ = ∅, so only the sink qualifies
  CHECK(brute_force_snp_vertices(WeightedDigraph(transitive_triangle(), uniform_weights(3))) ==
        VertexSet{2});
  CHECK(brute_force_snp_vertices(WeightedDigraph(Digraph(1), uniform_weights(1))) ==
        VertexSet{0});
}

TEST_CASE("brute-force scan agrees with has_weighted_snp") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const WeightedDigraph d(random_digraph(n, seed), random_weights(n, seed, 4));
    const VertexSet ok = brute_force_snp_vertices(d);
    for (VertexId v = 0; v < n; ++v) {
      CHECK(std::binary_search(ok.begin(), ok.end(), v) == has_weighted_snp(d, v).holds);
    }
  }
}

TEST_CASE("tournament enumeration counts") {
  const std::size_t expected[] = {1, 1, 2, 8, 64, 1024};
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t count = 0;
    std::set<std::vector<Arc>> distinct;
    enumerate_tournaments(n, [&](const Digraph& t) {
      ++count;
      CHECK(t.is_tournament());
      distinct.insert(t.arcs());
    });
    CHECK(count == expected[n]);
    CHECK(distinct.size() == count);
  }
  CHECK_THROWS_AS(enumerate_tournaments(7, [](const Digraph&) {}), Error);
  CHECK(tournament_from_index(3, 0) == transitive_triangle());
}

TEST_CASE("exhaustive tournament sweeps") {
  CHECK(sweep_theorem1(1).instances == 1);
  const SweepReport r3 = sweep_theorem1(3);
  CHECK(r3.instances == 8);
  CHECK(r3.failures.empty());
  const SweepReport r5 = sweep_theorem1(5);
  CHECK(r5.instances == 1024);
  CHECK(r5.failures.empty());
  CHECK_THROWS_AS(sweep_theorem1(7), Error);
}

TEST_CASE("randomized sweeps are failure-free and independent of the worker count") {
  const SweepReport a = sweep_proposition1(150, 10, {3, 1});
  const SweepReport b = sweep_proposition1(150, 10, {3, 4});
  CHECK(a.failures.empty());
  CHECK(a.instances == 150);
  CHECK(a.observations == b.observations);

  const SweepReport t2 = sweep_theorem2(100, 14, {5, 3});
  CHECK(t2.failures.empty());
  CHECK(t2.observations == sweep_theorem2(100, 14, {5, 1}).observations);
  CHECK(sweep_theorem2(0, 14).instances == 0);

  CHECK(sweep_median_optimality(60, 8, {1, 2}).failures.empty());
  CHECK(sweep_theorem3_random(200, 6, 9, {2, 2}).failures.empty());
}

TEST_CASE("graph sweeps for the three characterizations") {
  CHECK(sweep_theorem3(1).failures.empty());
  const SweepReport r4 = sweep_theorem3(4);
  CHECK(r4.instances == 64);
  CHECK(r4.failures.empty());
  const SweepReport r5 = sweep_theorem3(5);
  CHECK(r5.instances == 1024);
  CHECK(r5.failures.empty());
}

TEST_CASE("gamma constant") {
  CHECK(to_decimal(gamma_constant(6), 6) == "0.657298");
  CHECK(gamma_polynomial(Rational(3, 5)) < 0);
  CHECK(gamma_polynomial(Rational(7, 10)) > 0);
  Rational previous_width = 2;
  for (int p = 0; p <= 12; ++p) {
    const auto [lo, hi] = gamma_bracket(p);
    CHECK(gamma_polynomial(lo) < 0);
    CHECK(gamma_polynomial(hi) > 0);
    CHECK(hi - lo <= previous_width);
    previous_width = hi - lo;
  }
  const auto [lo1, hi1] = gamma_bracket(1);
  CHECK(lo1 >= Rational(6, 10));
  CHECK(hi1 <= Rational(7, 10));
  CHECK_THROWS_AS(gamma_constant(51), Error);
}

TEST_CASE("gamma property per vertex") {
  CHECK(vertex_meets_gamma(0, 0));
  CHECK_FALSE(vertex_meets_gamma(1, 1));
  CHECK(vertex_meets_gamma(1, 2));
  CHECK_FALSE(vertex_meets_gamma(2, 3));
  CHECK(vertex_meets_gamma(13, 20));
  CHECK_FALSE(vertex_meets_gamma(1, 0));
  CHECK(check_gamma_property(transitive_triangle()));
  CHECK_FALSE(check_gamma_property(three_cycle()));
}

TEST_CASE("gamma sweep is descriptive") {
  const SweepReport r = sweep_gamma(200, 12, {0, 2});
  CHECK(r.failures.empty());
  CHECK(r.instances == 200);
  CHECK(r.observations.contains("with_gamma_vertex"));
}
