#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "snc/counterexample.hpp"
#include "snc/digraph.hpp"

namespace snc {

/// { v : ω(N⁺(v)) ≤ ω(N⁺⁺(v)) } by direct evaluation at every vertex.
VertexSet brute_force_snp_vertices(const WeightedDigraph& d);

inline constexpr std::size_t kMaxEnumeratedTournament = 6;

/// Calls `visit` on every labeled tournament on n vertices, 2^(n(n-1)/2) of
/// them. Pair k (in lexicographic pair order) is oriented low→high when bit k
/// of the tournament's index is 0. Throws TooLarge for n > 6.
void enumerate_tournaments(std::size_t n,
                           const std::function<void(const Digraph&)>& visit);

/// Tournament number `index` of the enumeration above.
Digraph tournament_from_index(std::size_t n, std::uint64_t index);

/// Labeled graph number `index` on n vertices (same pair-bit encoding).
UndirectedGraph graph_from_index(std::size_t n, std::uint64_t index);

struct SweepFailure {
  std::uint64_t instance = 0;
  CounterexampleReport report;
};

struct SweepReport {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t instances = 0;
  std::vector<SweepFailure> failures;
  /// Descriptive counters that are reported, not asserted.
  nlohmann::json observations = nlohmann::json::object();
  double elapsed_seconds = 0.0;
};

struct SweepOptions {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

/// Feed vertex of a local median order (ω ≡ 1) has the SNP, for every
/// tournament on n ≤ 6 vertices.
SweepReport sweep_theorem1(std::size_t n, const SweepOptions& options = {});

/// Random tournaments on 1..max_n vertices with integer weights in [0, 10]:
/// the feed vertex has the weighted SNP under the original weights.
SweepReport sweep_proposition1(std::size_t samples, std::size_t max_n,
                               const SweepOptions& options = {});

/// Random weighted digraphs whose missing graph is a generated generalized
/// star: the pipeline certifies a witness that the exhaustive scan confirms.
SweepReport sweep_theorem2(std::size_t samples, std::size_t max_n,
                           const SweepOptions& options = {});

/// Exhaustive over labeled graphs on n vertices: condition (B) holds iff a
/// generalized-star decomposition validates (n ≤ 5), and for n ≤ 4 the
/// all-orientations-good property matches (B) in both directions.
SweepReport sweep_theorem3(std::size_t n, const SweepOptions& options = {});

/// The (B) ⇔ (A) leg on random graphs with min_n..max_n vertices.
SweepReport sweep_theorem3_random(std::size_t samples, std::size_t min_n,
                                  std::size_t max_n,
                                  const SweepOptions& options = {});

/// Random weighted tournaments on 1..max_n (≤ 8) vertices: the exact order
/// passes the feedback check and bounds the local-search objective.
SweepReport sweep_median_optimality(std::size_t samples, std::size_t max_n,
                                    const SweepOptions& options = {});

/// Random digraphs on 1..max_n vertices, recording how many have a vertex
/// with d⁺ ≤ γ·d⁺⁺. Never records failures.
SweepReport sweep_gamma(std::size_t samples, std::size_t max_n,
                        const SweepOptions& options = {});

inline constexpr int kMaxGammaDigits = 50;

/// Bracket [lo, hi] around the real root of 2x³ + x² − 1 with
/// f(lo) < 0 < f(hi) and hi − lo ≤ 10^-digits.
std::pair<Rational, Rational> gamma_bracket(int digits);

/// The real root of 2x³ + x² − 1 rounded to `digits` decimals.
Rational gamma_constant(int digits);

/// 2x³ + x² − 1.
Rational gamma_polynomial(const Rational& x);

/// d⁺ ≤ γ·d⁺⁺ decided exactly through the sign of the polynomial.
bool vertex_meets_gamma(std::size_t out_degree, std::size_t second_degree);

/// Some vertex has d⁺(v) ≤ γ·d⁺⁺(v).
bool check_gamma_property(const Digraph& d);

}  // namespace snc
