#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "snc/digraph.hpp"

namespace snc {

/// Partition of a graph into stable ray classes A₀, A₁, …, A_m and clique
/// layers X₁, …, X_n. A₀ holds the isolated vertices, every vertex of A_i
/// (i ≥ 1) is adjacent to exactly X₁ ∪ … ∪ X_i. Either m = n (every layer has
/// a ray class attached) or m = n − 1 (the last layer has none); the two
/// shapes describe the same family of graphs. An edgeless graph is the
/// degenerate case n = m = 0.
struct GeneralizedStarDecomposition {
  std::vector<VertexSet> rays;  // A₀, A₁, …, A_m
  std::vector<VertexSet> core;  // X₁, …, X_n

  friend bool operator==(const GeneralizedStarDecomposition&,
                         const GeneralizedStarDecomposition&) = default;
};

struct DecompositionCheck {
  bool valid = true;
  /// 1: partition/shape, 2: core clique and nonempty layers,
  /// 3: rays stable and nonempty, 4: ray neighborhoods.
  int failed_clause = 0;
  std::string detail;
};

DecompositionCheck validate_decomposition(const UndirectedGraph& g,
                                          const GeneralizedStarDecomposition& dec);

/// Two vertex-disjoint edges xy and uv whose cross edges are a subset of
/// {xv, yu}, so the four vertices induce a subgraph of the square x-y-u-v-x.
/// Labelled such that xu and yv are non-edges.
struct SquareViolation {
  VertexId x = 0;
  VertexId y = 0;
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Arc> cross_edges;

  friend bool operator==(const SquareViolation&,
                         const SquareViolation&) = default;
};

/// First violation over pairs of disjoint edges (edges in lexicographic
/// order, pairs by first then second edge index), or nullopt when no two
/// disjoint edges induce a subgraph of a square.
std::optional<SquareViolation> check_condition_B(const UndirectedGraph& g);

/// The same condition in the form used to build decompositions: for every
/// two disjoint edges, one of them has an endpoint adjacent to both
/// endpoints of the other.
bool condition_B_working_form(const UndirectedGraph& g);

inline constexpr std::size_t kMaxStableSetVertices = 64;

/// Maximum stable set of the subgraph induced by `within` (all vertices when
/// omitted); the lexicographically smallest one among maximum sets.
/// Throws TooLarge for graphs with more than 64 vertices.
VertexSet max_stable_set(const UndirectedGraph& g);
VertexSet max_stable_set(const UndirectedGraph& g, const VertexSet& within);

struct DecomposeResult {
  /// Set iff the constructed partition validates.
  std::optional<GeneralizedStarDecomposition> decomposition;
  GeneralizedStarDecomposition attempted;
  DecompositionCheck check;
};

/// Isolated vertices form A₀; a maximum stable set S of the rest is split by
/// degree into A₁..A_s, and X_i collects the new neighbors of A_i.
DecomposeResult decompose(const UndirectedGraph& g);

enum class SpecialKind { Complete, Star, Sun, General };

std::string_view to_string(SpecialKind kind);

struct SpecialClassification {
  SpecialKind kind = SpecialKind::General;
  bool is_complete = false;
  bool is_star = false;
  bool is_sun = false;
  std::size_t levels = 0;    // number of clique layers n
  std::size_t isolated = 0;  // |A₀|
};

/// Complete: the non-isolated vertices form a clique. Sun: they split into a
/// clique and a stable set each of whose members sees the whole clique.
/// Star: K₁,k with k ≥ 1. Precedence complete, star, sun, general.
SpecialClassification classify_special(const GeneralizedStarDecomposition& dec);

/// Graph described by a decomposition.
UndirectedGraph graph_of(const GeneralizedStarDecomposition& dec);

struct AdversarialWitness {
  Digraph digraph;
  Arc designated_edge;  // {x, y}, not good in `digraph`
};

/// Digraph with missing graph g in which xy is not good: every non-neighbor w
/// of u sends an arc to u except x, which receives u→x; symmetrically for v
/// and y; all remaining non-edges run from lower to higher index.
/// Throws NotAViolation if the labelling is not a violation of (B).
AdversarialWitness adversarial_digraph(const UndirectedGraph& g,
                                       const SquareViolation& violation);

struct RecognitionReport {
  bool is_generalized_star = false;
  std::optional<GeneralizedStarDecomposition> decomposition;
  std::optional<SpecialClassification> special;
  std::optional<SquareViolation> violation;
  std::optional<AdversarialWitness> adversary;
  DecompositionCheck check;
};

/// Runs both routes; throws TheoremViolation if they disagree.
RecognitionReport recognize(const UndirectedGraph& g);

}  // namespace snc
