#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/rng.hpp"
#include "snc/star.hpp"

namespace snc {

/// Layer sizes of a generalized star: |X₁|..|X_n|, |A₁|..|A_m| with
/// m ∈ {n − 1, n}, and |A₀|.
struct StarProfile {
  std::vector<std::size_t> core_sizes;
  std::vector<std::size_t> ray_sizes;
  std::size_t isolated = 0;

  std::size_t vertex_count() const;
};

/// Everything needed to regenerate a weighted instance.
struct GenSpec {
  std::uint64_t seed = 0;
  StarProfile profile;
  std::uint64_t max_weight = 1;
};

struct GeneratedStar {
  UndirectedGraph graph;
  GeneralizedStarDecomposition decomposition;
};

/// Vertices are numbered A₀, A₁, …, A_m, then X₁, …, X_n.
/// Throws BadProfile.
GeneratedStar gen_generalized_star(const StarProfile& profile);

/// Clique of `core_size` vertices plus `ray_count` vertices adjacent to all
/// of it. Throws BadProfile when core_size == 0.
UndirectedGraph gen_sun(std::size_t core_size, std::size_t ray_count);
/// K₁,ray_count. Throws BadProfile when ray_count == 0.
UndirectedGraph gen_star(std::size_t ray_count);
/// K_k. Throws BadProfile when k == 0.
UndirectedGraph gen_complete(std::size_t k);

/// One pseudorandom bit per pair (lexicographic pair order).
Digraph random_tournament(std::size_t n, std::uint64_t seed);

/// Orients every non-edge of g by one pseudorandom bit; the result has
/// missing graph exactly g.
Digraph random_digraph_missing(const UndirectedGraph& g, std::uint64_t seed);

/// Integer weights uniform in [0, max_weight].
WeightMap random_weights(std::size_t n, std::uint64_t seed,
                         std::uint64_t max_weight);

/// Each pair independently: no arc, low→high, or high→low, equally likely.
Digraph random_digraph(std::size_t n, std::uint64_t seed);

/// Each pair an edge with probability percent/100.
UndirectedGraph random_graph(std::size_t n, std::uint64_t seed,
                             unsigned percent = 50);

/// A valid profile with between 2 and max_n vertices (max_n ≥ 2).
StarProfile random_star_profile(std::size_t max_n, Rng& rng);

/// The same graph under the vertex relabelling v ↦ perm[v].
UndirectedGraph relabel(const UndirectedGraph& g,
                        const std::vector<VertexId>& perm);

}  // namespace snc
