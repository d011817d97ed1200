#include "snc/generators.hpp"

#include <numeric>
#include <string>

#include "snc/error.hpp"

namespace snc {

std::size_t StarProfile::vertex_count() const {
  return std::accumulate(core_sizes.begin(), core_sizes.end(), isolated) +
         std::accumulate(ray_sizes.begin(), ray_sizes.end(), std::size_t{0});
}

GeneratedStar gen_generalized_star(const StarProfile& p) {
  const std::size_t n = p.core_sizes.size();
  const std::size_t m = p.ray_sizes.size();
  if (n == 0 && m == 0) {
    // edgeless degenerate case
  } else if (n == 0 || (m != n && m + 1 != n)) {
    throw Error(ErrorCode::BadProfile,
                "need n core layers and n or n-1 ray classes, got " +
                    std::to_string(n) + " and " + std::to_string(m));
  }
  for (std::size_t s : p.core_sizes) {
    if (s == 0) throw Error(ErrorCode::BadProfile, "empty core layer");
  }
  for (std::size_t s : p.ray_sizes) {
    if (s == 0) throw Error(ErrorCode::BadProfile, "empty ray class");
  }

  GeneratedStar out;
  GeneralizedStarDecomposition& dec = out.decomposition;
  VertexId next = 0;
  auto take = [&next](std::size_t count) {
    VertexSet part(count);
    std::iota(part.begin(), part.end(), next);
    next += count;
    return part;
  };
  dec.rays.push_back(take(p.isolated));
  for (std::size_t s : p.ray_sizes) dec.rays.push_back(take(s));
  for (std::size_t s : p.core_sizes) dec.core.push_back(take(s));
  out.graph = graph_of(dec);
  return out;
}

UndirectedGraph gen_sun(std::size_t core_size, std::size_t ray_count) {
  if (core_size == 0) throw Error(ErrorCode::BadProfile, "sun needs a core");
  StarProfile p{{core_size}, {}, 0};
  if (ray_count > 0) p.ray_sizes.push_back(ray_count);
  return gen_generalized_star(p).graph;
}

UndirectedGraph gen_star(std::size_t ray_count) {
  if (ray_count == 0) throw Error(ErrorCode::BadProfile, "star needs a ray");
  return gen_sun(1, ray_count);
}

UndirectedGraph gen_complete(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::BadProfile, "empty complete graph");
  return gen_sun(k, 0);
}

Digraph random_tournament(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Digraph t(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      rng.bit() ? t.add_arc(v, u) : t.add_arc(u, v);
    }
  }
  return t;
}

Digraph random_digraph_missing(const UndirectedGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  Digraph d(g.size());
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v = u + 1; v < g.size(); ++v) {
      if (g.has_edge(u, v)) continue;
      rng.bit() ? d.add_arc(v, u) : d.add_arc(u, v);
    }
  }
  return d;
}

WeightMap random_weights(std::size_t n, std::uint64_t seed,
                         std::uint64_t max_weight) {
  Rng rng(seed);
  std::vector<Rational> values;
  values.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    values.emplace_back(rng.between(0, max_weight));
  }
  return WeightMap(std::move(values));
}

Digraph random_digraph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Digraph d(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      switch (rng.below(3)) {
        case 1: d.add_arc(u, v); break;
        case 2: d.add_arc(v, u); break;
        default: break;
      }
    }
  }
  return d;
}

UndirectedGraph random_graph(std::size_t n, std::uint64_t seed,
                             unsigned percent) {
  Rng rng(seed);
  UndirectedGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.below(100) < percent) g.add_edge(u, v);
    }
  }
  return g;
}

StarProfile random_star_profile(std::size_t max_n, Rng& rng) {
  const std::size_t total = rng.between(2, std::max<std::size_t>(2, max_n));
  // Each level costs one core vertex and (except possibly the last) one ray.
  const std::size_t levels = rng.between(1, std::max<std::size_t>(1, total / 2));
  const bool last_has_rays = levels == 1 ? true : rng.below(4) != 0;

  StarProfile p;
  p.core_sizes.assign(levels, 1);
  p.ray_sizes.assign(last_has_rays ? levels : levels - 1, 1);
  std::size_t used = p.vertex_count();
  // 1 + |rays| + |core| slots: A₀, the ray classes, the core layers.
  const std::size_t slots = 1 + p.ray_sizes.size() + p.core_sizes.size();
  while (used < total) {
    const std::size_t slot = rng.below(slots);
    if (slot == 0) {
      ++p.isolated;
    } else if (slot <= p.ray_sizes.size()) {
      ++p.ray_sizes[slot - 1];
    } else {
      ++p.core_sizes[slot - 1 - p.ray_sizes.size()];
    }
    ++used;
  }
  return p;
}

UndirectedGraph relabel(const UndirectedGraph& g,
                        const std::vector<VertexId>& perm) {
  UndirectedGraph out(g.size());
  for (auto [u, v] : g.edges()) out.add_edge(perm.at(u), perm.at(v));
  return out;
}

}  // namespace snc
