#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "snc/rational.hpp"

namespace snc {

using VertexId = std::size_t;

/// Sorted ascending, duplicate-free.
using VertexSet = std::vector<VertexId>;

using Arc = std::pair<VertexId, VertexId>;

/// Loop-free, digon-free directed graph on vertices [0, n). Adjacency is kept
/// by tail and by head (sorted), plus a dense matrix for O(1) arc lookups.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_arc(VertexId u, VertexId v) const;
  /// True when an arc joins u and v in either direction.
  bool adjacent(VertexId u, VertexId v) const {
    return has_arc(u, v) || has_arc(v, u);
  }

  /// Throws LoopRejected, DigonRejected, DuplicateArc or VertexOutOfRange.
  void add_arc(VertexId u, VertexId v);
  /// Removes (u,v) if present; returns whether it was.
  bool remove_arc(VertexId u, VertexId v);
  /// Replaces (u,v) by (v,u). Requires (u,v) present.
  void reverse_arc(VertexId u, VertexId v);

  std::span<const VertexId> out(VertexId v) const;
  std::span<const VertexId> in(VertexId v) const;

  /// All arcs, lexicographically sorted.
  std::vector<Arc> arcs() const;

  bool is_tournament() const noexcept {
    return arc_count_ == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::size_t n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<std::uint8_t> matrix_;
};

/// Simple undirected graph on [0, n).
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(VertexId u, VertexId v) const;
  /// Throws LoopRejected, DuplicateEdge or VertexOutOfRange.
  void add_edge(VertexId u, VertexId v);

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Arc> edges() const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Nonnegative exact vertex weights.
class WeightMap {
 public:
  WeightMap() = default;
  /// Throws NegativeWeight.
  explicit WeightMap(std::vector<Rational> weights);

  static WeightMap uniform(std::size_t n, const Rational& value = 1);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](VertexId v) const { return weights_.at(v); }
  /// Throws NegativeWeight.
  void set(VertexId v, Rational value);

  Rational sum(std::span<const VertexId> vertices) const;

  const std::vector<Rational>& values() const noexcept { return weights_; }

  friend bool operator==(const WeightMap&, const WeightMap&) = default;

 private:
  std::vector<Rational> weights_;
};

struct WeightedDigraph {
  WeightedDigraph() = default;
  /// Throws std::invalid_argument when the weight map does not cover
  /// exactly the digraph's vertices.
  WeightedDigraph(Digraph d, WeightMap w);

  Digraph digraph;
  WeightMap weights;
};

VertexSet out_neighborhood(const Digraph& g, VertexId v);
VertexSet in_neighborhood(const Digraph& g, VertexId v);

/// Vertices at directed distance exactly 2 from v.
VertexSet second_out_neighborhood(const Digraph& g, VertexId v);
/// Vertices at directed distance exactly 2 to v.
VertexSet second_in_neighborhood(const Digraph& g, VertexId v);

struct MissingGraph {
  UndirectedGraph graph;
  /// Non-whole vertices: those incident to at least one missing edge.
  VertexSet support;
};

MissingGraph missing_graph(const Digraph& g);

struct SnpEvaluation {
  bool holds = false;
  Rational out_weight;     // ω(N⁺(v))
  Rational second_weight;  // ω(N⁺⁺(v))
};

SnpEvaluation has_weighted_snp(const WeightedDigraph& d, VertexId v);

/// Unweighted form: d⁺(v) ≤ d⁺⁺(v).
bool has_snp(const Digraph& g, VertexId v);

}  // namespace snc
