#include "snc/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "snc/error.hpp"

namespace snc {
namespace {

void insert_sorted(std::vector<VertexId>& list, VertexId v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

std::string pair_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(std::size_t n)
    : n_(n), out_(n), in_(n), matrix_(n * n, 0) {}

void Digraph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range [0," +
                    std::to_string(n_) + ")");
  }
}

bool Digraph::has_arc(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return matrix_[u * n_ + v] != 0;
}

void Digraph::add_arc(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::LoopRejected, "loop " + pair_text(u, v));
  if (matrix_[u * n_ + v]) {
    throw Error(ErrorCode::DuplicateArc, "duplicate arc " + pair_text(u, v));
  }
  if (matrix_[v * n_ + u]) {
    throw Error(ErrorCode::DigonRejected,
                "arc " + pair_text(u, v) + " would close a digon");
  }
  matrix_[u * n_ + v] = 1;
  insert_sorted(out_[u], v);
  insert_sorted(in_[v], u);
  ++arc_count_;
}

bool Digraph::remove_arc(VertexId u, VertexId v) {
  if (!has_arc(u, v)) return false;
  matrix_[u * n_ + v] = 0;
  erase_sorted(out_[u], v);
  erase_sorted(in_[v], u);
  --arc_count_;
  return true;
}

void Digraph::reverse_arc(VertexId u, VertexId v) {
  if (!remove_arc(u, v)) {
    throw std::invalid_argument("reverse_arc: no arc " + pair_text(u, v));
  }
  add_arc(v, u);
}

std::span<const VertexId> Digraph::out(VertexId v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const VertexId> Digraph::in(VertexId v) const {
  check_vertex(v);
  return in_[v];
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

UndirectedGraph::UndirectedGraph(std::size_t n)
    : n_(n), adj_(n), matrix_(n * n, 0) {}

void UndirectedGraph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range [0," +
                    std::to_string(n_) + ")");
  }
}

bool UndirectedGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return matrix_[u * n_ + v] != 0;
}

void UndirectedGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::LoopRejected, "loop " + pair_text(u, v));
  if (matrix_[u * n_ + v]) {
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + pair_text(u, v));
  }
  matrix_[u * n_ + v] = matrix_[v * n_ + u] = 1;
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++edge_count_;
}

std::span<const VertexId> UndirectedGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<Arc> UndirectedGraph::edges() const {
  std::vector<Arc> result;
  result.reserve(edge_count_);
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

WeightMap::WeightMap(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (weights_[v] < 0) {
      throw Error(ErrorCode::NegativeWeight,
                  "negative weight at vertex " + std::to_string(v));
    }
  }
}

WeightMap WeightMap::uniform(std::size_t n, const Rational& value) {
  return WeightMap(std::vector<Rational>(n, value));
}

void WeightMap::set(VertexId v, Rational value) {
  if (value < 0) {
    throw Error(ErrorCode::NegativeWeight,
                "negative weight at vertex " + std::to_string(v));
  }
  weights_.at(v) = std::move(value);
}

Rational WeightMap::sum(std::span<const VertexId> vertices) const {
  Rational total = 0;
  for (VertexId v : vertices) total += weights_.at(v);
  return total;
}

WeightedDigraph::WeightedDigraph(Digraph d, WeightMap w)
    : digraph(std::move(d)), weights(std::move(w)) {
  if (weights.size() != digraph.size()) {
    throw std::invalid_argument("weight map covers " +
                                std::to_string(weights.size()) +
                                " vertices, digraph has " +
                                std::to_string(digraph.size()));
  }
}

VertexSet out_neighborhood(const Digraph& g, VertexId v) {
  auto out = g.out(v);
  return {out.begin(), out.end()};
}

VertexSet in_neighborhood(const Digraph& g, VertexId v) {
  auto in = g.in(v);
  return {in.begin(), in.end()};
}

namespace {

template <typename Step>
VertexSet second_neighborhood(const Digraph& g, VertexId v, Step step) {
  std::vector<std::uint8_t> mark(g.size(), 0);
  mark[v] = 1;
  for (VertexId w : step(v)) mark[w] = 1;
  VertexSet result;
  for (VertexId w : step(v)) {
    for (VertexId u : step(w)) {
      if (!mark[u]) {
        mark[u] = 1;
        result.push_back(u);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

VertexSet second_out_neighborhood(const Digraph& g, VertexId v) {
  return second_neighborhood(g, v, [&](VertexId x) { return g.out(x); });
}

VertexSet second_in_neighborhood(const Digraph& g, VertexId v) {
  return second_neighborhood(g, v, [&](VertexId x) { return g.in(x); });
}

MissingGraph missing_graph(const Digraph& g) {
  MissingGraph result{UndirectedGraph(g.size()), {}};
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) result.graph.add_edge(u, v);
    }
  }
  for (VertexId v = 0; v < g.size(); ++v) {
    if (result.graph.degree(v) > 0) result.support.push_back(v);
  }
  return result;
}

SnpEvaluation has_weighted_snp(const WeightedDigraph& d, VertexId v) {
  SnpEvaluation eval;
  eval.out_weight = d.weights.sum(d.digraph.out(v));
  eval.second_weight = d.weights.sum(second_out_neighborhood(d.digraph, v));
  eval.holds = eval.out_weight <= eval.second_weight;
  return eval;
}

bool has_snp(const Digraph& g, VertexId v) {
  return g.out(v).size() <= second_out_neighborhood(g, v).size();
}

}  // namespace snc
