#include "snc/star.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "snc/counterexample.hpp"
#include "snc/good_edges.hpp"

namespace snc {
namespace {

using Mask = std::uint64_t;

Mask bit(VertexId v) { return Mask{1} << v; }

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

DecompositionCheck reject(int clause, std::string detail) {
  return {false, clause, std::move(detail)};
}

// Cross edges between disjoint edges {p,q} and {r,s}.
std::vector<Arc> cross_edges(const UndirectedGraph& g, VertexId p, VertexId q,
                             VertexId r, VertexId s) {
  std::vector<Arc> out;
  for (VertexId a : {p, q}) {
    for (VertexId b : {r, s}) {
      if (g.has_edge(a, b)) out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_of_matching(const UndirectedGraph& g, VertexId a1, VertexId b1,
                        VertexId a2, VertexId b2, VertexId p, VertexId q,
                        VertexId r, VertexId s) {
  // Cross edges must be within {a1b1, a2b2}; every other cross pair absent.
  for (VertexId a : {p, q}) {
    for (VertexId b : {r, s}) {
      const bool allowed = (a == a1 && b == b1) || (a == a2 && b == b2);
      if (!allowed && g.has_edge(a, b)) return false;
    }
  }
  return true;
}

struct StableSearch {
  std::vector<Mask> adj;
  Mask best = 0;
  int best_size = -1;

  // Number of cliques in a greedy clique cover of `cand`.
  int cover_bound(Mask cand) const {
    int cliques = 0;
    while (cand) {
      const int v = std::countr_zero(cand);
      Mask clique = bit(v);
      Mask pool = cand & adj[v];
      while (pool) {
        const int w = std::countr_zero(pool);
        if ((adj[w] & clique) == clique) clique |= bit(w);
        pool &= pool - 1;
      }
      cand &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void run(Mask cand, Mask current, int size) {
    if (size > best_size) {
      best_size = size;
      best = current;
    }
    if (!cand || size + cover_bound(cand) <= best_size) return;
    const int v = std::countr_zero(cand);
    run(cand & ~bit(v) & ~adj[v], current | bit(v), size + 1);
    run(cand & ~bit(v), current, size);
  }
};

}  // namespace

std::string_view to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::Complete: return "complete";
    case SpecialKind::Star: return "star";
    case SpecialKind::Sun: return "sun";
    case SpecialKind::General: return "general";
  }
  return "general";
}

DecompositionCheck validate_decomposition(const UndirectedGraph& g,
                                          const GeneralizedStarDecomposition& dec) {
  const std::size_t n = dec.core.size();
  if (dec.rays.empty()) return reject(1, "A0 is missing");
  const std::size_t m = dec.rays.size() - 1;
  const bool shape_ok = (n == 0 && m == 0) || (n > 0 && (m == n || m + 1 == n));
  if (!shape_ok) {
    return reject(1, "expected " + std::to_string(n) + " or " +
                         std::to_string(n == 0 ? 0 : n - 1) +
                         " ray classes after A0, got " + std::to_string(m));
  }

  // 1) partition of the vertex set
  std::vector<int> owner(g.size(), 0);
  std::size_t covered = 0;
  auto claim = [&](const VertexSet& part) -> bool {
    for (VertexId v : part) {
      if (v >= g.size() || owner[v]) return false;
      owner[v] = 1;
      ++covered;
    }
    return true;
  };
  for (const VertexSet& a : dec.rays) {
    if (!claim(a)) return reject(1, "ray classes overlap or leave the vertex range");
  }
  for (const VertexSet& x : dec.core) {
    if (!claim(x)) return reject(1, "core layers overlap the rays or each other");
  }
  if (covered != g.size()) {
    return reject(1, std::to_string(g.size() - covered) + " vertices unassigned");
  }

  // 2) core layers nonempty, their union a clique
  VertexSet core;
  for (std::size_t i = 0; i < n; ++i) {
    if (dec.core[i].empty()) {
      return reject(2, "X" + std::to_string(i + 1) + " is empty");
    }
    core.insert(core.end(), dec.core[i].begin(), dec.core[i].end());
  }
  for (std::size_t p = 0; p < core.size(); ++p) {
    for (std::size_t q = p + 1; q < core.size(); ++q) {
      if (!g.has_edge(core[p], core[q])) {
        return reject(2, "core vertices " + std::to_string(core[p]) + " and " +
                             std::to_string(core[q]) + " are not adjacent");
      }
    }
  }

  // 3) rays stable, A_i nonempty for i > 0
  VertexSet rays;
  for (std::size_t i = 0; i <= m; ++i) {
    if (i > 0 && dec.rays[i].empty()) {
      return reject(3, "A" + std::to_string(i) + " is empty");
    }
    rays.insert(rays.end(), dec.rays[i].begin(), dec.rays[i].end());
  }
  for (std::size_t p = 0; p < rays.size(); ++p) {
    for (std::size_t q = p + 1; q < rays.size(); ++q) {
      if (g.has_edge(rays[p], rays[q])) {
        return reject(3, "ray vertices " + std::to_string(rays[p]) + " and " +
                             std::to_string(rays[q]) + " are adjacent");
      }
    }
  }

  // 4) N(A0) = ∅, N(a) = X1 ∪ … ∪ Xi for a ∈ Ai
  VertexSet expected;
  for (std::size_t i = 0; i <= m; ++i) {
    if (i > 0) {
      expected.insert(expected.end(), dec.core[i - 1].begin(),
                      dec.core[i - 1].end());
      std::sort(expected.begin(), expected.end());
    }
    for (VertexId a : dec.rays[i]) {
      auto nb = g.neighbors(a);
      if (!std::equal(nb.begin(), nb.end(), expected.begin(), expected.end())) {
        return reject(4, "N(" + std::to_string(a) + ") = " +
                             set_text(VertexSet(nb.begin(), nb.end())) +
                             " but A" + std::to_string(i) + " requires " +
                             set_text(expected));
      }
    }
  }
  return {};
}

std::optional<SquareViolation> check_condition_B(const UndirectedGraph& g) {
  const std::vector<Arc> edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [p, q] = edges[e];
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [r, s] = edges[f];
      if (p == r || p == s || q == r || q == s) continue;
      // Square p-q-s-r-p: cross edges within {pr, qs}.
      if (subset_of_matching(g, p, r, q, s, p, q, r, s)) {
        return SquareViolation{p, q, s, r, cross_edges(g, p, q, r, s)};
      }
      // Square p-q-r-s-p: cross edges within {ps, qr}.
      if (subset_of_matching(g, p, s, q, r, p, q, r, s)) {
        return SquareViolation{p, q, r, s, cross_edges(g, p, q, r, s)};
      }
    }
  }
  return std::nullopt;
}

bool condition_B_working_form(const UndirectedGraph& g) {
  const std::vector<Arc> edges = g.edges();
  auto sees_both = [&](VertexId z, VertexId a, VertexId b) {
    return g.has_edge(z, a) && g.has_edge(z, b);
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [p, q] = edges[e];
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [r, s] = edges[f];
      if (p == r || p == s || q == r || q == s) continue;
      const bool dominated = sees_both(p, r, s) || sees_both(q, r, s) ||
                             sees_both(r, p, q) || sees_both(s, p, q);
      if (!dominated) return false;
    }
  }
  return true;
}

VertexSet max_stable_set(const UndirectedGraph& g) {
  VertexSet all(g.size());
  for (VertexId v = 0; v < g.size(); ++v) all[v] = v;
  return max_stable_set(g, all);
}

VertexSet max_stable_set(const UndirectedGraph& g, const VertexSet& within) {
  if (g.size() > kMaxStableSetVertices) {
    throw Error(ErrorCode::TooLarge,
                "maximum stable set supports at most " +
                    std::to_string(kMaxStableSetVertices) + " vertices");
  }
  StableSearch search;
  search.adj.assign(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    search.adj[u] |= bit(v);
    search.adj[v] |= bit(u);
  }
  Mask cand = 0;
  for (VertexId v : within) cand |= bit(v);
  search.run(cand, 0, 0);
  VertexSet result;
  for (Mask m = search.best; m; m &= m - 1) {
    result.push_back(static_cast<VertexId>(std::countr_zero(m)));
  }
  return result;
}

DecomposeResult decompose(const UndirectedGraph& g) {
  DecomposeResult result;
  GeneralizedStarDecomposition& dec = result.attempted;
  dec.rays.emplace_back();
  VertexSet rest;
  for (VertexId v = 0; v < g.size(); ++v) {
    (g.degree(v) == 0 ? dec.rays[0] : rest).push_back(v);
  }

  const VertexSet stable = max_stable_set(g, rest);
  std::map<std::size_t, VertexSet> by_degree;
  for (VertexId a : stable) by_degree[g.degree(a)].push_back(a);

  std::vector<std::uint8_t> placed(g.size(), 0);
  for (VertexId a : stable) placed[a] = 1;
  for (const auto& [degree, cls] : by_degree) {
    dec.rays.push_back(cls);
    VertexSet layer;
    for (VertexId a : cls) {
      for (VertexId x : g.neighbors(a)) {
        if (!placed[x]) {
          placed[x] = 1;
          layer.push_back(x);
        }
      }
    }
    std::sort(layer.begin(), layer.end());
    dec.core.push_back(std::move(layer));
  }

  result.check = validate_decomposition(g, dec);
  if (result.check.valid) result.decomposition = dec;
  return result;
}

UndirectedGraph graph_of(const GeneralizedStarDecomposition& dec) {
  std::size_t n = 0;
  for (const auto& part : dec.rays) n += part.size();
  for (const auto& part : dec.core) n += part.size();
  UndirectedGraph g(n);
  VertexSet core;
  for (const VertexSet& layer : dec.core) {
    for (std::size_t k = 0; k < layer.size(); ++k) {
      for (VertexId y : core) g.add_edge(layer[k], y);
      for (std::size_t l = k + 1; l < layer.size(); ++l) g.add_edge(layer[k], layer[l]);
    }
    core.insert(core.end(), layer.begin(), layer.end());
  }
  VertexSet seen;
  for (std::size_t i = 1; i < dec.rays.size() && i <= dec.core.size(); ++i) {
    seen.insert(seen.end(), dec.core[i - 1].begin(), dec.core[i - 1].end());
    for (VertexId a : dec.rays[i]) {
      for (VertexId x : seen) g.add_edge(a, x);
    }
  }
  return g;
}

SpecialClassification classify_special(const GeneralizedStarDecomposition& dec) {
  const UndirectedGraph g = graph_of(dec);
  SpecialClassification c;
  c.levels = dec.core.size();
  c.isolated = dec.rays.empty() ? 0 : dec.rays[0].size();

  VertexSet active, universal, others;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 0) active.push_back(v);
  }
  for (VertexId v : active) {
    (g.degree(v) + 1 == active.size() ? universal : others).push_back(v);
  }
  bool others_stable = true;
  for (std::size_t p = 0; p < others.size() && others_stable; ++p) {
    for (std::size_t q = p + 1; q < others.size(); ++q) {
      if (g.has_edge(others[p], others[q])) {
        others_stable = false;
        break;
      }
    }
  }
  c.is_complete = others.empty();
  c.is_sun = others_stable;
  c.is_star = !active.empty() &&
              (active.size() == 2 || (universal.size() == 1 && others_stable));
  if (c.is_complete) {
    c.kind = SpecialKind::Complete;
  } else if (c.is_star) {
    c.kind = SpecialKind::Star;
  } else if (c.is_sun) {
    c.kind = SpecialKind::Sun;
  } else {
    c.kind = SpecialKind::General;
  }
  return c;
}

AdversarialWitness adversarial_digraph(const UndirectedGraph& g,
                                       const SquareViolation& viol) {
  const auto [x, y, u, v] = std::tuple{viol.x, viol.y, viol.u, viol.v};
  const std::size_t n = g.size();
  const bool in_range = x < n && y < n && u < n && v < n;
  const bool distinct = x != y && x != u && x != v && y != u && y != v && u != v;
  if (!in_range || !distinct || !g.has_edge(x, y) || !g.has_edge(u, v) ||
      g.has_edge(x, u) || g.has_edge(y, v)) {
    throw Error(ErrorCode::NotAViolation,
                "labelling (" + std::to_string(x) + "," + std::to_string(y) +
                    "," + std::to_string(u) + "," + std::to_string(v) +
                    ") is not a square violation");
  }

  AdversarialWitness out{Digraph(n), {std::min(x, y), std::max(x, y)}};
  Digraph& d = out.digraph;
  for (VertexId w = 0; w < n; ++w) {
    if (w != u && !g.has_edge(w, u)) {
      w == x ? d.add_arc(u, x) : d.add_arc(w, u);
    }
  }
  for (VertexId w = 0; w < n; ++w) {
    if (w != v && !g.has_edge(w, v)) {
      w == y ? d.add_arc(v, y) : d.add_arc(w, v);
    }
  }
  for (VertexId p = 0; p < n; ++p) {
    if (p == u || p == v) continue;
    for (VertexId q = p + 1; q < n; ++q) {
      if (q == u || q == v || g.has_edge(p, q)) continue;
      d.add_arc(p, q);
    }
  }

  const MissingEdgeStatus status = classify_missing_edge(d, x, y);
  if (missing_graph(d).graph != g || status.good()) {
    CounterexampleReport report{
        "adversarial-construction",
        "the constructed digraph does not make the designated edge bad", d,
        WeightMap::uniform(n), nlohmann::json::object()};
    report.state["graph_edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) report.state["graph_edges"].push_back({a, b});
    report.state["labelling"] = {x, y, u, v};
    throw TheoremViolation(std::move(report));
  }
  return out;
}

RecognitionReport recognize(const UndirectedGraph& g) {
  RecognitionReport report;
  report.violation = check_condition_B(g);
  DecomposeResult dec = decompose(g);
  report.check = dec.check;
  const bool by_b = !report.violation.has_value();
  const bool by_a = dec.decomposition.has_value();
  if (by_a != by_b || condition_B_working_form(g) != by_b) {
    CounterexampleReport cx{"route-agreement",
                            "condition (B) and the decomposition disagree",
                            Digraph(g.size()), WeightMap::uniform(g.size()),
                            nlohmann::json::object()};
    cx.state["graph_edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) cx.state["graph_edges"].push_back({a, b});
    cx.state["condition_B"] = by_b;
    cx.state["decomposition_valid"] = by_a;
    cx.state["failed_clause"] = dec.check.failed_clause;
    cx.state["detail"] = dec.check.detail;
    throw TheoremViolation(std::move(cx));
  }
  report.is_generalized_star = by_a;
  if (by_a) {
    report.special = classify_special(*dec.decomposition);
    report.decomposition = std::move(dec.decomposition);
  } else {
    report.adversary = adversarial_digraph(g, *report.violation);
  }
  return report;
}

}  // namespace snc
