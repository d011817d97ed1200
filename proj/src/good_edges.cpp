#include "snc/good_edges.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "snc/counterexample.hpp"
#include "snc/oracle.hpp"

namespace snc {
namespace {

std::string edge_text(VertexId a, VertexId b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

// Lowest v ∉ {a,b} with v→a that does not reach b within two steps.
std::optional<VertexId> refute_condition(const Digraph& d, VertexId a,
                                         VertexId b) {
  for (VertexId v : d.in(a)) {
    if (v == b) continue;
    if (!reaches_within_two(d, v, b)) return v;
  }
  return std::nullopt;
}

nlohmann::json arcs_json(const std::vector<Arc>& arcs) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [u, v] : arcs) out.push_back({u, v});
  return out;
}

[[noreturn]] void raise(const WeightedDigraph& d, std::string stage,
                        std::string message, nlohmann::json state) {
  CounterexampleReport report{std::move(stage), std::move(message), d.digraph,
                              d.weights, std::move(state)};
  throw TheoremViolation(std::move(report));
}

bool is_subset(const VertexSet& small, const VertexSet& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

bool reaches_within_two(const Digraph& d, VertexId from, VertexId to) {
  if (d.has_arc(from, to)) return true;
  for (VertexId w : d.out(from)) {
    if (w != to && d.has_arc(w, to)) return true;
  }
  return false;
}

MissingEdgeStatus classify_missing_edge(const Digraph& d, VertexId a,
                                        VertexId b) {
  if (a == b || d.adjacent(a, b)) {
    throw Error(ErrorCode::NotMissing, edge_text(a, b) + " is not a missing edge");
  }
  MissingEdgeStatus status;
  status.a = a;
  status.b = b;
  status.witness_against_i = refute_condition(d, a, b);
  status.witness_against_ii = refute_condition(d, b, a);
  status.satisfies_i = !status.witness_against_i;
  status.satisfies_ii = !status.witness_against_ii;
  return status;
}

GoodEdgesReport all_missing_edges_good(const Digraph& d) {
  GoodEdgesReport report;
  for (auto [a, b] : missing_graph(d).graph.edges()) {
    report.statuses.push_back(classify_missing_edge(d, a, b));
    report.all_good = report.all_good && report.statuses.back().good();
  }
  return report;
}

bool is_convenient(const Digraph& d, const Arc& arc) {
  if (arc.first == arc.second || d.adjacent(arc.first, arc.second)) {
    return false;
  }
  return !refute_condition(d, arc.first, arc.second);
}

Completion complete_to_tournament(const Digraph& d,
                                  std::span<const MissingEdgeStatus> statuses) {
  Completion result{d, {}};
  for (const MissingEdgeStatus& s : statuses) {
    if (!s.good()) {
      throw Error(ErrorCode::NotAllGood,
                  "missing edge " + edge_text(s.a, s.b) + " is not good");
    }
    const Arc arc = s.satisfies_i ? Arc{s.a, s.b} : Arc{s.b, s.a};
    result.tournament.add_arc(arc.first, arc.second);
    result.orientations.push_back({arc});
  }
  if (!result.tournament.is_tournament()) {
    throw std::invalid_argument(
        "statuses do not cover every missing edge of the digraph");
  }
  return result;
}

Completion complete_to_tournament(const Digraph& d) {
  const GoodEdgesReport report = all_missing_edges_good(d);
  return complete_to_tournament(d, report.statuses);
}

Digraph reorient_at_feed(const Digraph& t, const UndirectedGraph& missing,
                         VertexId f) {
  Digraph result = t;
  for (VertexId u : missing.neighbors(f)) {
    if (result.has_arc(f, u)) result.reverse_arc(f, u);
  }
  return result;
}

WitnessCertificate find_witness_good(const WeightedDigraph& d,
                                     const LocalSearchOptions& options) {
  const Digraph& g = d.digraph;
  const GoodEdgesReport goodness = all_missing_edges_good(g);
  Completion completion = complete_to_tournament(g, goodness.statuses);

  WitnessCertificate cert;
  cert.instance = d;
  cert.orientations = std::move(completion.orientations);
  cert.tournament = std::move(completion.tournament);
  cert.order = local_median_order(cert.tournament, d.weights, options);
  const VertexId f = feed_vertex(cert.order);
  cert.witness = f;

  const UndirectedGraph missing = missing_graph(g).graph;
  const Digraph t_prime = reorient_at_feed(cert.tournament, missing, f);
  for (VertexId u : missing.neighbors(f)) {
    if (cert.tournament.has_arc(f, u)) cert.reoriented_edges.push_back({u, f});
  }

  const PerturbedWeights pw = perturb_weights(d.weights);
  cert.recheck_t_prime = feedback_check(t_prime, pw, cert.order.order);

  nlohmann::json state;
  state["tournament_arcs"] = arcs_json(cert.tournament.arcs());
  state["order"] = cert.order.order.sequence();
  state["feed_vertex"] = f;
  state["reoriented"] = arcs_json(cert.reoriented_edges);
  nlohmann::json moves = nlohmann::json::array();
  for (const LocalMove& m : cert.order.moves) {
    moves.push_back({m.kind == ViolationKind::Prefix ? "prefix" : "suffix",
                     m.i, m.j, m.vertex});
  }
  state["move_log"] = std::move(moves);

  if (!cert.recheck_t_prime.empty()) {
    raise(d, "feedback-after-reorientation",
          "the order stopped satisfying the feedback property on T'", state);
  }

  const VertexSet out_d = out_neighborhood(g, f);
  const VertexSet second_d = second_out_neighborhood(g, f);
  if (out_neighborhood(t_prime, f) != out_d) {
    raise(d, "closure-first-neighborhood",
          "out-neighborhood of the feed vertex differs between D and T'", state);
  }
  if (!is_subset(second_out_neighborhood(t_prime, f), set_union(out_d, second_d))) {
    raise(d, "closure-second-neighborhood",
          "T' reaches a vertex at distance 2 that D does not reach within 2",
          state);
  }
  if (!has_weighted_snp(WeightedDigraph(t_prime, d.weights), f).holds) {
    raise(d, "weighted-snp-in-T-prime",
          "the feed vertex lacks the weighted SNP in the tournament T'", state);
  }

  cert.lhs = d.weights.sum(out_d);
  cert.rhs = d.weights.sum(second_d);
  if (cert.lhs > cert.rhs) {
    state["lhs"] = to_string(cert.lhs);
    state["rhs"] = to_string(cert.rhs);
    raise(d, "weighted-snp-in-D",
          "the feed vertex lacks the weighted SNP in D", state);
  }
  return cert;
}

WitnessResult find_witness(const WeightedDigraph& d,
                           const LocalSearchOptions& options) {
  WitnessResult result;
  GoodEdgesReport goodness = all_missing_edges_good(d.digraph);
  if (goodness.all_good) {
    result.certificate = find_witness_good(d, options);
    result.certified = true;
    result.witness = result.certificate->witness;
    result.lhs = result.certificate->lhs;
    result.rhs = result.certificate->rhs;
    return result;
  }
  result.statuses = std::move(goodness.statuses);
  const VertexSet candidates = brute_force_snp_vertices(d);
  if (candidates.empty()) {
    CounterexampleReport report{"exhaustive-scan",
                                "no vertex has the weighted SNP", d.digraph,
                                d.weights, nlohmann::json::object()};
    throw TheoremViolation(std::move(report), ErrorCode::NoWitnessFound);
  }
  result.witness = candidates.front();
  const SnpEvaluation eval = has_weighted_snp(d, result.witness);
  result.lhs = eval.out_weight;
  result.rhs = eval.second_weight;
  return result;
}

CertificateCheck verify_certificate(const WitnessCertificate& cert) {
  CertificateCheck check;
  auto fail = [&check](std::string why) {
    check.ok = false;
    check.failures.push_back(std::move(why));
  };

  const Digraph& g = cert.instance.digraph;
  const WeightMap& w = cert.instance.weights;
  const Digraph& t = cert.tournament;
  const std::size_t n = g.size();
  if (w.size() != n || t.size() != n || cert.order.order.size() != n || n == 0) {
    fail("instance, tournament and order disagree on the vertex count");
    return check;
  }

  if (!t.is_tournament()) fail("T is not a tournament");
  for (auto [u, v] : g.arcs()) {
    if (!t.has_arc(u, v)) {
      fail("T drops the arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
  const UndirectedGraph missing = missing_graph(g).graph;
  if (cert.orientations.size() != missing.edge_count()) {
    fail("orientation count differs from the number of missing edges");
  }
  for (const ConvenientOrientation& o : cert.orientations) {
    const auto [u, v] = o.arc;
    if (u >= n || v >= n || !missing.has_edge(u, v)) {
      fail("orientation " + edge_text(u, v) + " is not on a missing edge");
      continue;
    }
    if (!t.has_arc(u, v)) fail("T does not contain orientation " + edge_text(u, v));
    if (!is_convenient(g, o.arc)) {
      fail("orientation (" + std::to_string(u) + "," + std::to_string(v) +
           ") is not convenient");
    }
  }
  if (!check.ok) return check;

  const PerturbedWeights pw = perturb_weights(w);
  if (!feedback_check(t, pw, cert.order.order).empty()) {
    fail("order fails the feedback property on T");
  }
  if (order_objective(t, pw, cert.order.order) != cert.order.objective) {
    fail("recorded objective does not match the order");
  }
  const VertexId f = feed_vertex(cert.order);
  if (f != cert.witness) fail("witness is not the last vertex of the order");

  const Digraph t_prime = reorient_at_feed(t, missing, f);
  if (!feedback_check(t_prime, pw, cert.order.order).empty()) {
    fail("order fails the feedback property on T'");
  }
  if (!cert.recheck_t_prime.empty()) fail("certificate records T' violations");
  std::vector<Arc> flipped;
  for (VertexId u : missing.neighbors(f)) {
    if (t.has_arc(f, u)) flipped.push_back({u, f});
  }
  if (flipped != cert.reoriented_edges) {
    fail("reoriented edges do not match T");
  }

  const VertexSet out_d = out_neighborhood(g, f);
  const VertexSet second_d = second_out_neighborhood(g, f);
  if (out_neighborhood(t_prime, f) != out_d) {
    fail("N+(f) differs between D and T'");
  }
  if (!is_subset(second_out_neighborhood(t_prime, f), set_union(out_d, second_d))) {
    fail("N++ of f in T' escapes N+(f) u N++(f) of D");
  }
  const Rational lhs = w.sum(out_d);
  const Rational rhs = w.sum(second_d);
  if (lhs != cert.lhs || rhs != cert.rhs) {
    fail("recorded weights of N+(f), N++(f) do not match the instance");
  }
  if (lhs > rhs) fail("witness lacks the weighted SNP");
  return check;
}

}  // namespace snc
