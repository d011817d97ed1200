#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "snc/counterexample.hpp"
#include "snc/digraph.hpp"
#include "snc/good_edges.hpp"
#include "snc/median_order.hpp"
#include "snc/oracle.hpp"
#include "snc/star.hpp"

namespace snc::io {

using nlohmann::json;

struct DigraphDocument {
  WeightedDigraph instance;
  /// External label of each vertex; the decimal index when the input had
  /// no labels.
  std::vector<std::string> labels;
};

struct GraphDocument {
  UndirectedGraph graph;
  std::vector<std::string> labels;
};

// Text formats, one directive per line, '#' starts a comment:
//   digraph <n> / arc <u> <v> / weight <v> <num> <den>
//   graph <n>   / edge <u> <v>
// Omitted weights default to 1. Errors carry the 1-based line number.
DigraphDocument parse_digraph(std::string_view text);
GraphDocument parse_graph(std::string_view text);

/// Canonical text: header, sorted arcs, then every weight different from 1.
std::string format_digraph(const WeightedDigraph& d);
std::string format_graph(const UndirectedGraph& g);

// JSON documents: {"kind": "digraph", "n", "arcs": [[u,v],...],
// "weights": [rational,...], "labels": [...]} and {"kind": "graph", "n",
// "edges", "labels"}. With labels present, endpoints may be given by label.
DigraphDocument digraph_from_json(const json& j);
GraphDocument graph_from_json(const json& j);

/// Dispatches on the first non-blank character: '{' means JSON.
DigraphDocument read_digraph(std::string_view text);
GraphDocument read_graph(std::string_view text);

/// {"num": …, "den": …}; each an integer when it fits in 64 bits, a decimal
/// string otherwise.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const PerturbedRational& p);

json to_json(const Digraph& d);
json to_json(const WeightedDigraph& d);
json to_json(const UndirectedGraph& g);
json to_json(const FeedbackViolation& v);
json to_json(const CertifiedOrder& co);
json to_json(const MissingEdgeStatus& s);
json to_json(const WitnessCertificate& cert);
json to_json(const WitnessResult& result);
json to_json(const GeneralizedStarDecomposition& dec);
json to_json(const DecompositionCheck& check);
json to_json(const SquareViolation& v);
json to_json(const SpecialClassification& c);
json to_json(const AdversarialWitness& a);
json to_json(const RecognitionReport& r);
json to_json(const CounterexampleReport& r);
json to_json(const SweepReport& r, bool include_timing = false);

WitnessCertificate certificate_from_json(const json& j);
GeneralizedStarDecomposition decomposition_from_json(const json& j);

/// Graphviz rendering for inspection; not read back.
std::string to_dot(const Digraph& d);
std::string to_dot(const UndirectedGraph& g);

}  // namespace snc::io
