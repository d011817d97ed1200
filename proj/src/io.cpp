#include "snc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace snc::io {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t stop = pos;
      while (stop < line.size() && !std::isspace(static_cast<unsigned char>(line[stop]))) ++stop;
      if (stop > pos) parsed.tokens.push_back(line.substr(pos, stop - pos));
      pos = stop;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message,
              line);
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_error(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

BigInt parse_bigint(std::string_view token, std::size_t line) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    parse_error(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return BigInt(std::string(token));
}

void expect_arity(const Line& l, std::size_t arity) {
  if (l.tokens.size() != arity) {
    parse_error(l.number, "'" + std::string(l.tokens[0]) + "' takes " +
                              std::to_string(arity - 1) + " arguments");
  }
}

std::size_t parse_header(const std::vector<Line>& lines, std::string_view kind) {
  if (lines.empty()) parse_error(1, "empty document");
  const Line& head = lines.front();
  if (head.tokens[0] != kind || head.tokens.size() != 2) {
    parse_error(head.number, "expected header '" + std::string(kind) + " <n>'");
  }
  return parse_index(head.tokens[1], head.number);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return labels;
}

// Re-throws library errors raised while applying a line with its number.
template <typename Fn>
void at_line(std::size_t line, Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.line()) throw;
    throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what(), line);
  }
}

json pairs_json(const std::vector<Arc>& pairs) {
  json out = json::array();
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

json set_json(const VertexSet& s) { return s; }

json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>(), 0);
  throw Error(ErrorCode::ParseError, "expected an integer or a decimal string");
}

std::string_view kind_name(ViolationKind k) {
  return k == ViolationKind::Prefix ? "prefix" : "suffix";
}

ViolationKind kind_from(const std::string& s) {
  if (s == "prefix") return ViolationKind::Prefix;
  if (s == "suffix") return ViolationKind::Suffix;
  throw Error(ErrorCode::ParseError, "unknown violation kind '" + s + "'");
}

std::vector<Arc> pairs_from_json(const json& j) {
  std::vector<Arc> out;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::ParseError, "expected a pair [u, v]");
    }
    out.emplace_back(p[0].get<VertexId>(), p[1].get<VertexId>());
  }
  return out;
}

PerturbedRational perturbed_from_json(const json& j) {
  return {rational_from_json(j.at("c0")), rational_from_json(j.at("c1")),
          rational_from_json(j.at("c2"))};
}

VertexId endpoint(const json& token,
                  const std::unordered_map<std::string, VertexId>& by_label) {
  if (token.is_string()) {
    auto it = by_label.find(token.get<std::string>());
    if (it == by_label.end()) {
      throw Error(ErrorCode::ParseError,
                  "unknown vertex label '" + token.get<std::string>() + "'");
    }
    return it->second;
  }
  return token.get<VertexId>();
}

std::vector<std::string> labels_from_json(
    const json& j, std::size_t n,
    std::unordered_map<std::string, VertexId>& by_label) {
  std::vector<std::string> labels = default_labels(n);
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) {
      throw Error(ErrorCode::ParseError, "label table size differs from n");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!by_label.emplace(labels[v], v).second) {
      throw Error(ErrorCode::ParseError, "duplicate label '" + labels[v] + "'");
    }
  }
  return labels;
}

template <typename Fn>
auto json_guard(Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

DigraphDocument parse_digraph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const std::size_t n = parse_header(lines, "digraph");
  Digraph d(n);
  std::vector<Rational> weights(n, Rational(1));
  std::vector<std::uint8_t> weighted(n, 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] == "arc") {
      expect_arity(l, 3);
      const VertexId u = parse_index(l.tokens[1], l.number);
      const VertexId v = parse_index(l.tokens[2], l.number);
      at_line(l.number, [&] { d.add_arc(u, v); });
    } else if (l.tokens[0] == "weight") {
      expect_arity(l, 4);
      const VertexId v = parse_index(l.tokens[1], l.number);
      if (v >= n) parse_error(l.number, "vertex " + std::to_string(v) + " out of range");
      if (weighted[v]) parse_error(l.number, "weight of vertex " + std::to_string(v) + " given twice");
      const BigInt num = parse_bigint(l.tokens[2], l.number);
      const BigInt den = parse_bigint(l.tokens[3], l.number);
      if (den <= 0) parse_error(l.number, "denominator must be positive");
      if (num < 0) {
        throw Error(ErrorCode::NegativeWeight,
                    "line " + std::to_string(l.number) + ": negative weight", l.number);
      }
      weights[v] = Rational(num, den);
      weighted[v] = 1;
    } else {
      parse_error(l.number, "unknown directive '" + std::string(l.tokens[0]) + "'");
    }
  }
  return {WeightedDigraph(std::move(d), WeightMap(std::move(weights))),
          default_labels(n)};
}

GraphDocument parse_graph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const std::size_t n = parse_header(lines, "graph");
  UndirectedGraph g(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != "edge") {
      parse_error(l.number, "unknown directive '" + std::string(l.tokens[0]) + "'");
    }
    expect_arity(l, 3);
    const VertexId u = parse_index(l.tokens[1], l.number);
    const VertexId v = parse_index(l.tokens[2], l.number);
    at_line(l.number, [&] { g.add_edge(u, v); });
  }
  return {std::move(g), default_labels(n)};
}

std::string format_digraph(const WeightedDigraph& d) {
  std::ostringstream out;
  out << "digraph " << d.digraph.size() << '\n';
  for (auto [u, v] : d.digraph.arcs()) out << "arc " << u << ' ' << v << '\n';
  for (VertexId v = 0; v < d.weights.size(); ++v) {
    if (d.weights[v] != 1) {
      out << "weight " << v << ' ' << numerator_of(d.weights[v]) << ' '
          << denominator_of(d.weights[v]) << '\n';
    }
  }
  return out.str();
}

std::string format_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

DigraphDocument digraph_from_json(const json& j) {
  return json_guard([&] {
    if (j.value("kind", "digraph") != "digraph") {
      throw Error(ErrorCode::ParseError, "expected kind 'digraph'");
    }
    const std::size_t n = j.at("n").get<std::size_t>();
    std::unordered_map<std::string, VertexId> by_label;
    DigraphDocument doc;
    doc.labels = labels_from_json(j, n, by_label);
    Digraph d(n);
    for (const json& arc : j.value("arcs", json::array())) {
      if (!arc.is_array() || arc.size() != 2) {
        throw Error(ErrorCode::ParseError, "arc must be a pair");
      }
      d.add_arc(endpoint(arc[0], by_label), endpoint(arc[1], by_label));
    }
    std::vector<Rational> weights(n, Rational(1));
    if (j.contains("weights")) {
      const json& ws = j.at("weights");
      if (ws.size() != n) throw Error(ErrorCode::ParseError, "weights must list n values");
      for (std::size_t v = 0; v < n; ++v) weights[v] = rational_from_json(ws[v]);
    }
    doc.instance = WeightedDigraph(std::move(d), WeightMap(std::move(weights)));
    return doc;
  });
}

GraphDocument graph_from_json(const json& j) {
  return json_guard([&] {
    if (j.value("kind", "graph") != "graph") {
      throw Error(ErrorCode::ParseError, "expected kind 'graph'");
    }
    const std::size_t n = j.at("n").get<std::size_t>();
    std::unordered_map<std::string, VertexId> by_label;
    GraphDocument doc;
    doc.labels = labels_from_json(j, n, by_label);
    doc.graph = UndirectedGraph(n);
    for (const json& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::ParseError, "edge must be a pair");
      }
      doc.graph.add_edge(endpoint(e[0], by_label), endpoint(e[1], by_label));
    }
    return doc;
  });
}

namespace {

bool looks_like_json(std::string_view text) {
  const std::size_t pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{';
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

DigraphDocument read_digraph(std::string_view text) {
  if (looks_like_json(text)) {
    const json j = parse_json_text(text);
    // A certificate embeds its instance.
    return digraph_from_json(j.contains("instance") ? j.at("instance") : j);
  }
  return parse_digraph(text);
}

GraphDocument read_graph(std::string_view text) {
  if (looks_like_json(text)) return graph_from_json(parse_json_text(text));
  return parse_graph(text);
}

json to_json(const Rational& r) {
  return {{"num", bigint_json(numerator_of(r))}, {"den", bigint_json(denominator_of(r))}};
}

Rational rational_from_json(const json& j) {
  return json_guard([&] {
    if (j.is_number_integer() || j.is_string()) return Rational(bigint_from_json(j));
    const BigInt den = bigint_from_json(j.at("den"));
    if (den <= 0) throw Error(ErrorCode::ParseError, "denominator must be positive");
    return Rational(bigint_from_json(j.at("num")), den);
  });
}

json to_json(const PerturbedRational& p) {
  return {{"c0", to_json(p.c0)}, {"c1", to_json(p.c1)}, {"c2", to_json(p.c2)}};
}

json to_json(const Digraph& d) {
  return {{"kind", "digraph"}, {"n", d.size()}, {"arcs", pairs_json(d.arcs())}};
}

json to_json(const WeightedDigraph& d) {
  json j = to_json(d.digraph);
  json weights = json::array();
  for (const Rational& w : d.weights.values()) weights.push_back(to_json(w));
  j["weights"] = std::move(weights);
  return j;
}

json to_json(const UndirectedGraph& g) {
  return {{"kind", "graph"}, {"n", g.size()}, {"edges", pairs_json(g.edges())}};
}

json to_json(const FeedbackViolation& v) {
  return {{"kind", kind_name(v.kind)},
          {"i", v.i},
          {"j", v.j},
          {"lhs", to_json(v.lhs)},
          {"rhs", to_json(v.rhs)}};
}

json to_json(const CertifiedOrder& co) {
  json moves = json::array();
  for (const LocalMove& m : co.moves) {
    moves.push_back({{"kind", kind_name(m.kind)},
                     {"i", m.i},
                     {"j", m.j},
                     {"vertex", m.vertex},
                     {"gain", to_json(m.gain)}});
  }
  json j = {{"order", co.order.sequence()},
            {"objective", to_json(co.objective)},
            {"violations_checked", co.violations_checked},
            {"moves", std::move(moves)}};
  if (co.order.size() > 0) j["feed_vertex"] = feed_vertex(co);
  return j;
}

json to_json(const MissingEdgeStatus& s) {
  json j = {{"edge", {s.a, s.b}},
            {"good", s.good()},
            {"satisfies_i", s.satisfies_i},
            {"satisfies_ii", s.satisfies_ii},
            {"witness_against_i", nullptr},
            {"witness_against_ii", nullptr}};
  if (s.witness_against_i) j["witness_against_i"] = *s.witness_against_i;
  if (s.witness_against_ii) j["witness_against_ii"] = *s.witness_against_ii;
  return j;
}

json to_json(const WitnessCertificate& cert) {
  std::vector<Arc> orientations;
  for (const auto& o : cert.orientations) orientations.push_back(o.arc);
  json recheck = json::array();
  for (const auto& v : cert.recheck_t_prime) recheck.push_back(to_json(v));
  return {{"certified", true},
          {"instance", to_json(cert.instance)},
          {"witness", cert.witness},
          {"orientations", pairs_json(orientations)},
          {"tournament_arcs", pairs_json(cert.tournament.arcs())},
          {"order", to_json(cert.order)},
          {"reoriented_edges", pairs_json(cert.reoriented_edges)},
          {"recheck_t_prime", std::move(recheck)},
          {"lhs", to_json(cert.lhs)},
          {"rhs", to_json(cert.rhs)}};
}

WitnessCertificate certificate_from_json(const json& j) {
  return json_guard([&] {
    WitnessCertificate cert;
    cert.instance = digraph_from_json(j.at("instance")).instance;
    const std::size_t n = cert.instance.digraph.size();
    cert.witness = j.at("witness").get<VertexId>();
    for (const Arc& a : pairs_from_json(j.at("orientations"))) {
      cert.orientations.push_back({a});
    }
    cert.tournament = Digraph(n);
    for (auto [u, v] : pairs_from_json(j.at("tournament_arcs"))) {
      cert.tournament.add_arc(u, v);
    }
    const json& order = j.at("order");
    try {
      cert.order.order = Order(order.at("order").get<std::vector<VertexId>>());
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    cert.order.objective = perturbed_from_json(order.at("objective"));
    cert.order.violations_checked = order.at("violations_checked").get<std::size_t>();
    for (const json& m : order.at("moves")) {
      cert.order.moves.push_back({kind_from(m.at("kind").get<std::string>()),
                                  m.at("i").get<std::size_t>(),
                                  m.at("j").get<std::size_t>(),
                                  m.at("vertex").get<VertexId>(),
                                  perturbed_from_json(m.at("gain"))});
    }
    cert.reoriented_edges = pairs_from_json(j.at("reoriented_edges"));
    for (const json& v : j.at("recheck_t_prime")) {
      cert.recheck_t_prime.push_back({kind_from(v.at("kind").get<std::string>()),
                                      v.at("i").get<std::size_t>(),
                                      v.at("j").get<std::size_t>(),
                                      perturbed_from_json(v.at("lhs")),
                                      perturbed_from_json(v.at("rhs"))});
    }
    cert.lhs = rational_from_json(j.at("lhs"));
    cert.rhs = rational_from_json(j.at("rhs"));
    return cert;
  });
}

json to_json(const WitnessResult& result) {
  if (result.certificate) return to_json(*result.certificate);
  json statuses = json::array();
  for (const auto& s : result.statuses) statuses.push_back(to_json(s));
  return {{"certified", false},
          {"witness", result.witness},
          {"lhs", to_json(result.lhs)},
          {"rhs", to_json(result.rhs)},
          {"missing_edges", std::move(statuses)}};
}

json to_json(const GeneralizedStarDecomposition& dec) {
  json rays = json::array(), core = json::array();
  for (const auto& a : dec.rays) rays.push_back(set_json(a));
  for (const auto& x : dec.core) core.push_back(set_json(x));
  return {{"A", std::move(rays)}, {"X", std::move(core)}};
}

GeneralizedStarDecomposition decomposition_from_json(const json& j) {
  return json_guard([&] {
    GeneralizedStarDecomposition dec;
    dec.rays = j.at("A").get<std::vector<VertexSet>>();
    dec.core = j.at("X").get<std::vector<VertexSet>>();
    for (auto& part : dec.rays) std::sort(part.begin(), part.end());
    for (auto& part : dec.core) std::sort(part.begin(), part.end());
    return dec;
  });
}

json to_json(const DecompositionCheck& check) {
  return {{"valid", check.valid},
          {"failed_clause", check.valid ? json(nullptr) : json(check.failed_clause)},
          {"detail", check.detail}};
}

json to_json(const SquareViolation& v) {
  return {{"x", v.x},
          {"y", v.y},
          {"u", v.u},
          {"v", v.v},
          {"edges", {{v.x, v.y}, {v.u, v.v}}},
          {"cross_edges", pairs_json(v.cross_edges)}};
}

json to_json(const SpecialClassification& c) {
  return {{"kind", to_string(c.kind)},
          {"is_complete", c.is_complete},
          {"is_star", c.is_star},
          {"is_sun", c.is_sun},
          {"levels", c.levels},
          {"isolated", c.isolated}};
}

json to_json(const AdversarialWitness& a) {
  return {{"digraph", to_json(a.digraph)},
          {"designated_edge", {a.designated_edge.first, a.designated_edge.second}}};
}

json to_json(const RecognitionReport& r) {
  json j = {{"is_generalized_star", r.is_generalized_star},
            {"decomposition", nullptr},
            {"special", nullptr},
            {"violation", nullptr},
            {"adversary", nullptr},
            {"decomposition_check", to_json(r.check)}};
  if (r.decomposition) j["decomposition"] = to_json(*r.decomposition);
  if (r.special) j["special"] = to_json(*r.special);
  if (r.violation) j["violation"] = to_json(*r.violation);
  if (r.adversary) j["adversary"] = to_json(*r.adversary);
  return j;
}

json to_json(const CounterexampleReport& r) {
  return {{"stage", r.stage},
          {"message", r.message},
          {"instance", to_json(WeightedDigraph(r.digraph, r.weights))},
          {"state", r.state}};
}

json to_json(const SweepReport& r, bool include_timing) {
  json failures = json::array();
  for (const SweepFailure& f : r.failures) {
    failures.push_back({{"instance", f.instance}, {"report", to_json(f.report)}});
  }
  json j = {{"sweep", r.name},
            {"parameters", r.parameters},
            {"instances", r.instances},
            {"failures", r.failures.size()},
            {"failure_reports", std::move(failures)},
            {"observations", r.observations}};
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (VertexId v = 0; v < d.size(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.size(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace snc::io
