#include "snc/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "snc/generators.hpp"
#include "snc/io.hpp"

namespace snc::cli {
namespace {

using nlohmann::json;

struct Globals {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::optional<std::size_t> move_limit;
};

std::string read_input(const Globals& g, std::istream& in) {
  std::stringstream buffer;
  if (g.input.empty() || g.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(g.input);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + g.input + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

// First word of the first non-comment line, or the JSON "kind".
std::string document_kind(const std::string& text) {
  const std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    try {
      return json::parse(text).value("kind", "");
    } catch (const json::exception&) {
      return "";
    }
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    std::string word;
    if (words >> word) return word;
  }
  return "";
}

json error_json(const Error& e) {
  json j = {{"error", to_string(e.code())}, {"message", e.what()}};
  if (e.line()) j["line"] = *e.line();
  return j;
}

LocalSearchOptions search_options(const Globals& g, bool shuffle) {
  LocalSearchOptions options;
  options.move_limit = g.move_limit;
  if (shuffle) options.start_seed = g.seed;
  return options;
}

StarProfile profile_from_json(const json& j) {
  StarProfile p;
  p.core_sizes = j.value("core", std::vector<std::size_t>{});
  p.ray_sizes = j.value("rays", std::vector<std::size_t>{});
  p.isolated = j.value("isolated", std::size_t{0});
  return p;
}

json profile_json(const StarProfile& p) {
  return {{"core", p.core_sizes}, {"rays", p.ray_sizes}, {"isolated", p.isolated}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  CLI::App app{"Certified second-neighborhood witnesses and generalized-star "
               "recognition"};
  app.name("snc");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("-i,--input", g.input, "Input file ('-' for stdin)");
  app.add_option("-o,--output", g.output, "Write the result here instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized steps");
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--move-limit", g.move_limit, "Local-search move limit (default 50 n^3)");

  auto* witness = app.add_subcommand("witness", "Find a vertex with the weighted SNP");
  bool shuffle_start = false;
  witness->add_flag("--shuffle", shuffle_start, "Start local search from a seeded shuffle");

  auto* check_good = app.add_subcommand("check-good", "Classify every missing edge");

  auto* median = app.add_subcommand("median-order", "Certified median order of a tournament");
  bool exact = false;
  std::size_t restarts = 1;
  median->add_flag("--exact", exact, "Globally optimal order (n <= 20)");
  median->add_option("--restarts", restarts, "Local-search restarts")->check(CLI::PositiveNumber);

  auto* recognize_cmd = app.add_subcommand("recognize", "Recognize a generalized star");

  auto* adversary = app.add_subcommand("adversary", "Digraph with a bad missing edge");
  std::vector<VertexId> labelling;
  adversary->add_option("--labelling", labelling, "x,y,u,v of a square violation")
      ->delimiter(',')
      ->expected(4);

  auto* sweep = app.add_subcommand("sweep", "Exhaustive and randomized checks");
  std::string sweep_kind;
  std::size_t sweep_n = 5, samples = 500, max_n = 14, min_n = 6;
  bool timing = false;
  sweep->add_option("kind", sweep_kind, "Which statement to sweep")
      ->required()
      ->check(CLI::IsMember({"theorem1", "proposition1", "theorem2", "theorem3",
                             "theorem3-random", "median", "gamma"}));
  sweep->add_option("--n", sweep_n, "Vertex count for exhaustive sweeps");
  sweep->add_option("--samples", samples, "Instances for randomized sweeps");
  sweep->add_option("--max-n", max_n, "Largest vertex count for randomized sweeps");
  sweep->add_option("--min-n", min_n, "Smallest vertex count (theorem3-random)");
  sweep->add_flag("--timing", timing, "Include elapsed time (output no longer reproducible)");

  auto* gamma = app.add_subcommand("gamma", "Root of 2x^3 + x^2 - 1");
  int digits = 6;
  gamma->add_option("--digits", digits, "Decimal digits")->check(CLI::Range(0, kMaxGammaDigits));

  auto* gen = app.add_subcommand("gen", "Generate instances");
  std::string gen_kind, format = "json", spec_file;
  std::size_t gen_n = 5;
  std::vector<std::size_t> core, rays;
  std::size_t isolated = 0;
  std::uint64_t max_weight = 10;
  gen->add_option("kind", gen_kind, "What to generate")
      ->required()
      ->check(CLI::IsMember({"tournament", "star", "sun", "complete", "generalized-star",
                             "digraph-missing", "weights", "instance"}));
  gen->add_option("--n", gen_n, "Vertex count / core size / ray count");
  gen->add_option("--core", core, "Core layer sizes |X1|,...,|Xn|")->delimiter(',');
  gen->add_option("--rays", rays, "Ray class sizes |A1|,...")->delimiter(',');
  gen->add_option("--isolated", isolated, "|A0|");
  gen->add_option("--max-weight", max_weight, "Largest random weight");
  gen->add_option("--spec", spec_file, "GenSpec JSON file (seed, profile, max_weight)");
  gen->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Re-check a witness certificate");
  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a graph or digraph");

  std::vector<std::string> argv_store{"snc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  }

  json result;
  std::string text_result;
  int status = kExitOk;
  try {
    if (*witness) {
      const auto doc = io::read_digraph(read_input(g, in));
      result = io::to_json(find_witness(doc.instance, search_options(g, shuffle_start)));
    } else if (*check_good) {
      const auto doc = io::read_digraph(read_input(g, in));
      const GoodEdgesReport report = all_missing_edges_good(doc.instance.digraph);
      json statuses = json::array();
      for (const auto& s : report.statuses) statuses.push_back(io::to_json(s));
      result = {{"all_good", report.all_good}, {"missing_edges", std::move(statuses)}};
    } else if (*median) {
      const auto doc = io::read_digraph(read_input(g, in));
      const WeightedDigraph& d = doc.instance;
      const CertifiedOrder co =
          exact ? exact_median_order(d.digraph, d.weights)
                : local_median_order_restarts(d.digraph, d.weights, restarts, g.seed,
                                              g.move_limit);
      result = io::to_json(co);
      result["method"] = exact ? "exact" : "local";
      if (co.order.size() > 0) {
        const SnpEvaluation eval = has_weighted_snp(d, feed_vertex(co));
        result["feed_vertex_snp"] = {{"holds", eval.holds},
                                     {"out_weight", io::to_json(eval.out_weight)},
                                     {"second_weight", io::to_json(eval.second_weight)}};
      }
    } else if (*recognize_cmd) {
      result = io::to_json(recognize(io::read_graph(read_input(g, in)).graph));
    } else if (*adversary) {
      const UndirectedGraph graph = io::read_graph(read_input(g, in)).graph;
      SquareViolation viol;
      if (labelling.empty()) {
        auto found = check_condition_B(graph);
        if (!found) {
          throw Error(ErrorCode::NotAViolation,
                      "graph is a generalized star; no square violation exists");
        }
        viol = *found;
      } else {
        viol = {labelling[0], labelling[1], labelling[2], labelling[3], {}};
      }
      const AdversarialWitness adv = adversarial_digraph(graph, viol);
      result = io::to_json(adv);
      result["edge_status"] =
          io::to_json(classify_missing_edge(adv.digraph, adv.designated_edge.first,
                                            adv.designated_edge.second));
    } else if (*sweep) {
      const SweepOptions options{g.seed, g.jobs};
      SweepReport report;
      if (sweep_kind == "theorem1") {
        report = sweep_theorem1(sweep_n, options);
      } else if (sweep_kind == "proposition1") {
        report = sweep_proposition1(samples, max_n, options);
      } else if (sweep_kind == "theorem2") {
        report = sweep_theorem2(samples, max_n, options);
      } else if (sweep_kind == "theorem3") {
        report = sweep_theorem3(sweep_n, options);
      } else if (sweep_kind == "theorem3-random") {
        report = sweep_theorem3_random(samples, min_n, max_n, options);
      } else if (sweep_kind == "median") {
        report = sweep_median_optimality(samples, max_n, options);
      } else {
        report = sweep_gamma(samples, max_n, options);
      }
      result = io::to_json(report, timing);
      if (!report.failures.empty()) status = kExitClaimFailed;
    } else if (*gamma) {
      const auto [lo, hi] = gamma_bracket(digits);
      const Rational value = gamma_constant(digits);
      result = {{"digits", digits},
                {"value", io::to_json(value)},
                {"decimal", to_decimal(value, digits)},
                {"bracket", {io::to_json(lo), io::to_json(hi)}},
                {"polynomial_at_value", io::to_json(gamma_polynomial(value))}};
    } else if (*gen) {
      GenSpec spec{g.seed, {core, rays, isolated}, max_weight};
      if (!spec_file.empty()) {
        std::ifstream file(spec_file);
        if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + spec_file + "'");
        try {
          const json j = json::parse(file);
          spec.seed = j.value("seed", spec.seed);
          if (j.contains("profile")) spec.profile = profile_from_json(j.at("profile"));
          spec.max_weight = j.value("max_weight", spec.max_weight);
        } catch (const json::exception& e) {
          throw Error(ErrorCode::ParseError, std::string("malformed GenSpec: ") + e.what());
        }
      }
      std::optional<UndirectedGraph> graph;
      std::optional<WeightedDigraph> digraph;
      if (gen_kind == "tournament") {
        digraph = WeightedDigraph(random_tournament(gen_n, spec.seed),
                                  WeightMap::uniform(gen_n));
      } else if (gen_kind == "star") {
        graph = gen_star(gen_n);
      } else if (gen_kind == "sun") {
        graph = gen_sun(core.empty() ? 1 : core.front(), gen_n);
      } else if (gen_kind == "complete") {
        graph = gen_complete(gen_n);
      } else if (gen_kind == "generalized-star") {
        graph = gen_generalized_star(spec.profile).graph;
      } else if (gen_kind == "digraph-missing") {
        const UndirectedGraph missing = io::read_graph(read_input(g, in)).graph;
        digraph = WeightedDigraph(random_digraph_missing(missing, spec.seed),
                                  WeightMap::uniform(missing.size()));
      } else if (gen_kind == "weights") {
        const WeightMap w = random_weights(gen_n, spec.seed, spec.max_weight);
        json values = json::array();
        for (const Rational& v : w.values()) values.push_back(io::to_json(v));
        result = {{"n", gen_n}, {"seed", spec.seed}, {"weights", std::move(values)}};
      } else {
        const GeneratedStar star = gen_generalized_star(spec.profile);
        const std::size_t n = star.graph.size();
        digraph = WeightedDigraph(
            random_digraph_missing(star.graph, mix_seed(spec.seed)),
            random_weights(n, mix_seed(spec.seed + 1), spec.max_weight));
      }
      if (format == "text" && (graph || digraph)) {
        text_result = graph ? io::format_graph(*graph) : io::format_digraph(*digraph);
      } else if (graph) {
        result = io::to_json(*graph);
      } else if (digraph) {
        result = io::to_json(*digraph);
        if (gen_kind == "instance") {
          result["spec"] = {{"seed", spec.seed},
                            {"profile", profile_json(spec.profile)},
                            {"max_weight", spec.max_weight}};
        }
      }
    } else if (*verify) {
      json j;
      try {
        j = json::parse(read_input(g, in));
      } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
      }
      if (!j.value("certified", false)) {
        throw Error(ErrorCode::ParseError, "document is not a certificate");
      }
      const CertificateCheck check = verify_certificate(io::certificate_from_json(j));
      result = {{"verified", check.ok}, {"failures", check.failures},
                {"witness", j.at("witness")}};
      if (!check.ok) status = kExitClaimFailed;
    } else if (*dot) {
      const std::string text = read_input(g, in);
      text_result = document_kind(text) == "graph"
                        ? io::to_dot(io::read_graph(text).graph)
                        : io::to_dot(io::read_digraph(text).instance.digraph);
    }
  } catch (const TheoremViolation& e) {
    err << error_json(e).dump() << '\n';
    result = {{"counterexample", io::to_json(e.report())}};
    status = kExitClaimFailed;
  } catch (const Error& e) {
    err << error_json(e).dump() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  }

  const std::string payload = text_result.empty() ? result.dump(2) + "\n" : text_result;
  if (g.output.empty()) {
    out << payload;
  } else {
    std::ofstream file(g.output);
    if (!file) {
      err << json{{"error", "IOError"}, {"message", "cannot write '" + g.output + "'"}}.dump()
          << '\n';
      return kExitUsage;
    }
    file << payload;
  }
  return status;
}

}  // namespace snc::cli
