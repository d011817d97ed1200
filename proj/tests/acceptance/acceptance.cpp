// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "snc/commands.hpp"
#include "snc/oracle.hpp"
#include "snc/rational.hpp"

using nlohmann::json;

namespace {

constexpr const char* kSeed = "1";

// Runtime limits in seconds, single worker.
constexpr double kTournamentLimit = 120.0;
constexpr double kWeightedLimit = 60.0;
constexpr double kPipelineLimit = 120.0;
constexpr double kRecognitionLimit = 60.0;
constexpr double kOrientationsLimit = 60.0;

// |2γ³ + γ² − 1| bound and bracket width for the six-digit constant.
const snc::Rational kGammaTolerance(1, 1000000);

struct Captured {
  int status = 0;
  std::string out;
  double seconds = 0;
};

Captured snc_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::istringstream in;
  const auto start = std::chrono::steady_clock::now();
  Captured c;
  c.status = snc::cli::run(args, out, err, in);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.out = out.str();
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int failed = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

// Every command run for criteria 1-5, kept for the determinism rerun.
std::vector<std::pair<std::vector<std::string>, std::string>> transcript;

struct SweepTotals {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  double seconds = 0;
  bool exit_ok = true;
  json observations = json::object();
};

SweepTotals sweep(const std::vector<std::vector<std::string>>& runs) {
  SweepTotals t;
  for (const auto& args : runs) {
    const Captured c = snc_run(args);
    transcript.emplace_back(args, c.out);
    t.seconds += c.seconds;
    t.exit_ok = t.exit_ok && c.status == 0;
    const json j = json::parse(c.out);
    t.instances += j.at("instances").get<std::uint64_t>();
    t.failures += j.at("failures").get<std::uint64_t>();
    for (auto& [k, v] : j.at("observations").items()) {
      if (v.is_number()) t.observations[k] = t.observations.value(k, 0) + v.get<std::int64_t>();
    }
  }
  return t;
}

std::string summary(const SweepTotals& t, double limit) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu instances, %llu failures, %.1fs (limit %.0fs)",
                static_cast<unsigned long long>(t.instances),
                static_cast<unsigned long long>(t.failures), t.seconds, limit);
  return buf;
}

bool clean(const SweepTotals& t, std::uint64_t expected_instances, double limit) {
  return t.exit_ok && t.failures == 0 && t.instances == expected_instances && t.seconds < limit;
}

}  // namespace

int main() {
  {
    std::vector<std::vector<std::string>> runs;
    for (int n = 1; n <= 6; ++n) runs.push_back({"sweep", "theorem1", "--n", std::to_string(n)});
    const SweepTotals t = sweep(runs);
    // 1 + 2 + 8 + 64 + 1024 + 32768
    report(1, clean(t, 33867, kTournamentLimit),
           "every feed vertex of a tournament on 1..6 vertices has the SNP: " +
               summary(t, kTournamentLimit));
  }
  {
    const SweepTotals t = sweep({{"sweep", "proposition1", "--samples", "1000", "--max-n", "10",
                                  "--seed", kSeed}});
    report(2, clean(t, 1000, kWeightedLimit),
           "feed vertex has the weighted SNP on random weighted tournaments (n <= 10): " +
               summary(t, kWeightedLimit));
  }
  {
    const SweepTotals t = sweep({{"sweep", "theorem2", "--samples", "500", "--max-n", "14",
                                  "--seed", kSeed}});
    report(3, clean(t, 500, kPipelineLimit),
           "certified witnesses on generalized-star missing graphs (n <= 14), confirmed by "
           "exhaustive scan: " +
               summary(t, kPipelineLimit));
  }
  {
    const SweepTotals t = sweep({{"sweep", "theorem3", "--n", "5"},
                                 {"sweep", "theorem3-random", "--samples", "2000", "--min-n", "6",
                                  "--max-n", "9", "--seed", kSeed}});
    report(4, clean(t, 3024, kRecognitionLimit),
           "condition (B) agrees with decompose-and-validate on all 1024 graphs on 5 vertices and "
           "2000 random graphs on 6..9: " +
               summary(t, kRecognitionLimit));
  }
  {
    std::vector<std::vector<std::string>> runs;
    for (int n = 1; n <= 4; ++n) runs.push_back({"sweep", "theorem3", "--n", std::to_string(n)});
    const SweepTotals t = sweep(runs);
    // 1 + 2 + 8 + 64 labeled graphs
    report(5, clean(t, 75, kOrientationsLimit),
           "(B) holds iff every orientation of the complement has only good edges, all graphs on "
           "<= 4 vertices: " +
               summary(t, kOrientationsLimit));
  }
  {
    const Captured c = snc_run({"sweep", "median", "--samples", "200", "--max-n", "8", "--seed",
                                kSeed});
    const json j = json::parse(c.out);
    const bool ok = c.status == 0 && j.at("failures") == 0 && j.at("instances") == 200;
    report(6, ok,
           "exact orders pass the feedback check and bound local search on 200 weighted "
           "tournaments (n <= 8): " +
               std::to_string(j.at("failures").get<int>()) + " failures");
  }
  {
    const snc::Rational g = snc::gamma_constant(6);
    const auto [lo, hi] = snc::gamma_bracket(6);
    const snc::Rational fg = snc::gamma_polynomial(g);
    const snc::Rational abs_fg = fg < 0 ? snc::Rational(-fg) : fg;
    const bool digits = snc::to_decimal(g, 6) == "0.657298";
    const bool bracket = snc::gamma_polynomial(lo) < 0 && snc::gamma_polynomial(hi) > 0 &&
                         hi - lo <= kGammaTolerance && lo <= g + kGammaTolerance &&
                         g - kGammaTolerance <= hi;
    const bool root = abs_fg <= kGammaTolerance;
    const Captured c = snc_run({"sweep", "gamma", "--samples", "200", "--max-n", "12", "--seed",
                                kSeed});
    const json obs = json::parse(c.out).at("observations");
    report(7, digits && bracket && root,
           "gamma = " + snc::to_decimal(g, 6) + ", bracket sign change within 1e-6, |f(gamma)| = " +
               snc::to_decimal(abs_fg, 12) + "; descriptive sweep: " +
               std::to_string(obs.value("with_gamma_vertex", 0)) + " of 200 digraphs have a "
               "vertex with d+ <= gamma d++, " +
               std::to_string(obs.value("with_reversed_bound_vertex", 0)) +
               " have one with gamma d+ <= d++");
  }
  {
    // Rerun everything behind criteria 1-5 plus single-instance commands.
    const std::vector<std::vector<std::string>> extra = {
        {"gen", "instance", "--core", "2,1,3", "--rays", "2,1,1", "--isolated", "1", "--seed",
         kSeed, "--max-weight", "10"},
        {"gen", "tournament", "--n", "9", "--seed", kSeed},
        {"gamma", "--digits", "30"},
    };
    for (const auto& args : extra) transcript.emplace_back(args, snc_run(args).out);
    const std::string instance = transcript[transcript.size() - 3].second;
    std::uint64_t first = 0, second = 0;
    std::size_t mismatches = 0;
    for (const auto& [args, out] : transcript) {
      const std::string again = snc_run(args).out;
      first = fnv1a(std::to_string(first) + out);
      second = fnv1a(std::to_string(second) + again);
      if (again != out) ++mismatches;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu command outputs byte-identical on rerun: %016llx vs %016llx",
                  transcript.size(), static_cast<unsigned long long>(first),
                  static_cast<unsigned long long>(second));
    report(8, mismatches == 0 && first == second && !instance.empty(), buf);
  }
  std::printf("%d criteria failed\n", failed);
  return failed;
}
