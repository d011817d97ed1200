#include "snc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <thread>

#include "snc/generators.hpp"
#include "snc/good_edges.hpp"
#include "snc/median_order.hpp"
#include "snc/rng.hpp"
#include "snc/star.hpp"

namespace snc {
namespace {

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

struct InstanceOutcome {
  std::optional<CounterexampleReport> failure;
  std::map<std::string, std::uint64_t> counts;
  bool flagged = false;
};

nlohmann::json graph_state(const UndirectedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", edges}};
}

CounterexampleReport make_report(std::string stage, std::string message,
                                 const Digraph& d, const WeightMap& w) {
  return {std::move(stage), std::move(message), d, w, nlohmann::json::object()};
}

// Runs `body` on every instance index; instances are pre-partitioned across
// workers by index and merged in index order, so the report does not depend
// on the worker count.
template <typename Body>
SweepReport run_sweep(std::string name, nlohmann::json parameters,
                      std::uint64_t count, std::size_t jobs, Body body) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<InstanceOutcome> outcomes(count);
  auto work = [&](std::size_t worker, std::size_t stride) {
    for (std::uint64_t k = worker; k < count; k += stride) {
      try {
        outcomes[k] = body(k);
      } catch (const TheoremViolation& e) {
        outcomes[k].failure = e.report();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
    for (auto& t : pool) t.join();
  }

  SweepReport report;
  report.name = std::move(name);
  report.parameters = std::move(parameters);
  report.instances = count;
  std::map<std::string, std::uint64_t> totals;
  nlohmann::json flagged = nlohmann::json::array();
  std::uint64_t flagged_count = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    InstanceOutcome& o = outcomes[k];
    if (o.failure) report.failures.push_back({k, std::move(*o.failure)});
    for (const auto& [key, value] : o.counts) totals[key] += value;
    if (o.flagged) {
      ++flagged_count;
      if (flagged.size() < 20) flagged.push_back(k);
    }
  }
  for (const auto& [key, value] : totals) report.observations[key] = value;
  if (flagged_count > 0) {
    report.observations["flagged_instances"] = flagged;
    report.observations["flagged_count"] = flagged_count;
  }
  report.elapsed_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  return report;
}

// Wraps library errors other than TheoremViolation into a failure.
template <typename Fn>
InstanceOutcome guarded(const Digraph& d, const WeightMap& w, Fn fn) {
  try {
    return fn();
  } catch (const TheoremViolation&) {
    throw;
  } catch (const Error& e) {
    InstanceOutcome o;
    o.failure = make_report(std::string(to_string(e.code())), e.what(), d, w);
    return o;
  }
}

InstanceOutcome feed_vertex_outcome(const Digraph& t, const WeightMap& w) {
  return guarded(t, w, [&] {
    InstanceOutcome o;
    const CertifiedOrder co = local_median_order(t, w);
    const VertexId f = feed_vertex(co);
    const SnpEvaluation eval = has_weighted_snp(WeightedDigraph(t, w), f);
    o.counts["moves"] = co.moves.size();
    if (!eval.holds) {
      o.failure = make_report("feed-vertex-snp",
                              "feed vertex lacks the weighted SNP", t, w);
      o.failure->state["order"] = co.order.sequence();
      o.failure->state["feed_vertex"] = f;
      o.failure->state["out_weight"] = to_string(eval.out_weight);
      o.failure->state["second_weight"] = to_string(eval.second_weight);
    }
    return o;
  });
}

bool neighborhoods_nested(const UndirectedGraph& g,
                          const GeneralizedStarDecomposition& dec) {
  for (std::size_t i = 1; i < dec.rays.size(); ++i) {
    for (std::size_t j = i; j < dec.rays.size(); ++j) {
      for (VertexId a : dec.rays[i]) {
        for (VertexId b : dec.rays[j]) {
          for (VertexId x : g.neighbors(a)) {
            if (!g.has_edge(b, x)) return false;
          }
        }
      }
    }
  }
  return true;
}

// One graph of the (A) ⇔ (B) leg; also the (B) ⇔ (C) leg when orientations
// is set.
InstanceOutcome theorem3_outcome(const UndirectedGraph& g, bool orientations) {
  const Digraph empty(g.size());
  const WeightMap ones = WeightMap::uniform(g.size());
  return guarded(empty, ones, [&] {
    InstanceOutcome o;
    auto fail = [&](std::string stage, std::string message) {
      o.failure = make_report(std::move(stage), std::move(message), empty, ones);
      o.failure->state["graph"] = graph_state(g);
    };
    const RecognitionReport rec = recognize(g);
    ++o.counts[rec.is_generalized_star ? "generalized_stars" : "not_generalized_stars"];
    if (rec.decomposition) {
      if (!validate_decomposition(g, *rec.decomposition).valid) {
        fail("decomposition-self-check", "accepted decomposition does not validate");
        return o;
      }
      if (!neighborhoods_nested(g, *rec.decomposition)) {
        fail("nested-neighborhoods", "ray neighborhoods are not nested");
        return o;
      }
    }
    if (!orientations) return o;

    std::vector<Arc> non_edges;
    for (VertexId u = 0; u < g.size(); ++u) {
      for (VertexId v = u + 1; v < g.size(); ++v) {
        if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
      }
    }
    std::uint64_t bad = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << non_edges.size());
         ++mask) {
      Digraph d(g.size());
      for (std::size_t k = 0; k < non_edges.size(); ++k) {
        const auto [u, v] = non_edges[k];
        (mask >> k) & 1 ? d.add_arc(v, u) : d.add_arc(u, v);
      }
      if (!all_missing_edges_good(d).all_good) ++bad;
    }
    o.counts["orientations"] = std::uint64_t{1} << non_edges.size();
    o.counts["orientations_with_bad_edge"] = bad;
    if (rec.is_generalized_star && bad > 0) {
      fail("B-implies-C", "an orientation of the complement has a bad edge");
    } else if (!rec.is_generalized_star) {
      const AdversarialWitness& adv = *rec.adversary;
      const auto [x, y] = adv.designated_edge;
      if (missing_graph(adv.digraph).graph != g ||
          classify_missing_edge(adv.digraph, x, y).good()) {
        fail("C-implies-B", "adversarial digraph does not refute goodness");
      } else if (bad == 0) {
        fail("C-implies-B", "no orientation of the complement has a bad edge");
      }
    }
    return o;
  });
}

}  // namespace

VertexSet brute_force_snp_vertices(const WeightedDigraph& d) {
  const Digraph& g = d.digraph;
  const std::size_t n = g.size();
  VertexSet result;
  std::vector<std::uint8_t> first(n), second(n);
  for (VertexId v = 0; v < n; ++v) {
    std::fill(first.begin(), first.end(), 0);
    std::fill(second.begin(), second.end(), 0);
    for (VertexId u = 0; u < n; ++u) first[u] = g.has_arc(v, u);
    for (VertexId w = 0; w < n; ++w) {
      if (!first[w]) continue;
      for (VertexId u = 0; u < n; ++u) {
        if (u != v && !first[u] && g.has_arc(w, u)) second[u] = 1;
      }
    }
    Rational out = 0, far = 0;
    for (VertexId u = 0; u < n; ++u) {
      if (first[u]) out += d.weights[u];
      if (second[u]) far += d.weights[u];
    }
    if (out <= far) result.push_back(v);
  }
  return result;
}

Digraph tournament_from_index(std::size_t n, std::uint64_t index) {
  Digraph t(n);
  std::size_t k = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++k) {
      (index >> k) & 1 ? t.add_arc(v, u) : t.add_arc(u, v);
    }
  }
  return t;
}

UndirectedGraph graph_from_index(std::size_t n, std::uint64_t index) {
  UndirectedGraph g(n);
  std::size_t k = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++k) {
      if ((index >> k) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

void enumerate_tournaments(std::size_t n,
                           const std::function<void(const Digraph&)>& visit) {
  if (n > kMaxEnumeratedTournament) {
    throw Error(ErrorCode::TooLarge, "tournament enumeration supports n <= 6");
  }
  const std::uint64_t count = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t index = 0; index < count; ++index) {
    visit(tournament_from_index(n, index));
  }
}

SweepReport sweep_theorem1(std::size_t n, const SweepOptions& options) {
  if (n > kMaxEnumeratedTournament) {
    throw Error(ErrorCode::TooLarge, "theorem1 sweep supports n <= 6");
  }
  const std::uint64_t count = std::uint64_t{1} << pair_count(n);
  return run_sweep("theorem1", {{"n", n}}, count, options.jobs,
                   [n](std::uint64_t k) {
                     const Digraph t = tournament_from_index(n, k);
                     return feed_vertex_outcome(t, WeightMap::uniform(n));
                   });
}

SweepReport sweep_proposition1(std::size_t samples, std::size_t max_n,
                               const SweepOptions& options) {
  const std::uint64_t seed = options.seed;
  return run_sweep(
      "proposition1",
      {{"samples", samples}, {"max_n", max_n}, {"seed", seed}, {"max_weight", 10}},
      samples, options.jobs, [=](std::uint64_t k) {
        Rng rng(mix_seed(derive_seed(seed, k)));
        const std::size_t n = rng.between(1, std::max<std::size_t>(1, max_n));
        const Digraph t = random_tournament(n, rng.next());
        const WeightMap w = random_weights(n, rng.next(), 10);
        return feed_vertex_outcome(t, w);
      });
}

SweepReport sweep_theorem2(std::size_t samples, std::size_t max_n,
                           const SweepOptions& options) {
  const std::uint64_t seed = options.seed;
  return run_sweep(
      "theorem2",
      {{"samples", samples}, {"max_n", max_n}, {"seed", seed}, {"max_weight", 10}},
      samples, options.jobs, [=](std::uint64_t k) {
        Rng rng(mix_seed(derive_seed(seed, k)));
        const GeneratedStar star =
            gen_generalized_star(random_star_profile(max_n, rng));
        const Digraph d = random_digraph_missing(star.graph, rng.next());
        const WeightMap w = random_weights(d.size(), rng.next(), 10);
        return guarded(d, w, [&] {
          InstanceOutcome o;
          const SpecialClassification kind = classify_special(star.decomposition);
          ++o.counts[std::string("kind_") + std::string(to_string(kind.kind))];
          if (!all_missing_edges_good(d).all_good) {
            o.failure = make_report("good-edges",
                                    "a generalized-star missing graph has a bad "
                                    "edge",
                                    d, w);
            return o;
          }
          const WeightedDigraph wd(d, w);
          const WitnessCertificate cert = find_witness_good(wd);
          o.counts["reoriented_edges"] = cert.reoriented_edges.size();
          o.counts["moves"] = cert.order.moves.size();
          const VertexSet snp = brute_force_snp_vertices(wd);
          const CertificateCheck check = verify_certificate(cert);
          if (!std::binary_search(snp.begin(), snp.end(), cert.witness)) {
            o.failure = make_report("oracle-cross-check",
                                    "exhaustive scan rejects the witness", d, w);
            o.failure->state["witness"] = cert.witness;
          } else if (!check.ok) {
            o.failure = make_report("certificate-recheck",
                                    check.failures.front(), d, w);
          }
          return o;
        });
      });
}

SweepReport sweep_theorem3(std::size_t n, const SweepOptions& options) {
  if (n > 5) throw Error(ErrorCode::TooLarge, "theorem3 sweep supports n <= 5");
  const bool orientations = n <= 4;
  const std::uint64_t count = std::uint64_t{1} << pair_count(n);
  return run_sweep("theorem3", {{"n", n}, {"orientations_leg", orientations}},
                   count, options.jobs, [=](std::uint64_t k) {
                     return theorem3_outcome(graph_from_index(n, k),
                                             orientations);
                   });
}

SweepReport sweep_theorem3_random(std::size_t samples, std::size_t min_n,
                                  std::size_t max_n,
                                  const SweepOptions& options) {
  const std::uint64_t seed = options.seed;
  return run_sweep(
      "theorem3-random",
      {{"samples", samples}, {"min_n", min_n}, {"max_n", max_n}, {"seed", seed}},
      samples, options.jobs, [=](std::uint64_t k) {
        Rng rng(mix_seed(derive_seed(seed, k)));
        const std::size_t n = rng.between(min_n, max_n);
        UndirectedGraph g;
        if (k % 2 == 0) {
          g = random_graph(n, rng.next(),
                           static_cast<unsigned>(rng.between(10, 90)));
        } else {
          // A relabelled generalized star, sometimes with one pair toggled.
          StarProfile p = random_star_profile(n, rng);
          while (p.vertex_count() < n) ++p.isolated;
          const UndirectedGraph base = gen_generalized_star(p).graph;
          std::vector<VertexId> perm(n);
          std::iota(perm.begin(), perm.end(), VertexId{0});
          rng.shuffle(perm);
          UndirectedGraph shuffled = relabel(base, perm);
          if (rng.bit()) {
            const VertexId u = rng.below(n);
            VertexId v = rng.below(n - 1);
            if (v >= u) ++v;
            UndirectedGraph toggled(n);
            for (auto [a, b] : shuffled.edges()) {
              if (!((a == u && b == v) || (a == v && b == u))) toggled.add_edge(a, b);
            }
            if (!shuffled.has_edge(u, v)) toggled.add_edge(u, v);
            shuffled = std::move(toggled);
          }
          g = std::move(shuffled);
        }
        return theorem3_outcome(g, false);
      });
}

SweepReport sweep_median_optimality(std::size_t samples, std::size_t max_n,
                                    const SweepOptions& options) {
  const std::uint64_t seed = options.seed;
  return run_sweep(
      "median_optimality",
      {{"samples", samples}, {"max_n", max_n}, {"seed", seed}, {"max_weight", 10}},
      samples, options.jobs, [=](std::uint64_t k) {
        Rng rng(mix_seed(derive_seed(seed, k)));
        const std::size_t n = rng.between(1, std::max<std::size_t>(1, max_n));
        const Digraph t = random_tournament(n, rng.next());
        const WeightMap w = random_weights(n, rng.next(), 10);
        return guarded(t, w, [&] {
          InstanceOutcome o;
          const CertifiedOrder exact = exact_median_order(t, w);
          const CertifiedOrder local = local_median_order(t, w);
          const PerturbedWeights pw = perturb_weights(w);
          if (!feedback_check(t, pw, exact.order).empty()) {
            o.failure = make_report("exact-feedback",
                                    "exact order fails the feedback check", t, w);
          } else if (local.objective > exact.objective) {
            o.failure = make_report("optimality-bound",
                                    "local search beats the exact optimum", t, w);
          }
          if (local.objective == exact.objective) ++o.counts["local_optimal"];
          return o;
        });
      });
}

SweepReport sweep_gamma(std::size_t samples, std::size_t max_n,
                        const SweepOptions& options) {
  const std::uint64_t seed = options.seed;
  return run_sweep("gamma",
                   {{"samples", samples}, {"max_n", max_n}, {"seed", seed}},
                   samples, options.jobs, [=](std::uint64_t k) {
                     Rng rng(mix_seed(derive_seed(seed, k)));
                     const std::size_t n =
                         rng.between(1, std::max<std::size_t>(1, max_n));
                     const Digraph d = random_digraph(n, rng.next());
                     InstanceOutcome o;
                     const bool holds = check_gamma_property(d);
                     ++o.counts[holds ? "with_gamma_vertex" : "without_gamma_vertex"];
                     o.flagged = !holds;
                     // γ·d⁺(v) ≤ d⁺⁺(v) for some v, the bound with γ on the other side
                     bool reversed = false;
                     for (VertexId v = 0; v < d.size() && !reversed; ++v) {
                       const std::size_t out = d.out(v).size();
                       const std::size_t second = second_out_neighborhood(d, v).size();
                       reversed = out == 0 ||
                                  gamma_polynomial(Rational(static_cast<long long>(second),
                                                            static_cast<long long>(out))) >= 0;
                     }
                     ++o.counts[reversed ? "with_reversed_bound_vertex"
                                         : "without_reversed_bound_vertex"];
                     return o;
                   });
}

Rational gamma_polynomial(const Rational& x) { return 2 * x * x * x + x * x - 1; }

std::pair<Rational, Rational> gamma_bracket(int digits) {
  if (digits < 0 || digits > kMaxGammaDigits) {
    throw Error(ErrorCode::TooLarge, "gamma precision must be in [0, 50]");
  }
  Rational width = 1;
  for (int k = 0; k < digits; ++k) width /= 10;
  Rational lo = 0, hi = 1;
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    (gamma_polynomial(mid) < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

Rational gamma_constant(int digits) {
  if (digits < 0 || digits > kMaxGammaDigits) {
    throw Error(ErrorCode::TooLarge, "gamma precision must be in [0, 50]");
  }
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  auto rounded = [&scale](const Rational& x) {
    const Rational shifted = x * Rational(scale) + Rational(1, 2);
    return BigInt(numerator_of(shifted) / denominator_of(shifted));
  };
  // The root is irrational, so the bracket eventually lies strictly between
  // two rounding boundaries.
  Rational lo = 0, hi = 1;
  while (rounded(lo) != rounded(hi)) {
    const Rational mid = (lo + hi) / 2;
    (gamma_polynomial(mid) < 0 ? lo : hi) = mid;
  }
  return Rational(rounded(lo), scale);
}

bool vertex_meets_gamma(std::size_t out_degree, std::size_t second_degree) {
  if (out_degree == 0) return true;
  if (second_degree == 0) return false;
  const Rational r(static_cast<long long>(out_degree),
                   static_cast<long long>(second_degree));
  return gamma_polynomial(r) <= 0;
}

bool check_gamma_property(const Digraph& d) {
  for (VertexId v = 0; v < d.size(); ++v) {
    if (vertex_meets_gamma(d.out(v).size(),
                           second_out_neighborhood(d, v).size())) {
      return true;
    }
  }
  return false;
}

}  // namespace snc
