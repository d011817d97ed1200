#include "snc/median_order.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "snc/counterexample.hpp"
#include "snc/rng.hpp"

namespace snc {
namespace {

void require_tournament(const Digraph& t) {
  if (!t.is_tournament()) {
    throw Error(ErrorCode::NotATournament,
                "digraph on " + std::to_string(t.size()) + " vertices has " +
                    std::to_string(t.arc_count()) + " arcs, not a tournament");
  }
}

void require_sizes(const Digraph& t, std::size_t weights, const Order& order) {
  if (weights != t.size() || order.size() != t.size()) {
    throw std::invalid_argument("order/weights do not match the vertex count");
  }
}

nlohmann::json order_json(const Order& order) { return order.sequence(); }

}  // namespace

std::string to_string(const PerturbedRational& p) {
  return to_string(p.c0) + " + " + to_string(p.c1) + "e + " + to_string(p.c2) +
         "e^2";
}

PerturbedWeights perturb_weights(const WeightMap& w) {
  PerturbedWeights result;
  result.reserve(w.size());
  for (const Rational& value : w.values()) {
    if (value < 0) throw Error(ErrorCode::NegativeWeight, "negative weight");
    result.emplace_back(value, 1, 0);
  }
  return result;
}

Order::Order(std::vector<VertexId> sequence) : seq_(std::move(sequence)) {
  std::vector<std::uint8_t> seen(seq_.size(), 0);
  for (VertexId v : seq_) {
    if (v >= seq_.size() || seen[v]) {
      throw std::invalid_argument("order is not a permutation");
    }
    seen[v] = 1;
  }
}

Order Order::identity(std::size_t n) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return Order(std::move(seq));
}

void Order::move(std::size_t from, std::size_t to) {
  if (from < to) {
    std::rotate(seq_.begin() + from, seq_.begin() + from + 1,
                seq_.begin() + to + 1);
  } else if (to < from) {
    std::rotate(seq_.begin() + to, seq_.begin() + from,
                seq_.begin() + from + 1);
  }
}

PerturbedRational order_objective(const Digraph& t, const PerturbedWeights& w,
                                  const Order& order) {
  require_tournament(t);
  require_sizes(t, w.size(), order);
  PerturbedRational total;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    PerturbedRational heads;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.has_arc(order[i], order[j])) heads += w[order[j]];
    }
    total += w[order[i]] * heads;
  }
  return total;
}

std::vector<FeedbackViolation> feedback_check(const Digraph& t,
                                              const PerturbedWeights& w,
                                              const Order& order) {
  require_tournament(t);
  require_sizes(t, w.size(), order);
  const std::size_t n = order.size();
  std::vector<FeedbackViolation> violations;

  for (std::size_t i = 0; i < n; ++i) {
    PerturbedRational out, in;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.has_arc(order[i], order[j])) {
        out += w[order[j]];
      } else {
        in += w[order[j]];
      }
      if (out < in) {
        violations.push_back({ViolationKind::Prefix, i, j, out, in});
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    PerturbedRational out, in;
    for (std::size_t i = j; i-- > 0;) {
      if (t.has_arc(order[i], order[j])) {
        in += w[order[i]];
      } else {
        out += w[order[i]];
      }
      if (in < out) {
        violations.push_back({ViolationKind::Suffix, i, j, in, out});
      }
    }
  }
  std::sort(violations.begin(), violations.end(),
            [](const FeedbackViolation& a, const FeedbackViolation& b) {
              if (a.i != b.i) return a.i < b.i;
              if (a.j != b.j) return a.j < b.j;
              return a.kind == ViolationKind::Prefix &&
                     b.kind == ViolationKind::Suffix;
            });
  return violations;
}

std::size_t default_move_limit(std::size_t n) { return 50 * n * n * n; }

MoveLimitExceeded::MoveLimitExceeded(std::size_t limit, Order last,
                                     std::vector<FeedbackViolation> remaining)
    : Error(ErrorCode::MoveLimitExceeded,
            "local search exceeded " + std::to_string(limit) + " moves with " +
                std::to_string(remaining.size()) + " violations left"),
      last_(std::move(last)),
      remaining_(std::move(remaining)) {}

CertifiedOrder local_median_order(const Digraph& t, const WeightMap& w,
                                  const LocalSearchOptions& options) {
  require_tournament(t);
  const std::size_t n = t.size();
  const PerturbedWeights pw = perturb_weights(w);
  const std::size_t limit = options.move_limit.value_or(default_move_limit(n));

  std::vector<VertexId> start(n);
  std::iota(start.begin(), start.end(), VertexId{0});
  if (options.start_seed) {
    Rng rng(*options.start_seed);
    rng.shuffle(start);
  }

  CertifiedOrder result;
  result.order = Order(std::move(start));
  require_sizes(t, pw.size(), result.order);
  result.objective = order_objective(t, pw, result.order);

  for (;;) {
    std::vector<FeedbackViolation> violations =
        feedback_check(t, pw, result.order);
    if (violations.empty()) break;
    if (result.moves.size() >= limit) {
      throw MoveLimitExceeded(limit, result.order, std::move(violations));
    }

    const FeedbackViolation& first = violations.front();
    LocalMove move{first.kind, first.i, first.j, 0, {}};
    if (first.kind == ViolationKind::Prefix) {
      move.vertex = result.order[first.i];
      result.order.move(first.i, first.j);
    } else {
      move.vertex = result.order[first.j];
      result.order.move(first.j, first.i);
    }
    move.gain = pw[move.vertex] * (first.rhs - first.lhs);

    PerturbedRational next = order_objective(t, pw, result.order);
    if (!(move.gain > PerturbedRational{}) ||
        next != result.objective + move.gain) {
      CounterexampleReport report{"local-search-monotonicity",
                                  "a repair move did not gain its predicted "
                                  "positive amount",
                                  t, w, nlohmann::json::object()};
      report.state["order_after_move"] = order_json(result.order);
      report.state["objective_before"] = to_string(result.objective);
      report.state["objective_after"] = to_string(next);
      report.state["predicted_gain"] = to_string(move.gain);
      report.state["moves_applied"] = result.moves.size();
      throw TheoremViolation(std::move(report));
    }
    result.objective = std::move(next);
    result.moves.push_back(std::move(move));
  }
  result.violations_checked = feedback_condition_count(n);
  return result;
}

CertifiedOrder local_median_order_restarts(const Digraph& t,
                                           const WeightMap& w,
                                           std::size_t restarts,
                                           std::uint64_t seed,
                                           std::optional<std::size_t> move_limit) {
  CertifiedOrder best = local_median_order(t, w, {move_limit, std::nullopt});
  for (std::size_t r = 1; r < restarts; ++r) {
    CertifiedOrder candidate = local_median_order(
        t, w, {move_limit, mix_seed(derive_seed(seed, r))});
    if (candidate.objective > best.objective ||
        (candidate.objective == best.objective && candidate.order < best.order)) {
      best = std::move(candidate);
    }
  }
  return best;
}

namespace {

using Wide = __int128;

// Objective scaled per coefficient: (D²·c0, D·c1, c2) with D the common
// denominator of the weights. Lexicographic comparison is unchanged.
struct ScaledValue {
  Wide c0 = 0;
  Wide c1 = 0;
  Wide c2 = 0;

  friend bool operator==(const ScaledValue&, const ScaledValue&) = default;
  friend auto operator<=>(const ScaledValue& a, const ScaledValue& b) {
    if (a.c0 != b.c0) return a.c0 < b.c0 ? -1 : 1;
    if (a.c1 != b.c1) return a.c1 < b.c1 ? -1 : 1;
    if (a.c2 != b.c2) return a.c2 < b.c2 ? -1 : 1;
    return 0;
  }
};

// Weights above this keep every DP sum far from the __int128 range.
constexpr std::int64_t kMaxScaledWeight = std::int64_t{1} << 40;

BigInt to_big(Wide x) {
  const bool negative = x < 0;
  if (negative) x = -x;
  BigInt result = static_cast<std::uint64_t>(x >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(x);
  return negative ? BigInt(-result) : result;
}

}  // namespace

CertifiedOrder exact_median_order(const Digraph& t, const WeightMap& w) {
  require_tournament(t);
  const std::size_t n = t.size();
  if (n > kExactOrderMaxVertices) {
    throw Error(ErrorCode::TooLarge,
                "exact median order supports at most " +
                    std::to_string(kExactOrderMaxVertices) + " vertices");
  }
  if (w.size() != n) throw std::invalid_argument("weight map size mismatch");
  const PerturbedWeights pw = perturb_weights(w);

  BigInt common = 1;
  for (const Rational& value : w.values()) {
    common = boost::multiprecision::lcm(common, denominator_of(value));
  }
  std::vector<std::int64_t> scaled(n);
  for (std::size_t v = 0; v < n; ++v) {
    const BigInt s = numerator_of(w[v]) * (common / denominator_of(w[v]));
    if (s > kMaxScaledWeight || common > kMaxScaledWeight) {
      throw Error(ErrorCode::TooLarge,
                  "weights too large for the exact dynamic program");
    }
    scaled[v] = static_cast<std::int64_t>(s);
  }
  const auto scale = static_cast<std::int64_t>(common);

  std::vector<std::uint32_t> in_mask(n, 0);
  for (auto [u, v] : t.arcs()) in_mask[v] |= std::uint32_t{1} << u;

  const std::size_t full = std::size_t{1} << n;
  std::vector<Wide> subset_weight(full, 0);
  for (std::size_t s = 1; s < full; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    subset_weight[s] = subset_weight[s & (s - 1)] + scaled[low];
  }

  std::vector<ScaledValue> best(full);
  std::vector<std::int8_t> last(full, -1);
  std::vector<std::uint8_t> reached(full, 0);
  reached[0] = 1;
  for (std::size_t s = 0; s < full; ++s) {
    if (!reached[s]) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (s & (std::size_t{1} << v)) continue;
      const std::size_t preds = s & in_mask[v];
      const Wide sum_a = subset_weight[preds];
      const Wide count = std::popcount(preds);
      ScaledValue cand = best[s];
      cand.c0 += sum_a * scaled[v];
      cand.c1 += (sum_a + count * scaled[v]) * scale;
      cand.c2 += count * scale * scale;
      const std::size_t next = s | (std::size_t{1} << v);
      if (!reached[next] || cand > best[next]) {
        best[next] = cand;
        last[next] = static_cast<std::int8_t>(v);
        reached[next] = 1;
      }
    }
  }

  std::vector<VertexId> seq(n);
  std::size_t s = full - 1;
  for (std::size_t k = n; k-- > 0;) {
    seq[k] = static_cast<VertexId>(last[s]);
    s &= ~(std::size_t{1} << seq[k]);
  }

  CertifiedOrder result;
  result.order = Order(std::move(seq));
  result.objective = order_objective(t, pw, result.order);

  // The exact objective scaled by (D², D, 1) must reproduce the DP value.
  const ScaledValue& top = best[full - 1];
  const Rational d = scale;
  if (result.objective.c0 * d * d != Rational(to_big(top.c0)) ||
      result.objective.c1 * d != Rational(to_big(top.c1)) ||
      result.objective.c2 != Rational(to_big(top.c2))) {
    throw std::logic_error("exact median order: DP value disagrees with the "
                           "recomputed objective");
  }

  std::vector<FeedbackViolation> violations =
      feedback_check(t, pw, result.order);
  if (!violations.empty()) {
    CounterexampleReport report{
        "exact-order-feedback",
        "a globally optimal order fails the feedback property", t, w,
        nlohmann::json::object()};
    report.state["order"] = order_json(result.order);
    report.state["objective"] = to_string(result.objective);
    report.state["violations"] = violations.size();
    throw TheoremViolation(std::move(report));
  }
  result.violations_checked = feedback_condition_count(n);
  return result;
}

VertexId feed_vertex(const CertifiedOrder& co) {
  if (co.order.size() == 0) throw std::invalid_argument("empty order");
  return co.order[co.order.size() - 1];
}

}  // namespace snc
