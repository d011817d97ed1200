#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/error.hpp"
#include "snc/perturbed.hpp"

namespace snc {

using PerturbedWeights = std::vector<PerturbedRational>;

/// ω̃(v) = ω(v) + ε. Throws NegativeWeight.
PerturbedWeights perturb_weights(const WeightMap& w);

/// A permutation of [0, n).
class Order {
 public:
  Order() = default;
  /// Throws std::invalid_argument unless `sequence` is a permutation.
  explicit Order(std::vector<VertexId> sequence);

  static Order identity(std::size_t n);

  std::size_t size() const noexcept { return seq_.size(); }
  VertexId operator[](std::size_t pos) const { return seq_[pos]; }
  const std::vector<VertexId>& sequence() const noexcept { return seq_; }

  /// Moves the vertex at `from` to position `to`, shifting the vertices in
  /// between by one.
  void move(std::size_t from, std::size_t to);

  friend bool operator==(const Order&, const Order&) = default;
  friend auto operator<=>(const Order&, const Order&) = default;

 private:
  std::vector<VertexId> seq_;
};

enum class ViolationKind {
  Prefix,  // ω̃(N⁺(v_i)) ≥ ω̃(N⁻(v_i)) fails inside [i, j]
  Suffix,  // ω̃(N⁻(v_j)) ≥ ω̃(N⁺(v_j)) fails inside [i, j]
};

/// A strict failure lhs < rhs of one interval condition. Positions are
/// zero-based indices into the order, i < j.
struct FeedbackViolation {
  ViolationKind kind;
  std::size_t i;
  std::size_t j;
  PerturbedRational lhs;
  PerturbedRational rhs;

  friend bool operator==(const FeedbackViolation&,
                         const FeedbackViolation&) = default;
};

/// Number of interval conditions a feedback check decides for n vertices:
/// both inequalities on every interval i < j, and the single degenerate one
/// on each i = j.
constexpr std::size_t feedback_condition_count(std::size_t n) { return n * n; }

/// Σ over forward arcs (v_i, v_j), i < j, of ω̃(v_i)·ω̃(v_j).
/// Throws NotATournament.
PerturbedRational order_objective(const Digraph& t, const PerturbedWeights& w,
                                  const Order& order);

/// Every strict failure of the feedback property, sorted by (i, j), prefix
/// before suffix. Throws NotATournament.
std::vector<FeedbackViolation> feedback_check(const Digraph& t,
                                              const PerturbedWeights& w,
                                              const Order& order);

struct LocalMove {
  ViolationKind kind;
  std::size_t i;
  std::size_t j;
  VertexId vertex;
  PerturbedRational gain;
};

struct CertifiedOrder {
  Order order;
  PerturbedRational objective;
  std::size_t violations_checked = 0;
  std::vector<LocalMove> moves;
};

/// 50·n³.
std::size_t default_move_limit(std::size_t n);

struct LocalSearchOptions {
  /// Defaults to default_move_limit(n).
  std::optional<std::size_t> move_limit;
  /// Start from a seeded shuffle instead of the identity order.
  std::optional<std::uint64_t> start_seed;
};

class MoveLimitExceeded : public Error {
 public:
  MoveLimitExceeded(std::size_t limit, Order last,
                    std::vector<FeedbackViolation> remaining);

  const Order& last_order() const noexcept { return last_; }
  const std::vector<FeedbackViolation>& remaining() const noexcept {
    return remaining_;
  }

 private:
  Order last_;
  std::vector<FeedbackViolation> remaining_;
};

/// Repairs the first violation (scan order of feedback_check) until none is
/// left. Every move strictly increases the perturbed objective.
/// Throws NotATournament, MoveLimitExceeded, TheoremViolation.
CertifiedOrder local_median_order(const Digraph& t, const WeightMap& w,
                                  const LocalSearchOptions& options = {});

/// Runs `restarts` searches (the first from the identity order, the rest
/// from seeds derived from `seed`) and keeps the best: maximal objective,
/// then lexicographically smallest order.
CertifiedOrder local_median_order_restarts(const Digraph& t,
                                           const WeightMap& w,
                                           std::size_t restarts,
                                           std::uint64_t seed,
                                           std::optional<std::size_t> move_limit =
                                               std::nullopt);

inline constexpr std::size_t kExactOrderMaxVertices = 20;

/// Globally optimal order by dynamic programming over prefix sets.
/// Throws NotATournament, TooLarge, TheoremViolation.
CertifiedOrder exact_median_order(const Digraph& t, const WeightMap& w);

/// The last vertex of the order. Throws std::invalid_argument when empty.
VertexId feed_vertex(const CertifiedOrder& co);

}  // namespace snc
