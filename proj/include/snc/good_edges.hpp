#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/median_order.hpp"

namespace snc {

/// to ∈ N⁺(from) ∪ N⁺⁺(from).
bool reaches_within_two(const Digraph& d, VertexId from, VertexId to);

/// Goodness of the missing edge {a, b}, with condition (i) read with `a` as
/// the endpoint whose in-neighbors are quantified:
///   (i)  every v ∉ {a,b} with v→a reaches b within distance 2;
///   (ii) every v ∉ {a,b} with v→b reaches a within distance 2.
/// Every vertex other than a and b is quantified over, whole vertices
/// included. The witnesses are the lowest-index vertices refuting a
/// condition.
struct MissingEdgeStatus {
  VertexId a = 0;
  VertexId b = 0;
  bool satisfies_i = false;
  bool satisfies_ii = false;
  std::optional<VertexId> witness_against_i;
  std::optional<VertexId> witness_against_ii;

  bool good() const noexcept { return satisfies_i || satisfies_ii; }
};

/// Throws NotMissing when a and b are joined by an arc (or a == b).
MissingEdgeStatus classify_missing_edge(const Digraph& d, VertexId a,
                                        VertexId b);

struct GoodEdgesReport {
  bool all_good = true;
  /// One entry per missing edge, a < b, sorted.
  std::vector<MissingEdgeStatus> statuses;
};

GoodEdgesReport all_missing_edges_good(const Digraph& d);

/// A direction for a missing edge licensed by condition (i) of its tail:
/// (a, b) is convenient iff every in-neighbor of a reaches b within 2 steps.
struct ConvenientOrientation {
  Arc arc;
  friend bool operator==(const ConvenientOrientation&,
                         const ConvenientOrientation&) = default;
};

/// Re-validates an orientation against the definition.
bool is_convenient(const Digraph& d, const Arc& arc);

struct Completion {
  Digraph tournament;
  std::vector<ConvenientOrientation> orientations;
};

/// Adds one convenient orientation per missing edge: (a, b) when condition
/// (i) holds for the status's `a`, otherwise (b, a).
/// Throws NotAllGood.
Completion complete_to_tournament(const Digraph& d,
                                  std::span<const MissingEdgeStatus> statuses);
Completion complete_to_tournament(const Digraph& d);

/// Directs every arc of t that realizes a missing edge incident to f toward
/// f. Other arcs are left as they are.
Digraph reorient_at_feed(const Digraph& t, const UndirectedGraph& missing,
                         VertexId f);

/// Audit trail for a vertex with the weighted SNP, produced by completing
/// to a tournament, taking the feed vertex of a local median order, and
/// reorienting the missing edges at that vertex toward it.
struct WitnessCertificate {
  WeightedDigraph instance;
  VertexId witness = 0;
  std::vector<ConvenientOrientation> orientations;
  Digraph tournament;
  CertifiedOrder order;
  /// Arcs of T′ (pointing at the witness) that were flipped relative to T.
  std::vector<Arc> reoriented_edges;
  /// feedback_check of the order on T′; always empty in a valid certificate.
  std::vector<FeedbackViolation> recheck_t_prime;
  Rational lhs;  // ω(N⁺_D(f))
  Rational rhs;  // ω(N⁺⁺_D(f))
};

/// Throws NotAllGood, MoveLimitExceeded, TheoremViolation.
WitnessCertificate find_witness_good(const WeightedDigraph& d,
                                     const LocalSearchOptions& options = {});

struct WitnessResult {
  /// False when some missing edge is not good and the witness came from an
  /// exhaustive scan instead of a certificate.
  bool certified = false;
  VertexId witness = 0;
  Rational lhs;
  Rational rhs;
  std::optional<WitnessCertificate> certificate;
  std::vector<MissingEdgeStatus> statuses;
};

/// Certified path when every missing edge is good, exhaustive scan
/// otherwise. Throws TheoremViolation (code NoWitnessFound) if no vertex has
/// the weighted SNP.
WitnessResult find_witness(const WeightedDigraph& d,
                           const LocalSearchOptions& options = {});

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-derives every claim of a certificate from its embedded instance.
CertificateCheck verify_certificate(const WitnessCertificate& cert);

}  // namespace snc
