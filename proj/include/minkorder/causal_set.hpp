#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minkorder/bit_matrix.hpp"
#include "minkorder/event.hpp"
#include "minkorder/order.hpp"

namespace minkorder {

/// Uniform sprinkling of `count` events into an axis-aligned box.
///
/// `box[0]` bounds the time axis and `box[1..n]` the space axes, matching the
/// column order of event files. A single interval applies to every axis.
struct SprinkleConfig {
  std::size_t count = 0;
  std::size_t dim = 1;
  std::vector<std::pair<double, double>> box;
  std::uint64_t seed = 0;

  /// Box for axis a (0 = time), after applying the single-interval shorthand.
  std::pair<double, double> axis(std::size_t a) const;
  void validate() const;
};

/// Deterministic given cfg.seed; coordinates drawn time first, then x_1..x_n.
std::vector<Event> sprinkle(const SprinkleConfig& cfg);

/// A finite event set with its strict order relation under `spec`.
class FiniteCausalSet {
 public:
  const std::vector<Event>& events() const noexcept { return events_; }
  const OrderSpec& spec() const noexcept { return spec_; }
  /// relation().get(i, j) iff events[i] is strictly below events[j].
  const BitMatrix& relation() const noexcept { return relation_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool below(std::size_t i, std::size_t j) const noexcept { return relation_.get(i, j); }
  bool comparable(std::size_t i, std::size_t j) const noexcept {
    return i == j || below(i, j) || below(j, i);
  }

 private:
  friend FiniteCausalSet build(std::vector<Event> events, const OrderSpec& spec);
  FiniteCausalSet(std::vector<Event> events, OrderSpec spec, BitMatrix relation)
      : events_(std::move(events)), spec_(spec), relation_(std::move(relation)) {}

  std::vector<Event> events_;
  OrderSpec spec_;
  BitMatrix relation_;
};

/// R[i][j] = leq(spec, e_i, e_j) and e_i != e_j. Verifies the strict-order
/// axioms and throws OrderAxiomError on a violation.
FiniteCausalSet build(std::vector<Event> events, const OrderSpec& spec);

/// First violated axiom of a strict order (irreflexive, antisymmetric,
/// transitive), or nullopt.
std::optional<std::string> find_axiom_violation(const BitMatrix& r);

using Edge = std::pair<std::size_t, std::size_t>;

/// Covering relation (transitive reduction), edges in lexicographic order.
std::vector<Edge> hasse(const FiniteCausalSet& fcs);

/// Strict transitive closure of a DAG given by edges on n vertices.
BitMatrix transitive_closure(std::span<const Edge> edges, std::size_t n);

inline constexpr std::size_t kMaxChainEvents = 2000;
inline constexpr std::size_t kMaxAntichainEvents = 24;

/// Result of a capped enumeration; `truncated` is set when the cap cut it short.
struct Enumeration {
  std::vector<std::vector<std::size_t>> sets;
  bool truncated = false;
};

/// Maximal chains as index lists in increasing order, enumerated as Hasse
/// paths from minimal to maximal elements, lexicographically.
Enumeration maximal_chains(const FiniteCausalSet& fcs, std::size_t cap);

/// Maximal antichains (maximal cliques of the incomparability graph), each
/// sorted, listed lexicographically. At most kMaxAntichainEvents events.
Enumeration maximal_antichains(const FiniteCausalSet& fcs, std::size_t cap);

/// First incomparable-violating pair of `indices`, or nullopt for an antichain.
std::optional<Edge> find_comparable_pair(const FiniteCausalSet& fcs,
                                         std::span<const std::size_t> indices);

/// Lexicographically first maximal chain disjoint from `antichain`, if any.
/// Throws PreconditionError if `antichain` is not an antichain.
std::optional<std::vector<std::size_t>> avoiding_chain(const FiniteCausalSet& fcs,
                                                       std::span<const std::size_t> antichain);

/// Whether the antichain meets every maximal chain.
bool is_cutset(const FiniteCausalSet& fcs, std::span<const std::size_t> antichain);

/// Causal relation rebuilt from a subluminal set: u < v iff u <' v or every
/// w other than u, v with v <' w also has u <' w. A superset of the true
/// strict causal relation on the same events.
BitMatrix reconstruct_order(const FiniteCausalSet& subluminal);

struct RelationDiff {
  std::size_t agreements = 0;
  std::size_t false_positives = 0;  // candidate true, truth false
  std::size_t false_negatives = 0;  // candidate false, truth true
  std::vector<Edge> differences;    // first 100 differing (i, j), i != j
};

inline constexpr std::size_t kMaxListedDifferences = 100;

/// Compares off-diagonal entries of two relations of the same size.
RelationDiff compare_relations(const BitMatrix& candidate, const BitMatrix& truth);

}  // namespace minkorder
