#include "minkorder/causal_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "minkorder/error.hpp"
#include "minkorder/random.hpp"

namespace minkorder {

std::pair<double, double> SprinkleConfig::axis(std::size_t a) const {
  if (box.size() == 1) return box.front();
  if (a >= box.size()) throw PreconditionError("sprinkle box has no interval for axis " + std::to_string(a));
  return box[a];
}

void SprinkleConfig::validate() const {
  if (dim > kMaxSpaceDim) throw DimensionError("space dimension exceeds the supported maximum");
  if (box.size() != 1 && box.size() != dim + 1) {
    throw PreconditionError("sprinkle box needs 1 or " + std::to_string(dim + 1) +
                            " intervals, got " + std::to_string(box.size()));
  }
  for (const auto& [lo, hi] : box) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw DomainError("sprinkle box intervals need finite lo < hi");
    }
  }
}

std::vector<Event> sprinkle(const SprinkleConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::vector<Event> out;
  out.reserve(cfg.count);
  for (std::size_t k = 0; k < cfg.count; ++k) {
    const auto [t_lo, t_hi] = cfg.axis(0);
    const double t = rng.uniform(t_lo, t_hi);
    std::vector<double> x(cfg.dim);
    for (std::size_t i = 0; i < cfg.dim; ++i) {
      const auto [lo, hi] = cfg.axis(i + 1);
      x[i] = rng.uniform(lo, hi);
    }
    out.emplace_back(t, std::move(x));
  }
  return out;
}

std::optional<std::string> find_axiom_violation(const BitMatrix& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (r.get(i, i)) return "not irreflexive at " + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (r.get(i, j) && r.get(j, i)) {
        return "not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  }
  // i < j implies every successor of j is a successor of i.
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = r.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.get(i, j)) continue;
      const auto rj = r.row(j);
      for (std::size_t w = 0; w < ri.size(); ++w) {
        const std::uint64_t missing = rj[w] & ~ri[w];
        if (missing != 0) {
          const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
          return "not transitive at (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(k) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

FiniteCausalSet build(std::vector<Event> events, const OrderSpec& spec) {
  spec.validate();
  if (events.size() > kMaxChainEvents) {
    throw PreconditionError("causal sets are limited to " + std::to_string(kMaxChainEvents) +
                            " events, got " + std::to_string(events.size()));
  }
  for (std::size_t i = 1; i < events.size(); ++i) require_same_dim(events[0], events[i]);

  const std::size_t n = events.size();
  BitMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !(events[i] == events[j]) && leq(spec, events[i], events[j])) r.set(i, j);
    }
  }
  if (auto violation = find_axiom_violation(r)) {
    throw OrderAxiomError("relation " + *violation);
  }
  return FiniteCausalSet(std::move(events), spec, std::move(r));
}

std::vector<Edge> hasse(const FiniteCausalSet& fcs) {
  const BitMatrix& r = fcs.relation();
  const BitMatrix below = r.transposed();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < fcs.size(); ++i) {
    const auto succ = r.row(i);
    for (std::size_t j = 0; j < fcs.size(); ++j) {
      if (!r.get(i, j)) continue;
      // i -> j is a cover unless some k has i < k < j.
      const auto pred = below.row(j);
      bool covered = true;
      for (std::size_t w = 0; w < succ.size() && covered; ++w) covered = (succ[w] & pred[w]) == 0;
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

BitMatrix transitive_closure(std::span<const Edge> edges, std::size_t n) {
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw PreconditionError("edge endpoint out of range");
    out[a].push_back(b);
  }
  BitMatrix closure(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(out[s].begin(), out[s].end());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (closure.get(s, v)) continue;
      closure.set(s, v);
      stack.insert(stack.end(), out[v].begin(), out[v].end());
    }
  }
  return closure;
}

namespace {

std::vector<std::vector<std::size_t>> hasse_successors(const FiniteCausalSet& fcs,
                                                       std::vector<bool>& is_minimal) {
  std::vector<std::vector<std::size_t>> succ(fcs.size());
  is_minimal.assign(fcs.size(), true);
  for (const auto& [a, b] : hasse(fcs)) {
    succ[a].push_back(b);
    is_minimal[b] = false;
  }
  return succ;
}

}  // namespace

Enumeration maximal_chains(const FiniteCausalSet& fcs, std::size_t cap) {
  std::vector<bool> is_minimal;
  const auto succ = hasse_successors(fcs, is_minimal);
  Enumeration result;
  std::vector<std::size_t> path;

  std::function<bool(std::size_t)> walk = [&](std::size_t v) {
    path.push_back(v);
    if (succ[v].empty()) {
      if (result.sets.size() == cap) {
        result.truncated = true;
        path.pop_back();
        return false;
      }
      result.sets.push_back(path);
    } else {
      for (std::size_t w : succ[v]) {
        if (!walk(w)) {
          path.pop_back();
          return false;
        }
      }
    }
    path.pop_back();
    return true;
  };

  for (std::size_t v = 0; v < fcs.size(); ++v) {
    if (is_minimal[v] && !walk(v)) break;
  }
  return result;
}

Enumeration maximal_antichains(const FiniteCausalSet& fcs, std::size_t cap) {
  const std::size_t n = fcs.size();
  if (n > kMaxAntichainEvents) {
    throw PreconditionError("maximal antichain enumeration is limited to " +
                            std::to_string(kMaxAntichainEvents) + " events, got " +
                            std::to_string(n));
  }
  using Mask = std::uint32_t;
  std::vector<Mask> incomparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!fcs.comparable(i, j)) incomparable[i] |= Mask{1} << j;
    }
  }

  Enumeration result;
  // Bron-Kerbosch with pivoting over the incomparability graph.
  std::function<bool(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      if (result.sets.size() == cap) {
        result.truncated = true;
        return false;
      }
      std::vector<std::size_t> set;
      for (std::size_t i = 0; i < n; ++i) {
        if (r & (Mask{1} << i)) set.push_back(i);
      }
      result.sets.push_back(std::move(set));
      return true;
    }
    const Mask px = p | x;
    std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
    int best = -1;
    for (Mask m = px; m != 0; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      const int deg = std::popcount(p & incomparable[u]);
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    for (Mask m = p & ~incomparable[pivot]; m != 0; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      const Mask bit = Mask{1} << v;
      if (!expand(r | bit, p & incomparable[v], x & incomparable[v])) return false;
      p &= ~bit;
      x |= bit;
    }
    return true;
  };

  if (n > 0) expand(0, (Mask{1} << n) - 1, 0);
  std::sort(result.sets.begin(), result.sets.end());
  return result;
}

std::optional<Edge> find_comparable_pair(const FiniteCausalSet& fcs,
                                         std::span<const std::size_t> indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= fcs.size()) throw PreconditionError("event index out of range");
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[b] >= fcs.size()) throw PreconditionError("event index out of range");
      if (fcs.comparable(indices[a], indices[b])) return Edge{indices[a], indices[b]};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> avoiding_chain(const FiniteCausalSet& fcs,
                                                       std::span<const std::size_t> antichain) {
  if (auto pair = find_comparable_pair(fcs, antichain)) {
    throw PreconditionError("not an antichain: events " + std::to_string(pair->first) + " and " +
                            std::to_string(pair->second) + " are comparable");
  }
  std::vector<bool> blocked(fcs.size(), false);
  for (std::size_t i : antichain) blocked[i] = true;

  std::vector<bool> is_minimal;
  const auto succ = hasse_successors(fcs, is_minimal);
  // dead[v]: no blocked-free Hasse path from v to a maximal element.
  std::vector<bool> dead(fcs.size(), false);
  std::vector<std::size_t> path;
  std::function<bool(std::size_t)> walk = [&](std::size_t v) {
    if (blocked[v] || dead[v]) return false;
    path.push_back(v);
    if (succ[v].empty()) return true;
    for (std::size_t w : succ[v]) {
      if (walk(w)) return true;
    }
    path.pop_back();
    dead[v] = true;
    return false;
  };
  for (std::size_t v = 0; v < fcs.size(); ++v) {
    if (is_minimal[v] && walk(v)) return path;
  }
  return std::nullopt;
}

bool is_cutset(const FiniteCausalSet& fcs, std::span<const std::size_t> antichain) {
  return !avoiding_chain(fcs, antichain).has_value();
}

BitMatrix reconstruct_order(const FiniteCausalSet& subluminal) {
  if (subluminal.spec().kind != OrderKind::subluminal) {
    throw PreconditionError("reconstruct_order needs a set built with the subluminal order");
  }
  const BitMatrix& r = subluminal.relation();
  const std::size_t n = r.size();
  BitMatrix out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (r.get(u, v)) {
        out.set(u, v);
        continue;
      }
      // Witnesses above v that are not above u, excluding u and v themselves.
      const auto above_v = r.row(v);
      const auto above_u = r.row(u);
      bool holds = true;
      for (std::size_t w = 0; w < above_v.size() && holds; ++w) {
        std::uint64_t bad = above_v[w] & ~above_u[w];
        if (u / 64 == w) bad &= ~(std::uint64_t{1} << (u % 64));
        if (v / 64 == w) bad &= ~(std::uint64_t{1} << (v % 64));
        holds = bad == 0;
      }
      if (holds) out.set(u, v);
    }
  }
  return out;
}

RelationDiff compare_relations(const BitMatrix& candidate, const BitMatrix& truth) {
  if (candidate.size() != truth.size()) {
    throw DimensionError("relation sizes differ: " + std::to_string(candidate.size()) + " vs " +
                         std::to_string(truth.size()));
  }
  RelationDiff diff;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t j = 0; j < truth.size(); ++j) {
      if (i == j) continue;
      const bool a = candidate.get(i, j);
      const bool b = truth.get(i, j);
      if (a == b) {
        ++diff.agreements;
        continue;
      }
      if (a) {
        ++diff.false_positives;
      } else {
        ++diff.false_negatives;
      }
      if (diff.differences.size() < kMaxListedDifferences) diff.differences.emplace_back(i, j);
    }
  }
  return diff;
}

}  // namespace minkorder
