#pragma once

// Reference implementations used as test oracles. They are written directly
// from the definitions, share no code with the library beyond Event, and
// favour obviousness over speed.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "minkorder/event.hpp"
#include "minkorder/order.hpp"

namespace oracle {

using minkorder::Event;

inline double dist2(const Event& u, const Event& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double d = v.x()[i] - u.x()[i];
    s += d * d;
  }
  return s;
}

// Forward strict relations, squared to avoid the library's sqrt path.
inline bool causal_lt(const Event& u, const Event& v, double c) {
  const double dt = v.t() - u.t();
  return dt > 0 && dist2(u, v) <= c * c * dt * dt;
}

inline bool timelike_lt(const Event& u, const Event& v, double c) {
  const double dt = v.t() - u.t();
  return dt > 0 && dist2(u, v) < c * c * dt * dt;
}

// Reflexive closure, direction applied by swapping arguments.
inline bool leq(minkorder::OrderKind kind, double c, minkorder::Direction dir, const Event& a,
                const Event& b) {
  const Event& u = dir == minkorder::Direction::forward ? a : b;
  const Event& v = dir == minkorder::Direction::forward ? b : a;
  if (u == v) return true;
  switch (kind) {
    case minkorder::OrderKind::causal: return causal_lt(u, v, c);
    case minkorder::OrderKind::subluminal: return timelike_lt(u, v, c);
    case minkorder::OrderKind::temporal: return u.t() < v.t();
  }
  return false;
}

// Strict relation matrix as nested vectors.
using Rel = std::vector<std::vector<bool>>;

inline Rel relation(const std::vector<Event>& ev, minkorder::OrderKind kind, double c,
                    minkorder::Direction dir = minkorder::Direction::forward) {
  Rel r(ev.size(), std::vector<bool>(ev.size(), false));
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = 0; j < ev.size(); ++j)
      r[i][j] = i != j && !(ev[i] == ev[j]) && leq(kind, c, dir, ev[i], ev[j]);
  return r;
}

inline bool is_chain(const Rel& r, const std::vector<std::size_t>& s) {
  for (std::size_t a : s)
    for (std::size_t b : s)
      if (a != b && !r[a][b] && !r[b][a]) return false;
  return true;
}

inline bool is_antichain(const Rel& r, const std::vector<std::size_t>& s) {
  for (std::size_t a : s)
    for (std::size_t b : s)
      if (r[a][b]) return false;
  return true;
}

inline std::vector<std::size_t> members(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

// All maximal sets (under inclusion) satisfying `pred`, by subset
// enumeration; n <= 16. Each set ascending, list in lexicographic order.
template <class Pred>
std::vector<std::vector<std::size_t>> maximal_sets(std::size_t n, Pred pred) {
  const std::uint32_t full = n == 0 ? 0u : (1u << n);
  std::vector<bool> ok(full, false);
  for (std::uint32_t m = 1; m < full; ++m) ok[m] = pred(members(m, n));
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t m = 1; m < full; ++m) {
    if (!ok[m]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!(m >> i & 1u) && ok[m | (1u << i)]) maximal = false;
    if (maximal) out.push_back(members(m, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<std::size_t>> maximal_chains(const Rel& r) {
  return maximal_sets(r.size(), [&](const auto& s) { return is_chain(r, s); });
}

inline std::vector<std::vector<std::size_t>> maximal_antichains(const Rel& r) {
  return maximal_sets(r.size(), [&](const auto& s) { return is_antichain(r, s); });
}

// Covering pairs straight from the definition: i < j with nothing between.
inline std::vector<std::pair<std::size_t, std::size_t>> covers(const Rel& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (r[i][k] && r[k][j]) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

// Independent sampler for tests (not the library Rng).
struct Sampler {
  std::mt19937_64 gen;
  explicit Sampler(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  Event event(std::size_t n, double tlo, double thi, double xlo, double xhi) {
    const double t = uniform(tlo, thi);
    std::vector<double> x(n);
    for (double& xi : x) xi = uniform(xlo, xhi);
    return Event(t, x);
  }
  std::vector<Event> events(std::size_t count, std::size_t n, double lo = 0.0, double hi = 1.0) {
    std::vector<Event> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(event(n, lo, hi, lo, hi));
    return out;
  }
};

}  // namespace oracle
