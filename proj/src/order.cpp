#include "minkorder/order.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "minkorder/error.hpp"
#include "minkorder/random.hpp"

namespace minkorder {

namespace {

void require_light_speed(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("light speed c must be positive and finite, got " + std::to_string(c));
  }
}

bool is_causal_forward(PairClass pc) {
  return pc == PairClass::equal || pc == PairClass::timelike_forward ||
         pc == PairClass::lightlike_forward;
}

// Orthonormal basis of the complement of unit vector e (Gram-Schmidt against
// the standard basis).
std::vector<std::vector<double>> transverse_basis(const std::vector<double>& e) {
  const std::size_t n = e.size();
  std::vector<std::vector<double>> basis{e};
  for (std::size_t k = 0; k < n && basis.size() < n; ++k) {
    std::vector<double> v(n, 0.0);
    v[k] = 1.0;
    for (const auto& b : basis) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += v[i] * b[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * b[i];
    }
    const double len = norm(v);
    if (len < 1e-6) continue;
    for (double& vi : v) vi /= len;
    basis.push_back(std::move(v));
  }
  basis.erase(basis.begin());
  return basis;
}

}  // namespace

void OrderSpec::validate() const {
  if (kind != OrderKind::temporal) require_light_speed(c);
}

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::causal: return "causal";
    case OrderKind::subluminal: return "subluminal";
    case OrderKind::temporal: return "temporal";
  }
  return "?";
}

std::string_view to_string(Direction dir) {
  return dir == Direction::forward ? "fwd" : "bwd";
}

std::string_view to_string(PairClass pc) {
  switch (pc) {
    case PairClass::equal: return "equal";
    case PairClass::timelike_forward: return "timelike-forward";
    case PairClass::lightlike_forward: return "lightlike-forward";
    case PairClass::spacelike: return "spacelike";
    case PairClass::lightlike_backward: return "lightlike-backward";
    case PairClass::timelike_backward: return "timelike-backward";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view s) {
  if (s == "causal") return OrderKind::causal;
  if (s == "subluminal") return OrderKind::subluminal;
  if (s == "temporal") return OrderKind::temporal;
  throw DomainError("unknown order kind '" + std::string(s) + "'");
}

Direction parse_direction(std::string_view s) {
  if (s == "fwd" || s == "forward") return Direction::forward;
  if (s == "bwd" || s == "backward") return Direction::backward;
  throw DomainError("unknown direction '" + std::string(s) + "'");
}

PairClass mirror(PairClass pc) {
  switch (pc) {
    case PairClass::timelike_forward: return PairClass::timelike_backward;
    case PairClass::lightlike_forward: return PairClass::lightlike_backward;
    case PairClass::lightlike_backward: return PairClass::lightlike_forward;
    case PairClass::timelike_backward: return PairClass::timelike_forward;
    default: return pc;
  }
}

PairClass classify_pair(const Event& u, const Event& v, double c, double eps) {
  require_same_dim(u, v);
  require_light_speed(c);
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("tolerance must be >= 0");

  if (u == v) return PairClass::equal;
  const double dt = v.t() - u.t();
  if (dt == 0.0) return PairClass::spacelike;

  const double dx = space_distance(u, v);
  const double reach = c * std::abs(dt);
  const bool forward = dt > 0.0;
  if (std::abs(dx - reach) <= eps * std::max(dx, reach)) {
    return forward ? PairClass::lightlike_forward : PairClass::lightlike_backward;
  }
  if (dx < reach) return forward ? PairClass::timelike_forward : PairClass::timelike_backward;
  return PairClass::spacelike;
}

bool leq(const OrderSpec& spec, const Event& u, const Event& v) {
  spec.validate();
  if (spec.direction == Direction::backward) {
    return leq({spec.kind, spec.c, Direction::forward}, v, u);
  }
  switch (spec.kind) {
    case OrderKind::causal:
      return is_causal_forward(classify_pair(u, v, spec.c));
    case OrderKind::subluminal: {
      const PairClass pc = classify_pair(u, v, spec.c);
      return pc == PairClass::equal || pc == PairClass::timelike_forward;
    }
    case OrderKind::temporal:
      require_same_dim(u, v);
      return u == v || u.t() < v.t();
  }
  return false;
}

bool comparable(const OrderSpec& spec, const Event& u, const Event& v, double eps) {
  spec.validate();
  switch (spec.kind) {
    case OrderKind::causal:
      return classify_pair(u, v, spec.c, eps) != PairClass::spacelike;
    case OrderKind::subluminal: {
      const PairClass pc = classify_pair(u, v, spec.c, eps);
      return pc == PairClass::equal || pc == PairClass::timelike_forward ||
             pc == PairClass::timelike_backward;
    }
    case OrderKind::temporal:
      require_same_dim(u, v);
      return u == v || u.t() != v.t();
  }
  return false;
}

bool interval_is_chain(const Event& a, const Event& b, double c) {
  const PairClass pc = classify_pair(a, b, c);
  if (!is_causal_forward(pc)) {
    throw PreconditionError("interval_is_chain requires a <=_c b, got " +
                            std::string(to_string(pc)));
  }
  // Without space every interval is a segment of the time line.
  if (a.dim() == 0) return true;
  return pc != PairClass::timelike_forward;
}

bool interval_is_chain_sampled(const Event& a, const Event& b, double c, std::size_t samples,
                               std::uint64_t seed) {
  constexpr double kEps = 1e-9;
  const PairClass pc = classify_pair(a, b, c);
  if (!is_causal_forward(pc)) {
    throw PreconditionError("interval_is_chain_sampled requires a <=_c b, got " +
                            std::string(to_string(pc)));
  }
  if (samples < 2) throw PreconditionError("interval_is_chain_sampled needs samples >= 2");
  if (a == b) return true;

  const std::size_t n = a.dim();
  const double reach = c * (b.t() - a.t());
  const double d = space_distance(a, b);

  // Null coordinates p = c*dt + s, q = c*dt - s along the unit direction e of
  // b - a, transverse coordinates y in the orthogonal complement.
  std::vector<double> e(n, 0.0);
  if (n > 0) {
    if (d > 0.0) {
      for (std::size_t i = 0; i < n; ++i) e[i] = (b.x()[i] - a.x()[i]) / d;
    } else {
      e[0] = 1.0;
    }
  }
  const auto transverse = transverse_basis(e);
  const double p_max = reach + d;
  const double q_max = std::max(0.0, reach - d);
  const double y_max = 0.5 * std::sqrt(p_max * q_max);

  Rng rng(seed);
  std::vector<Event> kept{a, b};
  for (std::size_t k = 0; k < samples; ++k) {
    const double p = rng.uniform(0.0, p_max);
    const double q = rng.uniform(0.0, q_max);
    const double t = a.t() + (p + q) / (2.0 * c);
    const double s = 0.5 * (p - q);
    std::vector<double> x(a.x().begin(), a.x().end());
    for (std::size_t i = 0; i < n; ++i) x[i] += s * e[i];
    for (const auto& f : transverse) {
      const double y = rng.uniform(-y_max, y_max);
      for (std::size_t i = 0; i < n; ++i) x[i] += y * f[i];
    }
    Event w(t, std::move(x));
    if (is_causal_forward(classify_pair(a, w, c, kEps)) &&
        is_causal_forward(classify_pair(w, b, c, kEps))) {
      kept.push_back(std::move(w));
    }
  }

  // Tolerance measured against the interval, not the pair: nearby samples on
  // a light segment carry coordinate rounding far above their own scale.
  const double slack = kEps * (reach + d);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const double dt = std::abs(kept[j].t() - kept[i].t());
      if (space_distance(kept[i], kept[j]) - c * dt > slack) return false;
    }
  }
  return true;
}

bool subluminal_via_weakening(const Event& a, const Event& b, double c) {
  if (!leq(OrderSpec::causal(c), a, b)) return false;
  return a == b || !interval_is_chain(a, b, c);
}

bool reconstruct_causal_analytic(const Event& u, const Event& v, double c) {
  if (leq(OrderSpec::subluminal(c), u, v)) return true;
  // Cone inclusion: ||x_w - x_u|| <= ||x_w - x_v|| + ||x_v - x_u|| < c(t_w - t_v) +
  // ||x_v - x_u||, which stays below c(t_w - t_u) for every w iff the
  // displacement v - u reaches at most light speed.
  return space_distance(u, v) <= c * (v.t() - u.t());
}

bool reconstruct_causal_sampled(const Event& u, const Event& v, double c,
                                std::span<const Event> witnesses) {
  const OrderSpec sub = OrderSpec::subluminal(c);
  if (leq(sub, u, v)) return true;
  for (const Event& w : witnesses) {
    if (w == u || w == v) continue;
    if (leq(sub, v, w) && !leq(sub, u, w)) return false;
  }
  return true;
}

}  // namespace minkorder
