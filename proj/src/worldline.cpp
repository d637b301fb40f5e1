#include "minkorder/worldline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "minkorder/error.hpp"

namespace minkorder {

namespace {

constexpr int kApproachSteps = 20;

std::vector<double> segment_velocity(const Event& a, const Event& b) {
  const double dt = b.t() - a.t();
  std::vector<double> v(a.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (b.x()[i] - a.x()[i]) / dt;
  return v;
}

bool is_light_speed(double speed, double c) {
  return std::abs(speed - c) <= kLightSpeedTol * c;
}

}  // namespace

double PolyWorldLine::segment_speed(std::size_t i) const {
  if (i + 1 >= vertices_.size()) throw PreconditionError("segment index out of range");
  const Event& a = vertices_[i];
  const Event& b = vertices_[i + 1];
  return space_distance(a, b) / (b.t() - a.t());
}

std::vector<double> PolyWorldLine::eval(double t) const {
  if (!in_window(t)) {
    throw PreconditionError("time " + std::to_string(t) + " outside window [" +
                            std::to_string(t_min()) + ", " + std::to_string(t_max()) + "]");
  }
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t,
                                   [](const Event& v, double s) { return v.t() < s; });
  if (it->t() == t) return {it->x().begin(), it->x().end()};
  const Event& b = *it;
  const Event& a = *(it - 1);
  const double w = (t - a.t()) / (b.t() - a.t());
  std::vector<double> x(a.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = a.x()[i] + w * (b.x()[i] - a.x()[i]);
  return x;
}

Event PolyWorldLine::at(double t) const { return Event(t, eval(t)); }

PolyWorldLine make_polyline(std::vector<Event> vertices, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("light speed c must be positive");
  if (vertices.size() < 2) throw PreconditionError("a world line needs at least 2 vertices");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    require_same_dim(vertices[i], vertices[i + 1]);
    const double dt = vertices[i + 1].t() - vertices[i].t();
    if (!(dt > 0.0)) {
      throw PreconditionError("vertex times must increase strictly (vertex " +
                              std::to_string(i + 1) + ")");
    }
    const double speed = space_distance(vertices[i], vertices[i + 1]) / dt;
    if (speed > c * (1.0 + kLightSpeedTol)) throw SpeedViolation(i, speed, c);
  }
  return PolyWorldLine(std::move(vertices), c);
}

bool is_chain(const PolyWorldLine& wl, const OrderSpec& spec,
              std::span<const double> sample_times) {
  std::vector<Event> pts;
  pts.reserve(sample_times.size());
  for (double t : sample_times) pts.push_back(wl.at(t));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!comparable(spec, pts[i], pts[j], kLightSpeedTol)) return false;
    }
  }
  return true;
}

bool extend_probe(const PolyWorldLine& wl, const Event& p, const OrderSpec& spec,
                  std::size_t grid) {
  require_same_dim(wl.vertices().front(), p);
  if (!wl.in_window(p.t())) {
    throw PreconditionError("probe time outside the world line window");
  }
  const auto ok = [&](double t) { return comparable(spec, p, wl.at(t), kLightSpeedTol); };
  if (!ok(p.t())) return false;
  for (const Event& v : wl.vertices()) {
    if (!ok(v.t())) return false;
  }
  const double span = wl.t_max() - wl.t_min();
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = wl.t_min() + span * (static_cast<double>(k) + 0.5) / static_cast<double>(grid);
    if (!ok(t)) return false;
  }
  return true;
}

std::vector<LightSegment> light_segments(const PolyWorldLine& wl) {
  std::vector<LightSegment> out;
  const auto& vs = wl.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const double dist = space_distance(vs[i], vs[i + 1]);
    const double speed = dist / (vs[i + 1].t() - vs[i].t());
    if (dist == 0.0 || !is_light_speed(speed, wl.c())) continue;

    std::vector<double> dir(wl.dim());
    for (std::size_t k = 0; k < dir.size(); ++k) dir[k] = (vs[i + 1].x()[k] - vs[i].x()[k]) / dist;

    if (!out.empty() && out.back().t_end == vs[i].t()) {
      double dot = 0.0;
      for (std::size_t k = 0; k < dir.size(); ++k) dot += dir[k] * out.back().dir[k];
      if (dot >= 1.0 - kCollinearTol) {
        out.back().t_end = vs[i + 1].t();
        continue;
      }
    }
    out.push_back({vs[i].t(), vs[i + 1].t(), std::move(dir)});
  }
  return out;
}

std::string_view to_string(KeptEnd kept) {
  switch (kept) {
    case KeptEnd::lower: return "lower";
    case KeptEnd::upper: return "upper";
    case KeptEnd::neither: return "neither";
  }
  return "?";
}

KeptEnd parse_kept_end(std::string_view s) {
  if (s == "lower") return KeptEnd::lower;
  if (s == "upper") return KeptEnd::upper;
  if (s == "neither") return KeptEnd::neither;
  throw DomainError("unknown kept end '" + std::string(s) + "'");
}

bool Branch::covers(double t) const noexcept {
  const bool above = t > t_lo || (lo_closed && t == t_lo);
  const bool below = t < t_hi || (hi_closed && t == t_hi);
  return above && below;
}

std::vector<double> Branch::position(double t) const {
  std::vector<double> x(anchor.x().begin(), anchor.x().end());
  const double dt = t - anchor.t();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += velocity[i] * dt;
  return x;
}

GapWorldLine::GapWorldLine(std::optional<PolyWorldLine> base, std::vector<Gap> gaps,
                           std::vector<Branch> branches, double c)
    : base_(std::move(base)), gaps_(std::move(gaps)), branches_(std::move(branches)), c_(c) {
  if (!(c_ > 0.0) || !std::isfinite(c_)) throw DomainError("light speed c must be positive");
  if (branches_.empty()) throw PreconditionError("a gap world line needs at least one branch");
  dim_ = branches_.front().anchor.dim();
  for (const Branch& b : branches_) {
    if (b.anchor.dim() != dim_ || b.velocity.size() != dim_) {
      throw DimensionError("branches of mixed dimension");
    }
  }
}

std::vector<Event> GapWorldLine::kept_endpoints() const {
  std::vector<Event> out;
  for (const Gap& g : gaps_) {
    if (g.kept_end == KeptEnd::lower) out.push_back(g.lower);
    if (g.kept_end == KeptEnd::upper) out.push_back(g.upper);
  }
  return out;
}

std::vector<Event> GapWorldLine::removed_points() const {
  std::vector<Event> out;
  for (const Gap& g : gaps_) {
    if (g.kept_end != KeptEnd::lower) out.push_back(g.lower);
    if (g.kept_end != KeptEnd::upper) out.push_back(g.upper);
  }
  return out;
}

double GapWorldLine::finite_t_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Branch& b : branches_) {
    if (std::isfinite(b.t_lo)) m = std::min(m, b.t_lo);
    if (std::isfinite(b.t_hi)) m = std::min(m, b.t_hi);
  }
  return m;
}

double GapWorldLine::finite_t_max() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const Branch& b : branches_) {
    if (std::isfinite(b.t_lo)) m = std::max(m, b.t_lo);
    if (std::isfinite(b.t_hi)) m = std::max(m, b.t_hi);
  }
  return m;
}

std::vector<Event> GapWorldLine::sample(std::size_t per_branch, double t_from,
                                        double t_to) const {
  std::vector<Event> out;
  for (const Branch& b : branches_) {
    const double lo = std::max(b.t_lo, t_from);
    const double hi = std::min(b.t_hi, t_to);
    if (lo > hi) continue;
    const double span = hi - lo;
    const auto add = [&](double t) {
      if (t >= lo && t <= hi && b.covers(t)) out.push_back(b.at(t));
    };
    add(lo);
    add(hi);
    for (std::size_t k = 0; k < per_branch; ++k) {
      add(lo + span * (static_cast<double>(k) + 0.5) / static_cast<double>(per_branch));
    }
    double offset = span;
    for (int j = 0; j < kApproachSteps; ++j) {
      offset *= 0.5;
      if (std::isfinite(b.t_lo) && b.t_lo >= t_from) add(b.t_lo + offset);
      if (std::isfinite(b.t_hi) && b.t_hi <= t_to) add(b.t_hi - offset);
    }
  }
  return out;
}

std::vector<TimeInterval> time_image_gaps(const GapWorldLine& gwl) {
  std::vector<Branch> bs = gwl.branches();
  std::sort(bs.begin(), bs.end(), [](const Branch& a, const Branch& b) {
    if (a.t_lo != b.t_lo) return a.t_lo < b.t_lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<TimeInterval> gaps;
  double cur = bs.front().t_hi;
  bool cur_closed = bs.front().hi_closed;
  for (std::size_t i = 1; i < bs.size(); ++i) {
    const Branch& b = bs[i];
    if (b.t_lo > cur || (b.t_lo == cur && !cur_closed && !b.lo_closed)) {
      gaps.push_back({cur, b.t_lo, !cur_closed, !b.lo_closed});
    }
    if (b.t_hi > cur) {
      cur = b.t_hi;
      cur_closed = b.hi_closed;
    } else if (b.t_hi == cur) {
      cur_closed = cur_closed || b.hi_closed;
    }
  }
  return gaps;
}

GapWorldLine make_gap_worldline(const PolyWorldLine& wl, std::span<const KeptEnd> kept_ends) {
  const auto segments = light_segments(wl);
  if (kept_ends.size() != segments.size()) {
    throw PreconditionError("expected " + std::to_string(segments.size()) +
                            " kept-end flags, got " + std::to_string(kept_ends.size()));
  }
  std::vector<Gap> gaps;
  for (std::size_t g = 0; g < segments.size(); ++g) {
    const LightSegment& s = segments[g];
    if (s.t_start == wl.t_min() || s.t_end == wl.t_max()) {
      throw PreconditionError("light segment [" + std::to_string(s.t_start) + ", " +
                              std::to_string(s.t_end) + "] touches the window boundary");
    }
    if (g > 0 && segments[g - 1].t_end == s.t_start) {
      throw PreconditionError("light segments " + std::to_string(g - 1) + " and " +
                              std::to_string(g) + " share an endpoint");
    }
    gaps.push_back({s, kept_ends[g], wl.at(s.t_start), wl.at(s.t_end)});
  }

  const auto in_gap = [&](double a, double b) {
    return std::any_of(segments.begin(), segments.end(), [&](const LightSegment& s) {
      return a >= s.t_start && b <= s.t_end;
    });
  };
  // A vertex is excluded when it is a removed gap endpoint.
  const auto removed = [&](double t) {
    return std::any_of(gaps.begin(), gaps.end(), [&](const Gap& g) {
      return (t == g.segment.t_start && g.kept_end != KeptEnd::lower) ||
             (t == g.segment.t_end && g.kept_end != KeptEnd::upper);
    });
  };

  std::vector<Branch> branches;
  const auto& vs = wl.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const double a = vs[i].t();
    const double b = vs[i + 1].t();
    if (in_gap(a, b)) continue;
    branches.push_back({a, b, !removed(a), !removed(b), vs[i], segment_velocity(vs[i], vs[i + 1])});
  }
  return GapWorldLine(wl, std::move(gaps), std::move(branches), wl.c());
}

bool gap_contains(const GapWorldLine& gwl, const Event& p, double tol) {
  if (p.dim() != gwl.dim()) throw DimensionError("probe dimension does not match world line");
  for (const Branch& b : gwl.branches()) {
    if (!b.covers(p.t())) continue;
    const Event q = b.at(p.t());
    if (space_distance(q, p) <= tol) return true;
  }
  return false;
}

bool is_subluminal_chain_probe(const GapWorldLine& gwl, const Event& p, double c,
                               std::size_t per_branch) {
  if (p.dim() != gwl.dim()) throw DimensionError("probe dimension does not match world line");
  const OrderSpec sub = OrderSpec::subluminal(c);
  const double lo = std::min(gwl.finite_t_min(), p.t());
  const double hi = std::max(gwl.finite_t_max(), p.t());
  const double pad = std::max(1.0, hi - lo);

  for (const Branch& b : gwl.branches()) {
    if (b.covers(p.t()) && !comparable(sub, p, b.at(p.t()), kLightSpeedTol)) return false;
  }
  for (const Event& q : gwl.sample(per_branch, lo - pad, hi + pad)) {
    if (!comparable(sub, p, q, kLightSpeedTol)) return false;
  }
  return true;
}

GapWorldLine canonical_gap_chain(const Event& origin, std::span<const double> light_dir,
                                 double t_len, double c, Direction direction, KeptEnd kept) {
  const std::size_t n = origin.dim();
  if (light_dir.size() != n) throw DimensionError("light direction dimension mismatch");
  if (std::abs(norm(light_dir) - 1.0) > 1e-9) throw DomainError("light direction must be a unit vector");
  if (!(t_len > 0.0) || !std::isfinite(t_len)) throw DomainError("t_len must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("light speed c must be positive");

  const double inf = std::numeric_limits<double>::infinity();
  const double t0 = origin.t();
  std::vector<double> far(origin.x().begin(), origin.x().end());
  for (std::size_t i = 0; i < n; ++i) far[i] += c * t_len * light_dir[i];
  const std::vector<double> rest(n, 0.0);

  if (direction == Direction::forward) {
    const Event upper(t0 + t_len, far);
    LightSegment seg{t0, t0 + t_len, {light_dir.begin(), light_dir.end()}};
    std::vector<Branch> branches{
        {-inf, t0, false, kept == KeptEnd::lower, origin, rest},
        {t0 + t_len, inf, kept == KeptEnd::upper, false, upper, rest},
    };
    return GapWorldLine(std::nullopt, {{std::move(seg), kept, origin, upper}},
                        std::move(branches), c);
  }

  const Event lower(t0 - t_len, far);
  std::vector<double> back(n);
  for (std::size_t i = 0; i < n; ++i) back[i] = -light_dir[i];
  LightSegment seg{t0 - t_len, t0, std::move(back)};
  std::vector<Branch> branches{
      {-inf, t0 - t_len, false, kept == KeptEnd::lower, lower, rest},
      {t0, inf, kept == KeptEnd::upper, false, origin, rest},
  };
  return GapWorldLine(std::nullopt, {{std::move(seg), kept, lower, origin}}, std::move(branches), c);
}

}  // namespace minkorder
