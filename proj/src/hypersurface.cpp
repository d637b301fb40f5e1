#include "minkorder/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "minkorder/error.hpp"
#include "minkorder/order.hpp"

namespace minkorder {

namespace {

constexpr std::size_t kMonotoneGrid = 64;

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

Hypersurface make_hypersurface(std::vector<Anchor> anchors, double k, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("light speed c must be positive");
  if (!(k >= 0.0) || !(k * c < 1.0)) {
    throw DomainError("modulus k must satisfy 0 <= k < 1/c (k*c = " + std::to_string(k * c) + ")");
  }
  if (anchors.empty()) throw PreconditionError("a hypersurface needs at least one anchor");
  const std::size_t n = anchors.front().x.size();
  if (n > kMaxSpaceDim) throw DimensionError("space dimension exceeds the supported maximum");
  for (const Anchor& a : anchors) {
    if (a.x.size() != n) throw DimensionError("anchors of mixed dimension");
    if (!std::isfinite(a.h)) throw DomainError("non-finite anchor height");
    for (double xi : a.x) {
      if (!std::isfinite(xi)) throw DomainError("non-finite anchor coordinate");
    }
  }
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      const double dh = std::abs(anchors[i].h - anchors[j].h);
      const double bound = k * distance(anchors[i].x, anchors[j].x);
      // Relative slack absorbs rounding in the distance only.
      if (dh > bound * (1.0 + 1e-12)) throw InconsistentAnchors(i, j, dh, bound);
    }
  }
  return Hypersurface(std::move(anchors), k, c, n);
}

double Hypersurface::height(std::span<const double> x) const {
  if (x.size() != dim_) throw DimensionError("point dimension does not match surface");
  double h = std::numeric_limits<double>::infinity();
  for (const Anchor& a : anchors_) h = std::min(h, a.h + k_ * distance(x, a.x));
  return h;
}

Event Hypersurface::lift(std::span<const double> x) const {
  return Event(height(x), std::vector<double>(x.begin(), x.end()));
}

double Grading::value(const Event& e) const { return e.t() - surface_.height(e.x()); }

double grading_value(const Grading& g, const Event& e) { return g.value(e); }

bool level_contains(const Grading& g, double r, const Event& e, double tol) {
  return std::abs(g.value(e) - r) <= tol;
}

bool is_antichain_sample(const Hypersurface& hs, std::span<const std::vector<double>> points) {
  std::vector<Event> lifted;
  lifted.reserve(points.size());
  for (const auto& x : points) lifted.push_back(hs.lift(x));
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    for (std::size_t j = i + 1; j < lifted.size(); ++j) {
      if (lifted[i] == lifted[j]) continue;
      if (classify_pair(lifted[i], lifted[j], hs.c()) != PairClass::spacelike) return false;
    }
  }
  return true;
}

SurfaceSides surface_sides(const Hypersurface& hs, std::span<const Event> points) {
  SurfaceSides sides;
  for (const Event& e : points) {
    const double g = e.t() - hs.height(e.x());
    if (g < 0.0) {
      ++sides.below;
    } else if (g > 0.0) {
      ++sides.above;
    } else {
      ++sides.on;
    }
  }
  return sides;
}

Crossing crossing(const Hypersurface& hs, const PolyWorldLine& wl) {
  if (hs.dim() != wl.dim()) throw DimensionError("surface and world line dimensions differ");
  const auto phi = [&](double t) { return t - hs.height(wl.eval(t)); };

  double lo = wl.t_min();
  double hi = wl.t_max();
  const double phi_lo = phi(lo);
  const double phi_hi = phi(hi);
  if (phi_lo > 0.0 || phi_hi < 0.0) {
    throw PreconditionError("no crossing inside the window: phi(t_min) = " +
                            std::to_string(phi_lo) + ", phi(t_max) = " + std::to_string(phi_hi));
  }

  double prev = phi_lo;
  for (std::size_t k = 1; k <= kMonotoneGrid; ++k) {
    const double t = k == kMonotoneGrid
                         ? hi
                         : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(kMonotoneGrid);
    const double cur = phi(t);
    if (!(cur > prev)) throw Error("crossing function is not strictly increasing near t = " + std::to_string(t));
    prev = cur;
  }

  if (std::abs(phi_lo) <= kCrossingTol) return {lo, phi_lo, 0};
  if (std::abs(phi_hi) <= kCrossingTol) return {hi, phi_hi, 0};
  for (int it = 1; it <= kCrossingMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double value = phi(mid);
    if (std::abs(value) <= kCrossingTol) return {mid, value, it};
    if (value < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw PreconditionError("bisection did not reach |phi| <= 1e-9 in " +
                          std::to_string(kCrossingMaxIter) + " iterations");
}

double crossing_time(const Hypersurface& hs, const PolyWorldLine& wl) {
  return crossing(hs, wl).t;
}

bool grading_monotone_on(const Grading& g, const PolyWorldLine& wl,
                         std::span<const double> sample_times) {
  for (std::size_t i = 0; i + 1 < sample_times.size(); ++i) {
    if (!(g.value(wl.at(sample_times[i + 1])) > g.value(wl.at(sample_times[i])))) return false;
  }
  return true;
}

}  // namespace minkorder
