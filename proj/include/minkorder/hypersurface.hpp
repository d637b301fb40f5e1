#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "minkorder/event.hpp"
#include "minkorder/worldline.hpp"

namespace minkorder {

/// One anchor of a hypersurface: the surface passes through (x, h).
struct Anchor {
  std::vector<double> x;
  double h;
};

/// Space-like hypersurface t = h(x), the graph of a k-Lipschitz function with
/// k * c < 1.
///
/// h is the smallest k-Lipschitz extension of the anchors,
/// h(x) = min_i (h_i + k ||x - x_i||), which passes through every anchor
/// when the anchors are pairwise consistent. The uniform margin k < 1/c is
/// what makes the graph an antichain of the causal order. k = 0 gives a
/// flat (constant) surface.
class Hypersurface {
 public:
  const std::vector<Anchor>& anchors() const noexcept { return anchors_; }
  double k() const noexcept { return k_; }
  double c() const noexcept { return c_; }
  std::size_t dim() const noexcept { return dim_; }

  /// h(x).
  double height(std::span<const double> x) const;
  /// The surface point (x, h(x)).
  Event lift(std::span<const double> x) const;

 private:
  friend Hypersurface make_hypersurface(std::vector<Anchor> anchors, double k, double c);
  Hypersurface(std::vector<Anchor> anchors, double k, double c, std::size_t dim)
      : anchors_(std::move(anchors)), k_(k), c_(c), dim_(dim) {}

  std::vector<Anchor> anchors_;
  double k_;
  double c_;
  std::size_t dim_;
};

/// Throws DomainError unless 0 <= k and k * c < 1, InconsistentAnchors for a
/// pair with |h_i - h_j| > k ||x_i - x_j||.
Hypersurface make_hypersurface(std::vector<Anchor> anchors, double k, double c);

/// g(x, t) = t - h(x). Strictly increasing along every world line and zero
/// exactly on the surface.
class Grading {
 public:
  explicit Grading(Hypersurface surface) : surface_(std::move(surface)) {}

  const Hypersurface& surface() const noexcept { return surface_; }
  double value(const Event& e) const;

 private:
  Hypersurface surface_;
};

double grading_value(const Grading& g, const Event& e);

/// |g(e) - r| <= tol.
bool level_contains(const Grading& g, double r, const Event& e, double tol);

/// Lifts each x to the surface and checks all distinct pairs are spacelike.
bool is_antichain_sample(const Hypersurface& hs, std::span<const std::vector<double>> points);

/// Largest |phi| accepted at the crossing returned by crossing_time.
/// Sign counts of t - h(x) over sampled events: `on` counts points of the
/// graph itself.
struct SurfaceSides {
  std::size_t below = 0;
  std::size_t on = 0;
  std::size_t above = 0;
};

SurfaceSides surface_sides(const Hypersurface& hs, std::span<const Event> points);

inline constexpr double kCrossingTol = 1e-9;
inline constexpr int kCrossingMaxIter = 200;

struct Crossing {
  double t;
  double residual;  // phi(t) = t - h(wl(t))
  int iterations;
};

/// Unique time at which `wl` meets the surface: the root of
/// phi(t) = t - h(wl(t)), which increases at rate >= 1 - k*c. Bisection to
/// |phi| <= kCrossingTol. Throws PreconditionError when phi has no sign
/// change on the window.
Crossing crossing(const Hypersurface& hs, const PolyWorldLine& wl);

/// crossing(hs, wl).t
double crossing_time(const Hypersurface& hs, const PolyWorldLine& wl);

/// True iff g strictly increases along wl over the (sorted) sample times.
bool grading_monotone_on(const Grading& g, const PolyWorldLine& wl,
                         std::span<const double> sample_times);

}  // namespace minkorder
