#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "minkorder/event.hpp"
#include "minkorder/order.hpp"

namespace minkorder {

/// Relative tolerance on speed for "moves at light speed".
inline constexpr double kLightSpeedTol = 1e-9;
/// Unit directions u, v count as identical when u . v >= 1 - kCollinearTol.
inline constexpr double kCollinearTol = 1e-12;

/// Piecewise-linear world line on the time window [t_0, t_last].
///
/// Vertices have strictly increasing times and every segment moves at speed
/// at most c (relative slack kLightSpeedTol), so the interpolant is
/// c-Lipschitz. Construct through make_polyline.
class PolyWorldLine {
 public:
  const std::vector<Event>& vertices() const noexcept { return vertices_; }
  double c() const noexcept { return c_; }
  std::size_t dim() const noexcept { return vertices_.front().dim(); }
  double t_min() const noexcept { return vertices_.front().t(); }
  double t_max() const noexcept { return vertices_.back().t(); }
  bool in_window(double t) const noexcept { return t >= t_min() && t <= t_max(); }

  /// Speed of segment i (between vertices i and i+1).
  double segment_speed(std::size_t i) const;

  /// Position at time t; exact at vertex times, linear in between.
  std::vector<double> eval(double t) const;
  /// The event (eval(t), t).
  Event at(double t) const;

 private:
  friend PolyWorldLine make_polyline(std::vector<Event> vertices, double c);
  PolyWorldLine(std::vector<Event> vertices, double c)
      : vertices_(std::move(vertices)), c_(c) {}

  std::vector<Event> vertices_;
  double c_;
};

/// Validates and builds a polyline. Throws PreconditionError for fewer than
/// two vertices or non-increasing times, SpeedViolation for a segment faster
/// than c.
PolyWorldLine make_polyline(std::vector<Event> vertices, double c);

/// True iff all points of `wl` at the sample times are pairwise comparable
/// under `spec`. Comparisons tolerate light-speed rounding (kLightSpeedTol).
bool is_chain(const PolyWorldLine& wl, const OrderSpec& spec,
              std::span<const double> sample_times);

/// Whether p can join the chain: p must be comparable under `spec` to the
/// line at every vertex time, at t_p, and on a uniform grid of `grid` times.
/// Maximality is window-relative, so t_p must lie in the window.
bool extend_probe(const PolyWorldLine& wl, const Event& p, const OrderSpec& spec,
                  std::size_t grid = 256);

/// Maximal stretch of a world line travelling at light speed in one direction.
struct LightSegment {
  double t_start;
  double t_end;
  std::vector<double> dir;
};

/// Light-like segments of `wl`, sorted by start time. Consecutive light-speed
/// polyline segments with the same direction are merged.
std::vector<LightSegment> light_segments(const PolyWorldLine& wl);

enum class KeptEnd { lower, upper, neither };

std::string_view to_string(KeptEnd kept);
KeptEnd parse_kept_end(std::string_view s);

struct Gap {
  LightSegment segment;
  KeptEnd kept_end;
  Event lower;  // endpoint at segment.t_start
  Event upper;  // endpoint at segment.t_end
};

/// Affine piece {(anchor.x + velocity * (t - anchor.t), t) : t in range} of a
/// gap world line. Range ends may be infinite (rays) and open or closed.
struct Branch {
  double t_lo;
  double t_hi;
  bool lo_closed;
  bool hi_closed;
  Event anchor;
  std::vector<double> velocity;

  bool covers(double t) const noexcept;
  std::vector<double> position(double t) const;
  Event at(double t) const { return Event(t, position(t)); }
};

/// A world line with optical gaps: the base line minus the interior and the
/// non-kept endpoint(s) of each gap segment. The point set is the union of
/// `branches()`. The canonical counterexample chain has no finite base and is
/// made of two rays.
class GapWorldLine {
 public:
  GapWorldLine(std::optional<PolyWorldLine> base, std::vector<Gap> gaps,
               std::vector<Branch> branches, double c);

  const std::optional<PolyWorldLine>& base() const noexcept { return base_; }
  const std::vector<Gap>& gaps() const noexcept { return gaps_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  double c() const noexcept { return c_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Gap endpoints that belong to the point set.
  std::vector<Event> kept_endpoints() const;
  /// Gap endpoints removed from the point set.
  std::vector<Event> removed_points() const;

  /// Deterministic sample of the point set restricted to [t_from, t_to]:
  /// `per_branch` uniform times per branch, closed ends, and 20 times
  /// approaching each finite end geometrically (closest offset about 1e-6 of
  /// the sampled span, so sample pairs stay resolvable at kLightSpeedTol).
  std::vector<Event> sample(std::size_t per_branch, double t_from, double t_to) const;

  /// Smallest and largest finite branch end time.
  double finite_t_min() const;
  double finite_t_max() const;

 private:
  std::optional<PolyWorldLine> base_;
  std::vector<Gap> gaps_;
  std::vector<Branch> branches_;
  double c_;
  std::size_t dim_;
};

/// Interval of time values; an end at +-inf is never closed.
struct TimeInterval {
  double lo;
  double hi;
  bool lo_closed;
  bool hi_closed;
};

/// Times between the first and last branch that no branch covers, in order.
/// Derived from the branch parameter ranges alone.
std::vector<TimeInterval> time_image_gaps(const GapWorldLine& gwl);

/// Removes every light-like segment of `wl` (interior plus the endpoint not
/// named in `kept_ends`). Segments must be pairwise disjoint and must not
/// touch the window boundary.
GapWorldLine make_gap_worldline(const PolyWorldLine& wl, std::span<const KeptEnd> kept_ends);

/// Membership of p in the point set; spatial tolerance `tol`. Removed
/// endpoints are never members.
bool gap_contains(const GapWorldLine& gwl, const Event& p, double tol);

/// True iff p is <='_c-comparable with a dense sample of gwl covering p's
/// time (including the point of each branch at exactly t_p). Light-like
/// pairs count as incomparable.
bool is_subluminal_chain_probe(const GapWorldLine& gwl, const Event& p, double c,
                               std::size_t per_branch = 128);

/// The two-ray chain {origin + (0, r) : r < 0} U {origin + (X, s) : s > t_len}
/// with X = c * t_len * light_dir. Both endpoints of the light segment between
/// the rays are excluded by default; `kept` re-admits one of them. A backward
/// chain is the time mirror: the light segment runs from origin + (X, -t_len)
/// up to origin.
GapWorldLine canonical_gap_chain(const Event& origin, std::span<const double> light_dir,
                                 double t_len, double c,
                                 Direction direction = Direction::forward,
                                 KeptEnd kept = KeptEnd::neither);

}  // namespace minkorder
