#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace minkorder {

/// Largest supported space dimension n of an (n+1)-dimensional space-time.
inline constexpr std::size_t kMaxSpaceDim = 8;

/// A point of space-time: a space vector x (length n) and a time t.
///
/// Coordinates are always finite and n <= kMaxSpaceDim; the constructor
/// enforces both. Equality is exact coordinate equality.
class Event {
 public:
  Event(double t, std::vector<double> x);

  static Event origin(std::size_t n);

  double t() const noexcept { return t_; }
  std::span<const double> x() const noexcept { return x_; }
  std::size_t dim() const noexcept { return x_.size(); }

  friend bool operator==(const Event&, const Event&) = default;

 private:
  double t_;
  std::vector<double> x_;
};

/// Throws DimensionError unless u and v live in the same space-time.
void require_same_dim(const Event& u, const Event& v);

/// Euclidean norm of a space vector.
double norm(std::span<const double> x);

/// ||x_v - x_u||.
double space_distance(const Event& u, const Event& v);

/// v - u as a difference vector (time and space componentwise).
Event difference(const Event& v, const Event& u);

/// u + d componentwise.
Event translate(const Event& u, const Event& d);

}  // namespace minkorder
