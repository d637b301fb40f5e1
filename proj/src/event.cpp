#include "minkorder/event.hpp"

#include <cmath>
#include <string>

#include "minkorder/error.hpp"

namespace minkorder {

Event::Event(double t, std::vector<double> x) : t_(t), x_(std::move(x)) {
  if (x_.size() > kMaxSpaceDim) {
    throw DimensionError("space dimension " + std::to_string(x_.size()) + " exceeds " +
                         std::to_string(kMaxSpaceDim));
  }
  if (!std::isfinite(t_)) throw DomainError("non-finite time coordinate");
  for (double xi : x_) {
    if (!std::isfinite(xi)) throw DomainError("non-finite space coordinate");
  }
}

Event Event::origin(std::size_t n) { return Event(0.0, std::vector<double>(n, 0.0)); }

void require_same_dim(const Event& u, const Event& v) {
  if (u.dim() != v.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()));
  }
}

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  return std::sqrt(s);
}

double space_distance(const Event& u, const Event& v) {
  require_same_dim(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double d = v.x()[i] - u.x()[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Event difference(const Event& v, const Event& u) {
  require_same_dim(u, v);
  std::vector<double> d(u.dim());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = v.x()[i] - u.x()[i];
  return Event(v.t() - u.t(), std::move(d));
}

Event translate(const Event& u, const Event& d) {
  require_same_dim(u, d);
  std::vector<double> x(u.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = u.x()[i] + d.x()[i];
  return Event(u.t() + d.t(), std::move(x));
}

}  // namespace minkorder
