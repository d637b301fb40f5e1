#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "minkorder/event.hpp"

namespace minkorder {

enum class OrderKind { causal, subluminal, temporal };
enum class Direction { forward, backward };

/// Which order on space-time: family, light speed and orientation.
///
/// `c` is in space units per time unit and is ignored for the temporal
/// family. A backward spec is the reverse of the forward one.
struct OrderSpec {
  OrderKind kind = OrderKind::causal;
  double c = 1.0;
  Direction direction = Direction::forward;

  static OrderSpec causal(double c, Direction dir = Direction::forward) {
    return {OrderKind::causal, c, dir};
  }
  static OrderSpec subluminal(double c, Direction dir = Direction::forward) {
    return {OrderKind::subluminal, c, dir};
  }
  static OrderSpec temporal(Direction dir = Direction::forward) {
    return {OrderKind::temporal, 1.0, dir};
  }

  /// Throws DomainError if c is not a positive finite number (non-temporal).
  void validate() const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

enum class PairClass {
  equal,
  timelike_forward,
  lightlike_forward,
  spacelike,
  lightlike_backward,
  timelike_backward,
};

std::string_view to_string(OrderKind kind);
std::string_view to_string(Direction dir);
std::string_view to_string(PairClass pc);
OrderKind parse_order_kind(std::string_view s);
/// Accepts "fwd"/"forward" and "bwd"/"backward".
Direction parse_direction(std::string_view s);

/// The class of (v,u) given the class of (u,v).
PairClass mirror(PairClass pc);

/// Position of v relative to the light cone of u at speed c.
///
/// The boundary test |dx - c|dt|| <= eps * max(dx, c|dt|) decides light-like
/// pairs; eps = 0 is an exact floating comparison. Equal times with distinct
/// space positions are always spacelike.
PairClass classify_pair(const Event& u, const Event& v, double c, double eps = 0.0);

/// u <= v under `spec` (reflexive closure of the strict order).
bool leq(const OrderSpec& spec, const Event& u, const Event& v);

/// leq in either direction. With eps > 0 the light-cone boundary test uses
/// that relative tolerance (see classify_pair); direction is irrelevant.
bool comparable(const OrderSpec& spec, const Event& u, const Event& v, double eps = 0.0);

/// Whether the causal interval [a,b] is totally ordered.
///
/// Requires a <=_c b. For n >= 1 this holds exactly when a = b or the pair is
/// light-like; a time-like pair spans a full diamond. With no space dimension
/// every interval is a chain.
bool interval_is_chain(const Event& a, const Event& b, double c);

/// Randomized oracle for interval_is_chain.
///
/// Draws `samples` points uniformly from the bounding box of [a,b] taken in
/// light-cone coordinates adapted to b - a (null coordinates along the
/// direction of motion, Cartesian coordinates transverse to it), keeps the
/// points inside the interval and reports whether all kept points and both
/// endpoints are pairwise comparable. Comparisons use relative tolerance
/// 1e-9 so that points generated on a light-like segment stay comparable.
bool interval_is_chain_sampled(const Event& a, const Event& b, double c,
                               std::size_t samples, std::uint64_t seed);

/// a <=' b built from the causal order: a <=_c b and [a,b] is not a chain
/// unless a = b.
bool subluminal_via_weakening(const Event& a, const Event& b, double c);

/// u <=_c v recovered from subluminal causality, with the quantifier over
/// all witnesses w resolved geometrically: the open forward subluminal cone
/// of v lies inside that of u iff v - u is in the closed forward cone.
bool reconstruct_causal_analytic(const Event& u, const Event& v, double c);

/// Finite-witness reconstruction: u <=' v, or every witness w (other than u
/// and v, compared exactly) that lies subluminally above v also lies
/// subluminally above u. Never misses a true causal pair; sparse witnesses
/// may admit spacelike pairs.
bool reconstruct_causal_sampled(const Event& u, const Event& v, double c,
                                std::span<const Event> witnesses);

}  // namespace minkorder
