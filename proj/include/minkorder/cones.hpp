#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "minkorder/event.hpp"
#include "minkorder/order.hpp"

namespace minkorder {

/// Where a cone oracle is probed.
///
/// Invariance checks sample events with |t| <= time_extent and
/// |x_i| <= space_extent. Classification probes at |t| = 1 and treats any
/// member at speed >= speed_bound as unbounded speed.
struct ProbeBox {
  double time_extent = 1.0;
  double space_extent = 1.0;
  double speed_bound = 1e6;
};

/// The set C of displacements v - u with u <= v, given as a predicate.
class ConeOracle {
 public:
  using Membership = std::function<bool(const Event&)>;

  ConeOracle(Membership membership, std::size_t dim, ProbeBox box = {}, std::string label = {});

  /// Membership of a displacement (dimension checked).
  bool contains(const Event& displacement) const;
  std::size_t dim() const noexcept { return dim_; }
  const ProbeBox& box() const noexcept { return box_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Membership membership_;
  std::size_t dim_;
  ProbeBox box_;
  std::string label_;
};

/// Exact cones of the three invariant families: the closed causal cone, the
/// open subluminal cone and the temporal half-space, each with the origin.
ConeOracle standard_cone(OrderKind kind, Direction direction, double c, std::size_t n);

/// Membership of A (t, x_1, ..., x_n) in `base`; A is (n+1) x (n+1). Used to
/// build cones that break rotation invariance.
ConeOracle affine_cone(const Eigen::MatrixXd& a, ConeOracle base);

/// Parses `causal:<c>:<fwd|bwd>`, `subluminal:<c>:<fwd|bwd>`,
/// `temporal:<fwd|bwd>` or `affine:<rows>:<base spec>`, where rows are
/// comma-separated entries and rows are separated by ';'.
ConeOracle parse_oracle_spec(std::string_view spec, std::size_t n);

/// u <= v iff v - u is in the cone.
bool cone_order_leq(const ConeOracle& oracle, const Event& u, const Event& v);

struct InvarianceReport {
  bool passed = true;
  std::size_t checks = 0;
  std::string failure;             // which transform broke, empty on success
  std::optional<Event> witness;    // sampled displacement (or u for translations)
  std::optional<Event> image;      // its transformed counterpart
};

/// Samples displacements and random space isometries (Haar rotations and
/// reflections) and dilations r in [0.1, 10]; membership must be unchanged.
/// Space translations are checked on the induced order via cone_order_leq.
InvarianceReport check_invariance(const ConeOracle& oracle, std::size_t n_samples,
                                  std::uint64_t seed);

enum class ConeKind { causal, subluminal, temporal, unknown };
enum class ConeDirection { forward, backward, unknown };

std::string_view to_string(ConeKind kind);
std::string_view to_string(ConeDirection dir);

struct ConeClass {
  ConeKind kind = ConeKind::unknown;
  ConeDirection direction = ConeDirection::unknown;
  std::optional<double> c_estimate;  // present iff kind is causal or subluminal

  struct Evidence {
    std::size_t probes = 0;
    double speed_member = 0.0;     // fastest member speed found
    double speed_nonmember = 0.0;  // slowest non-member speed found
    std::vector<Event> witnesses;
    std::string note;
  } evidence;
};

/// Identifies an invariant cone order from membership probes.
///
/// Direction comes from the rest displacements (0, +1) and (0, -1). The
/// boundary speed is bracketed by bisection over the binary representation of
/// doubles at |t| = 1 until the bracket is two adjacent doubles; a member at
/// speed_bound means temporal. The estimate c is the bracket end with the
/// shorter decimal representation, and a probe there along 8 signed
/// coordinate axes decides closed (causal) against open (subluminal).
/// Inconsistent probes, a non-sharp boundary at relative offset tol, or an
/// exhausted budget give kind unknown.
ConeClass classify_cone(const ConeOracle& oracle, std::size_t budget, std::uint64_t seed,
                        double tol);

}  // namespace minkorder
