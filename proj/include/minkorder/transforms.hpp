#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "minkorder/event.hpp"
#include "minkorder/random.hpp"

namespace minkorder {

/// Tolerance on max |Q^T Q - I| accepted as orthogonal.
inline constexpr double kOrthogonalityTol = 1e-9;

/// x t -> (Q x + b) t. Q must be orthogonal within kOrthogonalityTol.
Event apply_space_isometry(const Eigen::MatrixXd& q, std::span<const double> b,
                           const Event& e);

/// x t -> (r x, r t) for r > 0.
Event apply_dilation(double r, const Event& e);

/// Haar-distributed element of O(n) (reflections included).
Eigen::MatrixXd random_orthogonal(std::size_t n, Rng& rng);

}  // namespace minkorder
