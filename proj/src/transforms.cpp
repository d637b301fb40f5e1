#include "minkorder/transforms.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "minkorder/error.hpp"

namespace minkorder {

Event apply_space_isometry(const Eigen::MatrixXd& q, std::span<const double> b, const Event& e) {
  const auto n = static_cast<Eigen::Index>(e.dim());
  if (q.rows() != n || q.cols() != n || static_cast<Eigen::Index>(b.size()) != n) {
    throw DimensionError("isometry of size " + std::to_string(q.rows()) + " applied to event of dimension " +
                         std::to_string(e.dim()));
  }
  const double defect =
      n == 0 ? 0.0 : (q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(defect <= kOrthogonalityTol)) {
    throw DomainError("matrix is not orthogonal (max |Q^T Q - I| = " + std::to_string(defect) + ")");
  }
  const Eigen::Map<const Eigen::VectorXd> x(e.x().data(), n);
  const Eigen::Map<const Eigen::VectorXd> shift(b.data(), n);
  const Eigen::VectorXd y = q * x + shift;
  return Event(e.t(), std::vector<double>(y.data(), y.data() + n));
}

Event apply_dilation(double r, const Event& e) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("dilation factor must be positive");
  std::vector<double> x(e.x().begin(), e.x().end());
  for (double& xi : x) xi *= r;
  return Event(r * e.t(), std::move(x));
}

Eigen::MatrixXd random_orthogonal(std::size_t n, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(n);
  if (dim == 0) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = rng.normal();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  // Sign correction by diag(R) makes the distribution Haar.
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

}  // namespace minkorder
