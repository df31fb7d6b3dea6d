#include "otfkm/linalg.hpp"

#include <stdexcept>

namespace otfkm {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double gram_residual(const Matrix& m) {
  Matrix g = m.transpose() * m;
  g -= Matrix::Identity(m.cols(), m.cols());
  return max_abs(g);
}

double subspace_distance(const Matrix& basis_a, const Matrix& basis_b) {
  Matrix d = projector(basis_a) - projector(basis_b);
  Eigen::SelfAdjointEigenSolver<Matrix> es(d, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double image_residual(const Matrix& vectors, const Matrix& target_basis) {
  Matrix r = vectors - target_basis * (target_basis.transpose() * vectors);
  double worst = 0.0;
  for (int j = 0; j < r.cols(); ++j) worst = std::max(worst, r.col(j).norm());
  return worst;
}

Matrix loewdin(const Matrix& s) {
  Matrix g = s.transpose() * s;
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  if (es.eigenvalues().minCoeff() < 1e-12)
    throw std::runtime_error("loewdin: rank-deficient block");
  Matrix inv_sqrt = es.eigenvectors() *
                    es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                    es.eigenvectors().transpose();
  return s * inv_sqrt;
}

Matrix procrustes_align(const Matrix& s, const Matrix& target) {
  Eigen::JacobiSVD<Matrix> svd(s.transpose() * target,
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  return s * (svd.matrixU() * svd.matrixV().transpose());
}

Matrix orthonormal_complement(const Matrix& fixed, int count,
                              const std::vector<int>* forced,
                              std::vector<int>* chosen) {
  const int n = static_cast<int>(fixed.rows());
  if (count < 0 || fixed.cols() + count > n)
    throw std::invalid_argument("orthonormal_complement: bad count");

  // residuals[j] = standard basis vector e_j orthogonalized against everything
  // accepted so far.
  Matrix residuals = Matrix::Identity(n, n);
  for (int c = 0; c < fixed.cols(); ++c) {
    Vector v = fixed.col(c);
    residuals -= v * (v.transpose() * residuals);
  }

  Matrix out(n, count);
  std::vector<int> order;
  order.reserve(count);
  for (int step = 0; step < count; ++step) {
    int pick = -1;
    if (forced) {
      pick = (*forced)[step];
    } else {
      double best = -1.0;
      for (int j = 0; j < n; ++j) {
        double norm = residuals.col(j).norm();
        if (norm > best) {
          best = norm;
          pick = j;
        }
      }
    }
    Vector v = residuals.col(pick);
    double norm = v.norm();
    if (norm < 1e-8)
      throw std::runtime_error("orthonormal_complement: degenerate pivot");
    v /= norm;
    out.col(step) = v;
    order.push_back(pick);
    residuals -= v * (v.transpose() * residuals);
  }
  if (chosen) *chosen = order;
  return out;
}

}  // namespace otfkm
