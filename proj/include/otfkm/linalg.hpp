#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace otfkm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b);

// Max-norm of M^T M - I; zero iff columns orthonormal.
double gram_residual(const Matrix& m);

// Orthogonal projector onto the column span; columns must be orthonormal.
inline Matrix projector(const Matrix& basis) { return basis * basis.transpose(); }

// Spectral norm of the difference of the two span projectors; equals
// sin of the largest principal angle for equal-dimensional subspaces.
double subspace_distance(const Matrix& basis_a, const Matrix& basis_b);

// Largest column norm of (I - proj_target) * vectors.
double image_residual(const Matrix& vectors, const Matrix& target_basis);

// Symmetric orthonormalization S (S^T S)^{-1/2}; requires full column rank.
Matrix loewdin(const Matrix& s);

// Rotates the orthonormal block `s` by the orthogonal matrix minimizing
// ||s W - target||_F (orthogonal Procrustes).
Matrix procrustes_align(const Matrix& s, const Matrix& target);

// Extends the orthonormal columns of `fixed` to an orthonormal basis of R^n
// by pivoted Gram-Schmidt over the standard basis, returning the `count` new
// columns.  Pivot order is chosen greedily (largest residual) and reported via
// `chosen`; passing `forced` replays a previously chosen order, which keeps
// the completion smooth along nearby inputs.
Matrix orthonormal_complement(const Matrix& fixed, int count,
                              const std::vector<int>* forced = nullptr,
                              std::vector<int>* chosen = nullptr);

}  // namespace otfkm
