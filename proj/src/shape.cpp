#include "otfkm/shape.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "otfkm/errors.hpp"

namespace otfkm {

namespace {
constexpr double kGroupMargin = 1e-4;
}

Matrix tangent_basis(const SurfacePoint& pt) {
  const int n = static_cast<int>(pt.x.size());
  Matrix fixed(n, 2);
  fixed.col(0) = pt.x;
  fixed.col(1) = pt.xi;
  return orthonormal_complement(fixed, n - 2);
}

Vector normal_differential(const Family& fam, const Vector& x,
                           const Vector& v) {
  const double sin2t = std::sin(2.0 * fam.theta);
  const double cos2t = std::cos(2.0 * fam.theta);
  Vector acc = Vector::Zero(x.size());
  for (const Matrix& p : fam.system.matrices) {
    const Vector px = p * x;
    acc += 2.0 * px.dot(v) * px + px.dot(x) * (p * v);
  }
  return (sin2t * v - acc / sin2t) / cos2t;
}

Vector shape_apply(const Family& fam, const SurfacePoint& pt, const Vector& v) {
  Vector d = -normal_differential(fam, pt.x, v);
  d -= pt.x.dot(d) * pt.x;
  d -= pt.xi.dot(d) * pt.xi;
  return d;
}

Matrix shape_operator(const Family& fam, const SurfacePoint& pt,
                      const Matrix& basis) {
  const int n = static_cast<int>(basis.cols());
  Matrix a(n, n);
  for (int j = 0; j < n; ++j) {
    const Vector av = shape_apply(fam, pt, basis.col(j));
    for (int i = 0; i < n; ++i) a(i, j) = basis.col(i).dot(av);
  }
  return a;
}

CliffordFrame clifford_frame(const Family& fam, const SurfacePoint& pt,
                             const std::vector<int>* forced) {
  const int m = fam.system.m;
  Matrix first(m + 1, 1);
  first.col(0) = pt.coeff;
  CliffordFrame frame;
  const Matrix rest = orthonormal_complement(first, m, forced, &frame.pivots);
  frame.a_gauge.resize(m + 1, m + 1);
  frame.a_gauge.col(0) = pt.coeff;
  frame.a_gauge.rightCols(m) = rest;
  if (frame.a_gauge.determinant() < 0.0)
    frame.a_gauge.col(m) = -frame.a_gauge.col(m);
  const int dim = fam.ambient_dim();
  for (int i = 0; i <= m; ++i) {
    Matrix r = Matrix::Zero(dim, dim);
    for (int j = 0; j <= m; ++j)
      r += frame.a_gauge(j, i) * fam.system.matrices[j];
    frame.r.push_back(std::move(r));
  }
  return frame;
}

DistributionData principal_decomposition(const Family& fam,
                                         const SurfacePoint& pt) {
  const Matrix basis = tangent_basis(pt);
  const Matrix a = shape_operator(fam, pt, basis);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("principal_decomposition: eigensolver failed");

  DistributionData data;
  data.lambda = fam.lambda;
  const std::array<int, 4> want = {fam.m1, fam.m2, fam.m1, fam.m2};
  std::array<std::vector<int>, 4> groups;
  data.eigen_gap = 1.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()[i];
    int best = 0;
    double d0 = 1e300, d1 = 1e300;
    for (int k = 0; k < 4; ++k) {
      const double d = std::abs(ev - fam.lambda[k]);
      if (d < d0) {
        d1 = d0;
        d0 = d;
        best = k;
      } else if (d < d1) {
        d1 = d;
      }
    }
    if (d1 - d0 < kGroupMargin)
      throw std::runtime_error(
          "principal_decomposition: degenerate point, ambiguous eigenvalue " +
          std::to_string(ev));
    data.eigen_gap = std::min(data.eigen_gap, d1 - d0);
    groups[best].push_back(i);
  }
  for (int k = 0; k < 4; ++k) {
    if (static_cast<int>(groups[k].size()) != want[k])
      throw std::runtime_error(
          "principal_decomposition: degenerate point, multiplicity mismatch");
    Matrix block(basis.rows(), want[k]);
    for (int j = 0; j < want[k]; ++j)
      block.col(j) = basis * es.eigenvectors().col(groups[k][j]);
    data.basis[k] = std::move(block);
  }

  data.frame = clifford_frame(fam, pt);
  const int m = fam.system.m;
  data.d1_frame.resize(fam.ambient_dim(), m);
  for (int aidx = 1; aidx <= m; ++aidx)
    data.d1_frame.col(aidx - 1) = data.frame.r[aidx] * pt.phi[0];
  data.d3_frame = -(data.frame.r[0] * data.d1_frame);
  return data;
}

double spectrum_residual(const Family& fam, const SurfacePoint& pt) {
  const Matrix basis = tangent_basis(pt);
  const Matrix a = shape_operator(fam, pt, basis);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  // increasing eigenvalues correspond to lambda_4 <= lambda_3 <= ...
  std::vector<double> expected;
  const std::array<int, 4> mult = {fam.m1, fam.m2, fam.m1, fam.m2};
  for (int k = 3; k >= 0; --k)
    expected.insert(expected.end(), mult[k], fam.lambda[k]);
  double worst = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    worst = std::max(worst, std::abs(es.eigenvalues()[i] - expected[i]));
  return worst;
}

Report focal_geometry_checks(const Family& fam, const SurfacePoint& pt,
                             const DistributionData& data) {
  Report report;

  double orth = 0.0, normal_orth = 0.0;
  for (int k = 0; k < 4; ++k) {
    for (int j = 0; j < 4; ++j) {
      if (j == k) continue;
      orth = std::max(
          orth, max_abs(Matrix(data.basis[k].transpose() * data.basis[j])));
    }
    normal_orth = std::max(
        normal_orth, max_abs(Vector(data.basis[k].transpose() * pt.xi_k[k])));
  }
  report.add("focal.tangent_orthogonality",
             "D_k at x orthogonal to T_{phi_k} M (other three distributions)",
             orth, 1e-10);
  report.add("focal.normal_component", "D_k at x orthogonal to xi_k", normal_orth,
             1e-10);

  report.add("focal.d1_dimension", "dim D_1 + 1 = m + 1",
             std::abs(data.basis[0].cols() + 1 - (fam.system.m + 1)), 0.5);

  const double pairing = pt.xi_k[0].dot(data.frame.r[0] * pt.phi[0]);
  report.add("focal.xi1_pairing", "<xi_1, R_0 phi_1> = -1",
             std::abs(pairing + 1.0), 1e-10);

  // Normal frame of M_+ at phi_1: {P_i phi_1} orthonormal and orthogonal to
  // T_{phi_1} M_+ = (D_2 + D_3 + D_4) at x.
  double frame_gram = 0.0, frame_vs_tangent = 0.0;
  const int count = static_cast<int>(fam.system.matrices.size());
  for (int i = 0; i < count; ++i) {
    const Vector vi = fam.system.matrices[i] * pt.phi[0];
    frame_gram = std::max(frame_gram, std::abs(vi.squaredNorm() - 1.0));
    for (int j = i + 1; j < count; ++j)
      frame_gram = std::max(
          frame_gram, std::abs(vi.dot(fam.system.matrices[j] * pt.phi[0])));
    for (int k : {1, 2, 3})
      frame_vs_tangent = std::max(
          frame_vs_tangent, max_abs(Vector(data.basis[k].transpose() * vi)));
  }
  report.add("focal.normal_frame_gram", "{P_i phi_1} orthonormal", frame_gram,
             1e-10);
  report.add("focal.normal_frame_vs_tangent",
             "{P_i phi_1} orthogonal to T_{phi_1} M_+", frame_vs_tangent, 1e-8);
  return report;
}

double maurer_cartan_residual(const Family& fam, const SurfacePoint& pt,
                              const DistributionData& data,
                              const Matrix& test_vectors) {
  const double sin2t = std::sin(2.0 * fam.theta);
  const double inv_sin = 1.0 / std::sin(fam.theta);
  const double inv_cos = 1.0 / std::cos(fam.theta);
  double worst = 0.0;
  for (int a = 1; a <= fam.system.m; ++a) {
    const Vector rax = data.frame.r[a] * pt.x;
    const Vector ea = data.d1_frame.col(a - 1);
    const Vector eabar = data.d3_frame.col(a - 1);
    for (int j = 0; j < test_vectors.cols(); ++j) {
      const Vector v = test_vectors.col(j);
      const double lhs = 2.0 / sin2t * rax.dot(v);
      const double rhs = inv_sin * ea.dot(v) + inv_cos * eabar.dot(v);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

}  // namespace otfkm
