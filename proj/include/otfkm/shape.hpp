#pragma once

#include <array>
#include <vector>

#include "otfkm/isoparametric.hpp"
#include "otfkm/report.hpp"

namespace otfkm {

// Deterministic orthonormal basis of T_x M = {x, xi}^perp, 2l-2 columns.
Matrix tangent_basis(const SurfacePoint& pt);

// Exact ambient differential of the normal field along v (theta held fixed).
Vector normal_differential(const Family& fam, const Vector& x, const Vector& v);

// A_xi v = -(tangential part of d xi(v)) for tangent v.
Vector shape_apply(const Family& fam, const SurfacePoint& pt, const Vector& v);

// Matrix of A_xi in the given orthonormal tangent basis.
Matrix shape_operator(const Family& fam, const SurfacePoint& pt,
                      const Matrix& basis);

// Clifford frame R_i = sum_j A(j,i) P_j with A in SO(m+1), first column the
// coefficient vector of x, so R_0 = P.  `forced`/`chosen` expose the pivot
// order of the completion for smooth evaluation along curves.
struct CliffordFrame {
  Matrix a_gauge;               // (m+1) x (m+1)
  std::vector<Matrix> r;        // R_0..R_m
  std::vector<int> pivots;
};

CliffordFrame clifford_frame(const Family& fam, const SurfacePoint& pt,
                             const std::vector<int>* forced = nullptr);

// Principal distributions D_1..D_4 (eigenspaces of A_xi ordered by
// lambda_k = cot(theta + (k-1) pi/4)) plus the adapted frame of D_1/D_3:
//   e_a = R_a phi_1,   e_abar = -R_0 e_a  (= -R_a phi_3).
struct DistributionData {
  std::array<Matrix, 4> basis;        // eigenvector gauge, ambient columns
  std::array<double, 4> lambda{};
  CliffordFrame frame;
  Matrix d1_frame;                    // 2l x m1
  Matrix d3_frame;                    // 2l x m1
  double eigen_gap = 0.0;             // smallest margin used in grouping

  Matrix projector(int k) const { return otfkm::projector(basis[k]); }
};

// Throws a degenerate-point error when an eigenvalue cannot be attributed to
// a unique lambda_k (margin 1e-4) or group sizes are off.
DistributionData principal_decomposition(const Family& fam,
                                         const SurfacePoint& pt);

// Largest deviation of the measured spectrum from cot(theta + (k-1) pi/4),
// multiplicities enforced.
double spectrum_residual(const Family& fam, const SurfacePoint& pt);

// Orthogonality of each D_k to its transported normal xi_k and to the focal
// tangent space realized by the other three distributions; the D_1 dimension
// count; <xi_1, R_0 phi_1> = -1; orthonormality of the normal frame
// {P_i phi_1} against T_{phi_1} M_+.
Report focal_geometry_checks(const Family& fam, const SurfacePoint& pt,
                             const DistributionData& data);

// max over a and test vectors of
// |(2/sin 2theta) <R_a x, v> - (1/sin theta) <v, e_a> - (1/cos theta) <v, e_abar>|.
double maurer_cartan_residual(const Family& fam, const SurfacePoint& pt,
                              const DistributionData& data,
                              const Matrix& test_vectors);

}  // namespace otfkm
