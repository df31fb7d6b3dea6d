#pragma once

#include <functional>

#include "otfkm/shape.hpp"

namespace otfkm {

// Everything fields typically need at an evaluation point, computed once.
struct EvalContext {
  SurfacePoint pt;
  DistributionData dist;
};

EvalContext make_context(const Family& fam, const SurfacePoint& pt);
EvalContext make_context(const Family& fam, const Vector& x);

using VectorField = std::function<Vector(const EvalContext&)>;
// Ambient operator whose restriction to the tangent space is the object of
// interest (e.g. an almost complex structure built from spectral projectors).
using OperatorField = std::function<Matrix(const EvalContext&)>;

// y -> projection of the constant ambient vector v0 onto T_y M.
VectorField projected_constant(const Vector& v0);

// Levi-Civita connection of M: central difference of the field along the
// tangent curve through `base` in direction `dir`, projected to the base
// tangent space.
Vector covariant_derivative(const Family& fam, const EvalContext& base,
                            const VectorField& field, const Vector& dir,
                            double h = 1e-4);

// Smooth orthonormal frame of T M adapted to the principal distributions,
// ordered [D_1 | D_2 | D_3 | D_4] and equal to the stored base frame at the
// base point.
class LocalFrameField {
 public:
  // Every block: base vectors projected into the matching eigenspace,
  // symmetrically orthonormalized, then Procrustes-aligned to the base block.
  static LocalFrameField eigen_aligned(const Family& fam,
                                       const EvalContext& base);

  // D_1 carried as e_a = R_a phi_1 with the pivot order of the base frame
  // gauge frozen, D_3 as -R_0 e_a, D_2 by the eigen-aligned recipe, and D_4
  // either via `d2_to_d4` applied to the D_2 frame (so that barred columns
  // stay exactly J-paired) or by the eigen-aligned recipe.
  static LocalFrameField clifford_adapted(const Family& fam,
                                          const EvalContext& base,
                                          OperatorField d2_to_d4 = nullptr);

  Matrix evaluate(const Family& fam, const EvalContext& at) const;
  const Matrix& base_frame() const { return base_; }
  int columns() const { return static_cast<int>(base_.cols()); }
  int block_offset(int k) const;
  int block_size(int k) const { return sizes_[k]; }

 private:
  enum class Gauge { EigenAligned, CliffordAdapted };
  Gauge gauge_ = Gauge::EigenAligned;
  std::array<Matrix, 4> blocks_;
  Matrix base_;
  std::vector<int> pivots_;
  OperatorField d2_to_d4_;
  std::array<int, 4> sizes_{};
};

// omega[i][j][k] = <nabla_{e_k} e_i, e_j> over the full frame.
struct ConnectionCoefficients {
  int n = 0;
  Matrix frame;               // base frame
  std::vector<double> omega;  // n^3 row-major (i, j, k)
  std::vector<int> type;      // principal-curvature type 0..3 per index

  double operator()(int i, int j, int k) const {
    return omega[(static_cast<size_t>(i) * n + j) * n + k];
  }
};

ConnectionCoefficients connection_coefficients(const Family& fam,
                                               const EvalContext& base,
                                               const LocalFrameField& frame,
                                               double h = 1e-4);

// max |omega_ijk + omega_jik| (metric compatibility).
double metric_compat_residual(const ConnectionCoefficients& cc);

// max |(lambda_i - lambda_j) omega_ijk - (lambda_i - lambda_k) omega_ikj|.
double codazzi_residual(const Family& fam, const ConnectionCoefficients& cc);

// max |omega_ijk| over triples with lambda_i = lambda_k != lambda_j, which
// the Codazzi relation forces to vanish.
double same_type_omega_residual(const Family& fam,
                                const ConnectionCoefficients& cc);

// [X, Y] = nabla_X Y - nabla_Y X at the base point.
Vector lie_bracket(const Family& fam, const EvalContext& base,
                   const VectorField& x, const VectorField& y, double h = 1e-4);

// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y], via brackets of
// projected-constant extensions.
Vector nijenhuis_bracket(const Family& fam, const EvalContext& base,
                         const OperatorField& j, const Vector& x0,
                         const Vector& y0, double h = 1e-4);

// Same tensor via (nabla_{JX} J)Y - (nabla_{JY} J)X - J(nabla_X J)Y
// + J(nabla_Y J)X.
Vector nijenhuis_connection(const Family& fam, const EvalContext& base,
                            const OperatorField& j, const Vector& x0,
                            const Vector& y0, double h = 1e-4);

// Both routes; throws NumericalIntegrityError when they disagree beyond
// `agree_tol` in max norm.
Vector nijenhuis(const Family& fam, const EvalContext& base,
                 const OperatorField& j, const Vector& x0, const Vector& y0,
                 double h = 1e-4, double agree_tol = 1e-3);

}  // namespace otfkm
