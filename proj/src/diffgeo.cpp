#include "otfkm/diffgeo.hpp"

#include <cmath>

#include "otfkm/errors.hpp"

namespace otfkm {

EvalContext make_context(const Family& fam, const SurfacePoint& pt) {
  return EvalContext{pt, principal_decomposition(fam, pt)};
}

EvalContext make_context(const Family& fam, const Vector& x) {
  return make_context(fam, make_surface_point(fam, x));
}

VectorField projected_constant(const Vector& v0) {
  return [v0](const EvalContext& ctx) {
    Vector v = v0;
    v -= ctx.pt.x.dot(v) * ctx.pt.x;
    v -= ctx.pt.xi.dot(v) * ctx.pt.xi;
    return v;
  };
}

Vector covariant_derivative(const Family& fam, const EvalContext& base,
                            const VectorField& field, const Vector& dir,
                            double h) {
  const double norm = dir.norm();
  if (norm == 0.0) return Vector::Zero(base.pt.x.size());
  // unit-speed curve, rescale afterwards; keeps the step size meaningful
  const Vector unit = dir / norm;
  const EvalContext fwd =
      make_context(fam, tangent_curve(fam, base.pt, unit, h));
  const EvalContext bwd =
      make_context(fam, tangent_curve(fam, base.pt, unit, -h));
  Vector d = (field(fwd) - field(bwd)) * (norm / (2.0 * h));
  d -= base.pt.x.dot(d) * base.pt.x;
  d -= base.pt.xi.dot(d) * base.pt.xi;
  return d;
}

namespace {

Matrix aligned_block(const Matrix& eigenspace_basis, const Matrix& base_block) {
  const Matrix projected =
      eigenspace_basis * (eigenspace_basis.transpose() * base_block);
  return procrustes_align(loewdin(projected), base_block);
}

}  // namespace

int LocalFrameField::block_offset(int k) const {
  int off = 0;
  for (int i = 0; i < k; ++i) off += sizes_[i];
  return off;
}

LocalFrameField LocalFrameField::eigen_aligned(const Family& fam,
                                               const EvalContext& base) {
  LocalFrameField f;
  f.gauge_ = Gauge::EigenAligned;
  for (int k = 0; k < 4; ++k) {
    f.blocks_[k] = base.dist.basis[k];
    f.sizes_[k] = static_cast<int>(f.blocks_[k].cols());
  }
  f.base_.resize(fam.ambient_dim(), fam.surface_dim());
  f.base_ << f.blocks_[0], f.blocks_[1], f.blocks_[2], f.blocks_[3];
  return f;
}

LocalFrameField LocalFrameField::clifford_adapted(const Family& fam,
                                                  const EvalContext& base,
                                                  OperatorField d2_to_d4) {
  LocalFrameField f;
  f.gauge_ = Gauge::CliffordAdapted;
  f.d2_to_d4_ = std::move(d2_to_d4);
  const CliffordFrame frame = clifford_frame(fam, base.pt);
  f.pivots_ = frame.pivots;
  const int m = fam.system.m;
  Matrix d1(fam.ambient_dim(), m);
  for (int a = 1; a <= m; ++a) d1.col(a - 1) = frame.r[a] * base.pt.phi[0];
  f.blocks_[0] = d1;
  f.blocks_[1] = base.dist.basis[1];
  f.blocks_[2] = -(frame.r[0] * d1);
  f.blocks_[3] = f.d2_to_d4_ ? Matrix(f.d2_to_d4_(base) * f.blocks_[1])
                             : base.dist.basis[3];
  for (int k = 0; k < 4; ++k) f.sizes_[k] = static_cast<int>(f.blocks_[k].cols());
  f.base_.resize(fam.ambient_dim(), fam.surface_dim());
  f.base_ << f.blocks_[0], f.blocks_[1], f.blocks_[2], f.blocks_[3];
  return f;
}

Matrix LocalFrameField::evaluate(const Family& fam,
                                 const EvalContext& at) const {
  Matrix out(fam.ambient_dim(), fam.surface_dim());
  if (gauge_ == Gauge::EigenAligned) {
    int off = 0;
    for (int k = 0; k < 4; ++k) {
      out.middleCols(off, sizes_[k]) =
          aligned_block(at.dist.basis[k], blocks_[k]);
      off += sizes_[k];
    }
    return out;
  }
  const CliffordFrame frame = clifford_frame(fam, at.pt, &pivots_);
  const int m = fam.system.m;
  Matrix d1(fam.ambient_dim(), m);
  for (int a = 1; a <= m; ++a) d1.col(a - 1) = frame.r[a] * at.pt.phi[0];
  const Matrix d2 = aligned_block(at.dist.basis[1], blocks_[1]);
  out.middleCols(block_offset(0), sizes_[0]) = d1;
  out.middleCols(block_offset(1), sizes_[1]) = d2;
  out.middleCols(block_offset(2), sizes_[2]) = -(frame.r[0] * d1);
  out.middleCols(block_offset(3), sizes_[3]) =
      d2_to_d4_ ? Matrix(d2_to_d4_(at) * d2)
                : aligned_block(at.dist.basis[3], blocks_[3]);
  return out;
}

ConnectionCoefficients connection_coefficients(const Family& fam,
                                               const EvalContext& base,
                                               const LocalFrameField& frame,
                                               double h) {
  ConnectionCoefficients cc;
  cc.n = frame.columns();
  cc.frame = frame.base_frame();
  cc.omega.assign(static_cast<size_t>(cc.n) * cc.n * cc.n, 0.0);
  cc.type.resize(cc.n);
  for (int k = 0, idx = 0; k < 4; ++k)
    for (int j = 0; j < frame.block_size(k); ++j) cc.type[idx++] = k;

  for (int k = 0; k < cc.n; ++k) {
    const Vector dir = cc.frame.col(k);
    const EvalContext fwd =
        make_context(fam, tangent_curve(fam, base.pt, dir, h));
    const EvalContext bwd =
        make_context(fam, tangent_curve(fam, base.pt, dir, -h));
    const Matrix ff = frame.evaluate(fam, fwd);
    const Matrix fb = frame.evaluate(fam, bwd);
    for (int i = 0; i < cc.n; ++i) {
      Vector d = (ff.col(i) - fb.col(i)) / (2.0 * h);
      d -= base.pt.x.dot(d) * base.pt.x;
      d -= base.pt.xi.dot(d) * base.pt.xi;
      for (int j = 0; j < cc.n; ++j)
        cc.omega[(static_cast<size_t>(i) * cc.n + j) * cc.n + k] =
            cc.frame.col(j).dot(d);
    }
  }
  return cc;
}

double metric_compat_residual(const ConnectionCoefficients& cc) {
  double worst = 0.0;
  for (int i = 0; i < cc.n; ++i)
    for (int j = 0; j < cc.n; ++j)
      for (int k = 0; k < cc.n; ++k)
        worst = std::max(worst, std::abs(cc(i, j, k) + cc(j, i, k)));
  return worst;
}

double codazzi_residual(const Family& fam, const ConnectionCoefficients& cc) {
  double worst = 0.0;
  for (int i = 0; i < cc.n; ++i)
    for (int j = 0; j < cc.n; ++j)
      for (int k = 0; k < cc.n; ++k) {
        const double li = fam.lambda[cc.type[i]];
        const double lj = fam.lambda[cc.type[j]];
        const double lk = fam.lambda[cc.type[k]];
        worst = std::max(
            worst, std::abs((li - lj) * cc(i, j, k) - (li - lk) * cc(i, k, j)));
      }
  return worst;
}

double same_type_omega_residual(const Family& fam,
                                const ConnectionCoefficients& cc) {
  double worst = 0.0;
  for (int i = 0; i < cc.n; ++i)
    for (int j = 0; j < cc.n; ++j)
      for (int k = 0; k < cc.n; ++k) {
        const double li = fam.lambda[cc.type[i]];
        const double lj = fam.lambda[cc.type[j]];
        const double lk = fam.lambda[cc.type[k]];
        if (li == lk && li != lj)
          worst = std::max(worst, std::abs(cc(i, j, k)));
      }
  return worst;
}

Vector lie_bracket(const Family& fam, const EvalContext& base,
                   const VectorField& x, const VectorField& y, double h) {
  const Vector x0 = x(base), y0 = y(base);
  return covariant_derivative(fam, base, y, x0, h) -
         covariant_derivative(fam, base, x, y0, h);
}

Vector nijenhuis_bracket(const Family& fam, const EvalContext& base,
                         const OperatorField& j, const Vector& x0,
                         const Vector& y0, double h) {
  const VectorField xf = projected_constant(x0);
  const VectorField yf = projected_constant(y0);
  const VectorField jx = [&](const EvalContext& c) { return Vector(j(c) * xf(c)); };
  const VectorField jy = [&](const EvalContext& c) { return Vector(j(c) * yf(c)); };
  const Matrix j0 = j(base);
  return lie_bracket(fam, base, jx, jy, h) -
         j0 * lie_bracket(fam, base, jx, yf, h) -
         j0 * lie_bracket(fam, base, xf, jy, h) -
         lie_bracket(fam, base, xf, yf, h);
}

namespace {

// (nabla_u J) v0 at the base point.
Vector nabla_j(const Family& fam, const EvalContext& base,
               const OperatorField& j, const Matrix& j0, const Vector& u,
               const Vector& v0, double h) {
  const VectorField vf = projected_constant(v0);
  const VectorField jv = [&](const EvalContext& c) { return Vector(j(c) * vf(c)); };
  return covariant_derivative(fam, base, jv, u, h) -
         j0 * covariant_derivative(fam, base, vf, u, h);
}

}  // namespace

Vector nijenhuis_connection(const Family& fam, const EvalContext& base,
                            const OperatorField& j, const Vector& x0,
                            const Vector& y0, double h) {
  const Matrix j0 = j(base);
  const Vector jx0 = j0 * x0, jy0 = j0 * y0;
  return nabla_j(fam, base, j, j0, jx0, y0, h) -
         nabla_j(fam, base, j, j0, jy0, x0, h) -
         j0 * nabla_j(fam, base, j, j0, x0, y0, h) +
         j0 * nabla_j(fam, base, j, j0, y0, x0, h);
}

Vector nijenhuis(const Family& fam, const EvalContext& base,
                 const OperatorField& j, const Vector& x0, const Vector& y0,
                 double h, double agree_tol) {
  const Vector a = nijenhuis_bracket(fam, base, j, x0, y0, h);
  const Vector b = nijenhuis_connection(fam, base, j, x0, y0, h);
  const double diff = max_abs(Vector(a - b));
  if (diff > agree_tol)
    throw NumericalIntegrityError(
        "nijenhuis: bracket and connection routes disagree by " +
        std::to_string(diff));
  return 0.5 * (a + b);
}

}  // namespace otfkm
