#include "otfkm/bundleiso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace otfkm {

FiberIsomorphism iso_d1_d3(const Family&, const EvalContext& ctx) {
  FiberIsomorphism iso;
  iso.source = 0;
  iso.target = 2;
  iso.op = ctx.pt.p_op;
  const Matrix image = iso.op * ctx.dist.basis[0];
  iso.gram = gram_residual(image);
  iso.image = image_residual(image, ctx.dist.basis[2]);
  return iso;
}

double r0_focal_intertwine_residual(const Family& fam, const EvalContext& ctx) {
  const auto& r = ctx.dist.frame.r;
  double worst = 0.0;
  for (int a = 1; a <= fam.system.m; ++a)
    worst = std::max(worst, max_abs(Vector(r[0] * (r[a] * ctx.pt.phi[0]) -
                                           r[a] * ctx.pt.phi[2])));
  return worst;
}

DualPair make_dual_pair(int m1, int m2, double theta) {
  const bool supported = (m1 == 1 && m2 == 2) || (m1 == 1 && m2 == 6) ||
                         (m1 == 2 && m2 == 5) || (m1 == 3 && m2 == 4);
  if (!supported)
    throw std::domain_error(
        "make_dual_pair: supported multiplicity pairs are (1,2), (1,6), "
        "(2,5), (3,4)");
  const int l = m1 + m2 + 1;
  const FullSquareSystem full = build_full_square_system(
      l == 4 ? FullSquareFlavor::Five_on_8d : FullSquareFlavor::Nine_on_16d);
  auto [head, tail] = split_dual_subsystems(full, m1);
  DualPair dp{full, m1, make_family(std::move(head), theta),
              make_family(std::move(tail), M_PI / 4 - theta)};
  return dp;
}

Matrix dual_projection_Q_range(const DualPair& dp, const Vector& x, int first,
                               int last) {
  const auto& ps = dp.full.system.matrices;
  if (first < 0 || last >= static_cast<int>(ps.size()) || first > last)
    throw std::invalid_argument("dual_projection_Q_range: bad index range");
  Matrix q = Matrix::Zero(x.size(), x.size());
  for (int i = first; i <= last; ++i) q += x.dot(ps[i] * x) * ps[i];
  return q / std::cos(2 * dp.fam.theta);
}

Matrix dual_projection_Q(const DualPair& dp, const Vector& x) {
  return dual_projection_Q_range(
      dp, x, dp.m_head + 1, static_cast<int>(dp.full.system.matrices.size()) - 1);
}

FiberIsomorphism iso_d2_d4_dual(const DualPair& dp, const EvalContext& ctx) {
  FiberIsomorphism iso;
  iso.source = 1;
  iso.target = 3;
  iso.op = dual_projection_Q(dp, ctx.pt.x);
  const Matrix image = iso.op * ctx.dist.basis[1];
  iso.gram = gram_residual(image);
  iso.image = image_residual(image, ctx.dist.basis[3]);
  return iso;
}

DualCheckResiduals dual_checks(const DualPair& dp, const EvalContext& ctx) {
  DualCheckResiduals out;
  const Vector& x = ctx.pt.x;
  const int n = static_cast<int>(x.size());
  const int last = static_cast<int>(dp.full.system.matrices.size()) - 1;
  const Matrix id = Matrix::Identity(n, n);

  const Matrix q = dual_projection_Q(dp, x);
  out.q_involution = max_abs(Matrix(q * q - id));
  const Matrix qn = dual_projection_Q_range(dp, x, dp.m_head + 1, last - 1);
  out.q_narrow_involution = max_abs(Matrix(qn * qn - id));

  out.dual_level =
      std::abs(cartan_munzner(dp.dual_fam.system, x) - dp.dual_fam.level);

  const SurfacePoint dual_pt = make_surface_point(dp.dual_fam, x);
  out.xi_pairing = std::abs(ctx.pt.xi.dot(dual_pt.xi) + 1.0);

  double rel = spectrum_residual(dp.dual_fam, dual_pt);
  for (int k = 0; k < 4; ++k)
    rel = std::max(rel,
                   std::abs(dp.fam.lambda[k] + dp.dual_fam.lambda[3 - k]));
  out.spectrum_relation = rel;

  const DistributionData dual_dist =
      principal_decomposition(dp.dual_fam, dual_pt);
  out.d2_equals_dual_d3 =
      subspace_distance(ctx.dist.basis[1], dual_dist.basis[2]);
  out.d4_equals_dual_d1 =
      subspace_distance(ctx.dist.basis[3], dual_dist.basis[0]);

  const Matrix qb2 = q * ctx.dist.basis[1];
  out.q_gram = gram_residual(qb2);
  out.q_image = image_residual(qb2, ctx.dist.basis[3]);
  out.q_roundtrip_on_d2 = max_abs(Matrix(q * qb2 - ctx.dist.basis[1]));
  return out;
}

EigenSplit eigen_split(const Family&, const EvalContext& ctx) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(ctx.pt.p_op);
  const auto& values = es.eigenvalues();
  int negatives = 0;
  for (int i = 0; i < values.size(); ++i)
    if (values[i] < 0.0) ++negatives;
  EigenSplit split;
  split.basis_minus = es.eigenvectors().leftCols(negatives);
  split.basis_plus = es.eigenvectors().rightCols(values.size() - negatives);
  return split;
}

EigenSplitResiduals eigen_split_checks(const Family& fam,
                                       const EvalContext& ctx) {
  const EigenSplit split = eigen_split(fam, ctx);
  const int n = fam.ambient_dim();
  const double s = std::sqrt(0.5);
  const Matrix id = Matrix::Identity(n, n);
  const Matrix half_plus = s * (id + ctx.pt.p_op);
  const Matrix half_minus = s * (id - ctx.pt.p_op);
  const Vector& phi1 = ctx.pt.phi[0];

  EigenSplitResiduals out;
  out.dim_plus = static_cast<int>(split.basis_plus.cols());
  out.dim_minus = static_cast<int>(split.basis_minus.cols());

  const int m1 = fam.m1, m2 = fam.m2;
  Matrix sum_plus(n, 1 + m1 + m2);
  sum_plus.col(0) = half_plus * phi1;
  sum_plus.middleCols(1, m1) = half_plus * ctx.dist.basis[0];
  sum_plus.rightCols(m2) = ctx.dist.basis[1];
  out.decomposition_plus = std::max(gram_residual(sum_plus),
                                    subspace_distance(sum_plus, split.basis_plus));

  Matrix sum_minus(n, 1 + m1 + m2);
  sum_minus.col(0) = half_minus * phi1;
  sum_minus.middleCols(1, m1) = half_minus * ctx.dist.basis[0];
  sum_minus.rightCols(m2) = ctx.dist.basis[3];
  out.decomposition_minus = std::max(
      gram_residual(sum_minus), subspace_distance(sum_minus, split.basis_minus));

  out.xi2_identity = max_abs(Vector(half_plus * phi1 + ctx.pt.xi_k[1]));
  out.d2_in_plus = image_residual(ctx.dist.basis[1], split.basis_plus);
  out.d2_orthogonality = max_abs(
      Matrix(ctx.dist.basis[1].transpose() * sum_plus.leftCols(1 + m1)));
  return out;
}

namespace {

Vector rotate_pairs(const Vector& a) {
  Vector v(a.size());
  for (int i = 0; i + 1 < a.size(); i += 2) {
    v[i] = a[i + 1];
    v[i + 1] = -a[i];
  }
  return v;
}

}  // namespace

Matrix global_section_R1(const Family& fam, const SurfacePoint& pt) {
  if (fam.system.m % 2 == 0)
    throw std::domain_error("global_section_R1: requires odd m");
  const Vector v = rotate_pairs(pt.coeff);
  Matrix r1 = Matrix::Zero(fam.ambient_dim(), fam.ambient_dim());
  for (int i = 0; i <= fam.system.m; ++i) r1 += v[i] * fam.system.matrices[i];
  return r1;
}

SigmaMap sigma_map(const Family& fam, const EvalContext& ctx,
                   const Matrix& r1) {
  const Matrix& p = ctx.pt.p_op;
  if (max_abs(Matrix(r1 * p + p * r1)) > 1e-10)
    throw std::invalid_argument("sigma_map: section does not anticommute with P");
  const int n = fam.ambient_dim();
  const double s = std::sqrt(0.5);
  const Matrix id = Matrix::Identity(n, n);
  const Vector& phi1 = ctx.pt.phi[0];
  const Matrix pi1 = ctx.dist.projector(0);

  const Matrix rho_plus =
      s * (id + p) * (phi1 * phi1.transpose() + pi1) + ctx.dist.projector(1);
  const Vector u_minus = s * (id - p) * phi1;
  const Matrix rho_minus_inv =
      phi1 * u_minus.transpose() + pi1 * (s * (id - p)) + ctx.dist.projector(3);

  SigmaMap sm;
  sm.r1 = r1;
  sm.w = r1 * phi1;
  sm.sigma = rho_minus_inv * r1 * rho_plus;
  const Matrix pi12 = pi1 + ctx.dist.projector(1);
  sm.sigma_tilde = sm.w * sm.w.transpose() +
                   sm.sigma * (pi12 - sm.w * sm.w.transpose());
  return sm;
}

SigmaResiduals sigma_checks(const Family& fam, const EvalContext& ctx) {
  const Vector v = rotate_pairs(ctx.pt.coeff);
  const Matrix r1 = global_section_R1(fam, ctx.pt);
  const SigmaMap sm = sigma_map(fam, ctx, r1);

  SigmaResiduals out;
  out.section_unit = std::abs(v.norm() - 1.0);
  out.section_orthogonal = std::abs(v.dot(ctx.pt.coeff));
  out.section_anticommute =
      max_abs(Matrix(r1 * ctx.pt.p_op + ctx.pt.p_op * r1));
  out.swaps_phi1_w =
      std::max(max_abs(Vector(sm.sigma * ctx.pt.phi[0] - sm.w)),
               max_abs(Vector(sm.sigma * sm.w - ctx.pt.phi[0])));
  out.fixes_w = max_abs(Vector(sm.sigma_tilde * sm.w - sm.w));

  const int m1 = fam.m1, m2 = fam.m2;
  Matrix source(fam.ambient_dim(), m1 + m2);
  source.leftCols(m1) = ctx.dist.basis[0];
  source.rightCols(m2) = ctx.dist.basis[1];
  Matrix target(fam.ambient_dim(), m1 + m2);
  target.leftCols(m1) = ctx.dist.basis[0];
  target.rightCols(m2) = ctx.dist.basis[3];

  const Matrix image = sm.sigma_tilde * source;
  out.gram = gram_residual(image);
  out.image = image_residual(image, target);
  return out;
}

double sigma_d2_constant_residual(const Family& fam, const EvalContext& ctx) {
  if (fam.system.m != 1)
    throw std::domain_error("sigma_d2_constant_residual: requires m = 1");
  const SigmaMap sm = sigma_map(fam, ctx, global_section_R1(fam, ctx.pt));
  const Matrix p0p1 = fam.system.matrices[0] * fam.system.matrices[1];
  return max_abs(Matrix((sm.sigma - p0p1) * ctx.dist.basis[1]));
}

Report sigma_continuity_check(const Family& fam, const SurfacePoint& start,
                              const Vector& direction, int steps, double dt) {
  SurfacePoint pt = start;
  Vector dir = direction;
  dir -= pt.x.dot(dir) * pt.x;
  dir -= pt.xi.dot(dir) * pt.xi;
  if (dir.norm() < 1e-12)
    throw std::invalid_argument("sigma_continuity_check: degenerate direction");
  dir.normalize();

  std::vector<double> diffs;
  Matrix prev;
  for (int i = 0; i <= steps; ++i) {
    const EvalContext ctx = make_context(fam, pt);
    const SigmaMap sm = sigma_map(fam, ctx, global_section_R1(fam, ctx.pt));
    if (i > 0) diffs.push_back(max_abs(Matrix(sm.sigma_tilde - prev)));
    prev = sm.sigma_tilde;
    if (i < steps) {
      pt = tangent_curve(fam, pt, dir, dt);
      dir -= pt.x.dot(dir) * pt.x;
      dir -= pt.xi.dot(dir) * pt.xi;
      dir.normalize();
    }
  }

  double max_diff = 0.0;
  for (double d : diffs) max_diff = std::max(max_diff, d);
  std::vector<double> sorted = diffs;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
  // below the noise floor every step counts as continuous
  const double jump_ratio =
      max_diff <= 1e-13 ? 0.0 : max_diff / std::max(10 * median, 1e-300);

  Report rep;
  rep.add("sigma.path_step_bound",
          "max_i |sigma_tilde(i+1) - sigma_tilde(i)|_max <= 100 dt over the path",
          max_diff, 100.0 * dt, steps);
  rep.add("sigma.path_no_jumps",
          "max consecutive sigma_tilde difference < 10 * median difference",
          jump_ratio, 1.0, steps);
  return rep;
}

}  // namespace otfkm
