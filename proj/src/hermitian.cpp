#include "otfkm/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "otfkm/errors.hpp"
#include "otfkm/shape.hpp"

namespace otfkm {

PairSwapJ build_closed_form_J(const DualPair& dp, double mu) {
  if (mu == 0.0) throw std::invalid_argument("build_closed_form_J: mu = 0");
  PairSwapJ j;
  j.mode = PairSwapJ::Mode::ClosedForm;
  j.evaluate = [dp, mu](const EvalContext& ctx) {
    const Matrix q = dual_projection_Q(dp, ctx.pt.x);
    return Matrix(ctx.pt.p_op * ((1.0 / mu) * ctx.dist.projector(2) -
                                 mu * ctx.dist.projector(0)) +
                  q * (ctx.dist.projector(3) - ctx.dist.projector(1)));
  };
  return j;
}

PairSwapJ build_generic_pairswap_J(const EvalContext& ctx, const Matrix& u,
                                   const Matrix& w) {
  const Matrix u_image = u * ctx.dist.basis[0];
  const Matrix w_image = w * ctx.dist.basis[1];
  if (gram_residual(u_image) > 1e-8 ||
      image_residual(u_image, ctx.dist.basis[2]) > 1e-8)
    throw std::invalid_argument(
        "build_generic_pairswap_J: u is not an isometry D_1 -> D_3");
  if (gram_residual(w_image) > 1e-8 ||
      image_residual(w_image, ctx.dist.basis[3]) > 1e-8)
    throw std::invalid_argument(
        "build_generic_pairswap_J: w is not an isometry D_2 -> D_4");

  const Matrix pi1 = ctx.dist.projector(0);
  const Matrix pi2 = ctx.dist.projector(1);
  const Matrix op = u * pi1 + w * pi2 -
                    pi1 * u.transpose() * ctx.dist.projector(2) -
                    pi2 * w.transpose() * ctx.dist.projector(3);
  PairSwapJ j;
  j.mode = PairSwapJ::Mode::GenericBlocks;
  j.evaluate = [op](const EvalContext&) { return op; };
  return j;
}

PairSwapResiduals pairswap_residuals(const PairSwapJ& j,
                                     const EvalContext& ctx) {
  const Matrix j0 = j.evaluate(ctx);
  const Matrix tb = tangent_basis(ctx.pt);
  PairSwapResiduals out;
  out.acs = max_abs(Matrix(j0 * (j0 * tb) + tb));
  out.isometry = gram_residual(Matrix(j0 * tb));
  for (int k = 0; k < 4; ++k)
    out.swap = std::max(
        out.swap, image_residual(Matrix(j0 * ctx.dist.basis[k]),
                                 ctx.dist.basis[(k + 2) % 4]));
  return out;
}

Matrix fundamental_form(const Matrix& j_op, const Matrix& basis) {
  return basis.transpose() * j_op.transpose() * basis;
}

FundamentalFormResiduals fundamental_form_residuals(const Matrix& j_op,
                                                    const Matrix& basis) {
  const Matrix phi = fundamental_form(j_op, basis);
  const Matrix j_mat = basis.transpose() * j_op * basis;
  FundamentalFormResiduals out;
  out.skew = max_abs(Matrix(phi + phi.transpose()));
  out.j_invariance = max_abs(Matrix(j_mat.transpose() * phi * j_mat - phi));
  return out;
}

NearlyKahlerResiduals nearly_kahler_residuals(const DualPair& dp,
                                              const EvalContext& ctx,
                                              double h) {
  const Family& fam = dp.fam;
  const PairSwapJ j = build_closed_form_J(dp);
  const OperatorField d2_to_d4 = [&dp](const EvalContext& c) {
    return Matrix(-dual_projection_Q(dp, c.pt.x));
  };
  const LocalFrameField frame =
      LocalFrameField::clifford_adapted(fam, ctx, d2_to_d4);
  const ConnectionCoefficients cc = connection_coefficients(fam, ctx, frame, h);

  const int n2 = cc.n;
  const int n = n2 / 2;
  const auto bar = [n, n2](int i) { return (i + n) % n2; };
  const auto sgn = [n](int i) { return i < n ? 1.0 : -1.0; };
  // G_ijk = (nabla_{e_i} Phi)(e_j, e_k) expanded in the J-paired frame
  const auto g = [&](int i, int jj, int k) {
    return sgn(k) * cc(jj, bar(k), i) - sgn(jj) * cc(k, bar(jj), i);
  };

  NearlyKahlerResiduals out;
  out.codazzi = codazzi_residual(fam, cc);
  for (int i = 0; i < n2; ++i)
    for (int jj = 0; jj < n2; ++jj) {
      out.g_iij_connection = std::max(out.g_iij_connection, std::abs(g(i, i, jj)));
      for (int k = 0; k < n2; ++k) {
        const double pair_sym = std::abs(g(i, jj, k) + g(jj, i, k));
        if (cc.type[i] != cc.type[jj])
          out.cross_block_skew = std::max(out.cross_block_skew, pair_sym);
        out.g_full_max = std::max(out.g_full_max, std::abs(g(i, jj, k)));
      }
    }

  // nab(i, jj) = (nabla_{e_i} J) e_j, direct route, for same-distribution
  // index pairs only (the mixed pairs are covered by the omega route above).
  const Matrix& base = frame.base_frame();
  const Matrix j0 = j.evaluate(ctx);
  std::vector<Vector> nab(static_cast<size_t>(n2) * n2);
  for (int jj = 0; jj < n2; ++jj) {
    const VectorField xf = projected_constant(base.col(jj));
    const VectorField jxf = [&](const EvalContext& c) {
      return Vector(j.evaluate(c) * xf(c));
    };
    for (int i = 0; i < n2; ++i) {
      if (cc.type[i] != cc.type[jj]) continue;
      nab[static_cast<size_t>(i) * n2 + jj] =
          covariant_derivative(fam, ctx, jxf, base.col(i), h) -
          j0 * covariant_derivative(fam, ctx, xf, base.col(i), h);
    }
  }
  for (int i = 0; i < n2; ++i) {
    const Vector& diag = nab[static_cast<size_t>(i) * n2 + i];
    for (int k = 0; k < n2; ++k) {
      const double direct = diag.dot(base.col(k));
      out.g_iij_direct = std::max(out.g_iij_direct, std::abs(direct));
      out.method_agreement =
          std::max(out.method_agreement, std::abs(g(i, i, k) - direct));
    }
    for (int jj = i + 1; jj < n2; ++jj) {
      if (cc.type[i] != cc.type[jj]) continue;
      out.same_block_skew = std::max(
          out.same_block_skew,
          max_abs(Vector(nab[static_cast<size_t>(i) * n2 + jj] +
                         nab[static_cast<size_t>(jj) * n2 + i])));
    }
  }
  return out;
}

Report nearly_kahler_check(const DualPair& dp, const EvalContext& ctx,
                           double h) {
  const NearlyKahlerResiduals res = nearly_kahler_residuals(dp, ctx, h);
  if (res.method_agreement > 1e-4)
    throw NumericalIntegrityError(
        "nearly_kahler_check: connection and direct routes disagree by " +
        std::to_string(res.method_agreement));
  Report rep;
  rep.add("nk.g_iij_connection",
          "max_ij |(nabla_{e_i} Phi)(e_i, e_j)| = 0, frame-connection route",
          res.g_iij_connection, 1e-4, 1);
  rep.add("nk.g_iij_direct",
          "max_ij |<(nabla_{e_i} J) e_i, e_j>| = 0, direct route",
          res.g_iij_direct, 1e-4, 1);
  rep.add("nk.method_agreement", "the two G_iij routes coincide",
          res.method_agreement, 1e-4, 1);
  rep.add("nk.same_block_skew",
          "G_ijk + G_jik = 0 when e_i, e_j share a principal distribution",
          res.same_block_skew, 1e-8, 1);
  rep.set_config("nk.cross_block_skew", format_double(res.cross_block_skew));
  rep.add("nk.cross_block_skew_floor",
          "mixed-distribution pairs keep |G_ijk + G_jik| above 1e-2 "
          "(the derivative of the Kaehler form is not totally skew)",
          std::max(0.0, 1e-2 - res.cross_block_skew), 0.0, 1);
  rep.add("nk.codazzi_calibration",
          "(lambda_i - lambda_j) omega_ijk = (lambda_i - lambda_k) omega_ikj",
          res.codazzi, 5e-5, 1);
  return rep;
}

double witness_closed_form(const Family& fam, const EvalContext& ctx) {
  if (fam.system.m != 3)
    throw std::domain_error("witness_closed_form: requires m = 3");
  const auto& r = ctx.dist.frame.r;
  const Matrix word = r[0] * r[1] * r[2] * r[3];
  return -2.0 / (std::sin(fam.theta) * std::cos(2 * fam.theta)) *
         ctx.pt.x.dot(word * ctx.pt.x);
}

Report nonintegrability_witness_check(const DualPair& dp,
                                      const EvalContext& ctx, double mu,
                                      double h) {
  const Family& fam = dp.fam;
  if (fam.system.m != 3)
    throw std::domain_error("nonintegrability_witness_check: requires m = 3");
  const Vector e1 = ctx.dist.d1_frame.col(0);
  const Vector e2 = ctx.dist.d1_frame.col(1);
  const Vector e3 = ctx.dist.d1_frame.col(2);
  const auto numeric = [&](double mu_value) {
    const PairSwapJ j = build_closed_form_J(dp, mu_value);
    return nijenhuis(fam, ctx, j.evaluate, e1, e2, h, 1e-3).dot(e3);
  };

  const double scale =
      2.0 / (std::sin(fam.theta) * std::cos(2 * fam.theta));
  const double cf = witness_closed_form(fam, ctx);
  const double num = numeric(mu);
  const double match =
      std::abs(num - cf) / std::max(std::abs(cf), 1e-3 * scale);

  const double at_one = mu == 1.0 ? num : numeric(1.0);
  const double mu_spread =
      std::max(std::abs(numeric(0.5) - at_one), std::abs(numeric(2.0) - at_one)) /
      scale;

  // W = R_0R_1R_2R_3 anticommutes with R_0, so <Wx, x> = 2<Wx_+, x_-> over
  // the E_+-(R_0) split of x, capped by 2|x_+||x_-| = cos 2theta.
  const auto& r = ctx.dist.frame.r;
  const double wxx =
      ctx.pt.x.dot(r[0] * (r[1] * (r[2] * (r[3] * ctx.pt.x))));
  const double cos2t = std::cos(2 * fam.theta);

  Report rep;
  rep.set_config("witness_closed_form", format_double(cf));
  rep.add("witness.match",
          "<N(e_1,e_2), e_3> = -2/(sin theta cos 2theta) <R_0R_1R_2R_3 x, x>",
          match, 1e-3, 1);
  rep.add("witness.mu_invariance",
          "the witness component is unchanged under mu in {1/2, 1, 2}",
          mu_spread, 1e-3, 3);
  rep.add("witness.range", "|<R_0R_1R_2R_3 x, x>| <= cos 2theta",
          std::max(0.0, std::abs(wxx) - cos2t), 1e-6, 1);
  return rep;
}

Report j_continuity_check(const Family& fam, const PairSwapJ& j,
                          const SurfacePoint& start, const Vector& direction,
                          int steps, double dt) {
  SurfacePoint pt = start;
  Vector dir = direction;
  dir -= pt.x.dot(dir) * pt.x;
  dir -= pt.xi.dot(dir) * pt.xi;
  if (dir.norm() < 1e-12)
    throw std::invalid_argument("j_continuity_check: degenerate direction");
  dir.normalize();

  std::vector<double> diffs;
  Matrix prev;
  for (int i = 0; i <= steps; ++i) {
    const EvalContext ctx = make_context(fam, pt);
    const Matrix op = j.evaluate(ctx);
    if (i > 0) diffs.push_back(max_abs(Matrix(op - prev)));
    prev = op;
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
  const double jump_ratio =
      max_diff <= 1e-13 ? 0.0 : max_diff / std::max(10 * median, 1e-300);

  Report rep;
  rep.add("j.path_step_bound",
          "max_i |J(i+1) - J(i)|_max <= 100 dt over the path", max_diff,
          100.0 * dt, steps);
  rep.add("j.path_no_jumps",
          "max consecutive J difference < 10 * median difference", jump_ratio,
          1.0, steps);
  return rep;
}

}  // namespace otfkm
