#include "otfkm/starricci.hpp"

#include <cmath>
#include <stdexcept>

namespace otfkm {

namespace {

Matrix shape_image(const Family& fam, const SurfacePoint& pt, const Matrix& v) {
  Matrix out(v.rows(), v.cols());
  for (int c = 0; c < v.cols(); ++c)
    out.col(c) = shape_apply(fam, pt, v.col(c));
  return out;
}

Matrix normalized_columns(const Matrix& m) {
  Matrix out = m;
  for (int c = 0; c < out.cols(); ++c) {
    const double n = out.col(c).norm();
    if (n > 1e-14) out.col(c) /= n;
  }
  return out;
}

// b_{2t} -> b_{2t+1} -> -b_{2t} on an even-dimensional orthonormal block.
Matrix paired_rotation(const Matrix& b) {
  Matrix out = Matrix::Zero(b.rows(), b.rows());
  for (int t = 0; t + 1 < b.cols(); t += 2)
    out += b.col(t + 1) * b.col(t).transpose() -
           b.col(t) * b.col(t + 1).transpose();
  return out;
}

}  // namespace

double star_ricci_closed_form(const Family& fam, const EvalContext& ctx,
                              const Matrix& j_op, const Vector& x,
                              const Vector& y) {
  const Vector jaja =
      j_op * shape_apply(fam, ctx.pt, j_op * shape_apply(fam, ctx.pt, x));
  return x.dot(y) - jaja.dot(y);
}

StarRicciForm star_ricci_form(const Family& fam, const EvalContext& ctx,
                              const Matrix& j_op, const Matrix& basis) {
  const Matrix jaja =
      j_op * shape_image(fam, ctx.pt, j_op * shape_image(fam, ctx.pt, basis));
  StarRicciForm out;
  out.form = basis.transpose() * basis - jaja.transpose() * basis;
  out.scalar = out.form.trace();
  return out;
}

Matrix j_adapted_basis(const EvalContext& ctx, const Matrix& j_op) {
  const Matrix tb = tangent_basis(ctx.pt);
  const int n2 = static_cast<int>(tb.cols());
  const int n = n2 / 2;
  if (max_abs(Matrix(j_op * (j_op * tb) + tb)) > 1e-8 ||
      gram_residual(Matrix(j_op * tb)) > 1e-8)
    throw std::invalid_argument(
        "j_adapted_basis: not an orthogonal complex structure on T_x M");

  Matrix pool = tb;
  Matrix out(tb.rows(), n2);
  for (int t = 0; t < n; ++t) {
    int pivot = 0;
    double best = -1.0;
    for (int c = 0; c < pool.cols(); ++c) {
      const double nc = pool.col(c).norm();
      if (nc > best) {
        best = nc;
        pivot = c;
      }
    }
    if (best < 1e-8)
      throw std::invalid_argument("j_adapted_basis: pool exhausted early");
    const Vector e = pool.col(pivot) / best;
    Vector f = j_op * e;
    f -= f.dot(e) * e;
    f.normalize();
    out.col(t) = e;
    out.col(t + n) = f;
    for (int c = 0; c < pool.cols(); ++c) {
      pool.col(c) -= e.dot(pool.col(c)) * e;
      pool.col(c) -= f.dot(pool.col(c)) * f;
    }
  }
  if (gram_residual(out) > 1e-8)
    throw std::invalid_argument("j_adapted_basis: lost orthonormality");
  return out;
}

StarRicciForm star_ricci_gauss_oracle(const Family& fam,
                                      const EvalContext& ctx,
                                      const Matrix& j_op,
                                      const Matrix& basis) {
  const Matrix adapted = j_adapted_basis(ctx, j_op);
  const int n = static_cast<int>(adapted.cols()) / 2;

  const int cols = static_cast<int>(basis.cols());
  const Matrix jb = j_op * basis;
  const Matrix a_basis = shape_image(fam, ctx.pt, basis);
  const Matrix a_jb = shape_image(fam, ctx.pt, jb);

  const auto r4 = [](const Vector& x, const Vector& ax, const Vector& y,
                     const Vector& ay, const Vector& z, const Vector& w) {
    return x.dot(z) * y.dot(w) - x.dot(w) * y.dot(z) + ax.dot(z) * ay.dot(w) -
           ax.dot(w) * ay.dot(z);
  };

  StarRicciForm out;
  out.form = Matrix::Zero(cols, cols);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) {
      double sum = 0.0;
      for (int t = 0; t < n; ++t)
        sum += r4(basis.col(i), a_basis.col(i), jb.col(j), a_jb.col(j),
                  adapted.col(t), adapted.col(t + n));
      out.form(i, j) = sum;
    }
  out.scalar = out.form.trace();
  return out;
}

Report symmetry_criterion(const Family& fam, const EvalContext& ctx,
                          const Matrix& j_op, double pass_tol,
                          double fail_tol) {
  const Matrix tb = tangent_basis(ctx.pt);
  const StarRicciForm f = star_ricci_form(fam, ctx, j_op, tb);
  const double asym = max_abs(Matrix(f.form - f.form.transpose()));

  double invariance = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Matrix& ek = ctx.dist.basis[k];
    if (ek.cols() == 0) continue;
    const Matrix jaj =
        j_op * shape_image(fam, ctx.pt, Matrix(j_op * ek));
    invariance =
        std::max(invariance, image_residual(normalized_columns(jaj), ek));
  }

  const auto verdict = [&](double r) {
    return r < pass_tol ? 0 : (r > fail_tol ? 2 : 1);
  };
  const int va = verdict(asym);
  const int vi = verdict(invariance);

  Report rep;
  rep.set_config("starricci.asymmetry", format_double(asym));
  rep.set_config("starricci.eigenspace_invariance", format_double(invariance));
  CheckRecord rec;
  rec.name = "starricci.symmetry_iff";
  rec.claim =
      "*Ric symmetric iff J A_xi J preserves every principal eigenspace";
  rec.points = 1;
  if (va == 1 || vi == 1) {
    rec.status = CheckStatus::Inconclusive;
    rec.residual = std::min(asym, invariance);
    rec.tolerance = pass_tol;
  } else if (va == vi) {
    rec.status = CheckStatus::Pass;
    rec.residual = 0.0;
    rec.tolerance = 0.0;
  } else {
    rec.status = CheckStatus::Fail;
    rec.residual = 1.0;
    rec.tolerance = 0.0;
  }
  rep.add(rec);
  return rep;
}

StarEinsteinFit weakly_star_einstein_fit(const StarRicciForm& f) {
  StarEinsteinFit fit;
  const int dim = static_cast<int>(f.form.rows());
  fit.rho = f.scalar / dim;
  fit.residual = max_abs(
      Matrix(f.form - fit.rho * Matrix::Identity(dim, dim)));
  return fit;
}

Report weakly_star_einstein_check(const Family& fam, const EvalContext& ctx,
                                  const Matrix& j_op) {
  const Matrix tb = tangent_basis(ctx.pt);
  const StarRicciForm f = star_ricci_form(fam, ctx, j_op, tb);
  const StarEinsteinFit fit = weakly_star_einstein_fit(f);

  Report rep;
  rep.set_config("starricci.rho", format_double(fit.rho));
  rep.add("starricci.weakly_einstein_fit", "*Ric = rho g with rho = trace/dim",
          fit.residual, 1e-8, 1);
  if (fit.residual >= 1e-8) return rep;

  const double c = 1.0 - fit.rho;
  rep.set_config("starricci.c", format_double(c));
  if (std::abs(c) <= 1e-8) {
    double flattest = std::abs(ctx.dist.lambda[0]);
    for (double l : ctx.dist.lambda)
      flattest = std::min(flattest, std::abs(l));
    rep.add("starricci.c_zero_flat_direction",
            "c = 0 forces a vanishing principal curvature", flattest, 1e-8, 1);
    return rep;
  }

  double pairing = 0.0;
  double lambda_match = 0.0;
  bool multiplicities_ok = true;
  for (int k = 0; k < 4; ++k) {
    const double target = -c / ctx.dist.lambda[k];
    int partner = 0;
    double gap = std::abs(ctx.dist.lambda[0] - target);
    for (int k2 = 1; k2 < 4; ++k2) {
      const double g2 = std::abs(ctx.dist.lambda[k2] - target);
      if (g2 < gap) {
        gap = g2;
        partner = k2;
      }
    }
    lambda_match = std::max(lambda_match, gap);
    pairing = std::max(
        pairing, image_residual(normalized_columns(Matrix(j_op * ctx.dist.basis[k])),
                                ctx.dist.basis[partner]));
    if (ctx.dist.basis[k].cols() != ctx.dist.basis[partner].cols())
      multiplicities_ok = false;
  }
  rep.add("starricci.lambda_pairing",
          "-c/lambda is again a principal curvature", lambda_match, 1e-8, 4);
  rep.add("starricci.j_maps_eigenspaces", "J(E_lambda) = E_{-c/lambda}",
          pairing, 1e-8, 4);
  rep.add("starricci.multiplicity_match",
          "dim E_lambda = dim E_{-c/lambda}", multiplicities_ok ? 0.0 : 1.0,
          0.0, 4);
  return rep;
}

Report gauss_kronecker_check(const Family& fam, const EvalContext& ctx,
                             const Matrix& j_op) {
  const Matrix tb = tangent_basis(ctx.pt);
  const StarRicciForm f = star_ricci_form(fam, ctx, j_op, tb);
  const StarEinsteinFit fit = weakly_star_einstein_fit(f);
  if (fit.residual >= 1e-8)
    throw std::invalid_argument(
        "gauss_kronecker_check: structure is not weakly *-Einstein");

  const double k_det = shape_operator(fam, ctx.pt, tb).determinant();
  const int half = static_cast<int>(tb.cols()) / 2;  // = l - 1
  const double target = std::pow(fit.rho - 1.0, half);

  double product = 1.0;
  for (int k = 0; k < 4; ++k)
    product *= std::pow(ctx.dist.lambda[k],
                        static_cast<int>(ctx.dist.basis[k].cols()));

  Report rep;
  rep.set_config("starricci.gauss_kronecker", format_double(k_det));
  rep.add("starricci.k_rho_power", "det A_xi = (rho - 1)^{l-1}",
          std::abs(k_det - target) / std::max(std::abs(target), 1e-300), 1e-8,
          1);
  rep.add("starricci.k_eigen_product",
          "det A_xi = prod_k lambda_k^{dim E_k}",
          std::abs(k_det - product) / std::max(std::abs(product), 1e-300),
          1e-9, 1);
  return rep;
}

Matrix random_complex_structure(const EvalContext& ctx, Rng& rng) {
  const Matrix tb = tangent_basis(ctx.pt);
  const int n2 = static_cast<int>(tb.cols());
  const Matrix t = tb * rng.orthogonal(n2);
  Matrix j = Matrix::Zero(tb.rows(), tb.rows());
  for (int i = 0; i < n2 / 2; ++i)
    j += t.col(i + n2 / 2) * t.col(i).transpose() -
         t.col(i) * t.col(i + n2 / 2).transpose();
  return j;
}

Matrix block_adapted_complex_structure(const DualPair& dp,
                                       const EvalContext& ctx) {
  const auto& basis = ctx.dist.basis;
  if (dp.fam.m2 % 2 == 0) {
    const Matrix swap13 =
        ctx.pt.p_op * (ctx.dist.projector(2) - ctx.dist.projector(0));
    return swap13 + paired_rotation(basis[1]) + paired_rotation(basis[3]);
  }
  if (dp.fam.m1 % 2 == 0) {
    const Matrix q = dual_projection_Q(dp, ctx.pt.x);
    const Matrix swap24 =
        q * (ctx.dist.projector(3) - ctx.dist.projector(1));
    return swap24 + paired_rotation(basis[0]) + paired_rotation(basis[2]);
  }
  throw std::domain_error(
      "block_adapted_complex_structure: needs an even multiplicity");
}

}  // namespace otfkm
