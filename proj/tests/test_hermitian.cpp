#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "otfkm/errors.hpp"
#include "otfkm/hermitian.hpp"
#include "otfkm/rng.hpp"
#include "otfkm/shape.hpp"

using namespace otfkm;

TEST_CASE("closed-form J is an isometric pair-swapping almost complex structure") {
  for (auto [m1, m2] : {std::pair{1, 2}, std::pair{3, 4}}) {
    const DualPair dp = make_dual_pair(m1, m2, 0.3);
    const PairSwapJ j = build_closed_form_J(dp);
    for (int i = 0; i < 3; ++i) {
      const EvalContext ctx = make_context(dp.fam, sample_point(dp.fam, 200 + i));
      const PairSwapResiduals res = pairswap_residuals(j, ctx);
      CHECK(res.acs < 1e-10);
      CHECK(res.isometry < 1e-10);
      CHECK(res.swap < 1e-8);
      const FundamentalFormResiduals form = fundamental_form_residuals(
          j.evaluate(ctx), tangent_basis(ctx.pt));
      CHECK(form.skew < 1e-10);
      CHECK(form.j_invariance < 1e-10);
    }
  }
}

TEST_CASE("mu-scaled J squares to minus the identity but is not metric compatible") {
  const DualPair dp = make_dual_pair(3, 4, 0.3);
  const EvalContext ctx = make_context(dp.fam, sample_point(dp.fam, 210));
  const PairSwapJ j = build_closed_form_J(dp, 2.0);
  const PairSwapResiduals res = pairswap_residuals(j, ctx);
  CHECK(res.acs < 1e-10);
  CHECK(res.swap < 1e-8);
  CHECK(res.isometry > 1.0);  // |J v| = 2 |v| on D_1
  CHECK_THROWS_AS(build_closed_form_J(dp, 0.0), std::invalid_argument);
}

TEST_CASE("generic pair-swap J accepts isometric blocks and rejects others") {
  const DualPair dp = make_dual_pair(3, 4, 0.3);
  const EvalContext ctx = make_context(dp.fam, sample_point(dp.fam, 220));

  const Matrix u = iso_d1_d3(dp.fam, ctx).op;
  const Matrix w = iso_d2_d4_dual(dp, ctx).op;
  const PairSwapJ from_isos = build_generic_pairswap_J(ctx, u, w);
  const PairSwapResiduals res = pairswap_residuals(from_isos, ctx);
  CHECK(res.acs < 1e-10);
  CHECK(res.isometry < 1e-10);
  CHECK(res.swap < 1e-8);

  Rng rng(55);
  const Matrix u_rand =
      ctx.dist.basis[2] * rng.orthogonal(dp.fam.m1) * ctx.dist.basis[0].transpose();
  const Matrix w_rand =
      ctx.dist.basis[3] * rng.orthogonal(dp.fam.m2) * ctx.dist.basis[1].transpose();
  const PairSwapJ random_blocks = build_generic_pairswap_J(ctx, u_rand, w_rand);
  CHECK(pairswap_residuals(random_blocks, ctx).acs < 1e-12);

  const int n = dp.fam.ambient_dim();
  CHECK_THROWS_AS(build_generic_pairswap_J(ctx, u, Matrix::Identity(n, n)),
                  std::invalid_argument);
}

TEST_CASE("kahler form derivative: frame diagonal and same-block pairs vanish") {
  for (auto [m1, m2] :
       {std::pair{1, 2}, std::pair{1, 6}, std::pair{2, 5}, std::pair{3, 4}}) {
    const DualPair dp = make_dual_pair(m1, m2, 0.3);
    const EvalContext ctx = make_context(dp.fam, sample_point(dp.fam, 230 + m1));
    const NearlyKahlerResiduals res = nearly_kahler_residuals(dp, ctx);
    CHECK(res.g_iij_connection < 1e-4);
    CHECK(res.g_iij_direct < 1e-4);
    CHECK(res.method_agreement < 1e-4);
    CHECK(res.same_block_skew < 1e-8);
    // mixed-distribution pairs break total skewness by an order-one margin
    CHECK(res.cross_block_skew > 1e-1);
    CHECK(res.codazzi < 5e-5);
    CHECK(res.g_full_max > 1e-2);  // the form is not parallel
    CHECK(nearly_kahler_check(dp, ctx).all_passed());
  }
}

TEST_CASE("nijenhuis witness matches the closed form and survives mu rescaling") {
  const DualPair dp = make_dual_pair(3, 4, 0.3);
  const double scale = 2.0 / (std::sin(0.3) * std::cos(0.6));
  for (int i = 0; i < 3; ++i) {
    const EvalContext ctx = make_context(dp.fam, sample_point(dp.fam, 240 + i));
    const Report rep = nonintegrability_witness_check(dp, ctx);
    CHECK(rep.all_passed());
    CHECK(std::abs(witness_closed_form(dp.fam, ctx)) > 1e-3 * scale);
  }
  const Family off = make_family(build_clifford_system(2, 2), 0.3);
  CHECK_THROWS_AS(witness_closed_form(off, make_context(off, sample_point(off, 241))),
                  std::domain_error);
}

TEST_CASE("closed-form J varies continuously along tangent paths") {
  const DualPair dp = make_dual_pair(3, 4, 0.3);
  const PairSwapJ j = build_closed_form_J(dp);
  const SurfacePoint start = sample_point(dp.fam, 250);
  Rng rng(56);
  const Vector dir = rng.gaussian_vector(dp.fam.ambient_dim());
  const Report rep = j_continuity_check(dp.fam, j, start, dir, 40, 1e-3);
  CHECK(rep.all_passed());
}
