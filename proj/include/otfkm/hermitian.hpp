#pragma once

#include "otfkm/bundleiso.hpp"

namespace otfkm {

// Orthogonal almost complex structure swapping D_1 <-> D_3 and D_2 <-> D_4.
// ClosedForm: J = -R_0 on D_1, -Q_0 on D_2, +R_0 on D_3, +Q_0 on D_4,
// smooth in the point.  GenericBlocks: arbitrary fiber isometries frozen at
// one point; the evaluator returns that constant operator, so it must not
// be differentiated.
struct PairSwapJ {
  enum class Mode { ClosedForm, GenericBlocks };
  Mode mode = Mode::ClosedForm;
  OperatorField evaluate;
};

// mu scales the D_1 -> D_3 leg (J e_a = mu e_abar, J e_abar = -(1/mu) e_a);
// still J^2 = -I, but only mu = 1 is compatible with the metric.
PairSwapJ build_closed_form_J(const DualPair& dp, double mu = 1.0);

// u must map D_1 onto D_3 isometrically and w must map D_2 onto D_4;
// otherwise throws std::invalid_argument.
PairSwapJ build_generic_pairswap_J(const EvalContext& ctx, const Matrix& u,
                                   const Matrix& w);

struct PairSwapResiduals {
  double acs = 0.0;       // ||J^2 + I|| on the tangent space
  double isometry = 0.0;  // Gram defect of J on a tangent basis
  double swap = 0.0;      // worst J(D_k) vs D_{k+2 mod 4} image residual
};

PairSwapResiduals pairswap_residuals(const PairSwapJ& j, const EvalContext& ctx);

// Phi(X, Y) = <JX, Y> in the given orthonormal tangent basis.
Matrix fundamental_form(const Matrix& j_op, const Matrix& basis);

struct FundamentalFormResiduals {
  double skew = 0.0;         // ||Phi + Phi^T||
  double j_invariance = 0.0; // Phi(JX, JY) = Phi(X, Y)
};

FundamentalFormResiduals fundamental_form_residuals(const Matrix& j_op,
                                                    const Matrix& basis);

// G_ijk = (nabla_{e_i} Phi)(e_j, e_k) in the J-paired Clifford frame
// (e_abar = J e_a), computed two ways: (a) from frame-field connection
// coefficients, (b) by differentiating J directly along projected-constant
// extensions.  G_iij vanishes for every frame pair, and G_ijk + G_jik = 0
// whenever e_i and e_j lie in the same principal distribution; for mixed
// distributions the symmetric part is order one and stable in h, so the
// two skew residuals are kept separate.
struct NearlyKahlerResiduals {
  double g_iij_connection = 0.0;
  double g_iij_direct = 0.0;
  double method_agreement = 0.0;   // max |G^{(a)}_iij - G^{(b)}_iij|
  double same_block_skew = 0.0;    // max |G_ijk + G_jik|, type_i == type_j
  double cross_block_skew = 0.0;   // max |G_ijk + G_jik|, type_i != type_j
  double codazzi = 0.0;            // FD power calibration on the same frame
  double g_full_max = 0.0;         // max |G_ijk|; nonzero (not Kaehler)
};

NearlyKahlerResiduals nearly_kahler_residuals(const DualPair& dp,
                                              const EvalContext& ctx,
                                              double h = 1e-4);

// Report form; throws NumericalIntegrityError when the two methods diverge
// beyond 1e-4.
Report nearly_kahler_check(const DualPair& dp, const EvalContext& ctx,
                           double h = 1e-4);

// -2/(sin theta cos 2theta) <R_0 R_1 R_2 R_3 x, x>, the predicted value of
// <N(e_1, e_2), e_3> for the pair-swap J on an m = 3 family.
double witness_closed_form(const Family& fam, const EvalContext& ctx);

// Measures <N(e_1,e_2), e_3> with diffgeo.nijenhuis for the (3,4) closed-form
// J and compares to the closed form; also checks mu-independence over
// mu in {1/2, 1, 2} and the range bound |<R_0R_1R_2R_3 x, x>| <= cos 2theta
// (the word maps E_+(R_0) to E_-(R_0), so the form is capped by 2|x_+||x_-|).
Report nonintegrability_witness_check(const DualPair& dp,
                                      const EvalContext& ctx, double mu = 1.0,
                                      double h = 1e-4);

// Walks tangent steps and watches the closed-form J operator: consecutive
// difference bounded by a Lipschitz budget and no step larger than ten
// times the median step.
Report j_continuity_check(const Family& fam, const PairSwapJ& j,
                          const SurfacePoint& start, const Vector& direction,
                          int steps, double dt);

}  // namespace otfkm
