#pragma once

#include "otfkm/hermitian.hpp"
#include "otfkm/rng.hpp"

namespace otfkm {

// *Ric(X, Y) = <X, Y> - <J A_xi J A_xi X, Y> on a hypersurface of the unit
// sphere, assembled over the columns of a tangent basis.  Generally neither
// symmetric nor skew.
struct StarRicciForm {
  Matrix form;
  double scalar = 0.0;  // trace, the *-scalar curvature
};

double star_ricci_closed_form(const Family& fam, const EvalContext& ctx,
                              const Matrix& j_op, const Vector& x,
                              const Vector& y);

StarRicciForm star_ricci_form(const Family& fam, const EvalContext& ctx,
                              const Matrix& j_op, const Matrix& basis);

// Orthonormal tangent basis {b_1..b_n, J b_1..J b_n}, built greedily: unit
// pivot, its J image, project both out, repeat.  Throws std::invalid_argument
// when j_op is not an orthogonal complex structure on the tangent space.
Matrix j_adapted_basis(const EvalContext& ctx, const Matrix& j_op);

// sum_i R(X, JY, a_i, a_{i+n}) over a J-adapted basis, with the curvature of
// a unit-sphere hypersurface via the Gauss equation:
//   R(X,Y,Z,W) = <X,Z><Y,W> - <X,W><Y,Z> + <AX,Z><AY,W> - <AX,W><AY,Z>.
// Brute-force oracle for the closed form above.
StarRicciForm star_ricci_gauss_oracle(const Family& fam,
                                      const EvalContext& ctx,
                                      const Matrix& j_op, const Matrix& basis);

// *Ric is symmetric iff J A_xi J preserves every principal eigenspace; the
// two indicators must stand or fall together.  Below pass_tol / above
// fail_tol on both sides is a pass, a split verdict is a fail, anything in
// the dead band is reported inconclusive.
Report symmetry_criterion(const Family& fam, const EvalContext& ctx,
                          const Matrix& j_op, double pass_tol = 1e-8,
                          double fail_tol = 1e-6);

struct StarEinsteinFit {
  double rho = 0.0;       // trace / dim, the least-squares multiple of g
  double residual = 0.0;  // ||*Ric - rho g||_max
};

StarEinsteinFit weakly_star_einstein_fit(const StarRicciForm& f);

// Fits *Ric = rho g; when the fit holds, c = 1 - rho and either some
// principal curvature vanishes (c = 0) or J carries E_lambda onto
// E_{-c/lambda} with matching multiplicities.
Report weakly_star_einstein_check(const Family& fam, const EvalContext& ctx,
                                  const Matrix& j_op);

// K = det A_xi against (rho - 1)^{l-1} and against the eigenvalue product;
// requires the weakly *-Einstein fit to hold.
Report gauss_kronecker_check(const Family& fam, const EvalContext& ctx,
                             const Matrix& j_op);

// Orthogonal complex structure from a random orthonormal tangent basis;
// generically ties no two eigenspaces together, so *Ric is asymmetric.
Matrix random_complex_structure(const EvalContext& ctx, Rng& rng);

// Rotates inside one even-dimensional eigenspace pair and swaps the other
// two blocks with the matching Clifford involution, so J A_xi J preserves
// every eigenspace while lambda^2 terms keep *Ric away from zero: the
// symmetric-but-not-Einstein control.
Matrix block_adapted_complex_structure(const DualPair& dp,
                                       const EvalContext& ctx);

}  // namespace otfkm
