#pragma once

#include "otfkm/diffgeo.hpp"

namespace otfkm {

// Ambient operator realizing a fiberwise linear map D_source -> D_target.
struct FiberIsomorphism {
  int source = 0;
  int target = 0;
  Matrix op;
  double gram = 0.0;   // isometry defect on the source fiber
  double image = 0.0;  // residual of op * D_source inside D_target
};

// D_1 -> D_3 induced by R_0 = P.
FiberIsomorphism iso_d1_d3(const Family& fam, const EvalContext& ctx);

// max_a ||R_0 R_a phi_1 - R_a phi_3||, the focal-map intertwining behind
// the D_1 / D_3 identification.
double r0_focal_intertwine_residual(const Family& fam, const EvalContext& ctx);

// A full-square system split as {P_0..P_m} + {P_{m+1}..P_last}; the tail
// subsystem cuts out the same hypersurface at theta' = pi/4 - theta with
// the opposite normal.
struct DualPair {
  FullSquareSystem full;
  int m_head = 0;
  Family fam;       // head system at theta
  Family dual_fam;  // tail system at pi/4 - theta
};

// Supported multiplicity pairs: (1,2) on R^8; (1,6), (2,5), (3,4) on R^16.
DualPair make_dual_pair(int m1, int m2, double theta);

// Q = (1/cos 2theta) sum_{i=m+1}^{last} <P_i x, x> P_i, an involution on
// the level set; arbitrary index subranges are exposed for comparison.
Matrix dual_projection_Q(const DualPair& dp, const Vector& x);
Matrix dual_projection_Q_range(const DualPair& dp, const Vector& x, int first,
                               int last);

// D_2 -> D_4 induced by Q.
FiberIsomorphism iso_d2_d4_dual(const DualPair& dp, const EvalContext& ctx);

struct DualCheckResiduals {
  double q_involution = 0.0;         // ||Q^2 - I||_max, index range m+1..last
  double q_narrow_involution = 0.0;  // same with the last matrix dropped
  double dual_level = 0.0;           // |f'(x) - cos 4theta'|
  double xi_pairing = 0.0;           // |<xi, xi'> + 1|
  double spectrum_relation = 0.0;    // lambda_k = -lambda'_{5-k}, measured
  double d2_equals_dual_d3 = 0.0;    // subspace distances
  double d4_equals_dual_d1 = 0.0;
  double q_gram = 0.0;
  double q_image = 0.0;
  double q_roundtrip_on_d2 = 0.0;    // ||Q(Qv) - v|| over the D_2 basis
};

DualCheckResiduals dual_checks(const DualPair& dp, const EvalContext& ctx);

// +1 / -1 eigenspaces of the involution P, each of dimension l.
struct EigenSplit {
  Matrix basis_plus;
  Matrix basis_minus;
};

EigenSplit eigen_split(const Family& fam, const EvalContext& ctx);

struct EigenSplitResiduals {
  int dim_plus = 0;
  int dim_minus = 0;
  // E_+(P) = ((I+P)/sqrt2) phi_1 + ((I+P)/sqrt2) D_1 + D_2 and the mirrored
  // E_-(P) decomposition with D_4: orthonormality plus span agreement.
  double decomposition_plus = 0.0;
  double decomposition_minus = 0.0;
  double xi2_identity = 0.0;       // ((I+P)/sqrt2) phi_1 = -xi_2
  double d2_in_plus = 0.0;         // D_2 inside E_+(P)
  double d2_orthogonality = 0.0;   // D_2 against the other two E_+ summands
};

EigenSplitResiduals eigen_split_checks(const Family& fam,
                                       const EvalContext& ctx);

// Nowhere-vanishing unit tangent field of the Clifford sphere at P, odd m
// only: R_1 = sum_i V_i(a) P_i with V(a) rotating coefficient pairs,
// V(a_0, a_1, ...) = (a_1, -a_0, a_3, -a_2, ...).  Anticommutes with P.
Matrix global_section_R1(const Family& fam, const SurfacePoint& pt);

// sigma = rho_-^{-1} R_1 rho_+ on span{phi_1} + D_1 + D_2, where rho_+/-
// carry that sum onto E_+(P) / E_-(P) by (I±P)/sqrt2 on the first two
// summands and the identity on D_2 / D_4.  sigma swaps phi_1 and
// w = R_1 phi_1; sigma_tilde fixes w instead and maps D_1 + D_2 onto
// D_1 + D_4.
struct SigmaMap {
  Matrix r1;
  Vector w;
  Matrix sigma;
  Matrix sigma_tilde;
};

SigmaMap sigma_map(const Family& fam, const EvalContext& ctx, const Matrix& r1);

struct SigmaResiduals {
  double section_unit = 0.0;         // | |V(a)| - 1 |
  double section_orthogonal = 0.0;   // |<V(a), a>|
  double section_anticommute = 0.0;  // ||R_1 P + P R_1||_max
  double swaps_phi1_w = 0.0;         // sigma phi_1 = w and sigma w = phi_1
  double fixes_w = 0.0;              // sigma_tilde w = w
  double gram = 0.0;                 // sigma_tilde isometry on D_1 + D_2
  double image = 0.0;                // sigma_tilde image inside D_1 + D_4
};

SigmaResiduals sigma_checks(const Family& fam, const EvalContext& ctx);

// m = 1 only: largest column deviation of sigma from the constant P_0 P_1
// on D_2.
double sigma_d2_constant_residual(const Family& fam, const EvalContext& ctx);

// Walks `steps` tangent steps of size dt from `start` and watches the
// sigma_tilde operator: consecutive difference bounded by a Lipschitz
// budget, and no step larger than ten times the median step.
Report sigma_continuity_check(const Family& fam, const SurfacePoint& start,
                              const Vector& direction, int steps, double dt);

}  // namespace otfkm
