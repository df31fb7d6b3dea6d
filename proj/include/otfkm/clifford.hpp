#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "otfkm/linalg.hpp"
#include "otfkm/report.hpp"

namespace otfkm {

// Dimension of the irreducible module carrying m-1 anticommuting skew
// involutions: 1,2,4,4,8,8,8,8 for m = 1..8, then delta(m+8) = 16 delta(m).
int delta(int m);

// Smallest multiplicity k with k * delta(m) >= m + 2, i.e. the smallest k
// for which the doubled construction leaves a nonempty family.
int minimal_multiplicity(int m);

// Anticommuting skew-orthogonal generators E_1..E_count on R^dim,
// E_i E_j + E_j E_i = -2 delta_ij I, with dim = multiplicity * delta(count+1).
struct SkewRepresentation {
  int count = 0;
  int dim = 0;
  std::vector<Matrix> generators;
};

SkewRepresentation build_skew_representation(int generator_count,
                                             int multiplicity);

// Symmetric Clifford system P_0..P_m on R^{2l}:
// P_i symmetric orthogonal, P_i P_j + P_j P_i = 2 delta_ij I.
struct CliffordSystem {
  int m = 0;
  int l = 0;  // half of the ambient dimension
  std::vector<Matrix> matrices;

  int ambient_dim() const { return 2 * l; }
  // (m1, m2) = (m, l - m - 1)
  std::pair<int, int> multiplicities() const { return {m, l - m - 1}; }
};

// Doubled construction on R^{2l}, l = multiplicity * delta(m):
//   P_0(u,v) = (u,-v),  P_1(u,v) = (v,u),  P_{1+i}(u,v) = (E_i v, -E_i u).
// Requires l - m - 1 >= 1; otherwise reports the minimal multiplicity.
CliffordSystem build_clifford_system(int m, int multiplicity);

// Systems saturating sum_i <P_i x, x>^2 = |x|^4 on the unit sphere.
enum class FullSquareFlavor {
  Five_on_8d,   // P_0..P_4 on R^8  (quaternionic generators)
  Nine_on_16d,  // P_0..P_8 on R^16 (octonionic generators)
};

struct FullSquareSystem {
  FullSquareFlavor flavor;
  CliffordSystem system;  // m = 4 or m = 8, multiplicity 1
};

FullSquareSystem build_full_square_system(FullSquareFlavor flavor);

// F(x) = |x|^4 - 2 sum_i <P_i x, x>^2.
double clifford_quartic(const CliffordSystem& sys, const Vector& x);

// max_x |sum_i <P_i x, x>^2 - |x|^4| over `samples` random unit vectors.
double full_square_residual(const CliffordSystem& sys, int samples,
                            std::uint64_t seed);

struct SystemResiduals {
  double symmetry = 0.0;
  double orthogonality = 0.0;
  double anticommutation = 0.0;
  double worst() const;
};

SystemResiduals system_residuals(const CliffordSystem& sys);

// Appends symmetry / orthogonality / anticommutation checks at `tol`.
Report verify_clifford_system(const CliffordSystem& sys, double tol);

// Splits {P_0..P_m, P_{m+1}..P_last} of a full-square system into the
// congruent dual pair of Clifford systems sharing the ambient space.
std::pair<CliffordSystem, CliffordSystem> split_dual_subsystems(
    const FullSquareSystem& full, int m);

// Header "clifford m=<m> l=<l>", then each P_i as 2l rows of 2l
// space-separated decimals with 17 significant digits.
void dump_clifford(const CliffordSystem& sys, std::ostream& os);

}  // namespace otfkm
