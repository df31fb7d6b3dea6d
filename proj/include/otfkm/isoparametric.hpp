#pragma once

#include <array>
#include <cstdint>

#include "otfkm/clifford.hpp"
#include "otfkm/linalg.hpp"

namespace otfkm {

// The level set M = f^{-1}(cos 4 theta) of f(x) = |x|^4 - 2 sum <P_i x,x>^2
// restricted to the unit sphere S^{2l-1}, theta in (0, pi/4).
struct Family {
  CliffordSystem system;
  double theta = 0.0;
  double level = 0.0;  // cos 4 theta
  std::array<double, 4> lambda{};  // cot(theta + (k-1) pi/4), k = 1..4
  int m1 = 0, m2 = 0;

  int ambient_dim() const { return system.ambient_dim(); }
  int surface_dim() const { return system.ambient_dim() - 2; }
};

Family make_family(CliffordSystem system, double theta);

double cartan_munzner(const CliffordSystem& sys, const Vector& x);

// A point of M together with cached derived data.
struct SurfacePoint {
  Vector x;             // unit, on the level set
  Vector xi;            // unit normal within the sphere
  Matrix p_op;          // P = (1/sin 2theta) sum <P_i x,x> P_i
  Vector coeff;         // unit coefficient vector <P_i x,x>/sin 2theta
  std::array<Vector, 4> phi;    // focal points, t_k = theta + (k-1) pi/4
  std::array<Vector, 4> xi_k;   // normals transported to the focal points
};

// Validates the level condition (tolerance 1e-8 on |f(x) - cos 4theta|)
// and computes the cached fields, cross-checking the rotation form of the
// focal maps against their closed forms.
SurfacePoint make_surface_point(const Family& fam, const Vector& x);

// Unit normal of the level set through x computed from x's own level; for
// x on M this is the family normal.
Vector normal_xi(const Family& fam, const Vector& x);

Matrix clifford_projection_P(const Family& fam, const Vector& x);

// Uniform-ish sample: random unit vector moved to the level set along the
// normal geodesic, with rejection near the focal varieties.  Bitwise
// deterministic in (family, seed).
SurfacePoint sample_point(const Family& fam, std::uint64_t seed);

// gamma(t): renormalized step x + t v retracted back onto the level set along
// the normal geodesic.  gamma(0) = x, gamma'(0) = v for tangent v.
SurfacePoint tangent_curve(const Family& fam, const SurfacePoint& base,
                           const Vector& v, double t);

}  // namespace otfkm
