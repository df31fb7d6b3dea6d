#include "otfkm/isoparametric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "otfkm/errors.hpp"
#include "otfkm/rng.hpp"

namespace otfkm {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLevelTol = 1e-8;
constexpr double kFocalMargin = 1e-6;
}  // namespace

Family make_family(CliffordSystem system, double theta) {
  if (!(theta > 0.0) || !(theta < kPi / 4.0))
    throw std::domain_error("make_family: theta must lie in (0, pi/4)");
  const auto [m1, m2] = system.multiplicities();
  if (m2 < 1) throw std::domain_error("make_family: empty family");
  Family fam;
  fam.system = std::move(system);
  fam.theta = theta;
  fam.level = std::cos(4.0 * theta);
  for (int k = 0; k < 4; ++k)
    fam.lambda[k] = 1.0 / std::tan(theta + k * kPi / 4.0);
  fam.m1 = m1;
  fam.m2 = m2;
  return fam;
}

double cartan_munzner(const CliffordSystem& sys, const Vector& x) {
  return clifford_quartic(sys, x);
}

namespace {

// sin 2t and cos 2t of the level parameter of x inferred from the invariant
// sum <P_i x, x>^2 = sin^2 2t.
void level_trig(const CliffordSystem& sys, const Vector& x, double& sin2t,
                double& cos2t, Vector* coeff_out = nullptr) {
  const int count = static_cast<int>(sys.matrices.size());
  Vector coeff(count);
  for (int i = 0; i < count; ++i) coeff[i] = x.dot(sys.matrices[i] * x);
  const double s2 = coeff.squaredNorm();
  sin2t = std::sqrt(std::min(1.0, s2));
  cos2t = std::sqrt(std::max(0.0, 1.0 - s2));
  if (coeff_out) *coeff_out = coeff;
}

Vector xi_at_own_level(const CliffordSystem& sys, const Vector& x) {
  double sin2t, cos2t;
  Vector coeff;
  level_trig(sys, x, sin2t, cos2t, &coeff);
  if (sin2t < kFocalMargin || cos2t < kFocalMargin)
    throw std::domain_error("normal: point too close to a focal variety");
  Vector px = Vector::Zero(x.size());
  for (size_t i = 0; i < sys.matrices.size(); ++i)
    px += coeff[i] * (sys.matrices[i] * x);
  return (sin2t * x - px / sin2t) / cos2t;
}

void check_level(const Family& fam, const Vector& x) {
  const double f = cartan_munzner(fam.system, x);
  if (std::abs(f - fam.level) > kLevelTol)
    throw StalePointError("point off level set: |f(x) - cos 4theta| = " +
                          std::to_string(std::abs(f - fam.level)));
  if (std::abs(x.norm() - 1.0) > kLevelTol)
    throw StalePointError("point off unit sphere");
}

}  // namespace

Vector normal_xi(const Family& fam, const Vector& x) {
  check_level(fam, x);
  return xi_at_own_level(fam.system, x);
}

Matrix clifford_projection_P(const Family& fam, const Vector& x) {
  check_level(fam, x);
  const double sin2t = std::sin(2.0 * fam.theta);
  Matrix p = Matrix::Zero(x.size(), x.size());
  for (const Matrix& pi : fam.system.matrices)
    p += (x.dot(pi * x) / sin2t) * pi;
  return p;
}

SurfacePoint make_surface_point(const Family& fam, const Vector& x) {
  check_level(fam, x);
  SurfacePoint pt;
  pt.x = x;
  const double theta = fam.theta;
  const double sin2t = std::sin(2.0 * theta), cos2t = std::cos(2.0 * theta);

  const int count = static_cast<int>(fam.system.matrices.size());
  pt.coeff.resize(count);
  for (int i = 0; i < count; ++i)
    pt.coeff[i] = x.dot(fam.system.matrices[i] * x) / sin2t;

  pt.p_op = Matrix::Zero(x.size(), x.size());
  for (int i = 0; i < count; ++i) pt.p_op += pt.coeff[i] * fam.system.matrices[i];

  const Vector px = pt.p_op * x;
  pt.xi = (sin2t * x - px) / cos2t;

  // Rotation form phi_k = x cos t_k + xi sin t_k and the closed forms in
  // terms of P must agree; disagreement signals a broken invariant upstream.
  const Vector phi1_closed = (std::cos(theta) * x - std::sin(theta) * px) / cos2t;
  const Matrix id = Matrix::Identity(x.size(), x.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::array<Vector, 4> closed_phi, closed_xi;
  closed_phi[0] = phi1_closed;
  closed_xi[0] = -(pt.p_op * phi1_closed);
  closed_phi[1] = inv_sqrt2 * ((id - pt.p_op) * phi1_closed);
  closed_xi[1] = -inv_sqrt2 * ((id + pt.p_op) * phi1_closed);
  closed_phi[2] = -(pt.p_op * phi1_closed);
  closed_xi[2] = -phi1_closed;
  closed_phi[3] = -inv_sqrt2 * ((id + pt.p_op) * phi1_closed);
  closed_xi[3] = -inv_sqrt2 * ((id - pt.p_op) * phi1_closed);

  for (int k = 0; k < 4; ++k) {
    const double t = theta + k * kPi / 4.0;
    pt.phi[k] = std::cos(t) * x + std::sin(t) * pt.xi;
    pt.xi_k[k] = -std::sin(t) * x + std::cos(t) * pt.xi;
    const double r = std::max(max_abs(Vector(pt.phi[k] - closed_phi[k])),
                              max_abs(Vector(pt.xi_k[k] - closed_xi[k])));
    if (r > 1e-10)
      throw NumericalIntegrityError(
          "focal map representations disagree at k=" + std::to_string(k + 1) +
          ": residual " + std::to_string(r));
  }
  return pt;
}

namespace {

// One normal-geodesic correction step toward the target level.
Vector retract_to_level(const Family& fam, Vector y) {
  for (int pass = 0; pass < 3; ++pass) {
    y.normalize();
    const double f = std::clamp(cartan_munzner(fam.system, y), -1.0 + 1e-12,
                                1.0 - 1e-12);
    const double theta_y = 0.25 * std::acos(f);
    const double step = theta_y - fam.theta;
    if (std::abs(step) < 1e-14) break;
    const Vector n = xi_at_own_level(fam.system, y);
    y = std::cos(step) * y + std::sin(step) * n;
  }
  y.normalize();
  return y;
}

}  // namespace

SurfacePoint sample_point(const Family& fam, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Vector y = rng.unit_vector(fam.ambient_dim());
    const double f = cartan_munzner(fam.system, y);
    if (std::abs(f) > 1.0 - kFocalMargin) continue;  // too close to focal set
    return make_surface_point(fam, retract_to_level(fam, y));
  }
  throw std::runtime_error("sample_point: rejection budget exhausted");
}

SurfacePoint tangent_curve(const Family& fam, const SurfacePoint& base,
                           const Vector& v, double t) {
  if (std::abs(base.x.dot(v)) > 1e-10 || std::abs(base.xi.dot(v)) > 1e-10)
    throw std::invalid_argument("tangent_curve: direction not tangent to M");
  if (t == 0.0) return base;
  return make_surface_point(fam, retract_to_level(fam, base.x + t * v));
}

}  // namespace otfkm
