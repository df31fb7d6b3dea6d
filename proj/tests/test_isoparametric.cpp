#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "otfkm/errors.hpp"
#include "otfkm/isoparametric.hpp"
#include "otfkm/rng.hpp"

using namespace otfkm;

namespace {
constexpr double kPi = 3.14159265358979323846;

Family family_32(double theta = 0.3) {
  return make_family(build_clifford_system(3, 2), theta);
}
}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(make_family(build_clifford_system(3, 2), 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(make_family(build_clifford_system(3, 2), kPi / 4.0),
                  std::domain_error);
  const Family fam = family_32(kPi / 8.0);
  CHECK(fam.m1 == 3);
  CHECK(fam.m2 == 4);
  CHECK(fam.surface_dim() == 14);
  // cot at theta + (k-1) pi/4
  const double r2 = std::sqrt(2.0);
  CHECK(fam.lambda[0] == doctest::Approx(1.0 + r2).epsilon(1e-12));
  CHECK(fam.lambda[1] == doctest::Approx(r2 - 1.0).epsilon(1e-12));
  CHECK(fam.lambda[2] == doctest::Approx(-(r2 - 1.0)).epsilon(1e-12));
  CHECK(fam.lambda[3] == doctest::Approx(-(1.0 + r2)).epsilon(1e-12));
  CHECK(std::abs(fam.lambda[0] * fam.lambda[2] + 1.0) < 1e-10);
  CHECK(std::abs(fam.lambda[1] * fam.lambda[3] + 1.0) < 1e-10);
}

TEST_CASE("sampling lands on the level set") {
  const Family fam = family_32(kPi / 8.0);  // level cos(pi/2) = 0
  for (int i = 0; i < 20; ++i) {
    const SurfacePoint pt = sample_point(fam, derive_seed(101, i));
    CHECK(std::abs(cartan_munzner(fam.system, pt.x)) < 1e-10);
    CHECK(std::abs(pt.x.norm() - 1.0) < 1e-12);
  }
  const Family fam2 = family_32(0.3);
  for (int i = 0; i < 50; ++i) {
    const SurfacePoint pt = sample_point(fam2, derive_seed(5, i));
    CHECK(std::abs(cartan_munzner(fam2.system, pt.x) - fam2.level) < 1e-10);
  }
}

TEST_CASE("sampling is bitwise deterministic") {
  const Family fam = family_32();
  const SurfacePoint a = sample_point(fam, 999);
  const SurfacePoint b = sample_point(fam, 999);
  CHECK(max_abs(Vector(a.x - b.x)) == 0.0);
  const SurfacePoint c = sample_point(fam, 1000);
  CHECK(max_abs(Vector(a.x - c.x)) > 0.0);
}

TEST_CASE("normal field") {
  const Family fam = family_32();
  const double sin2t = std::sin(2.0 * fam.theta);
  for (int i = 0; i < 10; ++i) {
    const SurfacePoint pt = sample_point(fam, derive_seed(21, i));
    const Vector xi = normal_xi(fam, pt.x);
    CHECK(std::abs(xi.norm() - 1.0) < 1e-10);
    CHECK(std::abs(xi.dot(pt.x)) < 1e-10);
    CHECK(max_abs(Vector(xi - pt.xi)) < 1e-12);
    // sum <P_i x, x>^2 = sin^2 2theta on the level set
    double s = 0.0;
    for (const Matrix& p : fam.system.matrices) {
      const double c = pt.x.dot(p * pt.x);
      s += c * c;
    }
    CHECK(std::abs(s - sin2t * sin2t) < 1e-10);
  }
  // off-level point is rejected
  Vector bad = Vector::Zero(fam.ambient_dim());
  bad[0] = 1.0;
  CHECK_THROWS_AS(normal_xi(fam, bad), StalePointError);
}

TEST_CASE("clifford projection operator") {
  const Family fam = family_32();
  const Matrix id = Matrix::Identity(fam.ambient_dim(), fam.ambient_dim());
  const SurfacePoint pt = sample_point(fam, 31);
  const Matrix p = clifford_projection_P(fam, pt.x);
  CHECK(max_abs(Matrix(p * p - id)) < 1e-12);
  CHECK(max_abs(Matrix(p - p.transpose())) < 1e-14);
  CHECK(std::abs(pt.coeff.norm() - 1.0) < 1e-10);
  // xi = (sin 2t x - P x)/cos 2t
  const double sin2t = std::sin(2.0 * fam.theta);
  const double cos2t = std::cos(2.0 * fam.theta);
  const Vector xi_ref = (sin2t * pt.x - p * pt.x) / cos2t;
  CHECK(max_abs(Vector(xi_ref - pt.xi)) < 1e-12);
  // eigenvalues exactly +-1 with multiplicity l
  Eigen::SelfAdjointEigenSolver<Matrix> es(p, Eigen::EigenvaluesOnly);
  for (int i = 0; i < fam.system.l; ++i) {
    CHECK(es.eigenvalues()[i] == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(es.eigenvalues()[fam.system.l + i] ==
          doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("focal maps") {
  const Family fam = family_32();
  const auto full = build_full_square_system(FullSquareFlavor::Nine_on_16d);
  const auto [sub, dual] = split_dual_subsystems(full, 3);
  const Family fam_pair = make_family(sub, 0.3);

  for (const Family& f : {fam, fam_pair}) {
    const SurfacePoint pt = sample_point(f, 77);
    // phi_1 lands on F = 1, phi_2 on F = -1
    CHECK(std::abs(cartan_munzner(f.system, pt.phi[0]) - 1.0) < 1e-10);
    CHECK(std::abs(cartan_munzner(f.system, pt.phi[1]) + 1.0) < 1e-10);
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(pt.phi[k].norm() - 1.0) < 1e-12);
      CHECK(std::abs(pt.xi_k[k].norm() - 1.0) < 1e-12);
      CHECK(std::abs(pt.phi[k].dot(pt.xi_k[k])) < 1e-12);
    }
    CHECK(max_abs(Vector(pt.xi_k[2] + pt.phi[0])) < 1e-12);  // xi_3 = -phi_1
    CHECK(max_abs(Vector(pt.phi[2] + pt.p_op * pt.phi[0])) < 1e-12);
  }
}

TEST_CASE("normal frame at the first focal point") {
  const Family fam = family_32();
  const SurfacePoint pt = sample_point(fam, 13);
  const Vector p1 = pt.phi[0];
  // {P_i phi_1} is orthonormal
  const int count = static_cast<int>(fam.system.matrices.size());
  for (int i = 0; i < count; ++i) {
    const Vector vi = fam.system.matrices[i] * p1;
    CHECK(std::abs(vi.norm() - 1.0) < 1e-12);
    CHECK(std::abs(vi.dot(p1)) < 1e-10);
    for (int j = i + 1; j < count; ++j)
      CHECK(std::abs(vi.dot(fam.system.matrices[j] * p1)) < 1e-12);
  }
}

TEST_CASE("tangent curve") {
  const Family fam = family_32();
  const SurfacePoint pt = sample_point(fam, 55);
  Rng rng(17);
  Vector v = rng.gaussian_vector(fam.ambient_dim());
  v -= pt.x.dot(v) * pt.x;
  v -= pt.xi.dot(v) * pt.xi;
  v.normalize();

  SUBCASE("zero step returns the point") {
    const SurfacePoint same = tangent_curve(fam, pt, v, 0.0);
    CHECK(max_abs(Vector(same.x - pt.x)) == 0.0);
  }

  SUBCASE("stays on the level set") {
    for (double t : {1e-4, -1e-3, 1e-2, -1e-2}) {
      const SurfacePoint moved = tangent_curve(fam, pt, v, t);
      CHECK(std::abs(cartan_munzner(fam.system, moved.x) - fam.level) < 1e-10);
    }
  }

  SUBCASE("central difference recovers the velocity") {
    const double h = 1e-4;
    const Vector diff =
        (tangent_curve(fam, pt, v, h).x - tangent_curve(fam, pt, v, -h).x) /
        (2.0 * h);
    CHECK(max_abs(Vector(diff - v)) < 1e-7);
  }

  SUBCASE("quadratic convergence of the velocity error") {
    auto vel_err = [&](double h) {
      const Vector diff =
          (tangent_curve(fam, pt, v, h).x - tangent_curve(fam, pt, v, -h).x) /
          (2.0 * h);
      return (diff - v).norm();
    };
    const double e1 = vel_err(1e-2), e2 = vel_err(5e-3);
    const double ratio = e1 / e2;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }

  SUBCASE("non-tangent directions are rejected") {
    CHECK_THROWS_AS(tangent_curve(fam, pt, pt.x, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(tangent_curve(fam, pt, pt.xi, 1e-3),
                    std::invalid_argument);
  }
}

TEST_CASE("works at ambient dimension 32") {
  const Family fam = make_family(build_clifford_system(7, 2), 0.3);
  const SurfacePoint pt = sample_point(fam, 3);
  CHECK(std::abs(cartan_munzner(fam.system, pt.x) - fam.level) < 1e-10);
  CHECK(std::abs(pt.xi.norm() - 1.0) < 1e-10);
}
