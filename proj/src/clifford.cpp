#include "otfkm/clifford.hpp"

#include <array>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "otfkm/rng.hpp"

namespace otfkm {

int delta(int m) {
  if (m < 1) throw std::domain_error("delta: m must be >= 1");
  static const int table[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  int scale = 1;
  while (m > 8) {
    m -= 8;
    scale *= 16;
  }
  return scale * table[m - 1];
}

int minimal_multiplicity(int m) {
  const int d = delta(m);
  return (m + 2 + d - 1) / d;
}

namespace {

using Quat = std::array<double, 4>;
using Oct = std::array<double, 8>;

Quat quat_mul(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quat quat_conj(const Quat& p) { return {p[0], -p[1], -p[2], -p[3]}; }

// Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
Oct oct_mul(const Oct& p, const Oct& q) {
  const Quat a = {p[0], p[1], p[2], p[3]}, b = {p[4], p[5], p[6], p[7]};
  const Quat c = {q[0], q[1], q[2], q[3]}, d = {q[4], q[5], q[6], q[7]};
  const Quat lo = [&] {
    Quat ac = quat_mul(a, c), db = quat_mul(quat_conj(d), b);
    return Quat{ac[0] - db[0], ac[1] - db[1], ac[2] - db[2], ac[3] - db[3]};
  }();
  const Quat hi = [&] {
    Quat da = quat_mul(d, a), bc = quat_mul(b, quat_conj(c));
    return Quat{da[0] + bc[0], da[1] + bc[1], da[2] + bc[2], da[3] + bc[3]};
  }();
  return {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]};
}

// Left multiplication by the imaginary unit e_a on the octonions; the
// restriction to indices 0..3 is quaternionic left multiplication.
Matrix octonion_left(int a, int dim) {
  Matrix out = Matrix::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    Oct ea{}, eb{};
    ea[a] = 1.0;
    eb[b] = 1.0;
    const Oct prod = oct_mul(ea, eb);
    for (int r = 0; r < dim; ++r) out(r, b) = prod[r];
  }
  return out;
}

// Irreducible anticommuting skew generators on R^{delta(count+1)}.
std::vector<Matrix> irreducible_generators(int count) {
  if (count == 0) return {};
  if (count == 1) {
    Matrix j(2, 2);
    j << 0, -1, 1, 0;
    return {j};
  }
  if (count <= 3) {
    std::vector<Matrix> gens;
    for (int a = 1; a <= count; ++a) gens.push_back(octonion_left(a, 4));
    return gens;
  }
  if (count <= 7) {
    std::vector<Matrix> gens;
    for (int a = 1; a <= count; ++a) gens.push_back(octonion_left(a, 8));
    return gens;
  }
  // Eight generators on R^16: the seven octonionic ones doubled plus the
  // doubling rotation itself.
  std::vector<Matrix> cl8;
  {
    const Matrix id8 = Matrix::Identity(8, 8);
    for (int a = 1; a <= 7; ++a) {
      const Matrix e = octonion_left(a, 8);
      Matrix g = Matrix::Zero(16, 16);
      g.block(0, 8, 8, 8) = e;
      g.block(8, 0, 8, 8) = e;
      cl8.push_back(g);
    }
    Matrix g = Matrix::Zero(16, 16);
    g.block(0, 8, 8, 8) = -id8;
    g.block(8, 0, 8, 8) = id8;
    cl8.push_back(g);
  }
  if (count == 8) return cl8;

  // count >= 9: tensor the (count-8)-generator module with the eight
  // generators above through their volume element omega = G_1...G_8,
  // which is symmetric, orthogonal, squares to +I and anticommutes with
  // each G_j.
  Matrix omega = Matrix::Identity(16, 16);
  for (const Matrix& g : cl8) omega = omega * g;
  const std::vector<Matrix> base = irreducible_generators(count - 8);
  const int d = static_cast<int>(base.front().rows());
  std::vector<Matrix> gens;
  gens.reserve(count);
  for (const Matrix& f : base) gens.push_back(kron(f, omega));
  const Matrix id = Matrix::Identity(d, d);
  for (const Matrix& g : cl8) gens.push_back(kron(id, g));
  return gens;
}

}  // namespace

SkewRepresentation build_skew_representation(int generator_count,
                                             int multiplicity) {
  if (generator_count < 0)
    throw std::domain_error("build_skew_representation: negative count");
  if (multiplicity < 1)
    throw std::domain_error("build_skew_representation: multiplicity < 1");
  SkewRepresentation rep;
  rep.count = generator_count;
  rep.dim = multiplicity * delta(generator_count + 1);
  const std::vector<Matrix> irr = irreducible_generators(generator_count);
  const Matrix blocks = Matrix::Identity(multiplicity, multiplicity);
  for (const Matrix& e : irr) rep.generators.push_back(kron(blocks, e));
  return rep;
}

namespace {

// P_0(u,v) = (u,-v), P_1(u,v) = (v,u), P_{1+i}(u,v) = (E_i v, -E_i u).
CliffordSystem double_representation(const SkewRepresentation& rep) {
  const int l = rep.dim;
  const Matrix id = Matrix::Identity(l, l);
  CliffordSystem sys;
  sys.m = rep.count + 1;
  sys.l = l;
  Matrix p0 = Matrix::Zero(2 * l, 2 * l);
  p0.block(0, 0, l, l) = id;
  p0.block(l, l, l, l) = -id;
  sys.matrices.push_back(p0);
  Matrix p1 = Matrix::Zero(2 * l, 2 * l);
  p1.block(0, l, l, l) = id;
  p1.block(l, 0, l, l) = id;
  sys.matrices.push_back(p1);
  for (const Matrix& e : rep.generators) {
    Matrix p = Matrix::Zero(2 * l, 2 * l);
    p.block(0, l, l, l) = e;
    p.block(l, 0, l, l) = -e;
    sys.matrices.push_back(p);
  }
  return sys;
}

}  // namespace

CliffordSystem build_clifford_system(int m, int multiplicity) {
  if (m < 1) throw std::domain_error("build_clifford_system: m must be >= 1");
  if (multiplicity < 1)
    throw std::domain_error("build_clifford_system: multiplicity < 1");
  const int l = multiplicity * delta(m);
  if (l - m - 1 < 1)
    throw std::domain_error(
        "build_clifford_system: empty family for m=" + std::to_string(m) +
        ", multiplicity=" + std::to_string(multiplicity) +
        "; minimal admissible multiplicity is " +
        std::to_string(minimal_multiplicity(m)));
  return double_representation(build_skew_representation(m - 1, multiplicity));
}

FullSquareSystem build_full_square_system(FullSquareFlavor flavor) {
  FullSquareSystem full;
  full.flavor = flavor;
  const int count = flavor == FullSquareFlavor::Five_on_8d ? 3 : 7;
  full.system = double_representation(build_skew_representation(count, 1));
  return full;
}

double clifford_quartic(const CliffordSystem& sys, const Vector& x) {
  const double n2 = x.squaredNorm();
  double sum = 0.0;
  for (const Matrix& p : sys.matrices) {
    const double c = x.dot(p * x);
    sum += c * c;
  }
  return n2 * n2 - 2.0 * sum;
}

double full_square_residual(const CliffordSystem& sys, int samples,
                            std::uint64_t seed) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, i));
    const Vector x = rng.unit_vector(sys.ambient_dim());
    double sum = 0.0;
    for (const Matrix& p : sys.matrices) {
      const double c = x.dot(p * x);
      sum += c * c;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

SystemResiduals system_residuals(const CliffordSystem& sys) {
  SystemResiduals res;
  const int n = sys.ambient_dim();
  const Matrix id = Matrix::Identity(n, n);
  const int count = static_cast<int>(sys.matrices.size());
  for (int i = 0; i < count; ++i) {
    const Matrix& pi = sys.matrices[i];
    res.symmetry = std::max(res.symmetry, max_abs(Matrix(pi - pi.transpose())));
    res.orthogonality =
        std::max(res.orthogonality, max_abs(Matrix(pi.transpose() * pi - id)));
    for (int j = i + 1; j < count; ++j) {
      const Matrix& pj = sys.matrices[j];
      res.anticommutation =
          std::max(res.anticommutation, max_abs(Matrix(pi * pj + pj * pi)));
    }
  }
  return res;
}

double SystemResiduals::worst() const {
  return std::max(symmetry, std::max(orthogonality, anticommutation));
}

Report verify_clifford_system(const CliffordSystem& sys, double tol) {
  const SystemResiduals res = system_residuals(sys);
  Report report;
  report.add("clifford.symmetry", "P_i = P_i^T", res.symmetry, tol);
  report.add("clifford.orthogonality", "P_i^T P_i = I", res.orthogonality,
             tol);
  report.add("clifford.anticommutation", "P_i P_j + P_j P_i = 2 delta_ij I",
             res.anticommutation, tol);
  return report;
}

std::pair<CliffordSystem, CliffordSystem> split_dual_subsystems(
    const FullSquareSystem& full, int m) {
  const int count = static_cast<int>(full.system.matrices.size());
  const int l = full.system.l;
  // Both halves must themselves define nonempty families.
  const int m_dual = count - m - 2;
  if (m < 1 || m_dual < 1 || l - m - 1 < 1 || l - m_dual - 1 < 1)
    throw std::domain_error("split_dual_subsystems: no admissible split at m=" +
                            std::to_string(m));
  CliffordSystem first, second;
  first.m = m;
  first.l = l;
  second.m = m_dual;
  second.l = l;
  for (int i = 0; i <= m; ++i) first.matrices.push_back(full.system.matrices[i]);
  for (int i = m + 1; i < count; ++i)
    second.matrices.push_back(full.system.matrices[i]);
  return {first, second};
}

void dump_clifford(const CliffordSystem& sys, std::ostream& os) {
  os << "clifford m=" << sys.m << " l=" << sys.l << "\n";
  char buf[64];
  const int n = sys.ambient_dim();
  for (const Matrix& p : sys.matrices) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        std::snprintf(buf, sizeof(buf), "%.17g", p(r, c));
        os << buf << (c + 1 == n ? "" : " ");
      }
      os << "\n";
    }
  }
}

}  // namespace otfkm
