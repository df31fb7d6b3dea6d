#include "otfkm/suites.hpp"

#include "otfkm/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace otfkm {

namespace {

// Seed streams; fixed so that `all` reproduces the individual suites.
constexpr int kStreamClifford = 0;
constexpr int kStreamGeometry = 1;
constexpr int kStreamIsomorphisms = 2;
constexpr int kStreamNearlyKahler = 3;
constexpr int kStreamStarRicci = 4;
constexpr int kStreamMaurerCartan = 9;
constexpr int kStreamDualSamples = 10;
constexpr int kStreamRandomJ = 11;
constexpr int kStreamPathDirection = 12;

CheckStatus worse(CheckStatus a, CheckStatus b) {
  auto rank = [](CheckStatus s) {
    switch (s) {
      case CheckStatus::Pass:
        return 0;
      case CheckStatus::Inconclusive:
        return 1;
      case CheckStatus::Fail:
        return 2;
    }
    return 2;
  };
  return rank(a) >= rank(b) ? a : b;
}

// Per-sample results folded name by name: residual maxima, point counts,
// worst status.  Reduction happens in sample order, so the outcome does not
// depend on the worker count.
struct SampleStats {
  std::vector<CheckRecord> records;
  std::map<std::string, std::size_t> index;
  std::map<std::string, double> sums;
  std::map<std::string, double> minima;
  std::map<std::string, double> maxima;

  void add(CheckRecord rec) {
    auto it = index.find(rec.name);
    if (it == index.end()) {
      index.emplace(rec.name, records.size());
      records.push_back(std::move(rec));
      return;
    }
    CheckRecord& dst = records[it->second];
    if (rec.residual > dst.residual) {
      dst.residual = rec.residual;
      dst.witness = rec.witness;
    }
    dst.points += rec.points;
    dst.status = worse(dst.status, rec.status);
  }

  void add(const std::string& name, const std::string& claim, double residual,
           double tolerance, long points = 1) {
    CheckRecord rec;
    rec.name = name;
    rec.claim = claim;
    rec.residual = residual;
    rec.tolerance = tolerance;
    rec.points = points;
    rec.status =
        residual <= tolerance ? CheckStatus::Pass : CheckStatus::Fail;
    add(std::move(rec));
  }

  // Folds a library check report in; per-sample configs are dropped, counts
  // are bumped so the aggregate records how many samples were seen.
  void absorb(const Report& sub) {
    for (CheckRecord rec : sub.checks) {
      rec.points = std::max<long>(rec.points, 1);
      add(std::move(rec));
    }
  }

  void summed(const std::string& key, double v) { sums[key] += v; }

  void noted_min(const std::string& key, double v) {
    auto [it, fresh] = minima.emplace(key, v);
    if (!fresh) it->second = std::min(it->second, v);
  }

  void noted_max(const std::string& key, double v) {
    auto [it, fresh] = maxima.emplace(key, v);
    if (!fresh) it->second = std::max(it->second, v);
  }

  void merge(const SampleStats& other) {
    for (const auto& rec : other.records) add(rec);
    for (const auto& [key, v] : other.sums) sums[key] += v;
    for (const auto& [key, v] : other.minima) noted_min(key, v);
    for (const auto& [key, v] : other.maxima) noted_max(key, v);
  }
};

template <typename Fn>
SampleStats pooled(int samples, int workers, Fn&& fn) {
  std::vector<SampleStats> slots(static_cast<std::size_t>(samples));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(samples));
  std::atomic<int> next{0};
  auto drain = [&] {
    for (;;) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= samples) break;
      try {
        slots[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int pool = std::min(std::max(workers, 1), samples);
  if (pool <= 1) {
    drain();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) threads.emplace_back(drain);
    for (auto& th : threads) th.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  SampleStats out;
  for (const auto& s : slots) out.merge(s);
  return out;
}

void commit(const SampleStats& st, const RunConfig& cfg, Report& rep) {
  for (const auto& [key, v] : st.minima) rep.set_config(key, format_double(v));
  for (const auto& [key, v] : st.maxima) rep.set_config(key, format_double(v));
  for (CheckRecord rec : st.records) {
    auto it = cfg.tolerances.find(rec.name);
    if (it != cfg.tolerances.end()) {
      rec.tolerance = it->second;
      rec.status = rec.residual <= rec.tolerance ? CheckStatus::Pass
                                                 : CheckStatus::Fail;
    }
    rep.add(std::move(rec));
  }
}

Vector tangent_direction(const SurfacePoint& pt, Rng& rng) {
  Vector v = rng.gaussian_vector(static_cast<int>(pt.x.size()));
  v -= pt.x.dot(v) * pt.x;
  v -= pt.xi.dot(v) * pt.xi;
  return v.normalized();
}

void run_clifford(const RunConfig& cfg, Report& rep) {
  const CliffordSystem sys = build_clifford_system(cfg.m, cfg.k);
  rep.set_config("clifford.l", std::to_string(sys.l));
  rep.set_config("clifford.m2",
                 std::to_string(sys.multiplicities().second));
  rep.set_config("clifford.minimal_k",
                 std::to_string(minimal_multiplicity(cfg.m)));

  SampleStats st;
  const SystemResiduals res = system_residuals(sys);
  st.add("clifford.symmetry", "P_i = P_i^T", res.symmetry, 1e-12);
  st.add("clifford.orthogonality", "P_i^T P_i = I", res.orthogonality, 1e-12);
  st.add("clifford.anticommutation", "P_i P_j + P_j P_i = 2 delta_ij I",
         res.anticommutation, 1e-12);

  const auto five = build_full_square_system(FullSquareFlavor::Five_on_8d);
  const auto nine = build_full_square_system(FullSquareFlavor::Nine_on_16d);
  st.add("clifford.full_square_quaternion",
         "sum_i <P_i x, x>^2 = |x|^4 for the five-matrix system on R^8",
         full_square_residual(five.system, cfg.samples,
                              derive_seed(cfg.seed, 0, kStreamClifford)),
         1e-12, cfg.samples);
  st.add("clifford.full_square_octonion",
         "sum_i <P_i x, x>^2 = |x|^4 for the nine-matrix system on R^16",
         full_square_residual(nine.system, cfg.samples,
                              derive_seed(cfg.seed, 1, kStreamClifford)),
         1e-12, cfg.samples);
  commit(st, cfg, rep);
}

void run_geometry(const RunConfig& cfg, Report& rep) {
  const Family fam = make_family(build_clifford_system(cfg.m, cfg.k),
                                 cfg.theta);
  SampleStats st;
  const double prod13 = std::abs(fam.lambda[0] * fam.lambda[2] + 1.0);
  const double prod24 = std::abs(fam.lambda[1] * fam.lambda[3] + 1.0);
  st.add("geometry.lambda_products", "lambda_1 lambda_3 = lambda_2 lambda_4 = -1",
         std::max(prod13, prod24), 1e-10);

  st.merge(pooled(cfg.samples, cfg.workers, [&](int i) {
    SampleStats s;
    const SurfacePoint pt =
        sample_point(fam, derive_seed(cfg.seed, i, kStreamGeometry));
    s.add("geometry.level", "f(x) = cos 4theta at every sample",
          std::abs(cartan_munzner(fam.system, pt.x) - fam.level), 1e-10);
    s.add("geometry.spectrum",
          "A_xi has eigenvalues cot(theta + (k-1) pi/4) with multiplicities "
          "(m1, m2, m1, m2)",
          spectrum_residual(fam, pt), 1e-8);
    const EvalContext ctx = make_context(fam, pt);
    s.absorb(focal_geometry_checks(fam, pt, ctx.dist));

    Rng rng(derive_seed(cfg.seed, i, kStreamMaurerCartan));
    Matrix tests(fam.ambient_dim(), 6);
    tests.col(0) = ctx.dist.d1_frame.col(0);
    tests.col(1) = ctx.dist.d3_frame.col(0);
    tests.col(2) = ctx.dist.basis[1].col(0);
    tests.col(3) = ctx.dist.basis[3].col(0);
    tests.col(4) = tangent_direction(pt, rng);
    tests.col(5) = tangent_direction(pt, rng);
    s.add("geometry.maurer_cartan",
          "(2/sin 2theta) R_a x pairs only with e_a and e_abar",
          maurer_cartan_residual(fam, pt, ctx.dist, tests), 1e-9);
    return s;
  }));
  commit(st, cfg, rep);
}

void run_isomorphisms(const RunConfig& cfg, Report& rep) {
  const Family fam = make_family(build_clifford_system(cfg.m, cfg.k),
                                 cfg.theta);
  const DualPair dp = make_dual_pair(cfg.pair_m1, cfg.pair_m2, cfg.theta);
  const bool odd = fam.system.m % 2 == 1;

  SampleStats st = pooled(cfg.samples, cfg.workers, [&](int i) {
    SampleStats s;
    const SurfacePoint pt =
        sample_point(fam, derive_seed(cfg.seed, i, kStreamIsomorphisms));
    const EvalContext ctx = make_context(fam, pt);

    const FiberIsomorphism iso13 = iso_d1_d3(fam, ctx);
    s.add("iso.d1_d3_gram", "R_0 restricted to D_1 is an isometry",
          iso13.gram, 1e-10);
    s.add("iso.d1_d3_image", "R_0 D_1 = D_3", iso13.image, 1e-8);
    s.add("iso.r0_intertwine", "R_0 R_a phi_1 = R_a phi_3",
          r0_focal_intertwine_residual(fam, ctx), 1e-8);

    const EigenSplitResiduals split = eigen_split_checks(fam, ctx);
    s.add("iso.split_dimensions", "dim E_+(P) = dim E_-(P) = l",
          std::abs(split.dim_plus - fam.system.l) +
              std::abs(split.dim_minus - fam.system.l),
          0.0);
    s.add("iso.split_decomposition",
          "E_+(P) = rho_+(span phi_1 + D_1) + D_2 and mirrored for E_-(P)",
          std::max(split.decomposition_plus, split.decomposition_minus),
          1e-8);
    s.add("iso.split_xi2", "((I+P)/sqrt2) phi_1 = -xi_2", split.xi2_identity,
          1e-10);
    s.add("iso.split_d2", "D_2 sits inside E_+(P), orthogonal to the rest",
          std::max(split.d2_in_plus, split.d2_orthogonality), 1e-8);

    if (odd) {
      const SigmaResiduals sr = sigma_checks(fam, ctx);
      s.add("iso.section_unit", "|V(a)| = 1", sr.section_unit, 1e-10);
      s.add("iso.section_orthogonal", "<V(a), a> = 0", sr.section_orthogonal,
            1e-10);
      s.add("iso.section_anticommute", "R_1 P + P R_1 = 0",
            sr.section_anticommute, 1e-10);
      s.add("iso.sigma_swaps", "sigma exchanges phi_1 and w = R_1 phi_1",
            sr.swaps_phi1_w, 1e-8);
      s.add("iso.sigma_fixes_w", "sigma_tilde w = w", sr.fixes_w, 1e-8);
      s.add("iso.sigma_gram", "sigma_tilde is an isometry on D_1 + D_2",
            sr.gram, 1e-10);
      s.add("iso.sigma_image", "sigma_tilde(D_1 + D_2) = D_1 + D_4",
            sr.image, 1e-8);
      if (fam.system.m == 1)
        s.add("iso.sigma_d2_constant", "sigma = P_0 P_1 on D_2 when m = 1",
              sigma_d2_constant_residual(fam, ctx), 1e-10);
    }

    const SurfacePoint dpt =
        sample_point(dp.fam, derive_seed(cfg.seed, i, kStreamDualSamples));
    const EvalContext dctx = make_context(dp.fam, dpt);
    const DualCheckResiduals dc = dual_checks(dp, dctx);
    s.add("iso.q_involution", "Q^2 = I over the full index range m+1..last",
          dc.q_involution, 1e-10);
    s.noted_min("iso.q_narrow_involution_min", dc.q_narrow_involution);
    s.noted_max("iso.q_narrow_involution_max", dc.q_narrow_involution);
    s.add("iso.dual_level", "x lies on the dual family level set",
          dc.dual_level, 1e-8);
    s.add("iso.xi_pairing", "the dual normal is -xi", dc.xi_pairing, 1e-10);
    s.add("iso.dual_spectrum", "lambda_k = -lambda'_{5-k}",
          dc.spectrum_relation, 1e-8);
    s.add("iso.d2_equals_dual_d3", "D_2 = D'_3", dc.d2_equals_dual_d3, 1e-8);
    s.add("iso.d4_equals_dual_d1", "D_4 = D'_1", dc.d4_equals_dual_d1, 1e-8);
    s.add("iso.q_gram", "Q restricted to D_2 is an isometry", dc.q_gram,
          1e-10);
    s.add("iso.q_image", "Q D_2 = D_4", dc.q_image, 1e-8);
    s.add("iso.q_roundtrip", "Q(Q v) = v on D_2", dc.q_roundtrip_on_d2,
          1e-10);
    return s;
  });

  // the defect of the narrow index range vanishes where <P_last x, x> does,
  // so the floor claim is about the worst sample, not each one
  st.add("iso.q_narrow_floor",
         "the index range m+1..last-1 fails Q^2 = I by more than 1e-2 at "
         "some sample",
         std::max(0.0, 1e-2 - st.maxima["iso.q_narrow_involution_max"]), 0.0,
         cfg.samples);

  if (odd) {
    const SurfacePoint start =
        sample_point(fam, derive_seed(cfg.seed, 0, kStreamIsomorphisms));
    Rng rng(derive_seed(cfg.seed, 0, kStreamPathDirection));
    const Vector dir = tangent_direction(start, rng);
    st.absorb(sigma_continuity_check(fam, start, dir, 60, 1e-3));
  }
  commit(st, cfg, rep);
}

void run_nearly_kahler(const RunConfig& cfg, Report& rep) {
  const DualPair dp = make_dual_pair(cfg.pair_m1, cfg.pair_m2, cfg.theta);
  const bool witness = dp.fam.system.m == 3;
  const PairSwapJ closed = build_closed_form_J(dp);

  SampleStats st = pooled(cfg.samples, cfg.workers, [&](int i) {
    SampleStats s;
    const SurfacePoint pt =
        sample_point(dp.fam, derive_seed(cfg.seed, i, kStreamNearlyKahler));
    const EvalContext ctx = make_context(dp.fam, pt);

    const PairSwapResiduals ps = pairswap_residuals(closed, ctx);
    s.add("nk.j_square", "J^2 = -I on the tangent space", ps.acs, 1e-10);
    s.add("nk.j_isometry", "<JX, JY> = <X, Y>", ps.isometry, 1e-10);
    s.add("nk.j_swaps_blocks", "J(D_k) = D_{k+2 mod 4}", ps.swap, 1e-8);
    const Matrix j_op = closed.evaluate(ctx);
    const FundamentalFormResiduals ff =
        fundamental_form_residuals(j_op, tangent_basis(pt));
    s.add("nk.form_skew", "Phi(X, Y) = -Phi(Y, X)", ff.skew, 1e-10);
    s.add("nk.form_j_invariance", "Phi(JX, JY) = Phi(X, Y)", ff.j_invariance,
          1e-10);

    const NearlyKahlerResiduals res =
        nearly_kahler_residuals(dp, ctx, cfg.fd_step);
    if (res.method_agreement > 1e-4)
      throw NumericalIntegrityError(
          "nk.method_agreement: connection and direct routes disagree by " +
          format_double(res.method_agreement));
    s.add("nk.g_iij_connection",
          "max_ij |(nabla_{e_i} Phi)(e_i, e_j)| = 0, frame-connection route",
          res.g_iij_connection, 1e-4);
    s.add("nk.g_iij_direct",
          "max_ij |<(nabla_{e_i} J) e_i, e_j>| = 0, direct route",
          res.g_iij_direct, 1e-4);
    s.add("nk.method_agreement", "the two G_iij routes coincide",
          res.method_agreement, 1e-4);
    s.add("nk.same_block_skew",
          "G_ijk + G_jik = 0 when e_i, e_j share a principal distribution",
          res.same_block_skew, 1e-8);
    s.noted_max("nk.cross_block_skew_max", res.cross_block_skew);
    s.add("nk.codazzi_calibration",
          "(lambda_i - lambda_j) omega_ijk = (lambda_i - lambda_k) omega_ikj",
          res.codazzi, 5e-5);

    if (witness) {
      s.absorb(nonintegrability_witness_check(dp, ctx, 1.0, cfg.fd_step));
      const double cf = witness_closed_form(dp.fam, ctx);
      const double scale = 2.0 / std::sin(dp.fam.theta);
      s.summed("witness.nonzero", std::abs(cf) > 1e-3 * scale ? 1.0 : 0.0);
      s.noted_min("witness.min_abs_closed_form", std::abs(cf));
    }
    return s;
  });

  st.add("nk.cross_block_skew_floor",
         "mixed-distribution pairs push |G_ijk + G_jik| above 1e-2 at some "
         "sample (the derivative of the Kaehler form is not totally skew)",
         std::max(0.0, 1e-2 - st.maxima["nk.cross_block_skew_max"]), 0.0,
         cfg.samples);

  if (witness) {
    const double frac =
        st.sums["witness.nonzero"] / static_cast<double>(cfg.samples);
    st.add("witness.nonzero_fraction",
           "the closed form clears 1e-3 of its scale on at least 90 percent "
           "of samples",
           std::max(0.0, 0.9 - frac), 0.0, cfg.samples);
  }

  {
    const SurfacePoint start =
        sample_point(dp.fam, derive_seed(cfg.seed, 0, kStreamNearlyKahler));
    Rng rng(derive_seed(cfg.seed, 1, kStreamPathDirection));
    const Vector dir = tangent_direction(start, rng);
    st.absorb(j_continuity_check(dp.fam, closed, start, dir, 40, 1e-3));
  }
  commit(st, cfg, rep);
}

void run_star_ricci(const RunConfig& cfg, Report& rep) {
  const DualPair dp = make_dual_pair(cfg.pair_m1, cfg.pair_m2, cfg.theta);
  const Family& fam = dp.fam;
  const PairSwapJ closed = build_closed_form_J(dp);

  SampleStats st = pooled(cfg.samples, cfg.workers, [&](int i) {
    SampleStats s;
    const SurfacePoint pt =
        sample_point(fam, derive_seed(cfg.seed, i, kStreamStarRicci));
    const EvalContext ctx = make_context(fam, pt);
    const Matrix tb = tangent_basis(pt);
    Rng rng(derive_seed(cfg.seed, i, kStreamRandomJ));

    const Matrix j_closed = closed.evaluate(ctx);
    const Matrix u = ctx.dist.basis[2] * rng.orthogonal(fam.m1) *
                     ctx.dist.basis[0].transpose();
    const Matrix w = ctx.dist.basis[3] * rng.orthogonal(fam.m2) *
                     ctx.dist.basis[1].transpose();
    const Matrix j_generic =
        build_generic_pairswap_J(ctx, u, w).evaluate(ctx);

    for (const Matrix* j : {&j_closed, &j_generic}) {
      const StarRicciForm f = star_ricci_form(fam, ctx, *j, tb);
      s.add("starricci.pair_swap_vanishing",
            "*Ric = 0 for every pair-swap structure", max_abs(f.form), 1e-10);
      s.add("starricci.scalar_zero", "the *-scalar curvature vanishes",
            std::abs(f.scalar), 1e-9);
    }

    const Matrix j_random = random_complex_structure(ctx, rng);
    const Matrix j_block = block_adapted_complex_structure(dp, ctx);
    for (const Matrix* j : {&j_closed, &j_random, &j_block}) {
      const StarRicciForm f = star_ricci_form(fam, ctx, *j, tb);
      const StarRicciForm oracle = star_ricci_gauss_oracle(fam, ctx, *j, tb);
      s.add("starricci.oracle_agreement",
            "the Gauss-equation sum reproduces the closed form",
            max_abs(Matrix(f.form - oracle.form)), 1e-10);
    }

    const double control =
        max_abs(star_ricci_form(fam, ctx, j_random, tb).form);
    s.summed("starricci.control_nonzero", control > 1e-3 ? 1.0 : 0.0);
    s.noted_min("starricci.control_min", control);

    s.absorb(symmetry_criterion(fam, ctx, j_closed));
    s.absorb(symmetry_criterion(fam, ctx, j_block));
    s.absorb(symmetry_criterion(fam, ctx, j_random));
    s.absorb(weakly_star_einstein_check(fam, ctx, j_closed));
    s.absorb(gauss_kronecker_check(fam, ctx, j_closed));
    return s;
  });

  const double frac =
      st.sums["starricci.control_nonzero"] / static_cast<double>(cfg.samples);
  st.add("starricci.control_power",
         "random structures keep ||*Ric|| above 1e-3 on at least 90 percent "
         "of samples",
         std::max(0.0, 0.9 - frac), 0.0, cfg.samples);
  commit(st, cfg, rep);
}

bool uses_finite_differences(Suite s) {
  return s == Suite::NearlyKahler || s == Suite::All;
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Clifford:
      return "clifford";
    case Suite::Geometry:
      return "geometry";
    case Suite::Isomorphisms:
      return "isomorphisms";
    case Suite::NearlyKahler:
      return "nearly-kahler";
    case Suite::StarRicci:
      return "star-ricci";
    case Suite::All:
      return "all";
  }
  throw std::invalid_argument("unknown suite id");
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::Clifford, Suite::Geometry, Suite::Isomorphisms,
                  Suite::NearlyKahler, Suite::StarRicci, Suite::All})
    if (name == suite_name(s)) return s;
  throw std::invalid_argument(
      "unknown suite '" + name +
      "'; expected clifford, geometry, isomorphisms, nearly-kahler, "
      "star-ricci or all");
}

void validate(const RunConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (!(cfg.fd_step > 0.0) || cfg.fd_step > 1e-2)
    throw std::invalid_argument("fd-step must lie in (0, 1e-2]");
  if (cfg.m < 1 || cfg.m > 12)
    throw std::invalid_argument("m must lie in 1..12");
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");

  const bool supported_pair =
      (cfg.pair_m1 == 1 && cfg.pair_m2 == 2) ||
      (cfg.pair_m1 == 1 && cfg.pair_m2 == 6) ||
      (cfg.pair_m1 == 2 && cfg.pair_m2 == 5) ||
      (cfg.pair_m1 == 3 && cfg.pair_m2 == 4);
  if (!supported_pair)
    throw std::invalid_argument(
        "pair must be one of 1,2 1,6 2,5 3,4 (multiplicities of a "
        "full-square split)");

  const double quarter_pi = std::atan(1.0);
  const double lo = uses_finite_differences(cfg.suite) ? 0.15 : 0.0;
  const double hi =
      uses_finite_differences(cfg.suite) ? quarter_pi - 0.15 : quarter_pi;
  if (!(cfg.theta > lo && cfg.theta < hi))
    throw std::invalid_argument(
        "theta = " + format_double(cfg.theta) + " outside (" +
        format_double(lo) + ", " + format_double(hi) + ") for suite " +
        suite_name(cfg.suite));
}

Report run_suite(const RunConfig& cfg) {
  validate(cfg);
  Report rep;
  rep.set_config("suite", suite_name(cfg.suite));
  rep.set_config("m", std::to_string(cfg.m));
  rep.set_config("k", std::to_string(cfg.k));
  rep.set_config("pair", std::to_string(cfg.pair_m1) + "," +
                             std::to_string(cfg.pair_m2));
  rep.set_config("theta", format_double(cfg.theta));
  rep.set_config("samples", std::to_string(cfg.samples));
  rep.set_config("seed", std::to_string(cfg.seed));
  rep.set_config("fd_step", format_double(cfg.fd_step));
  for (const auto& [name, tol] : cfg.tolerances)
    rep.set_config("tol." + name, format_double(tol));

  switch (cfg.suite) {
    case Suite::Clifford:
      run_clifford(cfg, rep);
      break;
    case Suite::Geometry:
      run_geometry(cfg, rep);
      break;
    case Suite::Isomorphisms:
      run_isomorphisms(cfg, rep);
      break;
    case Suite::NearlyKahler:
      run_nearly_kahler(cfg, rep);
      break;
    case Suite::StarRicci:
      run_star_ricci(cfg, rep);
      break;
    case Suite::All:
      run_clifford(cfg, rep);
      run_geometry(cfg, rep);
      run_isomorphisms(cfg, rep);
      run_nearly_kahler(cfg, rep);
      run_star_ricci(cfg, rep);
      break;
  }
  return rep;
}

}  // namespace otfkm
