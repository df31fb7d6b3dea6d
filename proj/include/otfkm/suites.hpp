#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "otfkm/starricci.hpp"

namespace otfkm {

enum class Suite {
  Clifford,      // system construction residuals, full-square saturation
  Geometry,      // level set, spectrum, focal geometry
  Isomorphisms,  // R_0, Q, sigma_tilde fiber isomorphisms
  NearlyKahler,  // derivative of the fundamental form, Nijenhuis witness
  StarRicci,     // *-Ricci curvature of pair-swap structures
  All,
};

// "clifford", "geometry", "isomorphisms", "nearly-kahler", "star-ricci",
// "all"; parse throws std::invalid_argument on anything else.
std::string suite_name(Suite s);
Suite parse_suite(const std::string& name);

struct RunConfig {
  Suite suite = Suite::All;
  int m = 3;        // Clifford system size for the (m, k) suites
  int k = 2;        // representation multiplicity
  int pair_m1 = 3;  // dual-pair multiplicities for the hypersurface suites
  int pair_m2 = 4;
  double theta = 0.3;
  int samples = 20;
  std::uint64_t seed = 1;
  double fd_step = 1e-4;
  int workers = 1;  // never affects the report bytes
  std::map<std::string, double> tolerances;  // check name -> override
};

// samples >= 1, workers >= 1, fd_step in (0, 1e-2], pair one of (1,2),
// (1,6), (2,5), (3,4), theta in (0, pi/4), narrowed to
// (0.15, pi/4 - 0.15) when the suite takes finite differences on the
// surface.  Throws std::invalid_argument.
void validate(const RunConfig& cfg);

// Runs the selected checks over `samples` deterministically seeded points
// and aggregates worst-case residuals into one report.  Sample i of suite s
// always sees seed derive_seed(cfg.seed, i, stream(s)), so reports are
// byte-identical for any worker count.
Report run_suite(const RunConfig& cfg);

}  // namespace otfkm
