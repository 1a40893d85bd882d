// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Everything runs in-process on the shipped fixture files with exact
// arithmetic; runtime bounds are part of the stated criteria and are
// enforced, not just reported.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "loomalg/descent.hpp"
#include "loomalg/specfile.hpp"
#include "loomalg/verify.hpp"

using namespace loomalg;

namespace {

#ifndef LOOMALG_FIXTURE_DIR
#error "LOOMALG_FIXTURE_DIR must point at the shipped fixtures"
#endif

std::string fixture(const std::string& name) {
  return std::string(LOOMALG_FIXTURE_DIR) + "/" + name;
}

MultiloopAlgebra load(const std::string& alg, const std::string& aut,
                      const std::vector<unsigned>& orders) {
  unsigned conductor = 1;
  for (unsigned m : orders) conductor *= m;
  FiniteAlgebra base = instantiate(parse_algebra_file(fixture(alg)), conductor);
  std::vector<SigmaMatrix> mats = parse_sigma_file(fixture(aut));
  std::vector<ExactMatrix> maps;
  for (const SigmaMatrix& m : mats) maps.push_back(instantiate(m, conductor));
  auto tuple = validate_automorphism_tuple(base, maps, orders);
  return MultiloopAlgebra::create(std::move(base), std::move(tuple));
}

struct Gate {
  int failures = 0;
  int index = 0;

  void report(bool ok, double seconds, const std::string& what) {
    ++index;
    std::printf("[%d/8] %s  %s (%.1fs)\n", index, ok ? "PASS" : "FAIL", what.c_str(), seconds);
    if (!ok) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Criterion 3 is stated directly on the R-linear solver: core restrictions
// of the windowed R-linear derivations coincide with the inner span.
bool r_linear_matches_inner(const MultiloopAlgebra& ml, const Window& w, const Window& core) {
  std::vector<ShiftSolutions> sols = windowed_r_linear_derivations(ml, w);
  for (const ShiftSolutions& sol : sols) {
    size_t dz = ml.block_dim(sol.shift);
    RowSpan solutions(ml.conductor()), inner(ml.conductor());
    std::vector<Vec> sol_vecs, gen_vecs;
    for (const WindowedMap& m : sol.basis) {
      Vec v = shift_core_vector(ml, m, sol.shift, core, w);
      solutions.insert(v);
      sol_vecs.push_back(std::move(v));
    }
    for (size_t i = 0; i < dz; ++i) {
      Vec z = zero_vec(dz, ml.conductor());
      z[i] = Cyclotomic::one(ml.conductor());
      WindowedMap g = adjoint_map(ml, w, sol.shift, z);
      Vec v = shift_core_vector(ml, g, sol.shift, core, w);
      inner.insert(v);
      gen_vecs.push_back(std::move(v));
    }
    for (const Vec& v : sol_vecs)
      if (!inner.contains(v)) return false;
    for (const Vec& v : gen_vecs)
      if (!solutions.contains(v)) return false;
  }
  return true;
}

} // namespace

int main() try {
  Gate gate;

  // The flagship run backs criteria 1, 6 and 7: full structure plus the
  // sampled identity and round-trip sections at the documented sizes.
  MultiloopAlgebra flagship = load("sl2.alg", "chevalley.aut", {2});
  TheoremReport flag_rep;
  double flag_seconds = 0;
  {
    auto t0 = std::chrono::steady_clock::now();
    flag_rep = verify_theorem(flagship, Window({6}), Window({3}), TheoremOptions{});
    flag_seconds = seconds_since(t0);
  }
  gate.report(flag_rep.gate_ok && flag_rep.membership && flag_rep.directness &&
                  flag_seconds < 60.0,
              flag_seconds,
              "twisted rank-one fixture, window 6 core 3: windowed derivations split into "
              "inner + lifted parts, spans meet trivially, under 60s");

  {
    auto t0 = std::chrono::steady_clock::now();
    MultiloopAlgebra twovar = load("sl2.alg", "twovar_21.aut", {2, 1});
    TheoremOptions opts;
    opts.run_identities = false; // the probe cannot see every sampled shift
    opts.run_roundtrips = false; // at this window geometry; structure only
    TheoremReport rep = verify_theorem(twovar, Window({2, 2}), Window({1, 1}), opts);
    double s = seconds_since(t0);
    gate.report(rep.gate_ok && rep.membership && rep.directness && s < 300.0, s,
                "two-variable fixture, window (2,2) core (1,1): same membership and "
                "directness verdicts, under 5min");
  }

  MultiloopAlgebra untwisted = load("sl2.alg", "identity.aut", {1});
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = r_linear_matches_inner(untwisted, Window({4}), Window({2}));
    gate.report(ok, seconds_since(t0),
                "untwisted loop: windowed R-linear derivations equal the inner span on "
                "the core");
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    GaloisCocycle c1 = cocycle_from_automorphisms(flagship.base(), flagship.twists());
    DescentComparison d1 = compare_with_multiloop(flagship, c1, Window({6}));
    GaloisCocycle c0 = cocycle_from_automorphisms(untwisted.base(), untwisted.twists());
    DescentComparison d0 = compare_with_multiloop(untwisted, c0, Window({6}));
    gate.report(check_cocycle(c1) && check_cocycle(c0) && d1.equal && d0.equal,
                seconds_since(t0),
                "fixed points of the descent cocycle match the eigenspace construction "
                "degree by degree on window 6, twisted and untwisted");
  }

  MultiloopAlgebra kxk = load("kxk.alg", "identity2.aut", {1});
  {
    auto t0 = std::chrono::steady_clock::now();
    CentroidReport cent = verify_centroid(flagship, Window({6}), Window({3}));
    TheoremReport refused = verify_theorem(kxk, Window({2}), Window({1}), TheoremOptions{});
    gate.report(cent.passed && !refused.gate_ok && !refused.passed, seconds_since(t0),
                "twisted centroid equals monomial homotheties with degrees in 2Z; the "
                "split base algebra is refused by the centrality gate");
  }

  gate.report(flag_rep.lift_roundtrip.ok && flag_rep.lift_roundtrip.comparisons == 20 &&
                  flag_rep.bracket_identity.ok && flag_rep.bracket_identity.comparisons > 0 &&
                  flag_rep.homothety_identity.ok &&
                  flag_rep.homothety_identity.comparisons > 0,
              flag_seconds,
              "section identities: probe recovers 20 sampled monomial derivations, lift "
              "respects brackets and ring homotheties on seeded pairs");

  gate.report(flag_rep.roundtrips.ok && flag_rep.roundtrips.comparisons == 50, flag_seconds,
              "50 seeded synthetic derivations decompose back into their exact inner and "
              "lifted parts with zero residual");

  {
    auto t0 = std::chrono::steady_clock::now();
    CentroidReport sl2_c = verify_centroid(untwisted, Window({3}), Window({1}));
    CentroidReport kxk_c = verify_centroid(kxk, Window({3}), Window({1}));
    gate.report(sl2_c.passed && sl2_c.commuting_dim == 1 && kxk_c.passed &&
                    kxk_c.commuting_dim == 2,
                seconds_since(t0),
                "untwisted centroids factor as base centroid times monomials: scalars for "
                "the simple fixture, the two projections for the split one");
  }

  if (gate.failures == 0) {
    std::printf("acceptance: all 8 criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
  return 1;
} catch (const std::exception& e) {
  std::printf("acceptance: aborted by error: %s\n", e.what());
  return 1;
}
