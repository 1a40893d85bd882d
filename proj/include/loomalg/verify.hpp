#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loomalg/dermod.hpp"

namespace loomalg {

struct TheoremOptions {
  uint64_t seed = 20240817;
  unsigned monomial_samples = 20;  // lift round trips through the base probe
  unsigned pair_samples = 100;     // sampled bracket and homothety identities
  unsigned roundtrip_samples = 50; // full decompositions
  int sample_expo = 2;             // |b_j| <= sample_expo in sampled monomials
  bool run_structure = true;
  bool run_identities = true;
  bool run_roundtrips = true;
};

struct ShiftReport {
  Degree shift;
  size_t solution_dim = 0; // windowed solution basis size
  size_t core_rank = 0;    // rank of the solutions restricted to the core
  size_t inner_rank = 0;   // adjoint generators on the core
  size_t rho_rank = 0;     // lifted generators on the core
  size_t joint_rank = 0;
  bool membership = true; // solutions lie in the generator span on the core
  bool coverage = true;   // generators lie in the solution span on the core
  bool direct = true;     // inner and lifted spans meet trivially
};

struct IdentitySection {
  bool ok = true;
  size_t comparisons = 0; // nonzero or the section is vacuous and fails
  std::string detail;
};

struct TheoremReport {
  bool gate_ok = false;
  std::string gate_reason;
  std::vector<ShiftReport> shifts;
  bool membership = true, coverage = true, directness = true;
  size_t total_solutions = 0, total_generators = 0;
  IdentitySection lift_roundtrip;   // base probe recovers sampled monomials
  IdentitySection bracket_identity; // the lift respects brackets
  IdentitySection homothety_identity;
  IdentitySection inner_identity;
  IdentitySection roundtrips;
  bool ran_structure = false, ran_identities = false, ran_roundtrips = false;
  bool passed = false;
  std::string detail;
};

// Certifies, on the window against the core, that every windowed derivation
// of the graded algebra splits as an inner part plus a lifted base-ring
// derivation, and that the two parts meet trivially. Refuses algebras that
// are not perfect or not central, where the splitting is not a theorem.
TheoremReport verify_theorem(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                             const TheoremOptions& opts);

struct CentroidShiftReport {
  Degree shift;
  size_t solution_dim = 0;   // core rank of the windowed centroid
  size_t homothety_rank = 0; // core rank of the homothety generators
  bool integral = false;     // shift is an integer monomial shift
  bool membership = true, coverage = true;
};

struct CentroidReport {
  std::vector<CentroidShiftReport> shifts;
  bool membership = true, coverage = true, degrees_ok = true;
  size_t base_centroid_dim = 0;
  size_t commuting_dim = 0; // base centroid elements commuting with the twists
  bool passed = false;
  std::string detail;
};

// Certifies that the windowed centroid is spanned by monomial homotheties
// kappa (x) t^b with kappa in the twist-commuting part of the base centroid,
// and that nonzero degrees appear exactly at integer monomial shifts.
CentroidReport verify_centroid(const MultiloopAlgebra& ml, const Window& w, const Window& core);

} // namespace loomalg
