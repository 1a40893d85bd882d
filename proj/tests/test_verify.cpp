#include "doctest.h"

#include "loomalg/verify.hpp"

using namespace loomalg;

namespace {

Cyclotomic q(int num, unsigned m) { return Cyclotomic::from_rational(m, Rational(num)); }

FiniteAlgebra make_sl2(unsigned m) {
  size_t n = 3;
  std::vector<Cyclotomic> c(n * n * n, Cyclotomic::zero(m));
  auto set = [&](size_t i, size_t j, size_t k, int v) {
    c[(i * n + j) * n + k] = q(v, m);
    c[(j * n + i) * n + k] = q(-v, m);
  };
  set(0, 2, 1, 1);
  set(1, 0, 0, 2);
  set(1, 2, 2, -2);
  return FiniteAlgebra::create({"e", "h", "f"}, std::move(c), m, true, false);
}

ExactMatrix chevalley(unsigned m) {
  ExactMatrix w(3, 3, m);
  w.at(2, 0) = q(-1, m);
  w.at(1, 1) = q(-1, m);
  w.at(0, 2) = q(-1, m);
  return w;
}

MultiloopAlgebra twisted_sl2() {
  FiniteAlgebra a = make_sl2(2);
  auto tuple = validate_automorphism_tuple(a, {chevalley(2)}, {2});
  return MultiloopAlgebra::create(std::move(a), std::move(tuple));
}

MultiloopAlgebra untwisted_sl2() {
  FiniteAlgebra a = make_sl2(1);
  auto tuple = validate_automorphism_tuple(a, {ExactMatrix::identity(3, 1)}, {1});
  return MultiloopAlgebra::create(std::move(a), std::move(tuple));
}

FiniteAlgebra make_kxk() {
  size_t n = 2;
  std::vector<Cyclotomic> c(n * n * n, Cyclotomic::zero(1));
  c[(0 * n + 0) * n + 0] = q(1, 1); // p * p = p
  c[(1 * n + 1) * n + 1] = q(1, 1); // q * q = q
  return FiniteAlgebra::create({"p", "q"}, std::move(c), 1, false, true);
}

MultiloopAlgebra untwisted_kxk() {
  FiniteAlgebra a = make_kxk();
  auto tuple = validate_automorphism_tuple(a, {ExactMatrix::identity(2, 1)}, {1});
  return MultiloopAlgebra::create(std::move(a), std::move(tuple));
}

} // namespace

TEST_CASE("theorem certificate on the twisted loop") {
  MultiloopAlgebra ml = twisted_sl2();
  Window w({4}), core({2});
  TheoremOptions opts;
  opts.monomial_samples = 8;
  opts.pair_samples = 20;
  opts.roundtrip_samples = 8;
  opts.sample_expo = 1;

  TheoremReport rep = verify_theorem(ml, w, core, opts);
  REQUIRE(rep.gate_ok);
  CHECK(rep.membership);
  CHECK(rep.coverage);
  CHECK(rep.directness);
  CHECK(rep.total_solutions > 0);
  CHECK(rep.total_generators > 0);
  CHECK(rep.shifts.size() == w.count());
  CHECK(rep.lift_roundtrip.ok);
  CHECK(rep.lift_roundtrip.comparisons == 8);
  CHECK(rep.bracket_identity.ok);
  CHECK(rep.bracket_identity.comparisons > 0);
  CHECK(rep.homothety_identity.ok);
  CHECK(rep.homothety_identity.comparisons > 0);
  CHECK(rep.inner_identity.ok);
  CHECK(rep.inner_identity.comparisons > 0);
  CHECK(rep.roundtrips.ok);
  CHECK(rep.roundtrips.comparisons == 8);
  CHECK(rep.passed);

  // The zero shift must see both generator families.
  bool found = false;
  for (const ShiftReport& sr : rep.shifts)
    if (sr.shift == Degree{0}) {
      found = true;
      CHECK(sr.inner_rank > 0);
      CHECK(sr.rho_rank > 0);
      CHECK(sr.joint_rank == sr.inner_rank + sr.rho_rank);
    }
  CHECK(found);
}

TEST_CASE("theorem gate refuses unsuitable bases") {
  // Not perfect: the one-dimensional abelian Lie algebra.
  std::vector<Cyclotomic> zero(1, Cyclotomic::zero(1));
  FiniteAlgebra ab = FiniteAlgebra::create({"x"}, std::move(zero), 1, true, false);
  auto tuple = validate_automorphism_tuple(ab, {ExactMatrix::identity(1, 1)}, {1});
  MultiloopAlgebra ml = MultiloopAlgebra::create(std::move(ab), std::move(tuple));
  TheoremReport rep = verify_theorem(ml, Window({1}), Window({1}), TheoremOptions{});
  CHECK_FALSE(rep.gate_ok);
  CHECK_FALSE(rep.passed);
  CHECK(rep.gate_reason.find("perfect") != std::string::npos);

  // Perfect but not central: the split two-dimensional idempotent algebra.
  TheoremReport rep2 =
      verify_theorem(untwisted_kxk(), Window({1}), Window({1}), TheoremOptions{});
  CHECK_FALSE(rep2.gate_ok);
  CHECK_FALSE(rep2.passed);
  CHECK(rep2.gate_reason.find("central") != std::string::npos);

  // Core wider than the window is a caller mistake, also refused.
  TheoremReport rep3 = verify_theorem(twisted_sl2(), Window({2}), Window({3}), TheoremOptions{});
  CHECK_FALSE(rep3.gate_ok);
}

TEST_CASE("structure only run skips the sampled sections") {
  MultiloopAlgebra ml = twisted_sl2();
  TheoremOptions opts;
  opts.run_identities = false;
  opts.run_roundtrips = false;
  TheoremReport rep = verify_theorem(ml, Window({3}), Window({1}), opts);
  REQUIRE(rep.gate_ok);
  CHECK(rep.lift_roundtrip.comparisons == 0);
  CHECK(rep.roundtrips.comparisons == 0);
  CHECK(rep.passed == (rep.membership && rep.coverage && rep.directness));
}

TEST_CASE("centroid certificate on the twisted loop") {
  MultiloopAlgebra ml = twisted_sl2();
  CentroidReport rep = verify_centroid(ml, Window({3}), Window({1}));
  CHECK(rep.base_centroid_dim == 1);
  CHECK(rep.commuting_dim == 1);
  CHECK(rep.membership);
  CHECK(rep.coverage);
  CHECK(rep.degrees_ok);
  CHECK(rep.passed);

  // Homotheties appear at even shifts only.
  for (const CentroidShiftReport& sr : rep.shifts) {
    CHECK(sr.integral == (sr.shift[0] % 2 == 0));
    if (!sr.integral) CHECK(sr.solution_dim == 0);
  }
}

TEST_CASE("centroid certificate on the untwisted loop") {
  MultiloopAlgebra ml = untwisted_sl2();
  CentroidReport rep = verify_centroid(ml, Window({3}), Window({1}));
  CHECK(rep.base_centroid_dim == 1);
  CHECK(rep.commuting_dim == 1);
  CHECK(rep.passed);
  for (const CentroidShiftReport& sr : rep.shifts) {
    CHECK(sr.integral);
    CHECK(sr.solution_dim == 1);
  }
}

TEST_CASE("centroid certificate sees a split base") {
  MultiloopAlgebra ml = untwisted_kxk();
  CentroidReport rep = verify_centroid(ml, Window({3}), Window({1}));
  CHECK(rep.base_centroid_dim == 2);
  CHECK(rep.commuting_dim == 2);
  CHECK(rep.membership);
  CHECK(rep.coverage);
  CHECK(rep.degrees_ok);
  CHECK(rep.passed);
  for (const CentroidShiftReport& sr : rep.shifts) CHECK(sr.solution_dim == 2);
}

TEST_CASE("identity sections report seeded determinism") {
  MultiloopAlgebra ml = twisted_sl2();
  Window w({4}), core({2});
  TheoremOptions opts;
  opts.run_structure = false;
  opts.roundtrip_samples = 4;
  opts.monomial_samples = 4;
  opts.pair_samples = 6;
  opts.sample_expo = 1;
  TheoremReport a = verify_theorem(ml, w, core, opts);
  TheoremReport b = verify_theorem(ml, w, core, opts);
  CHECK(a.passed);
  CHECK(a.passed == b.passed);
  CHECK(a.bracket_identity.comparisons == b.bracket_identity.comparisons);
  CHECK(a.inner_identity.comparisons == b.inner_identity.comparisons);
}
