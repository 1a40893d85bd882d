#include "doctest.h"

#include "loomalg/descent.hpp"

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

} // namespace

TEST_CASE("constant cocycle from a twist tuple") {
  FiniteAlgebra a = make_sl2(2);
  auto tuple = validate_automorphism_tuple(a, {chevalley(2)}, {2});
  GaloisCocycle c = cocycle_from_automorphisms(a, tuple);
  REQUIRE(c.group_order() == 2);
  CHECK(c.at({0}) == ExactMatrix::identity(3, 2));
  CHECK(c.at({1}) == chevalley(2)); // an involution equals its inverse
  CHECK(check_cocycle(c));
}

TEST_CASE("cocycle check rejects a unit failure") {
  FiniteAlgebra a = make_sl2(2);
  GaloisCocycle bad;
  bad.orders = {2};
  bad.conductor = 2;
  bad.maps = {chevalley(2), chevalley(2)};
  CHECK_FALSE(check_cocycle(bad));
}

TEST_CASE("galois character values") {
  // One variable of order 2: chi_gamma(a) = (-1)^{gamma a}.
  CHECK(galois_character(2, {2}, {1}, {1}) == q(-1, 2));
  CHECK(galois_character(2, {2}, {1}, {2}) == q(1, 2));
  CHECK(galois_character(2, {2}, {1}, {-3}) == q(-1, 2));
  CHECK(galois_character(2, {2}, {0}, {5}) == q(1, 2));
  // Two variables (2, 1).
  CHECK(galois_character(2, {2, 1}, {1, 0}, {3, 7}) == q(-1, 2));
  // Order 4: chi picks up i.
  CHECK(galois_character(4, {4}, {1}, {1}) == Cyclotomic::root_power(4, 1));
  CHECK(galois_character(4, {4}, {2}, {1}) == q(-1, 4));
}

TEST_CASE("fixed points match eigenspaces degree by degree") {
  FiniteAlgebra a = make_sl2(2);
  auto tuple = validate_automorphism_tuple(a, {chevalley(2)}, {2});
  GaloisCocycle c = cocycle_from_automorphisms(a, tuple);

  // Degree 0: x with omega(x) = x, spanned by e - f.
  std::vector<Vec> f0 = fixed_point_basis(a, c, {0});
  REQUIRE(f0.size() == 1);
  RowSpan span0(2);
  span0.insert(f0[0]);
  CHECK(span0.contains(Vec{q(1, 2), q(0, 2), q(-1, 2)}));

  // Degree 1: omega(x) = -x, spanned by h and e + f.
  std::vector<Vec> f1 = fixed_point_basis(a, c, {1});
  REQUIRE(f1.size() == 2);
  RowSpan span1(2);
  for (const Vec& v : f1) span1.insert(v);
  CHECK(span1.contains(Vec{q(0, 2), q(1, 2), q(0, 2)}));
  CHECK(span1.contains(Vec{q(1, 2), q(0, 2), q(1, 2)}));

  // Window dimension profile 1,2,1,2,1 on |a| <= 2.
  size_t total = 0;
  for (int d = -2; d <= 2; ++d) total += fixed_point_basis(a, c, {d}).size();
  CHECK(total == 7);
}

TEST_CASE("descent comparison, twisted") {
  FiniteAlgebra a = make_sl2(2);
  auto tuple = validate_automorphism_tuple(a, {chevalley(2)}, {2});
  GaloisCocycle c = cocycle_from_automorphisms(a, tuple);
  MultiloopAlgebra ml = MultiloopAlgebra::create(make_sl2(2), std::move(tuple));
  DescentComparison cmp = compare_with_multiloop(ml, c, Window({3}));
  CHECK(cmp.equal);
  CHECK(cmp.degrees_checked == 7);
  CHECK(cmp.total_dim == 11);
  CHECK(cmp.detail.empty());
}

TEST_CASE("descent comparison, untwisted") {
  FiniteAlgebra a = make_sl2(1);
  auto tuple = validate_automorphism_tuple(a, {ExactMatrix::identity(3, 1)}, {1});
  GaloisCocycle c = cocycle_from_automorphisms(a, tuple);
  CHECK(check_cocycle(c));
  MultiloopAlgebra ml = MultiloopAlgebra::create(make_sl2(1), std::move(tuple));
  DescentComparison cmp = compare_with_multiloop(ml, c, Window({2}));
  CHECK(cmp.equal);
  CHECK(cmp.total_dim == 15);
}

TEST_CASE("descent comparison, two variables") {
  FiniteAlgebra a = make_sl2(2);
  auto tuple = validate_automorphism_tuple(
      a, {chevalley(2), ExactMatrix::identity(3, 2)}, {2, 1});
  GaloisCocycle c = cocycle_from_automorphisms(a, tuple);
  CHECK(check_cocycle(c));
  MultiloopAlgebra ml = MultiloopAlgebra::create(make_sl2(2), std::move(tuple));
  DescentComparison cmp = compare_with_multiloop(ml, c, Window({2, 1}));
  CHECK(cmp.equal);
  // 5 x 3 degrees; first slot even contributes 1, odd contributes 2.
  CHECK(cmp.total_dim == 3 * 3 * 1 + 2 * 3 * 2);
}

TEST_CASE("order-4 twist on a zero algebra exercises the character") {
  // Zero products make every invertible map an automorphism; the interesting
  // content is the character arithmetic over conductor 4.
  std::vector<Cyclotomic> c(8, Cyclotomic::zero(4));
  FiniteAlgebra z = FiniteAlgebra::create({"x", "y"}, std::move(c), 4, false, false);
  ExactMatrix rot(2, 2, 4);
  rot.at(0, 0) = Cyclotomic::root_power(4, 1);
  rot.at(1, 1) = Cyclotomic::root_power(4, 3);
  auto tuple = validate_automorphism_tuple(z, {rot}, {4});
  GaloisCocycle co = cocycle_from_automorphisms(z, tuple);
  CHECK(check_cocycle(co));
  MultiloopAlgebra ml = MultiloopAlgebra::create(
      FiniteAlgebra::create({"x", "y"},
                            std::vector<Cyclotomic>(8, Cyclotomic::zero(4)), 4, false, false),
      validate_automorphism_tuple(z, {rot}, {4}));
  // x sits in class 1 (eigenvalue i), y in class 3 (eigenvalue -i).
  CHECK(ml.class_dim(0) == 0);
  CHECK(ml.class_dim(1) == 1);
  CHECK(ml.class_dim(2) == 0);
  CHECK(ml.class_dim(3) == 1);
  DescentComparison cmp = compare_with_multiloop(ml, co, Window({4}));
  CHECK(cmp.equal);
}
