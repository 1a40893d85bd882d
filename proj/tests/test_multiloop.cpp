#include "doctest.h"

#include "loomalg/multiloop.hpp"

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

} // namespace

TEST_CASE("degree and window helpers") {
  CHECK(degree_add({1, 2}, {3, -1}) == Degree{4, 1});
  CHECK(degree_sub({1, 2}, {3, -1}) == Degree{-2, 3});
  CHECK(degree_neg({1, -2}) == Degree{-1, 2});
  CHECK(degree_str({5}) == "5");
  CHECK(degree_str({1, -2}) == "(1,-2)");

  Window w({2});
  CHECK(w.contains({2}));
  CHECK(w.contains({-2}));
  CHECK_FALSE(w.contains({3}));
  CHECK(w.count() == 5);
  auto ds = w.degrees();
  REQUIRE(ds.size() == 5);
  CHECK(ds.front() == Degree{-2});
  CHECK(ds.back() == Degree{2});

  Window w2({1, 2});
  CHECK(w2.count() == 15);
  CHECK(w2.degrees().size() == 15);
  CHECK(w2.degrees().front() == Degree{-1, -2});
  CHECK(w2.degrees().back() == Degree{1, 2});
}

TEST_CASE("eigenclasses of the twisted construction") {
  MultiloopAlgebra ml = twisted_sl2();
  CHECK(ml.class_count() == 2);
  CHECK(ml.class_dim(0) == 1);
  CHECK(ml.class_dim(1) == 2);
  CHECK(ml.class_of({0}) == 0);
  CHECK(ml.class_of({4}) == 0);
  CHECK(ml.class_of({-3}) == 1);
  CHECK(ml.class_of({7}) == 1);
  CHECK(ml.class_sum(1, 1) == 0);

  unsigned m = ml.conductor();
  // Class 0 is spanned by e - f, class 1 by h and e + f.
  Vec emf{q(1, m), q(0, m), q(-1, m)};
  Vec h{q(0, m), q(1, m), q(0, m)};
  Vec epf{q(1, m), q(0, m), q(1, m)};
  CHECK(ml.to_class_coords(0, emf).has_value());
  CHECK(ml.to_class_coords(1, h).has_value());
  CHECK(ml.to_class_coords(1, epf).has_value());
  CHECK_FALSE(ml.to_class_coords(0, h).has_value());
  CHECK_FALSE(ml.to_class_coords(1, emf).has_value());

  // Round trip through class coordinates.
  Vec back = ml.to_algebra_coords(1, *ml.to_class_coords(1, epf));
  CHECK(back == epf);
}

TEST_CASE("brackets respect the grading") {
  MultiloopAlgebra ml = twisted_sl2();
  unsigned m = ml.conductor();
  Vec emf{q(1, m), q(0, m), q(-1, m)};
  Vec h{q(0, m), q(1, m), q(0, m)};
  Vec epf{q(1, m), q(0, m), q(1, m)};

  // [(e-f) (x) t^0, h (x) t^{1/2}] = -2(e+f) (x) t^{1/2}
  Vec lhs = ml.bracket_coords({0}, *ml.to_class_coords(0, emf), {1}, *ml.to_class_coords(1, h));
  CHECK(ml.to_algebra_coords(1, lhs) == vec_scale(epf, q(-2, m)));

  // [h (x) t^{1/2}, (e-f) (x) t^0] = (2e + 2f) (x) t^{1/2}
  Vec rhs = ml.bracket_coords({1}, *ml.to_class_coords(1, h), {0}, *ml.to_class_coords(0, emf));
  CHECK(ml.to_algebra_coords(1, rhs) == vec_scale(epf, q(2, m)));

  // [h (x) t^{1/2}, (e+f) (x) t^{1/2}] = 2(e-f) (x) t^1
  Vec cc = ml.bracket_coords({1}, *ml.to_class_coords(1, h), {1}, *ml.to_class_coords(1, epf));
  CHECK(ml.to_algebra_coords(0, cc) == vec_scale(emf, q(2, m)));
}

TEST_CASE("window dimensions of the twisted construction") {
  MultiloopAlgebra ml = twisted_sl2();
  CHECK(ml.window_dim(Window({6})) == 19);
  CHECK(ml.window_dim(Window({3})) == 11);
  CHECK(ml.block_dim({-6}) == 1);
  CHECK(ml.block_dim({-5}) == 2);
}

TEST_CASE("untwisted construction keeps full blocks") {
  FiniteAlgebra a = make_sl2(1);
  auto tuple = validate_automorphism_tuple(a, {ExactMatrix::identity(3, 1)}, {1});
  MultiloopAlgebra ml = MultiloopAlgebra::create(std::move(a), std::move(tuple));
  CHECK(ml.class_count() == 1);
  CHECK(ml.class_dim(0) == 3);
  CHECK(ml.window_dim(Window({4})) == 27);
}

TEST_CASE("two variables, one twisted slot") {
  FiniteAlgebra a = make_sl2(2);
  auto tuple = validate_automorphism_tuple(
      a, {chevalley(2), ExactMatrix::identity(3, 2)}, {2, 1});
  MultiloopAlgebra ml = MultiloopAlgebra::create(std::move(a), std::move(tuple));
  CHECK(ml.nvars() == 2);
  CHECK(ml.class_count() == 2);
  CHECK(ml.class_of({1, 5}) == 1);
  CHECK(ml.class_of({2, 5}) == 0);
  CHECK(ml.block_dim({1, 0}) == 2);
  CHECK(ml.block_dim({0, 1}) == 1);
  CHECK(ml.window_dim(Window({2, 2})) == 35);

  unsigned m = ml.conductor();
  Vec h{q(0, m), q(1, m), q(0, m)};
  Vec epf{q(1, m), q(0, m), q(1, m)};
  Vec emf{q(1, m), q(0, m), q(-1, m)};
  // [h (x) t^{(1/2,1)}, (e+f) (x) t^{(1/2,-1)}] = 2(e-f) (x) t^{(1,0)}
  Vec out = ml.bracket_coords({1, 1}, *ml.to_class_coords(1, h), {1, -1},
                              *ml.to_class_coords(1, epf));
  CHECK(ml.to_algebra_coords(0, out) == vec_scale(emf, q(2, m)));
}

TEST_CASE("conductor policing") {
  FiniteAlgebra a = make_sl2(1);
  auto tuple = validate_automorphism_tuple(a, {chevalley(1)}, {2});
  CHECK_THROWS(MultiloopAlgebra::create(std::move(a), std::move(tuple)));
}

TEST_CASE("block element description") {
  MultiloopAlgebra ml = twisted_sl2();
  unsigned m = ml.conductor();
  Vec h{q(0, m), q(1, m), q(0, m)};
  std::string s = ml.describe_block_element({1}, *ml.to_class_coords(1, h));
  CHECK(s == "(1)*h (x) t^1/2");
}
