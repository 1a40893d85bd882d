#include "doctest.h"

#include <fstream>

#include "loomalg/specfile.hpp"

using namespace loomalg;

namespace {

std::string fixture(const std::string& name) {
  return std::string(LOOMALG_FIXTURE_DIR) + "/" + name;
}

std::string data(const std::string& name) {
  return std::string(LOOMALG_TEST_DATA_DIR) + "/" + name;
}

// Scratch files for grammar cases; ctest runs in the build tree.
std::string scratch(const std::string& name, const std::string& content) {
  std::string path = "specfile_scratch_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

Cyclotomic q(int num, unsigned m) { return Cyclotomic::from_rational(m, Rational(num)); }

} // namespace

TEST_CASE("shipped algebra fixtures parse and validate") {
  AlgebraSpec spec = parse_algebra_file(fixture("sl2.alg"));
  CHECK(spec.kind == "lie");
  CHECK(spec.names == std::vector<std::string>{"e", "h", "f"});
  FiniteAlgebra a = instantiate(spec, 2);
  CHECK(a.is_lie());
  CHECK(a.dim() == 3);
  // [e,f] = h and the mirror comes from the antisymmetry fill.
  CHECK(a.product_of_basis(0, 2) == Vec{q(0, 2), q(1, 2), q(0, 2)});
  CHECK(a.product_of_basis(2, 0) == Vec{q(0, 2), q(-1, 2), q(0, 2)});
  CHECK(a.product_of_basis(1, 0) == Vec{q(2, 2), q(0, 2), q(0, 2)});

  FiniteAlgebra kxk = instantiate(parse_algebra_file(fixture("kxk.alg")), 1);
  CHECK(kxk.is_associative());
  CHECK(is_perfect(kxk));
  CHECK_FALSE(is_central(kxk));

  FiniteAlgebra idem = instantiate(parse_algebra_file(fixture("idem1.alg")), 1);
  CHECK(idem.dim() == 1);
  CHECK(idem.product_of_basis(0, 0) == Vec{q(1, 1)});
}

TEST_CASE("shipped automorphism fixtures parse") {
  std::vector<SigmaMatrix> one = parse_sigma_file(fixture("chevalley.aut"));
  REQUIRE(one.size() == 1);
  ExactMatrix w = instantiate(one[0], 2);
  CHECK(w.at(0, 2) == q(-1, 2));
  CHECK(w.at(1, 1) == q(-1, 2));
  CHECK(w.at(2, 0) == q(-1, 2));
  CHECK(w.at(0, 0) == q(0, 2));

  std::vector<SigmaMatrix> two = parse_sigma_file(fixture("twovar_21.aut"));
  REQUIRE(two.size() == 2);
  CHECK(instantiate(two[1], 2) == ExactMatrix::identity(3, 2));
}

TEST_CASE("coefficient tokens cover rationals and root powers") {
  std::string path = scratch("coeffs.alg",
                             "kind lie\n"
                             "dim 2\n"
                             "basis a b\n"
                             "bracket a b = 1/2 a + -3 b\n");
  FiniteAlgebra alg = instantiate(parse_algebra_file(path), 4);
  CHECK(alg.product_of_basis(0, 1) ==
        Vec{Cyclotomic::from_rational(4, Rational(1, 2)), q(-3, 4)});

  // Root powers need a conductor that can express them.
  std::string zpath = scratch("zpow.aut",
                              "sigma\n"
                              "z^1 0\n"
                              "0 z^3\n");
  std::vector<SigmaMatrix> mats = parse_sigma_file(zpath);
  ExactMatrix m = instantiate(mats[0], 4);
  CHECK(m.at(0, 0) == Cyclotomic::root_power(4, 1));
  CHECK(m.at(1, 1) == Cyclotomic::root_power(4, 3));

  std::string mixed = scratch("mixed.aut", "sigma\n-1/2*z^2\n");
  ExactMatrix mm = instantiate(parse_sigma_file(mixed)[0], 4);
  CHECK(mm.at(0, 0) == Cyclotomic::root_power(4, 2).scale(Rational(-1, 2)));

  std::string bare = scratch("bare.aut", "sigma\nz\n");
  CHECK(instantiate(parse_sigma_file(bare)[0], 4).at(0, 0) == Cyclotomic::root_power(4, 1));
}

TEST_CASE("terms accumulate and sums with signs parse") {
  std::string path = scratch("sum.alg",
                             "kind plain\n"
                             "dim 2\n"
                             "basis a b\n"
                             "product a a = a - b + 1/2 a\n");
  FiniteAlgebra alg = instantiate(parse_algebra_file(path), 1);
  CHECK(alg.product_of_basis(0, 0) ==
        Vec{Cyclotomic::from_rational(1, Rational(3, 2)), q(-1, 1)});

  std::string zero = scratch("zero.alg",
                             "kind plain\n"
                             "dim 1\n"
                             "basis a\n"
                             "product a a = 0\n");
  CHECK(instantiate(parse_algebra_file(zero), 1).product_of_basis(0, 0) == Vec{q(0, 1)});
}

TEST_CASE("malformed files fail with located messages") {
  CHECK_THROWS_AS(parse_algebra_file(data("bad_token.alg")), parse_error);
  try {
    parse_algebra_file(data("bad_token.alg"));
  } catch (const parse_error& e) {
    std::string msg = e.what();
    CHECK(msg.find(":4:") != std::string::npos);
    CHECK(msg.find("1.5") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_sigma_file(data("ragged.aut")), parse_error);
  CHECK_THROWS_AS(parse_algebra_file("no_such_file.alg"), parse_error);

  CHECK_THROWS_AS(parse_algebra_file(scratch("dup.alg",
                                             "kind lie\ndim 2\nbasis a b\n"
                                             "bracket a b = a\nbracket a b = b\n")),
                  parse_error);
  CHECK_THROWS_AS(parse_algebra_file(scratch("unknown.alg",
                                             "kind lie\ndim 2\nbasis a b\n"
                                             "bracket a c = a\n")),
                  parse_error);
  CHECK_THROWS_AS(parse_algebra_file(scratch("mixedkind.alg",
                                             "kind lie\ndim 2\nbasis a b\n"
                                             "product a b = a\n")),
                  parse_error);
  CHECK_THROWS_AS(parse_algebra_file(scratch("nokind.alg", "dim 1\nbasis a\n")), parse_error);
  CHECK_THROWS_AS(parse_sigma_file(scratch("nosigma.aut", "1 0\n0 1\n")), parse_error);
  CHECK_THROWS_AS(parse_sigma_file(scratch("rect.aut", "sigma\n1 0 0\n0 1 0\n")), parse_error);

  // A Jacobi violation parses fine but is rejected at instantiation.
  AlgebraSpec bad = parse_algebra_file(data("bad_jacobi.alg"));
  CHECK_THROWS_AS(instantiate(bad, 1), std::invalid_argument);
}

TEST_CASE("explicit mirror brackets are honored when consistent") {
  std::string path = scratch("mirror.alg",
                             "kind lie\n"
                             "dim 3\n"
                             "basis e h f\n"
                             "bracket e f = h\n"
                             "bracket f e = -1 h\n"
                             "bracket h e = 2 e\n"
                             "bracket h f = -2 f\n");
  FiniteAlgebra a = instantiate(parse_algebra_file(path), 1);
  CHECK(a.product_of_basis(2, 0) == Vec{q(0, 1), q(-1, 1), q(0, 1)});

  // An inconsistent pair of mirrors is an axiom failure.
  std::string badpath = scratch("badmirror.alg",
                                "kind lie\n"
                                "dim 2\n"
                                "basis a b\n"
                                "bracket a b = a\n"
                                "bracket b a = a\n");
  CHECK_THROWS_AS(instantiate(parse_algebra_file(badpath), 1), std::invalid_argument);
}
