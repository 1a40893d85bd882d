#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loomalg/algebra.hpp"

namespace loomalg {

// Raised on malformed input files; the message carries file and line.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A coefficient kept symbolic until the conductor is known: coeff * z^zpow,
// where z will become the primitive m-th root once instantiated.
struct CoeffExpr {
  Rational coeff;
  long long zpow = 0;
};

Cyclotomic instantiate(const CoeffExpr& e, unsigned conductor);

// Parsed algebra file. Products are stored exactly as written, keyed by the
// ordered basis index pair; missing pairs multiply to zero. For Lie files the
// reversed pair is filled in by antisymmetry at instantiation time unless the
// file spells it out itself.
struct AlgebraSpec {
  std::string kind; // "lie", "associative" or "plain"
  std::vector<std::string> names;
  std::map<std::pair<size_t, size_t>, std::vector<std::pair<CoeffExpr, size_t>>> products;
};

// Format, one directive per line, '#' starts a comment:
//   kind lie
//   dim 3
//   basis e h f
//   bracket e f = h
//   bracket h e = 2 e
// Coefficients are rationals `p/q`, root powers `z^k`, or products
// `p/q*z^k`; a bare basis name means coefficient one; terms are joined with
// + or -. Associative and plain files use `product` lines instead.
AlgebraSpec parse_algebra_file(const std::string& path);

// Validates axioms for the declared kind and returns the algebra over
// Q(zeta_conductor).
FiniteAlgebra instantiate(const AlgebraSpec& spec, unsigned conductor);

// One square matrix per automorphism, row by row:
//   sigma
//   0 0 -1
//   0 -1 0
//   -1 0 0
// Entries are single coefficient tokens in the same syntax as above.
using SigmaMatrix = std::vector<std::vector<CoeffExpr>>;

std::vector<SigmaMatrix> parse_sigma_file(const std::string& path);

ExactMatrix instantiate(const SigmaMatrix& m, unsigned conductor);

} // namespace loomalg
