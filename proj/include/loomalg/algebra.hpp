#pragma once

#include <string>
#include <vector>

#include "loomalg/matrix.hpp"

namespace loomalg {

// Finite-dimensional algebra over Q(zeta_m), given by structure constants
// c[i][j][k]: x_i * x_j = sum_k c[i][j][k] x_k. The is_lie / is_associative
// flags are promises checked at construction, not hints.
class FiniteAlgebra {
public:
  FiniteAlgebra() = default; // empty placeholder; real instances come from create()
  static FiniteAlgebra create(std::vector<std::string> basis_names,
                              std::vector<Cyclotomic> structure, // dim^3, ((i*dim)+j)*dim+k
                              unsigned conductor, bool is_lie, bool is_associative);

  size_t dim() const { return dim_; }
  unsigned conductor() const { return conductor_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool is_lie() const { return is_lie_; }
  bool is_associative() const { return is_associative_; }

  const Cyclotomic& c(size_t i, size_t j, size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  // Structure-constant vector of x_i * x_j.
  Vec product_of_basis(size_t i, size_t j) const;
  Vec multiply(const Vec& x, const Vec& y) const;

  std::string describe_element(const Vec& x) const;

private:
  size_t dim_ = 0;
  unsigned conductor_ = 1;
  std::vector<std::string> names_;
  std::vector<Cyclotomic> sc_;
  bool is_lie_ = false, is_associative_ = false;
};

// True when products of basis pairs span the whole algebra.
bool is_perfect(const FiniteAlgebra& a);

// Basis of {chi in End(A) : chi(xy) = chi(x)y = x chi(y)}.
std::vector<ExactMatrix> centroid_basis(const FiniteAlgebra& a);

// Centroid reduced to scalars: dimension one and containing the identity.
bool is_central(const FiniteAlgebra& a);

// Basis of {D in End(A) : D(xy) = D(x)y + x D(y)}.
std::vector<ExactMatrix> algebra_derivations(const FiniteAlgebra& a);

// Left-multiplication operator y -> x*y as a matrix.
ExactMatrix ad_matrix(const FiniteAlgebra& a, const Vec& x);

// Exact predicate checks used by tests and validators.
bool endo_is_centroidal(const FiniteAlgebra& a, const ExactMatrix& m);
bool endo_is_derivation(const FiniteAlgebra& a, const ExactMatrix& m);
bool endo_is_automorphism(const FiniteAlgebra& a, const ExactMatrix& m,
                          std::string* offending_pair = nullptr);

// A tuple of commuting algebra automorphisms with prescribed order bounds:
// sigma[i]^{orders[i]} = id. This is the twisting data of a multiloop
// construction; validate_automorphism_tuple is the only way to build one.
struct CommutingAutomorphisms {
  std::vector<ExactMatrix> maps;
  std::vector<unsigned> orders;
  size_t count() const { return maps.size(); }
};

CommutingAutomorphisms validate_automorphism_tuple(const FiniteAlgebra& a,
                                                   std::vector<ExactMatrix> maps,
                                                   std::vector<unsigned> orders);

} // namespace loomalg
