#pragma once

#include <string>
#include <vector>

#include "loomalg/multiloop.hpp"

namespace loomalg {

// Galois side of the construction. The covering ring adjoins m_j-th roots of
// the variables; its Galois group over the base ring is the product of the
// cyclic groups Z/m_j, with generator j scaling t_j^{1/m_j} by zeta_{m_j}.
// A group element is a digit vector gamma, 0 <= gamma_j < m_j.
struct GaloisCocycle {
  std::vector<unsigned> orders;
  unsigned conductor = 1;
  // Value per group element, mixed-radix indexed (digit 0 fastest).
  std::vector<ExactMatrix> maps;

  size_t group_order() const { return maps.size(); }
  size_t index_of(const std::vector<unsigned>& gamma) const;
  std::vector<unsigned> element_of(size_t index) const;
  const ExactMatrix& at(const std::vector<unsigned>& gamma) const {
    return maps[index_of(gamma)];
  }
};

// The constant cocycle gamma -> sigma_1^{-gamma_1} ... sigma_n^{-gamma_n}.
GaloisCocycle cocycle_from_automorphisms(const FiniteAlgebra& a,
                                         const CommutingAutomorphisms& sigma);

// Multiplicativity v_{gamma+delta} = v_gamma v_delta and v_0 = id, over the
// whole group.
bool check_cocycle(const GaloisCocycle& c);

// chi_gamma(a) = zeta_m^{sum_j gamma_j a_j (m / m_j)}: how gamma scales the
// fractional monomial t^{a/m}.
Cyclotomic galois_character(unsigned conductor, const std::vector<unsigned>& orders,
                            const std::vector<unsigned>& gamma, const Degree& a);

// Basis of {x in A : chi_gamma(a) v_gamma(x) = x for all gamma}, the
// coefficients fixed by the twisted action at degree a.
std::vector<Vec> fixed_point_basis(const FiniteAlgebra& a, const GaloisCocycle& c,
                                   const Degree& deg);

struct DescentComparison {
  bool equal = false;
  size_t degrees_checked = 0;
  size_t total_dim = 0;
  std::string detail; // first mismatch, empty when equal
};

// Degree by degree over the window: the fixed-point spaces of the twisted
// action against the eigenspace blocks of the graded construction.
DescentComparison compare_with_multiloop(const MultiloopAlgebra& ml, const GaloisCocycle& c,
                                         const Window& w);

} // namespace loomalg
