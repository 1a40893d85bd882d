#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loomalg/algebra.hpp"

namespace loomalg {

// Degrees live in the numerator lattice: the integer vector a stands for the
// fractional monomial t^{a/m} componentwise, t_j^{a_j/m_j}. Integer powers of
// t_j are therefore the multiples of m_j in slot j.
using Degree = std::vector<int>;

Degree degree_add(const Degree& a, const Degree& b);
Degree degree_sub(const Degree& a, const Degree& b);
Degree degree_neg(const Degree& a);
Degree zero_degree(size_t n);
std::string degree_str(const Degree& a);
// Whether every slot is a multiple of the matching order, i.e. the degree is
// an integer monomial shift.
bool degree_is_integral(const Degree& a, const std::vector<unsigned>& orders);

// Symmetric box |a_j| <= radius[j].
struct Window {
  std::vector<int> radius;

  explicit Window(std::vector<int> r) : radius(std::move(r)) {}
  size_t nvars() const { return radius.size(); }
  bool contains(const Degree& a) const;
  // All degrees in the box, lexicographic, each slot from -radius to radius.
  std::vector<Degree> degrees() const;
  size_t count() const;
};

// The graded algebra attached to a finite-dimensional algebra A and a tuple
// of commuting automorphisms sigma with orders m. Degree a carries the
// simultaneous eigenspace of class (a_j mod m_j), tensored with t^{a/m}.
// Blocks are handled in class coordinates throughout.
class MultiloopAlgebra {
public:
  static MultiloopAlgebra create(FiniteAlgebra base, CommutingAutomorphisms sigma);

  const FiniteAlgebra& base() const { return base_; }
  const CommutingAutomorphisms& twists() const { return sigma_; }
  const std::vector<unsigned>& orders() const { return sigma_.orders; }
  unsigned conductor() const { return base_.conductor(); }
  size_t nvars() const { return sigma_.orders.size(); }
  size_t class_count() const { return class_bases_.size(); }

  // Mixed-radix index of the eigenclass of a degree.
  size_t class_of(const Degree& a) const;
  size_t class_sum(size_t c1, size_t c2) const;
  // Basis of the eigenspace, as column vectors in A coordinates.
  const std::vector<Vec>& class_basis(size_t cls) const { return class_bases_[cls]; }
  size_t class_dim(size_t cls) const { return class_bases_[cls].size(); }
  size_t block_dim(const Degree& a) const { return class_dim(class_of(a)); }

  // Structure constants in class coordinates: for u_i in basis(c1) and
  // v_j in basis(c2), the product is sum_k T[(i*d2 + j)*d3 + k] w_k with
  // w_k in basis(class_sum(c1, c2)).
  const std::vector<Cyclotomic>& class_tensor(size_t c1, size_t c2) const;

  // Product of homogeneous elements in class coordinates; the result sits
  // at degree a + b.
  Vec bracket_coords(const Degree& a, const Vec& x, const Degree& b, const Vec& y) const;

  Vec to_algebra_coords(size_t cls, const Vec& class_coords) const;
  // Fails when the vector does not lie in the eigenspace.
  std::optional<Vec> to_class_coords(size_t cls, const Vec& algebra_coords) const;

  size_t window_dim(const Window& w) const;

  std::string describe_block_element(const Degree& a, const Vec& class_coords) const;

private:
  MultiloopAlgebra() = default;

  FiniteAlgebra base_;
  CommutingAutomorphisms sigma_;
  std::vector<std::vector<Vec>> class_bases_;
  ExactMatrix basis_change_;     // columns: all class bases, class-major
  ExactMatrix basis_change_inv_;
  std::vector<size_t> class_offset_;
  // Tensor per ordered class pair, precomputed so reads need no locking.
  std::vector<std::vector<Cyclotomic>> tensors_;
};

} // namespace loomalg
