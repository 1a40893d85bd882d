#include "loomalg/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace loomalg {

namespace {

void check_lie_axioms(const FiniteAlgebra& a) {
  size_t n = a.dim();
  // Antisymmetry including [x,x] = 0 on basis elements.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j) {
          if (!a.c(i, i, k).is_zero())
            throw std::invalid_argument("lie check failed: [x_" + std::to_string(i) +
                                        ", x_" + std::to_string(i) + "] != 0");
        } else if (a.c(i, j, k) + a.c(j, i, k) != Cyclotomic::zero(a.conductor())) {
          throw std::invalid_argument("lie check failed: bracket not antisymmetric on (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
  // Jacobi on basis triples.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Vec ei = zero_vec(n, a.conductor()), ej = ei, ek = ei;
        ei[i] = Cyclotomic::one(a.conductor());
        ej[j] = Cyclotomic::one(a.conductor());
        ek[k] = Cyclotomic::one(a.conductor());
        Vec s = vec_add(vec_add(a.multiply(a.multiply(ei, ej), ek),
                                a.multiply(a.multiply(ej, ek), ei)),
                        a.multiply(a.multiply(ek, ei), ej));
        if (!vec_is_zero(s))
          throw std::invalid_argument("lie check failed: jacobi fails on (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
      }
}

void check_associativity(const FiniteAlgebra& a) {
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Vec ei = zero_vec(n, a.conductor()), ej = ei, ek = ei;
        ei[i] = Cyclotomic::one(a.conductor());
        ej[j] = Cyclotomic::one(a.conductor());
        ek[k] = Cyclotomic::one(a.conductor());
        Vec lhs = a.multiply(a.multiply(ei, ej), ek);
        Vec rhs = a.multiply(ei, a.multiply(ej, ek));
        if (lhs != rhs)
          throw std::invalid_argument("associativity fails on (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
      }
}

} // namespace

FiniteAlgebra FiniteAlgebra::create(std::vector<std::string> basis_names,
                                    std::vector<Cyclotomic> structure, unsigned conductor,
                                    bool is_lie, bool is_associative) {
  FiniteAlgebra a;
  a.dim_ = basis_names.size();
  a.conductor_ = conductor;
  a.names_ = std::move(basis_names);
  a.is_lie_ = is_lie;
  a.is_associative_ = is_associative;
  if (a.dim_ == 0) throw std::invalid_argument("algebra needs at least one basis element");
  if (structure.size() != a.dim_ * a.dim_ * a.dim_)
    throw std::invalid_argument("structure constant tensor has wrong size");
  for (auto& c : structure)
    if (c.conductor() != conductor)
      throw std::invalid_argument("structure constant conductor mismatch");
  a.sc_ = std::move(structure);
  if (is_lie) check_lie_axioms(a);
  if (is_associative) check_associativity(a);
  return a;
}

Vec FiniteAlgebra::product_of_basis(size_t i, size_t j) const {
  Vec out = zero_vec(dim_, conductor_);
  for (size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("multiply: wrong vector length");
  Vec out = zero_vec(dim_, conductor_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Cyclotomic f = x[i] * y[j];
      for (size_t k = 0; k < dim_; ++k) {
        const Cyclotomic& s = c(i, j, k);
        if (!s.is_zero()) out[k] += f * s;
      }
    }
  }
  return out;
}

std::string FiniteAlgebra::describe_element(const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < dim_ && i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << x[i].str() << ")*" << names_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool is_perfect(const FiniteAlgebra& a) {
  RowSpan span(a.conductor());
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      span.insert(a.product_of_basis(i, j));
      if (span.rank() == a.dim()) return true;
    }
  return span.rank() == a.dim();
}

// The centroid conditions on chi, with unknowns u(r,s) = chi[r][s] meaning
// chi(x_s) has coefficient chi[r][s] at x_r:
//   chi(x_i x_j) = chi(x_i) x_j :  sum_k c[i][j][k] chi[r][k] = sum_s chi[s][i] c[s][j][r]
//   chi(x_i x_j) = x_i chi(x_j) :  sum_k c[i][j][k] chi[r][k] = sum_s chi[s][j] c[i][s][r]
std::vector<ExactMatrix> centroid_basis(const FiniteAlgebra& a) {
  size_t n = a.dim();
  size_t unknowns = n * n;
  auto u = [n](size_t r, size_t s) { return r * n + s; };
  std::vector<Vec> rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t r = 0; r < n; ++r) {
        Vec left = zero_vec(unknowns, a.conductor());
        Vec right = zero_vec(unknowns, a.conductor());
        for (size_t k = 0; k < n; ++k) {
          left[u(r, k)] += a.c(i, j, k);
          right[u(r, k)] += a.c(i, j, k);
        }
        for (size_t s = 0; s < n; ++s) {
          left[u(s, i)] -= a.c(s, j, r);
          right[u(s, j)] -= a.c(i, s, r);
        }
        if (!vec_is_zero(left)) rows.push_back(std::move(left));
        if (!vec_is_zero(right)) rows.push_back(std::move(right));
      }
  ExactMatrix system = ExactMatrix::from_rows(rows, unknowns, a.conductor());
  std::vector<Vec> null = nullspace(system);
  std::vector<ExactMatrix> out;
  for (const Vec& v : null) {
    ExactMatrix m(n, n, a.conductor());
    for (size_t r = 0; r < n; ++r)
      for (size_t s = 0; s < n; ++s) m.at(r, s) = v[u(r, s)];
    out.push_back(std::move(m));
  }
  return out;
}

bool is_central(const FiniteAlgebra& a) {
  std::vector<ExactMatrix> ctd = centroid_basis(a);
  if (ctd.size() != 1) return false;
  // The one basis vector must be a nonzero multiple of the identity.
  const ExactMatrix& m = ctd[0];
  Cyclotomic diag = m.at(0, 0);
  if (diag.is_zero()) return false;
  return m == ExactMatrix::identity(a.dim(), a.conductor()).scaled(diag);
}

// Leibniz on basis pairs: sum_k c[i][j][k] D[r][k] = sum_s D[s][i] c[s][j][r]
//                                                  + sum_s D[s][j] c[i][s][r]
std::vector<ExactMatrix> algebra_derivations(const FiniteAlgebra& a) {
  size_t n = a.dim();
  size_t unknowns = n * n;
  auto u = [n](size_t r, size_t s) { return r * n + s; };
  std::vector<Vec> rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t r = 0; r < n; ++r) {
        Vec row = zero_vec(unknowns, a.conductor());
        for (size_t k = 0; k < n; ++k) row[u(r, k)] += a.c(i, j, k);
        for (size_t s = 0; s < n; ++s) {
          row[u(s, i)] -= a.c(s, j, r);
          row[u(s, j)] -= a.c(i, s, r);
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
  ExactMatrix system = ExactMatrix::from_rows(rows, unknowns, a.conductor());
  std::vector<Vec> null = nullspace(system);
  std::vector<ExactMatrix> out;
  for (const Vec& v : null) {
    ExactMatrix m(n, n, a.conductor());
    for (size_t r = 0; r < n; ++r)
      for (size_t s = 0; s < n; ++s) m.at(r, s) = v[u(r, s)];
    out.push_back(std::move(m));
  }
  return out;
}

ExactMatrix ad_matrix(const FiniteAlgebra& a, const Vec& x) {
  size_t n = a.dim();
  ExactMatrix m(n, n, a.conductor());
  for (size_t j = 0; j < n; ++j) {
    Vec ej = zero_vec(n, a.conductor());
    ej[j] = Cyclotomic::one(a.conductor());
    Vec col = a.multiply(x, ej);
    for (size_t r = 0; r < n; ++r) m.at(r, j) = col[r];
  }
  return m;
}

bool endo_is_centroidal(const FiniteAlgebra& a, const ExactMatrix& m) {
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec ei = zero_vec(n, a.conductor()), ej = ei;
      ei[i] = Cyclotomic::one(a.conductor());
      ej[j] = Cyclotomic::one(a.conductor());
      Vec prod = a.multiply(ei, ej);
      Vec lhs = m.apply(prod);
      if (lhs != a.multiply(m.apply(ei), ej)) return false;
      if (lhs != a.multiply(ei, m.apply(ej))) return false;
    }
  return true;
}

bool endo_is_derivation(const FiniteAlgebra& a, const ExactMatrix& m) {
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec ei = zero_vec(n, a.conductor()), ej = ei;
      ei[i] = Cyclotomic::one(a.conductor());
      ej[j] = Cyclotomic::one(a.conductor());
      Vec lhs = m.apply(a.multiply(ei, ej));
      Vec rhs = vec_add(a.multiply(m.apply(ei), ej), a.multiply(ei, m.apply(ej)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool endo_is_automorphism(const FiniteAlgebra& a, const ExactMatrix& m,
                          std::string* offending_pair) {
  size_t n = a.dim();
  if (!inverse(m)) {
    if (offending_pair) *offending_pair = "map is singular";
    return false;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec ei = zero_vec(n, a.conductor()), ej = ei;
      ei[i] = Cyclotomic::one(a.conductor());
      ej[j] = Cyclotomic::one(a.conductor());
      Vec lhs = m.apply(a.multiply(ei, ej));
      Vec rhs = a.multiply(m.apply(ei), m.apply(ej));
      if (lhs != rhs) {
        if (offending_pair)
          *offending_pair = "(" + a.basis_names()[i] + ", " + a.basis_names()[j] + ")";
        return false;
      }
    }
  return true;
}

CommutingAutomorphisms validate_automorphism_tuple(const FiniteAlgebra& a,
                                                   std::vector<ExactMatrix> maps,
                                                   std::vector<unsigned> orders) {
  if (maps.size() != orders.size())
    throw std::invalid_argument("automorphism count does not match order count");
  size_t n = maps.size();
  for (size_t i = 0; i < n; ++i) {
    if (orders[i] == 0) throw std::invalid_argument("automorphism order must be positive");
    if (maps[i].rows() != a.dim() || maps[i].cols() != a.dim())
      throw std::invalid_argument("automorphism matrix has wrong shape");
    std::string bad;
    if (!endo_is_automorphism(a, maps[i], &bad))
      throw std::invalid_argument("map " + std::to_string(i + 1) +
                                  " is not an automorphism, fails at " + bad);
    if (matrix_power(maps[i], orders[i]) != ExactMatrix::identity(a.dim(), a.conductor()))
      throw std::invalid_argument("map " + std::to_string(i + 1) + " does not satisfy sigma^" +
                                  std::to_string(orders[i]) + " = id");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (maps[i] * maps[j] != maps[j] * maps[i])
        throw std::invalid_argument("maps " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " do not commute");
  CommutingAutomorphisms t;
  t.maps = std::move(maps);
  t.orders = std::move(orders);
  return t;
}

} // namespace loomalg
