#include "loomalg/descent.hpp"

#include <stdexcept>

namespace loomalg {

size_t GaloisCocycle::index_of(const std::vector<unsigned>& gamma) const {
  if (gamma.size() != orders.size())
    throw std::invalid_argument("group element has wrong length");
  size_t idx = 0, radix = 1;
  for (size_t j = 0; j < orders.size(); ++j) {
    if (gamma[j] >= orders[j]) throw std::invalid_argument("group digit out of range");
    idx += gamma[j] * radix;
    radix *= orders[j];
  }
  return idx;
}

std::vector<unsigned> GaloisCocycle::element_of(size_t index) const {
  std::vector<unsigned> gamma(orders.size());
  for (size_t j = 0; j < orders.size(); ++j) {
    gamma[j] = static_cast<unsigned>(index % orders[j]);
    index /= orders[j];
  }
  return gamma;
}

GaloisCocycle cocycle_from_automorphisms(const FiniteAlgebra& a,
                                         const CommutingAutomorphisms& sigma) {
  GaloisCocycle c;
  c.orders = sigma.orders;
  c.conductor = a.conductor();
  size_t order = 1;
  for (unsigned m : sigma.orders) order *= m;
  c.maps.reserve(order);
  for (size_t idx = 0; idx < order; ++idx) {
    std::vector<unsigned> gamma(sigma.orders.size());
    size_t rem = idx;
    for (size_t j = 0; j < sigma.orders.size(); ++j) {
      gamma[j] = static_cast<unsigned>(rem % sigma.orders[j]);
      rem /= sigma.orders[j];
    }
    ExactMatrix v = ExactMatrix::identity(a.dim(), a.conductor());
    for (size_t j = 0; j < sigma.orders.size(); ++j) {
      // sigma_j^{-gamma_j} = sigma_j^{m_j - gamma_j}
      unsigned e = (sigma.orders[j] - gamma[j]) % sigma.orders[j];
      v = v * matrix_power(sigma.maps[j], e);
    }
    c.maps.push_back(std::move(v));
  }
  return c;
}

bool check_cocycle(const GaloisCocycle& c) {
  size_t order = c.group_order();
  if (order == 0) return false;
  std::vector<unsigned> zero(c.orders.size(), 0);
  size_t dim = c.maps[0].rows();
  if (c.at(zero) != ExactMatrix::identity(dim, c.conductor)) return false;
  for (size_t i = 0; i < order; ++i)
    for (size_t j = 0; j < order; ++j) {
      std::vector<unsigned> gi = c.element_of(i), gj = c.element_of(j), sum(c.orders.size());
      for (size_t k = 0; k < c.orders.size(); ++k) sum[k] = (gi[k] + gj[k]) % c.orders[k];
      if (c.at(sum) != c.maps[i] * c.maps[j]) return false;
    }
  return true;
}

Cyclotomic galois_character(unsigned conductor, const std::vector<unsigned>& orders,
                            const std::vector<unsigned>& gamma, const Degree& a) {
  long long expo = 0;
  for (size_t j = 0; j < orders.size(); ++j) {
    long long step = static_cast<long long>(conductor / orders[j]);
    expo += static_cast<long long>(gamma[j]) * a[j] * step;
  }
  return Cyclotomic::root_power(conductor, expo);
}

std::vector<Vec> fixed_point_basis(const FiniteAlgebra& a, const GaloisCocycle& c,
                                   const Degree& deg) {
  size_t dim = a.dim();
  unsigned cond = a.conductor();
  std::vector<Vec> rows;
  for (size_t idx = 1; idx < c.group_order(); ++idx) {
    std::vector<unsigned> gamma = c.element_of(idx);
    Cyclotomic chi = galois_character(cond, c.orders, gamma, deg);
    const ExactMatrix& v = c.maps[idx];
    for (size_t r = 0; r < dim; ++r) {
      Vec row = zero_vec(dim, cond);
      for (size_t s = 0; s < dim; ++s) {
        row[s] = chi * v.at(r, s);
        if (r == s) row[s] -= Cyclotomic::one(cond);
      }
      rows.push_back(std::move(row));
    }
  }
  return nullspace(ExactMatrix::from_rows(rows, dim, cond));
}

DescentComparison compare_with_multiloop(const MultiloopAlgebra& ml, const GaloisCocycle& c,
                                         const Window& w) {
  DescentComparison out;
  for (const Degree& a : w.degrees()) {
    std::vector<Vec> fixed = fixed_point_basis(ml.base(), c, a);
    size_t cls = ml.class_of(a);
    const std::vector<Vec>& block = ml.class_basis(cls);
    if (fixed.size() != block.size()) {
      out.detail = "dimension mismatch at degree " + degree_str(a) + ": fixed " +
                   std::to_string(fixed.size()) + ", graded " + std::to_string(block.size());
      return out;
    }
    RowSpan fixed_span(ml.conductor()), block_span(ml.conductor());
    for (const Vec& v : fixed) fixed_span.insert(v);
    for (const Vec& v : block) block_span.insert(v);
    for (const Vec& v : block)
      if (!fixed_span.contains(v)) {
        out.detail = "graded block escapes the fixed points at degree " + degree_str(a);
        return out;
      }
    for (const Vec& v : fixed)
      if (!block_span.contains(v)) {
        out.detail = "fixed points escape the graded block at degree " + degree_str(a);
        return out;
      }
    ++out.degrees_checked;
    out.total_dim += fixed.size();
  }
  out.equal = true;
  return out;
}

} // namespace loomalg
