#include "loomalg/multiloop.hpp"

#include <sstream>
#include <stdexcept>

namespace loomalg {

Degree degree_add(const Degree& a, const Degree& b) {
  Degree out(a.size());
  for (size_t j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
  return out;
}

Degree degree_sub(const Degree& a, const Degree& b) {
  Degree out(a.size());
  for (size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return out;
}

Degree degree_neg(const Degree& a) {
  Degree out(a.size());
  for (size_t j = 0; j < a.size(); ++j) out[j] = -a[j];
  return out;
}

Degree zero_degree(size_t n) { return Degree(n, 0); }

bool degree_is_integral(const Degree& a, const std::vector<unsigned>& orders) {
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] % static_cast<int>(orders[j]) != 0) return false;
  return true;
}

std::string degree_str(const Degree& a) {
  if (a.size() == 1) return std::to_string(a[0]);
  std::string s = "(";
  for (size_t j = 0; j < a.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(a[j]);
  }
  return s + ")";
}

bool Window::contains(const Degree& a) const {
  if (a.size() != radius.size()) return false;
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] < -radius[j] || a[j] > radius[j]) return false;
  return true;
}

std::vector<Degree> Window::degrees() const {
  std::vector<Degree> out;
  Degree cur(radius.size());
  for (size_t j = 0; j < radius.size(); ++j) cur[j] = -radius[j];
  while (true) {
    out.push_back(cur);
    size_t j = radius.size();
    while (j-- > 0) {
      if (cur[j] < radius[j]) {
        ++cur[j];
        for (size_t k = j + 1; k < radius.size(); ++k) cur[k] = -radius[k];
        break;
      }
      if (j == 0) return out;
    }
  }
}

size_t Window::count() const {
  size_t n = 1;
  for (int r : radius) n *= static_cast<size_t>(2 * r + 1);
  return n;
}

MultiloopAlgebra MultiloopAlgebra::create(FiniteAlgebra base, CommutingAutomorphisms sigma) {
  unsigned product = 1;
  for (unsigned m : sigma.orders) product *= m;
  if (base.conductor() != product)
    throw std::invalid_argument("base algebra must live over conductor " +
                                std::to_string(product) + ", the product of the twist orders");

  MultiloopAlgebra ml;
  ml.base_ = std::move(base);
  ml.sigma_ = std::move(sigma);
  const FiniteAlgebra& a = ml.base_;
  size_t dim = a.dim();
  unsigned cond = a.conductor();
  size_t n = ml.sigma_.orders.size();

  size_t nclasses = 1;
  for (unsigned m : ml.sigma_.orders) nclasses *= m;

  // Simultaneous eigenspaces: for class (a_1, ..., a_n), the kernel of the
  // stacked maps sigma_j - zeta^{a_j * cond/m_j}.
  ml.class_bases_.resize(nclasses);
  for (size_t cls = 0; cls < nclasses; ++cls) {
    size_t rem = cls;
    std::vector<unsigned> digits(n);
    for (size_t j = 0; j < n; ++j) {
      digits[j] = static_cast<unsigned>(rem % ml.sigma_.orders[j]);
      rem /= ml.sigma_.orders[j];
    }
    ExactMatrix stacked(n * dim, dim, cond);
    for (size_t j = 0; j < n; ++j) {
      Cyclotomic lambda = Cyclotomic::root_power(
          cond, static_cast<long long>(digits[j]) * (cond / ml.sigma_.orders[j]));
      for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
          Cyclotomic v = ml.sigma_.maps[j].at(r, c);
          if (r == c) v -= lambda;
          stacked.at(j * dim + r, c) = v;
        }
    }
    ml.class_bases_[cls] = nullspace(stacked);
  }

  // The eigenspaces decompose A: finite-order automorphisms over a field
  // containing the needed roots of unity are simultaneously diagonalizable.
  size_t total = 0;
  ml.class_offset_.resize(nclasses);
  for (size_t cls = 0; cls < nclasses; ++cls) {
    ml.class_offset_[cls] = total;
    total += ml.class_bases_[cls].size();
  }
  if (total != dim)
    throw std::logic_error("eigenspaces do not fill the algebra; dimension " +
                           std::to_string(total) + " of " + std::to_string(dim));

  ml.basis_change_ = ExactMatrix(dim, dim, cond);
  for (size_t cls = 0, col = 0; cls < nclasses; ++cls)
    for (const Vec& v : ml.class_bases_[cls]) {
      for (size_t r = 0; r < dim; ++r) ml.basis_change_.at(r, col) = v[r];
      ++col;
    }
  auto inv = inverse(ml.basis_change_);
  if (!inv) throw std::logic_error("eigenbasis is singular");
  ml.basis_change_inv_ = std::move(*inv);

  // Structure constants for every ordered class pair, in class coordinates.
  // Expressing each product checks the grading as a side effect: coordinates
  // outside the target class must vanish.
  ml.tensors_.resize(nclasses * nclasses);
  for (size_t c1 = 0; c1 < nclasses; ++c1)
    for (size_t c2 = 0; c2 < nclasses; ++c2) {
      size_t c3 = ml.class_sum(c1, c2);
      size_t d1 = ml.class_bases_[c1].size();
      size_t d2 = ml.class_bases_[c2].size();
      size_t d3 = ml.class_bases_[c3].size();
      std::vector<Cyclotomic> tensor(d1 * d2 * d3, Cyclotomic::zero(cond));
      for (size_t i = 0; i < d1; ++i)
        for (size_t j = 0; j < d2; ++j) {
          Vec prod = a.multiply(ml.class_bases_[c1][i], ml.class_bases_[c2][j]);
          Vec coords = ml.basis_change_inv_.apply(prod);
          for (size_t pos = 0; pos < dim; ++pos) {
            if (coords[pos].is_zero()) continue;
            if (pos < ml.class_offset_[c3] || pos >= ml.class_offset_[c3] + d3)
              throw std::logic_error("product escaped its eigenclass");
            tensor[(i * d2 + j) * d3 + (pos - ml.class_offset_[c3])] = coords[pos];
          }
        }
      ml.tensors_[c1 * nclasses + c2] = std::move(tensor);
    }
  return ml;
}

size_t MultiloopAlgebra::class_of(const Degree& a) const {
  if (a.size() != sigma_.orders.size())
    throw std::invalid_argument("degree has wrong variable count");
  size_t idx = 0, radix = 1;
  for (size_t j = 0; j < a.size(); ++j) {
    int m = static_cast<int>(sigma_.orders[j]);
    int r = ((a[j] % m) + m) % m;
    idx += static_cast<size_t>(r) * radix;
    radix *= sigma_.orders[j];
  }
  return idx;
}

size_t MultiloopAlgebra::class_sum(size_t c1, size_t c2) const {
  size_t idx = 0, radix = 1;
  for (unsigned m : sigma_.orders) {
    unsigned d1 = c1 % m, d2 = c2 % m;
    c1 /= m;
    c2 /= m;
    idx += static_cast<size_t>((d1 + d2) % m) * radix;
    radix *= m;
  }
  return idx;
}

const std::vector<Cyclotomic>& MultiloopAlgebra::class_tensor(size_t c1, size_t c2) const {
  return tensors_[c1 * class_count() + c2];
}

Vec MultiloopAlgebra::bracket_coords(const Degree& a, const Vec& x, const Degree& b,
                                     const Vec& y) const {
  size_t c1 = class_of(a), c2 = class_of(b);
  size_t c3 = class_sum(c1, c2);
  size_t d2 = class_dim(c2), d3 = class_dim(c3);
  const std::vector<Cyclotomic>& t = class_tensor(c1, c2);
  Vec out = zero_vec(d3, conductor());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      Cyclotomic f = x[i] * y[j];
      for (size_t k = 0; k < d3; ++k) {
        const Cyclotomic& s = t[(i * d2 + j) * d3 + k];
        if (!s.is_zero()) out[k] += f * s;
      }
    }
  }
  return out;
}

Vec MultiloopAlgebra::to_algebra_coords(size_t cls, const Vec& class_coords) const {
  Vec out = zero_vec(base_.dim(), conductor());
  const auto& basis = class_bases_[cls];
  if (class_coords.size() != basis.size())
    throw std::invalid_argument("class coordinate length mismatch");
  for (size_t i = 0; i < basis.size(); ++i)
    if (!class_coords[i].is_zero()) out = vec_add(out, vec_scale(basis[i], class_coords[i]));
  return out;
}

std::optional<Vec> MultiloopAlgebra::to_class_coords(size_t cls, const Vec& algebra_coords) const {
  Vec coords = basis_change_inv_.apply(algebra_coords);
  size_t off = class_offset_[cls], d = class_dim(cls);
  for (size_t pos = 0; pos < coords.size(); ++pos)
    if (!coords[pos].is_zero() && (pos < off || pos >= off + d)) return std::nullopt;
  return Vec(coords.begin() + off, coords.begin() + off + d);
}

size_t MultiloopAlgebra::window_dim(const Window& w) const {
  size_t total = 0;
  for (const Degree& a : w.degrees()) total += block_dim(a);
  return total;
}

std::string MultiloopAlgebra::describe_block_element(const Degree& a,
                                                     const Vec& class_coords) const {
  size_t cls = class_of(a);
  Vec alg = to_algebra_coords(cls, class_coords);
  std::ostringstream os;
  os << base_.describe_element(alg) << " (x) t^";
  if (a.size() == 1)
    os << a[0] << "/" << sigma_.orders[0];
  else {
    os << "(";
    for (size_t j = 0; j < a.size(); ++j) {
      if (j) os << ",";
      os << a[j] << "/" << sigma_.orders[j];
    }
    os << ")";
  }
  return os.str();
}

} // namespace loomalg
