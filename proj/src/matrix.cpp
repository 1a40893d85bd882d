#include "loomalg/matrix.hpp"

#include <stdexcept>

namespace loomalg {

bool vec_is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Vec& v, const Cyclotomic& c) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

Vec zero_vec(size_t n, unsigned conductor) {
  return Vec(n, Cyclotomic::zero(conductor));
}

ExactMatrix::ExactMatrix(size_t rows, size_t cols, unsigned conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      a_(rows * cols, Cyclotomic::zero(conductor)) {}

ExactMatrix ExactMatrix::identity(size_t n, unsigned conductor) {
  ExactMatrix m(n, n, conductor);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(conductor);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, size_t cols,
                                   unsigned conductor) {
  ExactMatrix m(rows.size(), cols, conductor);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, conductor_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec ExactMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec out = zero_vec(rows_, conductor_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || x[j].is_zero()) continue;
      out[i] += at(i, j) * x[j];
    }
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matmul: shape mismatch");
  ExactMatrix out(rows_, o.cols_, conductor_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix add: shape mismatch");
  ExactMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sub: shape mismatch");
  ExactMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& c : out.a_) c = -c;
  return out;
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& c) const {
  ExactMatrix out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && conductor_ == o.conductor_ &&
         a_ == o.a_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& c : a_)
    if (!c.is_zero()) return false;
  return true;
}

Vec ExactMatrix::row(size_t i) const {
  Vec out(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  return out;
}

Vec ExactMatrix::col(size_t j) const {
  Vec out;
  out.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

ExactMatrix matrix_power(ExactMatrix m, unsigned e) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power of non-square matrix");
  ExactMatrix result = ExactMatrix::identity(m.rows(), m.conductor());
  while (e > 0) {
    if (e & 1u) result = result * m;
    m = m * m;
    e >>= 1u;
  }
  return result;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a * b - b * a;
}

void normalize_row_content(Vec& row) {
  namespace mp = boost::multiprecision;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& entry : row)
    for (const auto& c : entry.coeff()) {
      if (c == 0) continue;
      den_lcm = mp::lcm(den_lcm, Integer(denominator(c)));
      num_gcd = mp::gcd(num_gcd, mp::abs(Integer(numerator(c))));
    }
  if (num_gcd == 0) return; // zero row
  Rational factor(den_lcm, num_gcd); // positive: gcd and lcm are nonnegative
  if (factor == 1) return;
  for (auto& entry : row) entry.scale(factor);
}

namespace {

// Shared elimination core. Works on a row list in place.
struct Elim {
  std::vector<Vec> rows;
  std::vector<size_t> pivot_cols;
  unsigned conductor;
  size_t cols;

  void run() {
    size_t r = 0;
    for (auto& row : rows) normalize_row_content(row);
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
      size_t sel = r;
      while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[r], rows[sel]);
      // eliminate everywhere else
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c].is_zero()) continue;
        Cyclotomic f = rows[i][c] * rows[r][c].inverse();
        for (size_t j = c; j < cols; ++j) {
          if (rows[r][j].is_zero()) continue;
          rows[i][j] -= f * rows[r][j];
        }
        normalize_row_content(rows[i]);
      }
      pivot_cols.push_back(c);
      ++r;
    }
    // unit pivots
    for (size_t i = 0; i < pivot_cols.size(); ++i) {
      Cyclotomic inv = rows[i][pivot_cols[i]].inverse();
      for (size_t j = pivot_cols[i]; j < cols; ++j) {
        if (rows[i][j].is_zero()) continue;
        rows[i][j] *= inv;
      }
    }
  }
};

Elim eliminate(const ExactMatrix& m) {
  Elim e;
  e.conductor = m.conductor();
  e.cols = m.cols();
  e.rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) e.rows.push_back(m.row(i));
  e.run();
  return e;
}

} // namespace

RrefResult rref(const ExactMatrix& m) {
  Elim e = eliminate(m);
  RrefResult out;
  out.mat = ExactMatrix(m.rows(), m.cols(), m.conductor());
  for (size_t i = 0; i < e.rows.size(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.mat.at(i, j) = e.rows[i][j];
  out.pivot_cols = std::move(e.pivot_cols);
  return out;
}

size_t rank(const ExactMatrix& m) { return eliminate(m).pivot_cols.size(); }

std::vector<Vec> nullspace(const ExactMatrix& m) {
  Elim e = eliminate(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.cols(), m.conductor());
    v[f] = Cyclotomic::one(m.conductor());
    for (size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const ExactMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1, a.conductor());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Elim e = eliminate(aug);
  for (size_t c : e.pivot_cols)
    if (c == a.cols()) return std::nullopt; // inconsistent
  Vec x = zero_vec(a.cols(), a.conductor());
  for (size_t i = 0; i < e.pivot_cols.size(); ++i)
    x[e.pivot_cols[i]] = e.rows[i][a.cols()];
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const size_t n = m.rows();
  ExactMatrix aug(n, 2 * n, m.conductor());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Cyclotomic::one(m.conductor());
  }
  RrefResult r = rref(aug);
  if (r.rank() < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n, m.conductor());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

std::optional<Vec> subspace_membership(const Vec& v, const std::vector<Vec>& gens) {
  if (gens.empty()) {
    if (vec_is_zero(v)) return Vec{};
    return std::nullopt;
  }
  const unsigned conductor = v.empty() ? gens[0][0].conductor() : v[0].conductor();
  ExactMatrix m(v.size(), gens.size(), conductor);
  for (size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != v.size())
      throw std::invalid_argument("membership: generator size mismatch");
    for (size_t i = 0; i < v.size(); ++i) m.at(i, j) = gens[j][i];
  }
  return solve(m, v);
}

void RowSpan::reduce(Vec& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic& c = v[lead_[i]];
    if (c.is_zero()) continue;
    Cyclotomic f = c; // rows_ have unit leading entries
    for (size_t j = 0; j < v.size(); ++j) {
      if (rows_[i][j].is_zero()) continue;
      v[j] -= f * rows_[i][j];
    }
  }
}

bool RowSpan::insert(Vec v) {
  reduce(v);
  size_t lead = v.size();
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) {
      lead = j;
      break;
    }
  if (lead == v.size()) return false;
  Cyclotomic inv = v[lead].inverse();
  for (auto& c : v) {
    if (c.is_zero()) continue;
    c *= inv;
  }
  // keep earlier rows reduced against the new one
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic& c = rows_[i][lead];
    if (c.is_zero()) continue;
    Cyclotomic f = c;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      rows_[i][j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  lead_.push_back(lead);
  return true;
}

bool RowSpan::contains(Vec v) const {
  reduce(v);
  return vec_is_zero(v);
}

} // namespace loomalg
