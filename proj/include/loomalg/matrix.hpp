#pragma once

#include <optional>
#include <vector>

#include "loomalg/cyclotomic.hpp"

namespace loomalg {

using Vec = std::vector<Cyclotomic>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& v, const Cyclotomic& c);
Vec zero_vec(size_t n, unsigned conductor);

// Dense matrix over Q(zeta_m), row-major. All entries share one conductor.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0), conductor_(1) {}
  ExactMatrix(size_t rows, size_t cols, unsigned conductor);
  static ExactMatrix identity(size_t n, unsigned conductor);
  // Stacks the given rows; `cols` disambiguates the empty case.
  static ExactMatrix from_rows(const std::vector<Vec>& rows, size_t cols, unsigned conductor);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  unsigned conductor() const { return conductor_; }

  Cyclotomic& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  ExactMatrix transpose() const;
  Vec apply(const Vec& x) const; // matrix * column vector
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const Cyclotomic& c) const;
  bool operator==(const ExactMatrix& o) const;
  bool is_zero() const;

  Vec row(size_t i) const;
  Vec col(size_t j) const;

private:
  size_t rows_, cols_;
  unsigned conductor_;
  std::vector<Cyclotomic> a_;
};

ExactMatrix matrix_power(ExactMatrix m, unsigned e);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

// Scales a row of cyclotomic entries by the positive rational that clears all
// denominators and divides out the integer content. Keeps elimination
// intermediates small; a no-op on zero rows.
void normalize_row_content(Vec& row);

struct RrefResult {
  ExactMatrix mat;                // reduced row echelon form, unit pivots
  std::vector<size_t> pivot_cols; // one per nonzero row, increasing
  size_t rank() const { return pivot_cols.size(); }
};

RrefResult rref(const ExactMatrix& m);
size_t rank(const ExactMatrix& m);

// Basis of {x : m x = 0}; deterministic (free columns in increasing order).
std::vector<Vec> nullspace(const ExactMatrix& m);

// One solution of A x = b, if consistent.
std::optional<Vec> solve(const ExactMatrix& a, const Vec& b);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

// Coordinates of v in span(gens), if it lies there. gens are column vectors.
std::optional<Vec> subspace_membership(const Vec& v, const std::vector<Vec>& gens);

// Incrementally maintained reduced row space; cheap repeated membership tests
// against a fixed spanning set.
class RowSpan {
public:
  explicit RowSpan(unsigned conductor) : conductor_(conductor) {}
  // Returns true if v enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  size_t rank() const { return rows_.size(); }

private:
  void reduce(Vec& v) const;
  unsigned conductor_;
  std::vector<Vec> rows_;           // unit leading entry, echelon order
  std::vector<size_t> lead_;        // leading column per row
};

} // namespace loomalg
