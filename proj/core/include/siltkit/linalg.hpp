#pragma once

#include <optional>
#include <vector>

#include "siltkit/rational.hpp"

namespace siltkit {

/* Dense exact-rational matrix for module-scale work. */
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : r_(rows), c_(cols), d_((size_t)rows * cols, Rat(0)) {}

  static RatMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return d_[(size_t)i * c_ + j]; }
  const Rat& at(int i, int j) const { return d_[(size_t)i * c_ + j]; }

  RatMat transpose() const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-() const;
  bool operator==(const RatMat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
  bool is_zero() const;

  int rank() const;
  Rat det() const;
  std::optional<RatMat> inverse() const;
  /* basis of the right kernel {x : Ax = 0}, one column vector per entry */
  std::vector<std::vector<Rat>> kernel() const;
  /* particular solution of Ax = b, if consistent */
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  /* characteristic polynomial, ascending coefficients, monic of degree n */
  std::vector<Rat> charpoly() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> d_;
};

/* Incremental echelon span of dense vectors; used for subspace arithmetic. */
class RowSpace {
 public:
  explicit RowSpace(int width) : width_(width) {}
  int dim() const { return (int)rows_.size(); }
  int width() const { return width_; }
  /* reduce v against the span; returns the residue */
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  /* insert v; returns true when it enlarged the span */
  bool insert(std::vector<Rat> v);
  bool contains(const std::vector<Rat>& v) const;
  const std::vector<std::pair<int, std::vector<Rat>>>& rows() const { return rows_; }

 private:
  int width_;
  std::vector<std::pair<int, std::vector<Rat>>> rows_;  // (pivot col, row), pivot normalized to 1
};

/* Sparse exact-rational matrix with elimination tuned for the large,
 * very sparse chain-map systems. Rows are sorted (col, value) lists. */
class SparseMat {
 public:
  SparseMat(int rows, int cols) : r_(rows), c_(cols), rows_(rows) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  void add(int i, int j, const Rat& v);
  void finalize_row(int i);  // sort + combine duplicates
  size_t nnz() const;

  int rank() const;
  /* basis of the right kernel; intended for systems with small nullity */
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  int r_, c_;
  std::vector<std::vector<std::pair<int, Rat>>> rows_;

  struct ElimResult {
    int rank = 0;
    std::vector<std::pair<int, std::vector<std::pair<int, Rat>>>> pivots;  // (pivot col, row) in order
    std::vector<char> pivot_col;
  };
  ElimResult eliminate(bool keep_pivots) const;
};

/* polynomial helpers on ascending coefficient vectors */
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
/* exact division, throws consistency_error on nonzero remainder */
std::vector<Rat> poly_div_exact(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::string poly_str(const std::vector<Rat>& p, const std::string& var = "x");

}  // namespace siltkit
