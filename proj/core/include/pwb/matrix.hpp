#pragma once

#include <string>
#include <vector>

#include "pwb/upoly.hpp"

namespace pwb {

using Vec = std::vector<Cyclo>;

// Dense row-major matrix over cyclotomic fields.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);
  static Matrix diagonal(const Vec& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyclo& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Cyclo& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Vec column(int j) const;
  Vec row(int i) const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Cyclo& c) const;
  Matrix transpose() const;
  Matrix pow(long e) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_identity() const;
  // Exactly one nonzero entry per column.
  bool is_monomial() const;
  Cyclo trace() const;
  Cyclo det() const;
  Matrix inverse() const;
  int rank() const;
  // Reduces in place; returns pivot columns.
  std::vector<int> rref();
  // Basis of {v : M v = 0}; each vector has its first nonzero entry equal to 1.
  std::vector<Vec> kernel() const;
  // det(t I - M).
  UPoly charpoly() const;
  UPoly minpoly() const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Cyclo> a_;
};

// Incremental row echelon form: rows are kept with distinct pivots and each
// row vanishes at the pivots of the rows stored before it.
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}
  // Reduces v against the stored rows; stores it and returns true when independent.
  bool add(Vec v);
  // True when v lies in the row space.
  bool contains(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }

 private:
  void reduce(Vec& v) const;
  int ncols_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Row-space basis in reduced row echelon form.
std::vector<Vec> rref_basis(const std::vector<Vec>& vectors);
// Scales v so its first nonzero entry is 1.
Vec normalize_first(Vec v);
bool is_zero_vec(const Vec& v);
Cyclo dot(const Vec& a, const Vec& b);

}  // namespace pwb
