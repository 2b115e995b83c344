#pragma once

#include <optional>
#include <vector>

#include "symqcs/scalar.hpp"

namespace symqcs {

/// Dense matrix over one exact field. Everything downstream (representations,
/// Day products, hom solves) is phrased in terms of these; all arithmetic is exact.
class Matrix {
 public:
  Matrix() : f_(Field::rationals()), rows_(0), cols_(0) {}
  Matrix(Field f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

  static Matrix identity(Field f, int n);
  static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Rat v) { at(r, c) = f_.reduce(std::move(v)); }

  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rat& c) const;
  Matrix transpose() const;

  /// Kronecker product on the lexicographic tensor basis, left factor major.
  Matrix kron(const Matrix& o) const;

  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  Matrix col(int c) const;
  std::vector<Rat> col_vec(int c) const;
  static Matrix from_cols(Field f, int rows, const std::vector<std::vector<Rat>>& cols);

  Matrix apply_cols(const Matrix& vecs) const { return (*this) * vecs; }

 private:
  void check_same(const Matrix& o) const;
  Field f_;
  int rows_, cols_;
  std::vector<Rat> a_;
};

struct RrefResult {
  Matrix r;                // reduced row echelon form
  int rank = 0;
  std::vector<int> pivots;  // pivot column per rank row
};

RrefResult rref(const Matrix& m);

/// Columns span the exact null space; one column per free variable, in column order.
Matrix kernel_basis(const Matrix& m);

/// Original matrix columns at the pivot positions of rref(m).
Matrix image_basis(const Matrix& m);

int rank(const Matrix& m);

/// Solves A X = B exactly; nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Swap map V⊗W → W⊗V on lexicographic tensor bases.
Matrix swap_matrix(Field f, int dim_v, int dim_w);

/// Incrementally maintained row-reduced span of column vectors; the workhorse
/// behind closure saturation and subspace comparisons.
class SpanBuilder {
 public:
  SpanBuilder(Field f, int ambient) : f_(f), ambient_(ambient) {}

  /// Returns true when the vector enlarged the span.
  bool add(std::vector<Rat> v);
  bool add_cols(const Matrix& m);

  bool contains(const std::vector<Rat>& v) const;
  bool contains_cols(const Matrix& m) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }

  /// Canonical basis: reduced rows transposed back to column vectors, sorted by pivot.
  Matrix basis() const;

 private:
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  Field f_;
  int ambient_;
  std::vector<std::vector<Rat>> rows_;  // reduced, pivot-sorted
  std::vector<int> pivots_;
};

/// Quotient of the ambient space by the span of `sub`'s columns. The quotient
/// basis is the set of non-pivot coordinates; project/lift are mutually section.
class QuotientSpace {
 public:
  QuotientSpace(Field f, int ambient, const Matrix& sub);

  int dim() const { return static_cast<int>(free_.size()); }
  int ambient() const { return ambient_; }

  std::vector<Rat> project(std::vector<Rat> v) const;
  Matrix project_matrix(const Matrix& m) const;  // applies project to each column
  Matrix projection() const;                      // dim x ambient
  Matrix lift() const;                            // ambient x dim, standard section

  /// Action induced on the quotient by an ambient operator that preserves the subspace.
  Matrix induced(const Matrix& op) const;

 private:
  Field f_;
  int ambient_;
  std::vector<std::vector<Rat>> rows_;  // reduced basis of the subspace, row form
  std::vector<int> pivots_;
  std::vector<int> free_;  // non-pivot coordinates, ascending
};

}  // namespace symqcs
