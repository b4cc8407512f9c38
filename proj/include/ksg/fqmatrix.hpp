#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksg/field.hpp"
#include "ksg/poly.hpp"

namespace ksg {

// Dense row-major matrix over F_q. Vectors are rows.
class FqMatrix {
 public:
  using Elem = FiniteField::Elem;

  FqMatrix() = default;
  FqMatrix(FieldPtr f, std::size_t rows, std::size_t cols);
  static FqMatrix identity(FieldPtr f, std::size_t n);
  static FqMatrix from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows, std::size_t cols);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem* row(std::size_t i) const { return data_.data() + i * cols_; }
  Elem* row(std::size_t i) { return data_.data() + i * cols_; }
  std::vector<Elem> row_vector(std::size_t i) const { return {row(i), row(i) + cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  FqMatrix transpose() const;
  FqMatrix scaled(Elem c) const;
  FqMatrix rows_range(std::size_t begin, std::size_t end) const;
  // Vertical concatenation.
  FqMatrix stacked(const FqMatrix& below) const;
  void append_row(const Elem* v);

  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  // Row vector times matrix.
  std::vector<Elem> left_apply(const Elem* v) const;

  std::size_t rank() const;
  // Reduced row echelon form (zero rows dropped) and pivot columns.
  FqMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  // Rows spanning {x : A x^T = 0}.
  FqMatrix nullspace() const;
  // Rows spanning {y : y A = 0}.
  FqMatrix left_nullspace() const;
  // X with A X = B, or nullopt when inconsistent.
  std::optional<FqMatrix> solve(const FqMatrix& b) const;
  std::optional<FqMatrix> inverse() const;
  Elem determinant() const;
  Poly char_poly() const;
  Poly min_poly() const;
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

// f(A) for square A.
FqMatrix evaluate(const Poly& f, const FqMatrix& a);

// dst += c * src over len entries.
void axpy(const FiniteField& f, FiniteField::Elem* dst, FiniteField::Elem c,
          const FiniteField::Elem* src, std::size_t len);

// A subspace kept in semi-echelon form: each basis row has a pivot column
// where it is 1 and every later row is 0.
class EchelonSpace {
 public:
  using Elem = FiniteField::Elem;

  EchelonSpace(FieldPtr f, std::size_t dim) : field_(std::move(f)), dim_(dim), basis_(field_, 0, dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces v in place against the basis; returns the coefficients used, so
  // that v_original = sum coeff_i * basis_i + v_reduced.
  std::vector<Elem> reduce(Elem* v) const;
  bool contains(const Elem* v) const;
  // Adds v if it is independent; returns whether it was.
  bool add(const Elem* v);
  // Coordinates of v in the basis; nullopt when v is outside.
  std::optional<std::vector<Elem>> coordinates(const Elem* v) const;

 private:
  FieldPtr field_;
  std::size_t dim_;
  FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ksg
