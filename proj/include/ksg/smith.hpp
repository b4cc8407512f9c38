#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace ksg {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  // Horizontal concatenation.
  IntMatrix beside(const IntMatrix& right) const;
  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;  // A x
  std::vector<BigInt> column(std::size_t j) const;
  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

BigInt determinant(const IntMatrix& a);

// U * A * V = D with D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SmithForm {
  IntMatrix u, v, u_inverse;
  std::vector<BigInt> diagonal;  // length min(rows, cols)
};
SmithForm smith_normal_form(const IntMatrix& a);

// Canonical Z^free_rank + Z/d_1 + ... with 2 <= d_1 | d_2 | ...
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup cyclic(const BigInt& n);  // n = 0 gives Z
  // Canonicalises an arbitrary list of cyclic orders (0 means Z, 1 dropped).
  static FgAbelianGroup from_cyclic_orders(const std::vector<BigInt>& orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  BigInt torsion_order() const;
  // Invariant factors as listed in table rows: torsion then one 0 per Z.
  std::vector<BigInt> invariant_factors() const;
  std::string to_string() const;  // "0", "Z/3", "Z^2 + Z/2 + Z/4"
  FgAbelianGroup direct_sum(const FgAbelianGroup& other) const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

// Z^rows / (column span of relations), remembering how to project into the
// canonical coordinates: torsion coordinates first, then free ones.
class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& relations);

  const FgAbelianGroup& group() const { return group_; }
  std::size_t ambient_rank() const { return ambient_; }
  // Number of canonical coordinates (= torsion count + free rank).
  std::size_t coordinates() const { return moduli_.size(); }
  // 0 for a free coordinate.
  const std::vector<BigInt>& moduli() const { return moduli_; }
  std::vector<BigInt> project(const std::vector<BigInt>& x) const;
  // A lift in Z^rows of canonical generator k.
  std::vector<BigInt> generator_lift(std::size_t k) const;
  bool is_zero(const std::vector<BigInt>& x) const;

 private:
  std::size_t ambient_;
  FgAbelianGroup group_;
  IntMatrix u_, u_inverse_;
  std::vector<std::size_t> rows_;  // row of U feeding each canonical coordinate
  std::vector<BigInt> moduli_;
};

FgAbelianGroup cokernel(const IntMatrix& relations);
// Group on n generators with the given relation columns.
FgAbelianGroup quotient_presentation(std::size_t generators, const IntMatrix& relations);

}  // namespace ksg
