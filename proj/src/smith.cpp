#include "ksg/smith.hpp"

#include <algorithm>
#include <sstream>

#include "ksg/error.hpp"

namespace ksg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InternalError("ragged integer matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::beside(const IntMatrix& right) const {
  if (rows_ != right.rows_ && cols_ && right.cols_) throw InternalError("concatenating matrices of different heights");
  const std::size_t r = cols_ ? rows_ : right.rows_;
  IntMatrix m(r, cols_ + right.cols_);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
  }
  return m;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& x) const {
  if (x.size() != cols_) throw InternalError("integer matrix-vector dimension mismatch");
  std::vector<BigInt> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x.is_zero(); });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InternalError("integer matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InternalError("integer matrix difference mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InternalError("determinant of a non-square integer matrix");
  auto s = smith_normal_form(a);
  // det U and det V are +-1; recover the sign from them.
  BigInt d = 1;
  for (const auto& x : s.diagonal) d *= x;
  if (d.is_zero()) return d;
  auto sign_of = [](const IntMatrix& m) {
    // Bareiss elimination, exact.
    const std::size_t n = m.rows();
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::size_t piv = k;
      while (piv < n && w.at(piv, k).is_zero()) ++piv;
      if (piv == n) return 0;
      if (piv != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(k, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      prev = w.at(k, k);
    }
    BigInt last = n ? w.at(n - 1, n - 1) : BigInt(1);
    return (last < 0 ? -1 : 1) * sign;
  };
  return d * sign_of(s.u) * sign_of(s.v);
}

namespace {

struct Worker {
  IntMatrix a, u, v, ui;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    for (std::size_t k = 0; k < ui.rows(); ++k) std::swap(ui.at(k, i), ui.at(k, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) += c * a.at(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
    for (std::size_t k = 0; k < ui.rows(); ++k) ui.at(k, j) -= c * ui.at(k, i);
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, i) += c * a.at(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) += c * v.at(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    for (std::size_t k = 0; k < ui.rows(); ++k) ui.at(k, i) = -ui.at(k, i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  Worker w{input, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m)};
  auto& a = w.a;
  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // smallest nonzero entry of the remaining block becomes the pivot
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!a.at(i, j).is_zero() && (!found || abs(a.at(i, j)) < abs(a.at(bi, bj)))) {
          found = true;
          bi = i;
          bj = j;
        }
    if (!found) break;
    w.swap_rows(t, bi);
    w.swap_cols(t, bj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a.at(i, t).is_zero()) continue;
        BigInt q = a.at(i, t) / a.at(t, t);
        w.add_row(i, t, -q);
        if (!a.at(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a.at(t, j).is_zero()) continue;
        BigInt q = a.at(t, j) / a.at(t, t);
        w.add_col(j, t, -q);
        if (!a.at(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column t onto the pivot
        std::size_t ri = t, cj = t;
        BigInt best = abs(a.at(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (!a.at(i, t).is_zero() && abs(a.at(i, t)) < best) {
            best = abs(a.at(i, t));
            ri = i;
            cj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (!a.at(t, j).is_zero() && abs(a.at(t, j)) < best) {
            best = abs(a.at(t, j));
            ri = t;
            cj = j;
          }
        w.swap_rows(t, ri);
        w.swap_cols(t, cj);
        continue;
      }
      // divisibility: fold an offending row into row t and go again
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!BigInt(a.at(i, j) % a.at(t, t)).is_zero()) {
            w.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a.at(t, t) < 0) w.negate_row(t);
  }
  SmithForm s{w.u, w.v, w.ui, {}};
  for (std::size_t t = 0; t < lim; ++t) s.diagonal.push_back(a.at(t, t));
  // zero pivots sit at the end since every nonzero block entry was consumed first
  return s;
}

FgAbelianGroup FgAbelianGroup::cyclic(const BigInt& n) { return from_cyclic_orders({n}); }

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const std::vector<BigInt>& orders) {
  // Smith form of the diagonal matrix.
  std::size_t k = orders.size();
  IntMatrix d(k, k);
  for (std::size_t i = 0; i < k; ++i) d.at(i, i) = abs(orders[i]);
  return cokernel(d);
}

BigInt FgAbelianGroup::torsion_order() const {
  BigInt o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::vector<BigInt> FgAbelianGroup::invariant_factors() const {
  std::vector<BigInt> out = torsion;
  for (std::size_t i = 0; i < free_rank; ++i) out.push_back(0);
  return out;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string t = "Z/" + torsion[i].str();
    if (j - i > 1) t = "(" + t + ")^" + std::to_string(j - i);
    parts.push_back(t);
    i = j;
  }
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& other) const {
  std::vector<BigInt> orders = invariant_factors();
  for (const auto& x : other.invariant_factors()) orders.push_back(x);
  return from_cyclic_orders(orders);
}

Cokernel::Cokernel(const IntMatrix& relations) : ambient_(relations.rows()) {
  auto s = smith_normal_form(relations);
  u_ = s.u;
  u_inverse_ = s.u_inverse;
  for (std::size_t i = 0; i < ambient_; ++i) {
    BigInt d = i < s.diagonal.size() ? s.diagonal[i] : BigInt(0);
    if (d == 1) continue;
    if (d.is_zero()) continue;
    rows_.push_back(i);
    moduli_.push_back(d);
    group_.torsion.push_back(d);
  }
  for (std::size_t i = 0; i < ambient_; ++i) {
    BigInt d = i < s.diagonal.size() ? s.diagonal[i] : BigInt(0);
    if (!d.is_zero()) continue;
    rows_.push_back(i);
    moduli_.push_back(0);
    ++group_.free_rank;
  }
}

std::vector<BigInt> Cokernel::project(const std::vector<BigInt>& x) const {
  auto y = u_.apply(x);
  std::vector<BigInt> out(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    BigInt v = y[rows_[k]];
    if (!moduli_[k].is_zero()) {
      v %= moduli_[k];
      if (v < 0) v += moduli_[k];
    }
    out[k] = v;
  }
  return out;
}

std::vector<BigInt> Cokernel::generator_lift(std::size_t k) const { return u_inverse_.column(rows_[k]); }

bool Cokernel::is_zero(const std::vector<BigInt>& x) const {
  auto p = project(x);
  return std::all_of(p.begin(), p.end(), [](const BigInt& v) { return v.is_zero(); });
}

FgAbelianGroup cokernel(const IntMatrix& relations) { return Cokernel(relations).group(); }

FgAbelianGroup quotient_presentation(std::size_t generators, const IntMatrix& relations) {
  if (relations.cols() == 0) {
    FgAbelianGroup g;
    g.free_rank = generators;
    return g;
  }
  if (relations.rows() != generators) throw InternalError("relation vectors have the wrong length");
  return cokernel(relations);
}

}  // namespace ksg
