#include "ksg/fqmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "ksg/error.hpp"

namespace ksg {

using Elem = FiniteField::Elem;

void axpy(const FiniteField& f, Elem* dst, Elem c, const Elem* src, std::size_t len) {
  if (c == 0) return;
  if (f.is_prime_field()) {
    const std::uint32_t p = static_cast<std::uint32_t>(f.p());
    for (std::size_t k = 0; k < len; ++k)
      if (src[k]) dst[k] = static_cast<Elem>((dst[k] + static_cast<std::uint32_t>(c) * src[k]) % p);
    return;
  }
  const Elem* mrow = f.mul_row(c);
  for (std::size_t k = 0; k < len; ++k)
    if (src[k]) dst[k] = f.add(dst[k], mrow[src[k]]);
}

namespace {

void scale_row(const FiniteField& f, Elem* v, Elem c, std::size_t len) {
  const Elem* mrow = f.mul_row(c);
  for (std::size_t k = 0; k < len; ++k) v[k] = mrow[v[k]];
}

void check_same(const FqMatrix& a, const FqMatrix& b) {
  if (a.field() != b.field()) throw InternalError("matrices over different fields");
}

}  // namespace

FqMatrix::FqMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(FieldPtr f, std::size_t n) {
  FqMatrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  FqMatrix m(std::move(f), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InternalError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] >= m.field_->q()) throw SpecError("matrix entry outside the field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool FqMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FqMatrix FqMatrix::scaled(Elem c) const {
  FqMatrix m = *this;
  scale_row(*field_, m.data_.data(), c, m.data_.size());
  return m;
}

FqMatrix FqMatrix::rows_range(std::size_t begin, std::size_t end) const {
  FqMatrix m(field_, end - begin, cols_);
  std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_, m.data_.begin());
  return m;
}

FqMatrix FqMatrix::stacked(const FqMatrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.cols_ != cols_) throw InternalError("stacking matrices of different widths");
  FqMatrix m = *this;
  m.data_.insert(m.data_.end(), below.data_.begin(), below.data_.end());
  m.rows_ += below.rows_;
  return m;
}

void FqMatrix::append_row(const Elem* v) {
  data_.insert(data_.end(), v, v + cols_);
  ++rows_;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  check_same(a, b);
  if (a.cols_ != b.rows_) throw InternalError("matrix product dimension mismatch");
  const FiniteField& F = *a.field_;
  FqMatrix c(a.field_, a.rows_, b.cols_);
  if (F.is_prime_field()) {
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const Elem* ar = a.row(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t x = ar[k];
        if (!x) continue;
        const Elem* br = b.row(k);
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * br[j];
      }
      Elem* cr = c.row(i);
      for (std::size_t j = 0; j < b.cols_; ++j) cr[j] = static_cast<Elem>(acc[j] % p);
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const Elem* ar = a.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) axpy(F, c.row(i), ar[k], b.row(k), b.cols_);
  }
  return c;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  check_same(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InternalError("matrix sum dimension mismatch");
  FqMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_->add(a.data_[k], b.data_[k]);
  return c;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  check_same(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InternalError("matrix difference dimension mismatch");
  FqMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_->sub(a.data_[k], b.data_[k]);
  return c;
}

std::vector<Elem> FqMatrix::left_apply(const Elem* v) const {
  std::vector<Elem> out(cols_, 0);
  for (std::size_t k = 0; k < rows_; ++k) axpy(*field_, out.data(), v[k], row(k), cols_);
  return out;
}

FqMatrix FqMatrix::rref(std::vector<std::size_t>* pivots) const {
  FqMatrix m = *this;
  const FiniteField& F = *field_;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t i = r;
    while (i < rows_ && m.at(i, c) == 0) ++i;
    if (i == rows_) continue;
    if (i != r)
      std::swap_ranges(m.data_.begin() + i * cols_, m.data_.begin() + (i + 1) * cols_,
                       m.data_.begin() + r * cols_);
    scale_row(F, m.row(r), F.inv(m.at(r, c)), cols_);
    for (std::size_t k = 0; k < rows_; ++k)
      if (k != r && m.at(k, c)) axpy(F, m.row(k), F.neg(m.at(k, c)), m.row(r), cols_);
    piv.push_back(c);
    ++r;
  }
  m.data_.resize(r * cols_);
  m.rows_ = r;
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t FqMatrix::rank() const {
  EchelonSpace s(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) s.add(row(i));
  return s.dim();
}

FqMatrix FqMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  FqMatrix r = rref(&piv);
  const FiniteField& F = *field_;
  std::vector<bool> is_piv(cols_, false);
  for (auto c : piv) is_piv[c] = true;
  FqMatrix out(field_, 0, cols_);
  std::vector<Elem> v(cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_piv[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = F.neg(r.at(k, free));
    out.append_row(v.data());
  }
  return out;
}

FqMatrix FqMatrix::left_nullspace() const { return transpose().nullspace(); }

std::optional<FqMatrix> FqMatrix::solve(const FqMatrix& b) const {
  check_same(*this, b);
  if (b.rows_ != rows_) throw InternalError("solve dimension mismatch");
  FqMatrix aug(field_, rows_, cols_ + b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(row(i), row(i) + cols_, aug.row(i));
    std::copy(b.row(i), b.row(i) + b.cols_, aug.row(i) + cols_);
  }
  std::vector<std::size_t> piv;
  FqMatrix r = aug.rref(&piv);
  FqMatrix x(field_, cols_, b.cols_);
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] >= cols_) return std::nullopt;
    std::copy(r.row(k) + cols_, r.row(k) + cols_ + b.cols_, x.row(piv[k]));
  }
  return x;
}

std::optional<FqMatrix> FqMatrix::inverse() const {
  if (rows_ != cols_) throw InternalError("inverse of a non-square matrix");
  auto x = solve(identity(field_, rows_));
  if (!x || rank() != rows_) return std::nullopt;
  return x;
}

Elem FqMatrix::determinant() const {
  if (rows_ != cols_) throw InternalError("determinant of a non-square matrix");
  FqMatrix m = *this;
  const FiniteField& F = *field_;
  Elem det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t i = c;
    while (i < rows_ && m.at(i, c) == 0) ++i;
    if (i == rows_) return 0;
    if (i != c) {
      std::swap_ranges(m.data_.begin() + i * cols_, m.data_.begin() + (i + 1) * cols_,
                       m.data_.begin() + c * cols_);
      det = F.neg(det);
    }
    det = F.mul(det, m.at(c, c));
    const Elem inv = F.inv(m.at(c, c));
    for (std::size_t k = c + 1; k < rows_; ++k)
      if (m.at(k, c)) axpy(F, m.row(k), F.neg(F.mul(m.at(k, c), inv)), m.row(c), cols_);
  }
  return det;
}

Poly FqMatrix::char_poly() const {
  if (rows_ != cols_) throw InternalError("characteristic polynomial of a non-square matrix");
  const FiniteField& F = *field_;
  const std::size_t n = rows_;
  FqMatrix h = *this;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 <= n; ++m) {
    std::size_t i = m;
    while (i < n && h.at(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap_ranges(h.data_.begin() + i * n, h.data_.begin() + (i + 1) * n, h.data_.begin() + m * n);
      for (std::size_t k = 0; k < n; ++k) std::swap(h.at(k, i), h.at(k, m));
    }
    const Elem inv = F.inv(h.at(m, m - 1));
    for (std::size_t j = m + 1; j < n; ++j) {
      Elem u = F.mul(h.at(j, m - 1), inv);
      if (!u) continue;
      axpy(F, h.row(j), F.neg(u), h.row(m), n);
      for (std::size_t k = 0; k < n; ++k) h.at(k, m) = F.add(h.at(k, m), F.mul(u, h.at(k, j)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} prod_{j} h_{j,j-1} p_{k-i-1}
  std::vector<Poly> ps{Poly::constant(field_, 1)};
  for (std::size_t k = 0; k < n; ++k) {
    Poly next = (Poly::x(field_) - Poly::constant(field_, h.at(k, k))) * ps[k];
    Elem prod = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      prod = F.mul(prod, h.at(k - i + 1, k - i));
      if (!prod) break;
      Elem c = F.mul(prod, h.at(k - i, k));
      if (c) next = next - Poly::constant(field_, c) * ps[k - i];
    }
    ps.push_back(std::move(next));
  }
  return ps[n];
}

Poly FqMatrix::min_poly() const {
  if (rows_ != cols_) throw InternalError("minimal polynomial of a non-square matrix");
  const FiniteField& F = *field_;
  const std::size_t n = rows_;
  Poly result = Poly::constant(field_, 1);
  EchelonSpace seen(field_, n);
  std::vector<Elem> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    if (seen.contains(e.data())) continue;
    // Krylov chain of e; relation found when the next vector is dependent.
    EchelonSpace chain(field_, n);
    std::vector<std::vector<Elem>> coeffs_of_basis;  // basis row -> poly coefficients
    std::vector<Elem> v = e;
    std::vector<Elem> poly_of_v{1};
    while (true) {
      std::vector<Elem> w = v;
      auto c = chain.reduce(w.data());
      bool zero = std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
      if (zero) {
        // v = sum c_i basis_i, so poly(v) - sum c_i poly(basis_i) kills e.
        std::vector<Elem> rel = poly_of_v;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (!c[k]) continue;
          const auto& pb = coeffs_of_basis[k];
          if (rel.size() < pb.size()) rel.resize(pb.size(), 0);
          for (std::size_t t = 0; t < pb.size(); ++t) rel[t] = F.sub(rel[t], F.mul(c[k], pb[t]));
        }
        Poly mp(field_, rel);
        result = divmod(result * mp, gcd(result, mp)).first.monic();
        break;
      }
      // Normalised basis row = (v - sum c_k basis_k) / lead
      std::vector<Elem> pw = poly_of_v;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k]) continue;
        const auto& pb = coeffs_of_basis[k];
        if (pw.size() < pb.size()) pw.resize(pb.size(), 0);
        for (std::size_t t = 0; t < pb.size(); ++t) pw[t] = F.sub(pw[t], F.mul(c[k], pb[t]));
      }
      std::size_t pivot = 0;
      while (w[pivot] == 0) ++pivot;
      Elem li = F.inv(w[pivot]);
      for (auto& x : pw) x = F.mul(x, li);
      chain.add(w.data());
      coeffs_of_basis.push_back(std::move(pw));
      seen.add(v.data());
      v = left_apply(v.data());
      poly_of_v.insert(poly_of_v.begin(), 0);
    }
  }
  return result;
}

std::string FqMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]\n";
  }
  return os.str();
}

FqMatrix evaluate(const Poly& f, const FqMatrix& a) {
  const std::size_t n = a.rows();
  FqMatrix acc(a.field(), n, n);
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * a;
    Elem c = f.coeff(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) = a.field()->add(acc.at(i, i), c);
  }
  return acc;
}

std::vector<Elem> EchelonSpace::reduce(Elem* v) const {
  std::vector<Elem> coeffs(basis_.rows(), 0);
  const FiniteField& F = *field_;
  for (std::size_t k = 0; k < basis_.rows(); ++k) {
    Elem c = v[pivots_[k]];
    if (!c) continue;
    coeffs[k] = c;
    axpy(F, v, F.neg(c), basis_.row(k), dim_);
  }
  return coeffs;
}

bool EchelonSpace::contains(const Elem* v) const {
  std::vector<Elem> w(v, v + dim_);
  reduce(w.data());
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool EchelonSpace::add(const Elem* v) {
  std::vector<Elem> w(v, v + dim_);
  reduce(w.data());
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  scale_row(*field_, w.data(), field_->inv(w[pivot]), dim_);
  basis_.append_row(w.data());
  pivots_.push_back(pivot);
  return true;
}

std::optional<std::vector<Elem>> EchelonSpace::coordinates(const Elem* v) const {
  std::vector<Elem> w(v, v + dim_);
  auto c = reduce(w.data());
  if (!std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; })) return std::nullopt;
  return c;
}

}  // namespace ksg
