#include "pwb/matrix.hpp"

#include "pwb/errors.hpp"

namespace pwb {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyclo(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_) throw InvalidArgument("ragged matrix rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) { return from_rows(cols).transpose(); }

Matrix Matrix::diagonal(const Vec& d) {
  int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Vec Matrix::column(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_); }

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyclo& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Matrix Matrix::scaled(const Cyclo& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Matrix result = identity(rows_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_monomial() const {
  for (int j = 0; j < cols_; ++j) {
    int nz = 0;
    for (int i = 0; i < rows_; ++i) nz += !(*this)(i, j).is_zero();
    if (nz != 1) return false;
  }
  return true;
}

Cyclo Matrix::trace() const {
  Cyclo t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = r;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    Cyclo inv = (*this)(r, c).inverse();
    for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      Cyclo f = (*this)(i, c);
      for (int j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.rref().size());
}

Cyclo Matrix::det() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
  Matrix m = *this;
  Cyclo d(1);
  for (int c = 0; c < cols_; ++c) {
    int p = c;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) return Cyclo(0);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Cyclo inv = m(c, c).inverse();
    for (int i = c + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      Cyclo f = m(i, c) * inv;
      for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw SingularMatrix("inverse of a non-square matrix");
  int n = rows_;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Cyclo(1);
  }
  auto piv = aug.rref();
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

std::vector<Vec> Matrix::kernel() const {
  Matrix m = *this;
  auto piv = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = Cyclo(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    basis.push_back(normalize_first(std::move(v)));
  }
  return basis;
}

UPoly Matrix::charpoly() const {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  int n = rows_;
  std::vector<Cyclo> c(n + 1);
  c[n] = Cyclo(1);
  Matrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = (*this) * mk + identity(n).scaled(c[n - k + 1]);
    c[n - k] = -((*this) * mk).trace() * Cyclo(Rational(1, k));
  }
  return UPoly(std::move(c));
}

UPoly Matrix::minpoly() const {
  int n = rows_;
  std::vector<Vec> powers;
  Matrix p = identity(n);
  for (int k = 0; k <= n; ++k) {
    powers.push_back(p.a_);
    Matrix krylov = Matrix::from_columns(powers);
    auto ker = krylov.kernel();
    if (!ker.empty()) {
      Vec v = ker[0];
      Cyclo inv = v[k].inverse();
      for (auto& x : v) x *= inv;
      return UPoly(std::move(v));
    }
    p = p * (*this);
  }
  throw InvalidArgument("minimal polynomial search failed");
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
  }
  return out + "]";
}

std::vector<Vec> rref_basis(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(vectors);
  auto piv = m.rref();
  std::vector<Vec> out;
  for (std::size_t r = 0; r < piv.size(); ++r) out.push_back(m.row(static_cast<int>(r)));
  return out;
}

Vec normalize_first(Vec v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      Cyclo inv = x.inverse();
      for (auto& y : v) y *= inv;
      break;
    }
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Cyclo dot(const Vec& a, const Vec& b) {
  Cyclo s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

void Echelon::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Cyclo c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Vec& row = rows_[r];
    for (int j = pivots_[r]; j < ncols_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
}

bool Echelon::add(Vec v) {
  reduce(v);
  int p = 0;
  while (p < ncols_ && v[p].is_zero()) ++p;
  if (p == ncols_) return false;
  Cyclo inv = v[p].inverse();
  for (int j = p; j < ncols_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool Echelon::contains(Vec v) const {
  reduce(v);
  return is_zero_vec(v);
}

}  // namespace pwb
