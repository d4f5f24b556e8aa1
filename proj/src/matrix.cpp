#include "so2m/matrix.hpp"

#include <stdexcept>

namespace so2m {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<long>& d) {
  ExactMatrix m(int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m(i, i) = d[i];
  return m;
}

namespace {
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix size mismatch");
}
}  // namespace

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : a_)
    if (!z.is_zero()) z *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  // Lie algebra elements here are very sparse; skip zero factors.
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const GaussianRational& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const GaussianRational& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m(*this);
  for (auto& z : m.a_)
    if (!z.is_zero()) z = -z;
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix m(*this);
  for (auto& z : m.a_)
    if (!z.is_real()) z = z.conj();
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

GaussianRational ExactMatrix::trace() const {
  GaussianRational t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : a_)
    if (!z.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_real() const {
  for (const auto& z : a_)
    if (!z.is_real()) return false;
  return true;
}

std::string ExactMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) s += (j ? " " : "") + so2m::to_string((*this)(i, j));
  }
  return s + "]";
}

ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) {
  if (!x.is_square() || x.rows() != y.rows() || !y.is_square()) throw std::invalid_argument("bracket: size mismatch");
  return x * y - y * x;
}

GaussianRational trace_form(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows() != y.cols() || x.cols() != y.rows()) throw std::invalid_argument("trace_form: size mismatch");
  GaussianRational t;
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const auto& a = x(i, k);
      if (a.is_zero()) continue;
      const auto& b = y(k, i);
      if (!b.is_zero()) t += a * b;
    }
  return t;
}

std::vector<int> row_reduce(ExactMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    GaussianRational inv = GaussianRational(1) / a(r, c);
    for (int j = c; j < a.cols(); ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      GaussianRational f = a(i, c);
      for (int j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(ExactMatrix a) { return int(row_reduce(a).size()); }

std::vector<std::vector<GaussianRational>> nullspace(ExactMatrix a) {
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

GaussianRational determinant(ExactMatrix a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  GaussianRational det = 1;
  int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    GaussianRational inv = GaussianRational(1) / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      GaussianRational f = a(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows();
  ExactMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (int(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<GaussianRational> proportionality(const ExactMatrix& y, const ExactMatrix& x) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return std::nullopt;
  std::optional<GaussianRational> s;
  for (int i = 0; i < x.rows() && !s; ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) {
        s = y(i, j) / x(i, j);
        break;
      }
  if (!s) return std::nullopt;
  if (!(x * *s == y)) return std::nullopt;
  return s;
}

}  // namespace so2m
