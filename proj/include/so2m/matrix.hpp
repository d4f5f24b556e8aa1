#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so2m/exact.hpp"

namespace so2m {

// Dense matrix over Q(i). Lie algebra elements are square; the linear
// algebra helpers below also accept rectangular systems. Storage is
// 0-based; the builders in liealg.hpp take 1-based indices.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : ExactMatrix(n, n) {}
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static ExactMatrix identity(int n);
  static ExactMatrix diagonal(const std::vector<long>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const GaussianRational& operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  ExactMatrix conj() const;
  ExactMatrix transpose() const;
  GaussianRational trace() const;
  bool is_zero() const;
  bool is_real() const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> a_;
};

ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y);

// tr(XY) without forming the product.
GaussianRational trace_form(const ExactMatrix& x, const ExactMatrix& y);

// Row-reduced echelon form in place; returns pivot columns.
std::vector<int> row_reduce(ExactMatrix& a);
int rank(ExactMatrix a);
// Basis of {v : A v = 0}, one vector per free column, in RREF order.
std::vector<std::vector<GaussianRational>> nullspace(ExactMatrix a);
GaussianRational determinant(ExactMatrix a);
std::optional<ExactMatrix> inverse(const ExactMatrix& a);

// If y = s * x for a scalar s (x nonzero), returns s.
std::optional<GaussianRational> proportionality(const ExactMatrix& y, const ExactMatrix& x);

}  // namespace so2m
