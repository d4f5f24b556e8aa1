#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace so2m {

// gmpxx keeps results of arithmetic canonical; values built from a
// numerator/denominator pair go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
bool is_integer(const Rational& q);
std::string to_string(const Rational& q);  // "p/q", or "p" when integral

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integers embed implicitly
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

std::string to_string(const GaussianRational& z);

// Bivariate polynomial in x (holomorphic degree) and t (antiholomorphic
// degree) with positive integer coefficients. Zero coefficients are never
// stored; iteration is lexicographic in (a, b).
class HodgePolynomial {
 public:
  using Bidegree = std::pair<int, int>;

  HodgePolynomial() = default;
  static HodgePolynomial monomial(int a, int b, std::int64_t coeff = 1);
  static HodgePolynomial one() { return monomial(0, 0); }
  // sum_k coeffs[k] (xt)^k
  static HodgePolynomial in_xt(const std::vector<std::int64_t>& coeffs);

  std::int64_t coeff(int a, int b) const;
  const std::map<Bidegree, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::set<int> total_degree_support() const;
  HodgePolynomial swap_variables() const;
  HodgePolynomial shifted(int da, int db) const;
  std::int64_t eval_at_one() const;
  bool is_diagonal() const;
  // Diagonal polynomial whose (xt)-coefficients read the same both ways.
  bool is_palindromic_in_xt() const;

  HodgePolynomial& operator+=(const HodgePolynomial& o);
  friend HodgePolynomial operator+(HodgePolynomial a, const HodgePolynomial& b) { return a += b; }
  friend HodgePolynomial operator*(const HodgePolynomial& a, const HodgePolynomial& b);
  friend bool operator==(const HodgePolynomial& a, const HodgePolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;  // e.g. "x^2t + 2xt^2", "0"

 private:
  void add_term(int a, int b, std::int64_t c);
  std::map<Bidegree, std::int64_t> terms_;
};

std::int64_t poly_coeff(const HodgePolynomial& p, int a, int b);
std::set<int> poly_total_degree_support(const HodgePolynomial& p);
HodgePolynomial poly_swap_variables(const HodgePolynomial& p);

}  // namespace so2m
