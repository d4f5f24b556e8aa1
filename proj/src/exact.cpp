#include "so2m/exact.hpp"

#include <stdexcept>

namespace so2m {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(z.im()) + "i";
  if (sgn(z.re()) == 0) return im;
  if (sgn(z.im()) > 0) im = "+" + im;
  return to_string(z.re()) + im;
}

HodgePolynomial HodgePolynomial::monomial(int a, int b, std::int64_t coeff) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative bidegree");
  HodgePolynomial p;
  p.add_term(a, b, coeff);
  return p;
}

HodgePolynomial HodgePolynomial::in_xt(const std::vector<std::int64_t>& coeffs) {
  HodgePolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(int(k), int(k), coeffs[k]);
  return p;
}

void HodgePolynomial::add_term(int a, int b, std::int64_t c) {
  if (c == 0) return;
  auto key = Bidegree{a, b};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t HodgePolynomial::coeff(int a, int b) const {
  if (a < 0 || b < 0) throw std::invalid_argument("negative bidegree");
  auto it = terms_.find({a, b});
  return it == terms_.end() ? 0 : it->second;
}

std::set<int> HodgePolynomial::total_degree_support() const {
  std::set<int> out;
  for (const auto& [d, c] : terms_) out.insert(d.first + d.second);
  return out;
}

HodgePolynomial HodgePolynomial::swap_variables() const {
  HodgePolynomial p;
  for (const auto& [d, c] : terms_) p.add_term(d.second, d.first, c);
  return p;
}

HodgePolynomial HodgePolynomial::shifted(int da, int db) const {
  HodgePolynomial p;
  for (const auto& [d, c] : terms_) p.add_term(d.first + da, d.second + db, c);
  return p;
}

std::int64_t HodgePolynomial::eval_at_one() const {
  std::int64_t s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

bool HodgePolynomial::is_diagonal() const {
  for (const auto& [d, c] : terms_)
    if (d.first != d.second) return false;
  return true;
}

bool HodgePolynomial::is_palindromic_in_xt() const {
  if (!is_diagonal()) return false;
  if (terms_.empty()) return true;
  int lo = terms_.begin()->first.first;
  int hi = terms_.rbegin()->first.first;
  for (int k = lo; k <= hi; ++k)
    if (coeff(k, k) != coeff(lo + hi - k, lo + hi - k)) return false;
  return true;
}

HodgePolynomial& HodgePolynomial::operator+=(const HodgePolynomial& o) {
  for (const auto& [d, c] : o.terms_) add_term(d.first, d.second, c);
  return *this;
}

HodgePolynomial operator*(const HodgePolynomial& a, const HodgePolynomial& b) {
  HodgePolynomial p;
  for (const auto& [d1, c1] : a.terms_)
    for (const auto& [d2, c2] : b.terms_) p.add_term(d1.first + d2.first, d1.second + d2.second, c1 * c2);
  return p;
}

namespace {
std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}
}  // namespace

std::string HodgePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono = power("x", d.first) + power("t", d.second);
    if (mono.empty())
      out += std::to_string(c);
    else
      out += (c == 1 ? "" : std::to_string(c)) + mono;
  }
  return out;
}

std::int64_t poly_coeff(const HodgePolynomial& p, int a, int b) { return p.coeff(a, b); }
std::set<int> poly_total_degree_support(const HodgePolynomial& p) { return p.total_degree_support(); }
HodgePolynomial poly_swap_variables(const HodgePolynomial& p) { return p.swap_variables(); }

}  // namespace so2m
