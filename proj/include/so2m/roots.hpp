#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "so2m/liealg.hpp"

namespace so2m {

// T0 is spanned by H_1..H_l. T0Prime (family D only) is spanned by F_12 and
// F_{1+j,l+j} for 2 <= j <= l.
enum class Variant { T0, T0Prime };
std::string to_string(Variant v);

struct Root {
  std::vector<int> coords;
  bool is_compact = false;

  Root() = default;
  explicit Root(std::vector<int> c) : coords(std::move(c)), is_compact(coords.empty() || coords[0] == 0) {}

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
  friend auto operator<=>(const Root& a, const Root& b) { return a.coords <=> b.coords; }
  bool is_positive() const;  // first nonzero coordinate is positive
  int norm2() const;
};

int inner(const Root& a, const Root& b);
std::string to_string(const Root& r);  // "(1,-1,0)"
Root unit_root(int l, int j, int sj, int k = 0, int sk = 0);  // sj e_j + sk e_k, 1-based

class RootSystem {
 public:
  LieContext ctx;
  Variant variant = Variant::T0;
  std::vector<Root> roots;      // every root, positives first then negatives
  std::vector<Root> positives;  // lexicographic order
  std::vector<Root> simples;    // phi_1..phi_l
  std::vector<ExactMatrix> cartan_basis;
  // e_k(H'_j) = lambda_k delta_jk on the Cartan basis.
  std::vector<GaussianRational> lambda;
  std::vector<ExactMatrix> fundamental_coweights;  // H_{omega_i}

  bool contains(const Root& r) const;
  bool contains(const std::vector<int>& coords) const;
  std::vector<Root> compact_positives() const;
  std::vector<Root> noncompact_positives() const;

  // Coefficients h_k of H = sum h_k H'_k; throws if H is not in the Cartan.
  std::vector<GaussianRational> cartan_coordinates(const ExactMatrix& h) const;
  GaussianRational evaluate(const Root& r, const ExactMatrix& h) const;
  ExactMatrix cartan_element(const std::vector<GaussianRational>& h) const;
  // Element dual to a weight under the trace form: tr(H_w H) = w(H).
  ExactMatrix dual_element(const std::vector<Rational>& weight) const;
  // 2 H_a / a(H_a); pairs with beta to 2<beta,a>/<a,a>.
  ExactMatrix coroot(const Root& r) const;
  // Coefficients of r in the simple roots.
  std::vector<int> simple_coefficients(const Root& r) const;

  // Extended diagram vertices: phi_1..phi_l, then -delta when the algebra is
  // simple. For m = 2 the vertices are phi_1, phi_2, -phi_1, -phi_2.
  std::vector<Root> vertices() const;
  std::vector<int> marks() const;  // a_psi for each vertex
  std::vector<std::string> vertex_names() const;
};

RootSystem build_root_system(const LieContext& ctx, Variant variant);

// Throws std::domain_error for m = 2 where g is not simple.
Root highest_root(const RootSystem& rs);

// Simple roots of the closed subsystem `subset` for the lexicographic order.
std::vector<Root> simple_roots_of(const std::vector<Root>& subset);

// Weyl group generated by reflections in `simples`, as signed permutations
// of the coordinates. length[k] is the word length of elements[k].
struct WeylGroup {
  std::vector<Root> generators;
  std::vector<std::uint64_t> elements;
  std::vector<int> length;
  std::size_t order() const { return elements.size(); }
  std::vector<std::int64_t> length_generating_function() const;
};

// Throws std::length_error when the rank exceeds 8.
WeylGroup weyl_group(const std::vector<Root>& simples, int l);

// Sum over minimal coset representatives of W(compact)\W(levi) of (xt)^length.
// The compact reflections must lie in W(levi); they need not be levi simples.
HodgePolynomial coset_poincare(const std::vector<Root>& levi_simples, const std::vector<Root>& compact_simples, int l);

}  // namespace so2m
