#include "so2m/roots.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace so2m {

std::string to_string(Variant v) { return v == Variant::T0 ? "T0" : "T0'"; }

Root Root::operator-() const {
  std::vector<int> c(coords);
  for (auto& x : c) x = -x;
  return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b) {
  std::vector<int> c(a.coords);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coords[k];
  return Root(std::move(c));
}

bool Root::is_positive() const {
  for (int x : coords)
    if (x) return x > 0;
  return false;
}

int Root::norm2() const { return inner(*this, *this); }

int inner(const Root& a, const Root& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.coords.size(); ++k) s += a.coords[k] * b.coords[k];
  return s;
}

std::string to_string(const Root& r) {
  std::string s = "(";
  for (std::size_t k = 0; k < r.coords.size(); ++k) s += (k ? "," : "") + std::to_string(r.coords[k]);
  return s + ")";
}

Root unit_root(int l, int j, int sj, int k, int sk) {
  std::vector<int> c(l, 0);
  c[j - 1] += sj;
  if (k) c[k - 1] += sk;
  return Root(std::move(c));
}

namespace {

ExactMatrix matrix_from_columns(const std::vector<Root>& cols, int l) {
  ExactMatrix a(l, int(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < l; ++r) a(r, int(c)) = cols[c].coords[r];
  return a;
}

}  // namespace

RootSystem build_root_system(const LieContext& ctx, Variant variant) {
  if (variant == Variant::T0Prime && ctx.family != Family::D)
    throw std::invalid_argument("the primed Cartan subalgebra is only used for family D");
  RootSystem rs;
  rs.ctx = ctx;
  rs.variant = variant;
  const int l = ctx.l, n = ctx.n;
  const GaussianRational i = GaussianRational::i();
  for (int j = 1; j <= l; ++j) {
    if (variant == Variant::T0) {
      rs.cartan_basis.push_back(cartan_h(n, j));
      rs.lambda.push_back(-i);
    } else {
      rs.cartan_basis.push_back(j == 1 ? skew_unit(n, 1, 2) : skew_unit(n, 1 + j, l + j));
      rs.lambda.push_back(j == 1 ? -i : i);
    }
  }
  for (int j = 1; j <= l; ++j) {
    for (int k = j + 1; k <= l; ++k) {
      rs.positives.push_back(unit_root(l, j, 1, k, -1));
      rs.positives.push_back(unit_root(l, j, 1, k, 1));
    }
    if (ctx.family == Family::B) rs.positives.push_back(unit_root(l, j, 1));
  }
  std::sort(rs.positives.begin(), rs.positives.end(), [](const Root& a, const Root& b) { return a > b; });
  rs.roots = rs.positives;
  for (const auto& r : rs.positives) rs.roots.push_back(-r);

  for (int j = 1; j < l; ++j) rs.simples.push_back(unit_root(l, j, 1, j + 1, -1));
  rs.simples.push_back(ctx.family == Family::B ? unit_root(l, l, 1) : unit_root(l, l - 1, 1, l, 1));

  // omega_i(H*_{phi_j}) = 2<omega_i, phi_j>/<phi_j, phi_j> = delta_ij.
  ExactMatrix pairing(l);
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k)
      pairing(j, k) = GaussianRational(make_rational(2 * rs.simples[j].coords[k], rs.simples[j].norm2()));
  ExactMatrix omega = *inverse(pairing);
  for (int c = 0; c < l; ++c) {
    std::vector<Rational> w(l);
    for (int r = 0; r < l; ++r) w[r] = omega(r, c).re();
    rs.fundamental_coweights.push_back(rs.dual_element(w));
  }
  return rs;
}

bool RootSystem::contains(const std::vector<int>& coords) const {
  return std::find_if(roots.begin(), roots.end(), [&](const Root& r) { return r.coords == coords; }) != roots.end();
}

bool RootSystem::contains(const Root& r) const { return contains(r.coords); }

std::vector<Root> RootSystem::compact_positives() const {
  std::vector<Root> out;
  for (const auto& r : positives)
    if (r.is_compact) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::noncompact_positives() const {
  std::vector<Root> out;
  for (const auto& r : positives)
    if (!r.is_compact) out.push_back(r);
  return out;
}

std::vector<GaussianRational> RootSystem::cartan_coordinates(const ExactMatrix& h) const {
  std::vector<GaussianRational> c;
  for (int j = 1; j <= ctx.l; ++j) {
    // Each basis element is F_ab for a < b; its coefficient is the (a, b) entry.
    if (variant == Variant::T0) c.push_back(h(2 * j - 2, 2 * j - 1));
    else c.push_back(j == 1 ? h(0, 1) : h(j, ctx.l + j - 1));
  }
  if (!(cartan_element(c) == h)) throw std::invalid_argument("matrix is not in the Cartan subalgebra");
  return c;
}

ExactMatrix RootSystem::cartan_element(const std::vector<GaussianRational>& h) const {
  ExactMatrix out(ctx.n);
  for (int k = 0; k < ctx.l; ++k)
    if (!h[k].is_zero()) out += cartan_basis[k] * h[k];
  return out;
}

GaussianRational RootSystem::evaluate(const Root& r, const ExactMatrix& h) const {
  auto c = cartan_coordinates(h);
  GaussianRational v;
  for (int k = 0; k < ctx.l; ++k)
    if (r.coords[k]) v += GaussianRational(r.coords[k]) * lambda[k] * c[k];
  return v;
}

ExactMatrix RootSystem::dual_element(const std::vector<Rational>& weight) const {
  // tr(H'_j H'_k) = -2 delta_jk.
  std::vector<GaussianRational> c(ctx.l);
  for (int k = 0; k < ctx.l; ++k) c[k] = -(GaussianRational(weight[k]) * lambda[k]) / GaussianRational(2);
  return cartan_element(c);
}

ExactMatrix RootSystem::coroot(const Root& r) const {
  std::vector<Rational> w(r.coords.begin(), r.coords.end());
  return dual_element(w) * GaussianRational(make_rational(4, r.norm2()));
}

std::vector<int> RootSystem::simple_coefficients(const Root& r) const {
  ExactMatrix s = matrix_from_columns(simples, ctx.l);
  ExactMatrix inv = *inverse(s);
  std::vector<int> out;
  for (int a = 0; a < ctx.l; ++a) {
    GaussianRational c;
    for (int b = 0; b < ctx.l; ++b) c += inv(a, b) * GaussianRational(r.coords[b]);
    if (!c.is_real() || !is_integer(c.re())) throw std::logic_error("non-integral simple coefficients for " + to_string(r));
    out.push_back(int(c.re().get_num().get_si()));
  }
  return out;
}

Root highest_root(const RootSystem& rs) {
  if (rs.ctx.m == 2) throw std::domain_error("so(2,2) is not simple; there is no highest root");
  return unit_root(rs.ctx.l, 1, 1, 2, 1);
}

std::vector<Root> RootSystem::vertices() const {
  if (ctx.m == 2) return {simples[0], simples[1], -simples[0], -simples[1]};
  auto v = simples;
  v.push_back(-highest_root(*this));
  return v;
}

std::vector<int> RootSystem::marks() const {
  if (ctx.m == 2) return {1, 1, 1, 1};
  auto a = simple_coefficients(highest_root(*this));
  a.push_back(1);
  return a;
}

std::vector<std::string> RootSystem::vertex_names() const {
  std::vector<std::string> names;
  if (ctx.m == 2) return {"phi1", "phi2", "-phi1", "-phi2"};
  for (int j = 1; j <= ctx.l; ++j) names.push_back("phi" + std::to_string(j));
  names.push_back("-delta");
  return names;
}

std::vector<Root> simple_roots_of(const std::vector<Root>& subset) {
  std::vector<Root> pos;
  for (const auto& r : subset)
    if (r.is_positive()) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) { return a > b; });
  std::vector<Root> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      Root c(a.coords);
      for (std::size_t k = 0; k < c.coords.size(); ++k) c.coords[k] -= b.coords[k];
      if (std::find(pos.begin(), pos.end(), Root(c.coords)) != pos.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

namespace {

using Vec = std::vector<int>;

std::uint64_t encode(const Vec& v) {
  std::uint64_t code = 0;
  for (int x : v) code = (code << 5) | std::uint64_t(x + 16);
  return code;
}

Vec reflect(const Vec& v, const Root& a) {
  int num = 0;
  for (std::size_t k = 0; k < v.size(); ++k) num += v[k] * a.coords[k];
  int coef = 2 * num / a.norm2();  // exact: reflections preserve the integer lattice here
  Vec out(v);
  for (std::size_t k = 0; k < v.size(); ++k) out[k] -= coef * a.coords[k];
  return out;
}

}  // namespace

std::vector<std::int64_t> WeylGroup::length_generating_function() const {
  int top = length.empty() ? 0 : *std::max_element(length.begin(), length.end());
  std::vector<std::int64_t> g(top + 1, 0);
  for (int len : length) ++g[len];
  return g;
}

WeylGroup weyl_group(const std::vector<Root>& simples, int l) {
  if (simples.size() > 8) throw std::length_error("Weyl group rank above 8 is refused");
  if (l > 12) throw std::length_error("coordinate dimension above 12 is not encodable");
  WeylGroup w;
  w.generators = simples;
  // An element is recorded by its image of the regular vector (1, ..., l).
  Vec start(l);
  for (int k = 0; k < l; ++k) start[k] = k + 1;
  std::unordered_map<std::uint64_t, int> seen{{encode(start), 0}};
  std::deque<Vec> queue{start};
  w.elements.push_back(encode(start));
  w.length.push_back(0);
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    int len = seen[encode(v)];
    for (const auto& a : simples) {
      Vec u = reflect(v, a);
      auto code = encode(u);
      if (seen.emplace(code, len + 1).second) {
        w.elements.push_back(code);
        w.length.push_back(len + 1);
        queue.push_back(std::move(u));
      }
    }
  }
  return w;
}

HodgePolynomial coset_poincare(const std::vector<Root>& levi_simples, const std::vector<Root>& compact_simples, int l) {
  auto big = weyl_group(levi_simples, l);
  auto small = weyl_group(compact_simples, l);
  std::unordered_map<std::uint64_t, bool> in_big;
  for (auto e : big.elements) in_big[e] = true;
  for (auto e : small.elements)
    if (!in_big.count(e)) throw std::invalid_argument("compact reflections do not lie in the levi Weyl group");
  auto num = big.length_generating_function();
  auto den = small.length_generating_function();
  // Exact division of integer polynomials; den has constant term 1.
  std::vector<std::int64_t> quo(num.size() - den.size() + 1, 0);
  for (int k = int(quo.size()) - 1; k >= 0; --k) {
    std::int64_t c = num[k + den.size() - 1] / den.back();
    quo[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (auto r : num)
    if (r) throw std::logic_error("coset Poincare division left a remainder");
  return HodgePolynomial::in_xt(quo);
}

}  // namespace so2m
