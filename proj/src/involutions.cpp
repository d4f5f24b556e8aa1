#include "so2m/involutions.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace so2m {

Involution make_involution(std::string name, InvolutionKind kind, int p, const LieContext& ctx, Variant variant,
                           ExactMatrix conjugator) {
  Involution s;
  s.name = std::move(name);
  s.kind = kind;
  s.p = p;
  s.m = ctx.m;
  s.family = ctx.family;
  s.variant = variant;
  auto inv = inverse(conjugator);
  if (!inv) throw std::invalid_argument("conjugator of " + s.name + " is singular");
  s.conjugator = std::move(conjugator);
  s.conjugator_inverse = std::move(*inv);
  return s;
}

Involution theta_involution(const LieContext& ctx) {
  return make_involution("theta", InvolutionKind::Theta, 0, ctx, Variant::T0, ctx.theta_conjugator);
}

Involution with_theta(const Involution& s) {
  Involution t = s;
  auto ctx = build_context(s.m);
  t.name = s.name + "theta";
  t.composed_with_theta = !s.composed_with_theta;
  t.conjugator = s.conjugator * ctx.theta_conjugator;
  t.conjugator_inverse = ctx.theta_conjugator * s.conjugator_inverse;
  return t;
}

namespace {

std::string indexed(const std::string& base, int p) { return base + "_" + std::to_string(p); }

ExactMatrix square_block(std::initializer_list<std::initializer_list<long>> rows) {
  ExactMatrix a(int(rows.size()));
  int r = 0;
  for (auto row : rows) {
    int c = 0;
    for (long v : row) a(r, c++) = v;
    ++r;
  }
  return a;
}

}  // namespace

std::vector<Involution> catalog(int m) {
  auto ctx = build_context(m);
  const int l = ctx.l, n = ctx.n;
  std::vector<Involution> out;
  auto add = [&](std::string name, InvolutionKind kind, int p, Variant v, ExactMatrix g) {
    out.push_back(make_involution(std::move(name), kind, p, ctx, v, std::move(g)));
  };
  if (m == 2) {
    auto j01 = j_matrix(0, 1);
    add("sigma_1", InvolutionKind::Sigma1, 1, Variant::T0, block_diagonal({-j01, j01}));
    add("eta_1", InvolutionKind::Eta1, 1, Variant::T0, square_block({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
    add("eta_2", InvolutionKind::Eta2, 2, Variant::T0, square_block({{0, 0, -1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}));
    add("mu_1", InvolutionKind::Mu, 1, Variant::T0, sign_runs({{-1, 1}, {1, 2}, {-1, 1}}));
    add("tau'_1", InvolutionKind::TauPrime, 1, Variant::T0, sign_runs({{-1, 2}, {1, 1}, {-1, 1}}));
    add("tau_1", InvolutionKind::Tau, 1, Variant::T0, sign_runs({{-1, 1}, {1, 1}, {-1, 2}}));
    return out;
  }
  if (ctx.family == Family::B) {
    for (int p = 2; p <= l; ++p) add(indexed("sigma", p), InvolutionKind::Sigma, p, Variant::T0, sign_runs({{-1, 2 * p}, {1, n - 2 * p}}));
    for (int p = 1; p <= l; ++p)
      add(indexed("tau", p), InvolutionKind::Tau, p, Variant::T0, sign_runs({{-1, 1}, {1, 2 * p - 1}, {-1, 2 * l - 2 * p + 1}}));
    return out;
  }
  for (int p = 2; p <= l - 2; ++p) add(indexed("sigma", p), InvolutionKind::Sigma, p, Variant::T0, sign_runs({{-1, 2 * p}, {1, n - 2 * p}}));
  for (int p = 1; p <= l - 2; ++p)
    add(indexed("tau", p), InvolutionKind::Tau, p, Variant::T0, sign_runs({{-1, 1}, {1, 2 * p - 1}, {-1, 2 * l - 2 * p}}));
  for (int p = 1; p <= l - 2; ++p)
    add(indexed("tau'", p), InvolutionKind::TauPrime, p, Variant::T0, sign_runs({{-1, 2 * p}, {1, 2 * l - 2 * p - 1}, {-1, 1}}));
  for (int p = 1; p <= l - 2; ++p)
    add(indexed("mu", p), InvolutionKind::Mu, p, Variant::T0,
        sign_runs({{-1, 1}, {1, 1}, {-1, 2 * p - 2}, {1, 2 * l - 2 * p - 1}, {-1, 1}}));
  ExactMatrix j0_prime = block_diagonal({j_matrix(0, 1), j_matrix(l - 2, 1)});
  ExactMatrix j0 = block_diagonal({j_matrix(0, 1), j_matrix(0, l - 1)});
  add(indexed("sigma", l - 1), InvolutionKind::SigmaLm1, l - 1, Variant::T0Prime, j0_prime);
  add(indexed("sigma", l), InvolutionKind::SigmaL, l, Variant::T0Prime, j0);
  if (l == 3) {
    add("sigma_0", InvolutionKind::Sigma0, 0, Variant::T0Prime, j0_prime * j0);
    add("sigma'_0", InvolutionKind::Sigma0Prime, 0, Variant::T0Prime, sign_runs({{-1, 1}, {1, 1}, {-1, 1}, {1, 1}, {-1, 1}, {1, 1}}));
  }
  return out;
}

Report verify_involution(const Involution& s, int samples, unsigned seed) {
  auto ctx = build_context(s.m);
  Report r("involution " + s.name + " m=" + std::to_string(s.m));
  auto basis = g0_basis(ctx);
  BasisCoordinates coords(basis);
  for (const auto& x : basis) {
    auto y = s.apply(x);
    r.expect(in_g0(ctx, y), "sigma maps g0 into g0");
    r.expect(s.apply(y) == x, "sigma squares to the identity");
    r.expect(s.apply(theta(ctx, x)) == theta(ctx, y), "sigma commutes with theta");
  }
  auto check_pair = [&](const ExactMatrix& x, const ExactMatrix& y) {
    r.expect(s.apply(bracket(x, y)) == bracket(s.apply(x), s.apply(y)), "sigma preserves brackets");
  };
  const int k = int(basis.size());
  if (s.m <= 5) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) check_pair(basis[a], basis[b]);
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int t = 0; t < samples; ++t) check_pair(basis[pick(rng)], basis[pick(rng)]);
  return r;
}

FixedSubalgebra fixed_subalgebra(const Involution& s) {
  auto ctx = build_context(s.m);
  FixedSubalgebra out;
  auto fixed_part = [&](const std::vector<ExactMatrix>& basis, std::vector<ExactMatrix>* keep) {
    BasisCoordinates coords(basis);
    const int k = int(basis.size());
    ExactMatrix a(k);
    for (int j = 0; j < k; ++j) {
      auto c = coords.coordinates(s.apply(basis[j]));
      if (!c) throw std::runtime_error(s.name + " does not commute with theta");
      for (int i = 0; i < k; ++i) a(i, j) = (*c)[i] - GaussianRational(i == j ? 1 : 0);
    }
    auto ns = nullspace(a);
    if (keep)
      for (const auto& v : ns) keep->push_back(coords.combine(v));
    return int(ns.size());
  };
  out.k0_fixed_dim = fixed_part(k0_basis(ctx), nullptr);
  out.p0_fixed_dim = fixed_part(p0_basis(ctx), &out.p0_fixed_basis);
  out.g0_fixed_dim = out.k0_fixed_dim + out.p0_fixed_dim;
  return out;
}

std::string VoganData::describe() const {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : " ") + s; };
  for (std::size_t v = 0; v < action.size(); ++v)
    if (int(v) < action[v]) add("swap(" + names[v] + "," + names[action[v]] + ")");
  for (std::size_t v = 0; v < action.size(); ++v)
    if (circled(int(v))) add("circle(" + names[v] + ")");
  return out.empty() ? "id" : out;
}

VoganData vogan_data(const Involution& s) {
  const auto& cb = cached_chevalley(s.m, s.variant);
  const auto& rs = cb.rs;
  VoganData vd;
  vd.vertices = rs.vertices();
  vd.names = rs.vertex_names();
  vd.marks = rs.marks();
  for (const auto& v : vd.vertices) vd.black.push_back(!v.is_compact);
  const int nv = int(vd.vertices.size());
  vd.action.assign(nv, -1);
  vd.signs.assign(nv, 0);
  for (int v = 0; v < nv; ++v) {
    auto image = s.apply(cb.e(vd.vertices[v]));
    for (const auto& b : rs.roots) {
      auto scale = proportionality(image, cb.e(b));
      if (!scale) continue;
      auto it = std::find(vd.vertices.begin(), vd.vertices.end(), b);
      if (it == vd.vertices.end())
        throw std::runtime_error(s.name + " sends vertex " + vd.names[v] + " to the non-vertex root " + to_string(b));
      vd.action[v] = int(it - vd.vertices.begin());
      if (vd.action[v] == v) {
        if (*scale == GaussianRational(1)) vd.signs[v] = 1;
        else if (*scale == GaussianRational(-1)) vd.signs[v] = -1;
        else throw std::runtime_error(s.name + " acts on a fixed root space by a scalar other than +-1");
      }
      break;
    }
    if (vd.action[v] < 0) throw std::runtime_error(s.name + " does not normalize the Cartan subalgebra");
  }
  return vd;
}

ParityResult almost_double_parity(const VoganData& vd) {
  ParityResult pr;
  for (int v = 0; v < int(vd.action.size()); ++v) {
    bool in_o = vd.circled(v) || (!vd.fixed(v) && inner(vd.vertices[v], vd.vertices[vd.action[v]]) != 0);
    if (in_o) {
      pr.o_set.push_back(v);
      pr.mark_sum += vd.marks[v];
    }
  }
  pr.even = pr.mark_sum % 2 == 0;
  return pr;
}

namespace {

struct WhiteDiagram {
  std::vector<int> white;                  // vertex indices of white vertices
  std::vector<int> component;              // per vertex index, -1 for black
  std::vector<int> c;                      // per vertex index, mark in its component's highest root
};

WhiteDiagram white_diagram(const RootSystem& rs) {
  auto verts = rs.vertices();
  const int nv = int(verts.size());
  WhiteDiagram w;
  w.component.assign(nv, -1);
  w.c.assign(nv, 0);
  for (int v = 0; v < nv; ++v)
    if (verts[v].is_compact) w.white.push_back(v);
  int comp = 0;
  for (int v : w.white) {
    if (w.component[v] >= 0) continue;
    std::vector<int> stack{v};
    w.component[v] = comp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int x : w.white)
        if (w.component[x] < 0 && inner(verts[u], verts[x]) != 0) {
          w.component[x] = comp;
          stack.push_back(x);
        }
    }
    ++comp;
  }
  // White vertices are simple roots; a component's highest root is its
  // positive root of maximal height supported on the component.
  for (int k = 0; k < comp; ++k) {
    std::vector<int> support(rs.simples.size(), 0);
    for (int v : w.white)
      if (w.component[v] == k) support[v] = 1;
    std::vector<int> best;
    int best_height = -1;
    for (const auto& r : rs.positives) {
      auto coeff = rs.simple_coefficients(r);
      bool inside = true;
      int height = 0;
      for (std::size_t j = 0; j < coeff.size(); ++j) {
        if (coeff[j] && !support[j]) inside = false;
        height += coeff[j];
      }
      if (inside && height > best_height) {
        best_height = height;
        best = coeff;
      }
    }
    for (int v : w.white)
      if (w.component[v] == k) w.c[v] = best[v];
  }
  return w;
}

bool preserves_gram(const std::vector<Root>& verts, const std::vector<int>& perm) {
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = 0; b < verts.size(); ++b)
      if (inner(verts[a], verts[b]) != inner(verts[perm[a]], verts[perm[b]])) return false;
  return true;
}

}  // namespace

std::string KZeroDiagram::describe(const RootSystem& rs) const {
  auto names = rs.vertex_names();
  std::string out = center == 1 ? "z:id" : "z:-id";
  for (std::size_t v = 0; v < white_action.size(); ++v)
    if (int(v) < white_action[v]) out += " swap(" + names[v] + "," + names[white_action[v]] + ")";
  for (int c : circles) out += " circle(" + names[c] + ")";
  return out;
}

std::vector<KZeroDiagram> enumerate_k0_diagrams(const RootSystem& rs) {
  if (rs.ctx.m == 2) return {};
  auto verts = rs.vertices();
  auto w = white_diagram(rs);
  const int nv = int(verts.size());
  std::vector<Root> white_roots;
  for (int v : w.white) white_roots.push_back(verts[v]);
  // How each white vertex attaches to the black ones. An involution of k0
  // that moves this pattern does not preserve the k-module p (for a D_4
  // white diagram, a triality swap exchanges the vector and a spin module),
  // so it is left out.
  auto attachment = [&](int v) {
    std::vector<int> a;
    for (int b = 0; b < nv; ++b)
      if (!verts[b].is_compact) a.push_back(inner(verts[v], verts[b]));
    std::sort(a.begin(), a.end());
    return a;
  };
  // Involutive automorphisms of the white diagram.
  std::vector<std::vector<int>> autos;
  std::vector<int> perm(w.white.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = int(k);
  do {
    bool involutive = true;
    for (std::size_t k = 0; k < perm.size(); ++k) involutive = involutive && perm[perm[k]] == int(k);
    for (std::size_t k = 0; k < perm.size() && involutive; ++k)
      involutive = attachment(w.white[k]) == attachment(w.white[perm[k]]);
    if (involutive && preserves_gram(white_roots, perm)) {
      std::vector<int> full(nv);
      for (int v = 0; v < nv; ++v) full[v] = v;
      for (std::size_t k = 0; k < perm.size(); ++k) full[w.white[k]] = w.white[perm[k]];
      autos.push_back(full);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  int components = 0;
  for (int v : w.white) components = std::max(components, w.component[v] + 1);
  std::vector<KZeroDiagram> out;
  for (const auto& a : autos) {
    // Per component: no circle, or one fixed vertex with c <= 2.
    std::vector<std::vector<int>> options(components, std::vector<int>{-1});
    for (int v : w.white)
      if (a[v] == v && w.c[v] <= 2) options[w.component[v]].push_back(v);
    std::function<void(int, std::vector<int>&)> rec = [&](int k, std::vector<int>& chosen) {
      if (k == components) {
        for (int z : {1, -1}) out.push_back(KZeroDiagram{a, chosen, z});
        return;
      }
      for (int v : options[k]) {
        if (v >= 0) chosen.push_back(v);
        rec(k + 1, chosen);
        if (v >= 0) chosen.pop_back();
      }
    };
    std::vector<int> chosen;
    rec(0, chosen);
  }
  return out;
}

bool extendability(const RootSystem& rs, const KZeroDiagram& d) {
  if (rs.ctx.m == 2) throw std::invalid_argument("extendability is defined for simple g only");
  auto verts = rs.vertices();
  auto marks = rs.marks();
  auto w = white_diagram(rs);
  const int nv = int(verts.size());
  if (int(d.white_action.size()) != nv) throw std::invalid_argument("diagram has the wrong number of vertices");
  if (d.center != 1 && d.center != -1) throw std::invalid_argument("center action must be +1 or -1");
  std::vector<Root> white_roots;
  std::vector<int> white_perm;
  for (int v : w.white) {
    int img = d.white_action[v];
    if (img < 0 || img >= nv || verts[img].is_compact == false || d.white_action[img] != v)
      throw std::invalid_argument("white action is not an involution of the white vertices");
    white_roots.push_back(verts[v]);
    white_perm.push_back(int(std::find(w.white.begin(), w.white.end(), img) - w.white.begin()));
  }
  if (!preserves_gram(white_roots, white_perm)) throw std::invalid_argument("white action is not a diagram automorphism");
  std::set<int> circled_components;
  for (int c : d.circles) {
    if (c < 0 || c >= nv || !verts[c].is_compact) throw std::invalid_argument("circle on a non-white vertex");
    if (d.white_action[c] != c) throw std::invalid_argument("circle on a moved vertex");
    if (w.c[c] > 2) throw std::invalid_argument("circle on a vertex with c_psi > 2");
    if (!circled_components.insert(w.component[c]).second) throw std::invalid_argument("two circles in one component");
  }
  std::vector<int> blacks;
  for (int v = 0; v < nv; ++v)
    if (!verts[v].is_compact) blacks.push_back(v);
  std::vector<int> full = d.white_action;
  int white_sum = 0;
  for (int c : d.circles) white_sum += marks[c];
  if (d.center == 1) {
    for (int b : blacks) full[b] = b;
    if (!preserves_gram(verts, full)) return false;
    // Circles on the black vertices are free; any of the four choices may fix parity.
    for (int mask = 0; mask < (1 << blacks.size()); ++mask) {
      int sum = white_sum;
      for (std::size_t k = 0; k < blacks.size(); ++k)
        if (mask >> k & 1) sum += marks[blacks[k]];
      if (sum % 2 == 0) return true;
    }
    return false;
  }
  if (blacks.size() != 2) return false;
  full[blacks[0]] = blacks[1];
  full[blacks[1]] = blacks[0];
  if (!preserves_gram(verts, full)) return false;
  int sum = white_sum;
  for (int v = 0; v < nv; ++v)
    if (full[v] != v && inner(verts[v], verts[full[v]]) != 0) sum += marks[v];
  return sum % 2 == 0;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

ExactMatrix cayley_exp(const ExactMatrix& x, int quarter_turns) {
  if (!x.is_square()) throw std::invalid_argument("cayley_exp: matrix is not square");
  const int n = x.rows();
  if (quarter_turns == 0) return ExactMatrix::identity(n);
  ExactMatrix x2 = x * x;
  ExactMatrix x4 = x2 * x2;
  auto c2 = proportionality(x4, -x2);
  if (x2.is_zero() || !c2 || !c2->is_real() || sgn(c2->re()) <= 0)
    throw std::invalid_argument("cayley_exp: X^2 is not -c^2 P for a projector P");
  auto c = rational_sqrt(c2->re());
  if (!c) throw std::invalid_argument("cayley_exp: c is irrational");
  ExactMatrix proj = x2 * -(GaussianRational(1) / *c2);
  if (!(proj * proj == proj) || !(x * proj == x)) throw std::invalid_argument("cayley_exp: P is not a projector fixing X");
  // c t = (c k / 2) (pi / 2) must be a multiple of pi / 2.
  Rational j = *c * quarter_turns / 2;
  if (!is_integer(j)) throw std::invalid_argument("cayley_exp: angle is not a multiple of pi/2");
  long r = mpz_class(j.get_num() % 4).get_si();
  if (r < 0) r += 4;
  static const long sin_tab[4] = {0, 1, 0, -1};
  static const long cos_tab[4] = {1, 0, -1, 0};
  ExactMatrix out = ExactMatrix::identity(n);
  out += x * GaussianRational(Rational(sin_tab[r]) / *c);
  out += x2 * GaussianRational(Rational(1 - cos_tab[r]) / (*c * *c));
  return out;
}

std::string to_string(Holomorphy h) {
  switch (h) {
    case Holomorphy::Holomorphic: return "holomorphic";
    case Holomorphy::Antiholomorphic: return "antiholomorphic";
    case Holomorphy::Mixed: return "mixed";
  }
  return "";
}

Holomorphy holomorphy_class(const Involution& s) {
  auto ctx = build_context(s.m);
  std::vector<ExactMatrix> center{skew_unit(ctx.n, 1, 2)};
  if (s.m == 2) center.push_back(skew_unit(ctx.n, 3, 4));
  bool fixes = true, negates = true;
  for (const auto& z : center) {
    auto y = s.apply(z);
    fixes = fixes && y == z;
    negates = negates && y == -z;
  }
  if (fixes) return Holomorphy::Holomorphic;
  if (negates) return Holomorphy::Antiholomorphic;
  return Holomorphy::Mixed;
}

LatticeMatrix ad_matrix_in_lattice_basis(const Involution& s, const RealBasis& basis) {
  auto all = basis.all();
  BasisCoordinates coords(all);
  const int k = int(all.size());
  LatticeMatrix out{ExactMatrix(k), true};
  for (int j = 0; j < k; ++j) {
    auto c = coords.coordinates(s.apply(all[j]));
    if (!c) throw std::runtime_error(s.name + " does not preserve g0");
    for (int i = 0; i < k; ++i) {
      const auto& z = (*c)[i];
      if (!z.is_real()) throw std::runtime_error(s.name + " has a non-rational entry in the real basis");
      out.matrix(i, j) = z;
      if (!is_integer(z.re())) out.integral = false;
    }
  }
  return out;
}

}  // namespace so2m
