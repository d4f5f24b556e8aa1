#include "so2m/chevalley.hpp"

#include <memory>
#include <mutex>

namespace so2m {

namespace {

const GaussianRational kI = GaussianRational::i();

// The G^{+-}_{jk} and D^+_j matrices for each Cartan variant; first-row
// vectors (j = 1) are noncompact and pass through f.
struct VectorFactory {
  const LieContext& ctx;
  Variant variant;

  ExactMatrix F(int a, int b) const { return skew_unit(ctx.n, a, b); }

  ExactMatrix g_minus_root(int j, int k) const {  // root e_j - e_k
    if (variant == Variant::T0) {
      ExactMatrix z = F(2 * j - 1, 2 * k - 1) + F(2 * j, 2 * k) + (F(2 * j - 1, 2 * k) - F(2 * j, 2 * k - 1)) * kI;
      return j == 1 ? f_isomorphism(z) : z;
    }
    const int l = ctx.l;
    if (j == 1) return f_isomorphism(F(1, l + k) + F(2, 1 + k) + (F(1, 1 + k) - F(2, l + k)) * kI);
    return -F(1 + j, 1 + k) - F(l + j, l + k) + (F(1 + j, l + k) + F(1 + k, l + j)) * kI;
  }

  ExactMatrix g_plus_root(int j, int k) const {  // root e_j + e_k
    if (variant == Variant::T0) {
      ExactMatrix z = -F(2 * j - 1, 2 * k - 1) + F(2 * j, 2 * k) + (F(2 * j - 1, 2 * k) + F(2 * j, 2 * k - 1)) * kI;
      return j == 1 ? f_isomorphism(z) : z;
    }
    const int l = ctx.l;
    if (j == 1) return f_isomorphism(-F(1, l + k) + F(2, 1 + k) + (F(1, 1 + k) + F(2, l + k)) * kI);
    return -F(1 + j, 1 + k) + F(l + j, l + k) + (F(1 + k, l + j) - F(1 + j, l + k)) * kI;
  }

  ExactMatrix d_root(int j) const {  // root e_j, family B only
    ExactMatrix z = -F(2 * j - 1, ctx.n) + F(2 * j, ctx.n) * kI;
    return j == 1 ? f_isomorphism(z) : z;
  }
};

std::optional<GaussianRational> ratio(const ExactMatrix& y, const ExactMatrix& x) { return proportionality(y, x); }

}  // namespace

const ExactMatrix& ChevalleyBasis::e(const Root& a) const {
  auto it = root_vectors.find(a.coords);
  if (it == root_vectors.end()) throw std::invalid_argument("not a root: " + to_string(a));
  return it->second;
}

ExactMatrix ChevalleyBasis::x(const Root& a) const { return e(a) - e(-a); }

ExactMatrix ChevalleyBasis::y(const Root& a) const { return (e(a) + e(-a)) * kI; }

ChevalleyBasis build_chevalley(const RootSystem& rs) {
  ChevalleyBasis cb{rs, {}};
  const int l = rs.ctx.l;
  VectorFactory vf{rs.ctx, rs.variant};
  const GaussianRational half(make_rational(1, 2));
  // E_-a = -conj(E_a) on compact roots and +conj(E_a) on noncompact ones.
  auto insert = [&](const Root& a, const ExactMatrix& ea) {
    cb.root_vectors[a.coords] = ea;
    cb.root_vectors[(-a).coords] = a.is_compact ? -ea.conj() : ea.conj();
  };
  for (int j = 1; j <= l; ++j) {
    for (int k = j + 1; k <= l; ++k) {
      insert(unit_root(l, j, 1, k, -1), vf.g_minus_root(j, k) * half);
      insert(unit_root(l, j, 1, k, 1), vf.g_plus_root(j, k) * half);
    }
    if (rs.ctx.family == Family::B) insert(unit_root(l, j, 1), vf.d_root(j));
  }
  Report r = verify_chevalley(cb);
  if (!r.ok) throw ChevalleyError("Chevalley relation failed: " + r.failures.front());
  return cb;
}

Report verify_chevalley(const ChevalleyBasis& cb) {
  const auto& rs = cb.rs;
  Report r{"chevalley " + to_string(rs.variant) + " m=" + std::to_string(rs.ctx.m)};
  r.expect(cb.root_vectors.size() == rs.roots.size(), "one root vector per root");
  for (const auto& a : rs.roots) {
    const auto& ea = cb.e(a);
    r.expect(in_g(rs.ctx, ea) && !ea.is_zero(), "E" + to_string(a) + " is a nonzero element of g");
    for (std::size_t k = 0; k < rs.cartan_basis.size(); ++k) {
      const auto& h = rs.cartan_basis[k];
      r.expect(bracket(h, ea) == ea * rs.evaluate(a, h), "[H, E" + to_string(a) + "] = a(H) E" + to_string(a));
    }
    r.expect(bracket(ea, cb.e(-a)) == cb.hstar(a), "[E" + to_string(a) + ", E_-a] = H*_a");
    int p = a.is_compact ? 1 : -1;
    r.expect(theta(rs.ctx, ea) == ea * GaussianRational(p), "theta(E" + to_string(a) + ") = p_a E_a");
  }
  for (const auto& a : rs.roots)
    for (const auto& b : rs.roots) {
      Root s = a + b;
      if (!rs.contains(s)) continue;
      auto n = ratio(bracket(cb.e(a), cb.e(b)), cb.e(s));
      bool integral = n && n->is_real() && is_integer(n->re());
      r.expect(integral, "N" + to_string(a) + to_string(b) + " is an integer");
      if (!integral) continue;
      auto m = ratio(bracket(cb.e(-a), cb.e(-b)), cb.e(-s));
      r.expect(m && *m == -*n, "N_{a,b} = -N_{-a,-b} for a=" + to_string(a) + ", b=" + to_string(b));
    }
  return r;
}

const ChevalleyBasis& cached_chevalley(int m, Variant v) {
  static std::mutex mu;
  static std::map<std::pair<int, Variant>, std::unique_ptr<ChevalleyBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, v}];
  if (!slot) slot = std::make_unique<ChevalleyBasis>(build_chevalley(build_root_system(build_context(m), v)));
  return *slot;
}

int structure_constant(const ChevalleyBasis& cb, const Root& a, const Root& b) {
  Root s = a + b;
  if (!cb.rs.contains(s)) throw std::invalid_argument("a + b is not a root");
  auto n = ratio(bracket(cb.e(a), cb.e(b)), cb.e(s));
  if (!n || !n->is_real() || !is_integer(n->re())) throw ChevalleyError("non-integral structure constant");
  return int(n->re().get_num().get_si());
}

int theta_signature(const ChevalleyBasis& cb, const Root& a) {
  const auto& ea = cb.e(a);
  auto s = ratio(theta(cb.rs.ctx, ea), ea);
  if (!s || !(*s == GaussianRational(1) || *s == GaussianRational(-1))) throw ChevalleyError("root vector is not a theta eigenvector");
  return *s == GaussianRational(1) ? 1 : -1;
}

}  // namespace so2m
