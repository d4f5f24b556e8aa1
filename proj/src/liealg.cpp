#include "so2m/liealg.hpp"

#include <random>

namespace so2m {

std::string to_string(Family f) { return f == Family::B ? "B" : "D"; }

LieContext build_context(int m) {
  if (m < 2) throw UnsupportedRank("m must be at least 2, got " + std::to_string(m));
  LieContext ctx;
  ctx.m = m;
  ctx.n = m + 2;
  ctx.family = m % 2 ? Family::B : Family::D;
  ctx.l = m % 2 ? (m + 1) / 2 : (m + 2) / 2;
  ctx.dim_g0 = (m + 1) * (m + 2) / 2;
  ctx.dim_k0 = 1 + m * (m - 1) / 2;
  ctx.dim_p0 = 2 * m;
  ctx.theta_conjugator = signature_matrix(2, m);
  if (ctx.dim_k0 + ctx.dim_p0 != ctx.dim_g0) throw std::logic_error("dimension count mismatch");
  return ctx;
}

ExactMatrix elementary(int n, int i, int j) {
  ExactMatrix e(n);
  e(i - 1, j - 1) = 1;
  return e;
}

ExactMatrix skew_unit(int n, int j, int k) {
  ExactMatrix e(n);
  e(j - 1, k - 1) = 1;
  e(k - 1, j - 1) = -1;
  return e;
}

ExactMatrix cartan_h(int n, int j) { return skew_unit(n, 2 * j - 1, 2 * j); }

ExactMatrix signature_matrix(int p, int q) { return sign_runs({{-1, p}, {1, q}}); }

ExactMatrix j_matrix(int p, int q) {
  int k = p + q;
  ExactMatrix j(2 * k);
  for (int r = 0; r < k; ++r) {
    long s = r < p ? -1 : 1;
    j(r, k + r) = s;
    j(k + r, r) = -s;
  }
  return j;
}

ExactMatrix block_diagonal(const std::vector<ExactMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  ExactMatrix out(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

ExactMatrix sign_runs(const std::vector<std::pair<int, int>>& runs) {
  std::vector<long> d;
  for (auto [sign, count] : runs)
    for (int k = 0; k < count; ++k) d.push_back(sign);
  return ExactMatrix::diagonal(d);
}

ExactMatrix theta(const LieContext& ctx, const ExactMatrix& x) {
  // I_{2,m} is its own inverse.
  return ctx.theta_conjugator * x * ctx.theta_conjugator;
}

bool in_g(const LieContext& ctx, const ExactMatrix& x) {
  if (x.rows() != ctx.n || x.cols() != ctx.n) return false;
  const auto& s = ctx.theta_conjugator;
  return (x.transpose() * s + s * x).is_zero();
}

bool in_g0(const LieContext& ctx, const ExactMatrix& x) { return x.is_real() && in_g(ctx, x); }

std::pair<ExactMatrix, ExactMatrix> cartan_decompose(const LieContext& ctx, const ExactMatrix& x) {
  if (!in_g(ctx, x)) throw std::invalid_argument("cartan_decompose: matrix is not in g");
  ExactMatrix t = theta(ctx, x);
  GaussianRational half(make_rational(1, 2));
  return {(x + t) * half, (x - t) * half};
}

ExactMatrix f_isomorphism(const ExactMatrix& z) {
  if (!z.is_square() || !(z.transpose() == -z)) throw std::invalid_argument("f_isomorphism: matrix is not skew-symmetric");
  ExactMatrix out = z;
  const GaussianRational i = GaussianRational::i();
  for (int r = 0; r < 2; ++r)
    for (int c = 2; c < z.cols(); ++c) {
      out(r, c) = z(r, c) * i;
      out(c, r) = -(z(c, r) * i);
    }
  return out;
}

std::vector<ExactMatrix> k0_basis(const LieContext& ctx) {
  std::vector<ExactMatrix> b{skew_unit(ctx.n, 1, 2)};
  for (int a = 3; a <= ctx.n; ++a)
    for (int c = a + 1; c <= ctx.n; ++c) b.push_back(skew_unit(ctx.n, a, c));
  return b;
}

std::vector<ExactMatrix> p0_basis(const LieContext& ctx) {
  std::vector<ExactMatrix> b;
  for (int a = 1; a <= 2; ++a)
    for (int c = 3; c <= ctx.n; ++c) b.push_back(elementary(ctx.n, a, c) + elementary(ctx.n, c, a));
  return b;
}

std::vector<ExactMatrix> g0_basis(const LieContext& ctx) {
  auto b = k0_basis(ctx);
  for (auto& x : p0_basis(ctx)) b.push_back(std::move(x));
  return b;
}

BasisCoordinates::BasisCoordinates(std::vector<ExactMatrix> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  const int rows = basis_[0].rows(), cols = basis_[0].cols();
  const int k = int(basis_.size());
  // Rows of `t` are the flattened basis vectors; its pivot columns are
  // matrix entries on which the family is independent.
  ExactMatrix t(k, rows * cols);
  for (int b = 0; b < k; ++b) {
    if (basis_[b].rows() != rows || basis_[b].cols() != cols) throw std::invalid_argument("BasisCoordinates: mixed sizes");
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(b, i * cols + j) = basis_[b](i, j);
  }
  auto pivots = row_reduce(t);
  if (int(pivots.size()) != k) throw std::invalid_argument("BasisCoordinates: family is linearly dependent");
  ExactMatrix sub(k);
  for (int r = 0; r < k; ++r) {
    probe_.emplace_back(pivots[r] / cols, pivots[r] % cols);
    for (int b = 0; b < k; ++b) sub(r, b) = basis_[b](probe_[r].first, probe_[r].second);
  }
  solve_ = *inverse(sub);
}

std::optional<std::vector<GaussianRational>> BasisCoordinates::coordinates(const ExactMatrix& x) const {
  const int k = int(basis_.size());
  std::vector<GaussianRational> c(k);
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) {
      const auto& v = x(probe_[s].first, probe_[s].second);
      if (!v.is_zero() && !solve_(r, s).is_zero()) c[r] += solve_(r, s) * v;
    }
  if (!(combine(c) == x)) return std::nullopt;
  return c;
}

ExactMatrix BasisCoordinates::combine(const std::vector<GaussianRational>& c) const {
  ExactMatrix out(basis_.empty() ? 0 : basis_[0].rows(), basis_.empty() ? 0 : basis_[0].cols());
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (!c[b].is_zero()) out += basis_[b] * c[b];
  return out;
}

void Report::merge(const Report& other) {
  checks += other.checks;
  if (!other.ok) ok = false;
  for (const auto& f : other.failures)
    if (failures.size() < 20) failures.push_back(other.name + ": " + f);
}

std::vector<ExactMatrix> RealBasis::all() const {
  auto out = kappa_part;
  out.insert(out.end(), p_part.begin(), p_part.end());
  return out;
}

Report verify_real_basis(const LieContext& ctx, const RealBasis& basis) {
  Report r{basis.label == RealBasisLabel::B ? "real basis B" : "real basis B'"};
  auto all = basis.all();
  r.expect(int(basis.kappa_part.size()) == ctx.dim_k0, "kappa part has dim k0 elements");
  r.expect(int(basis.p_part.size()) == ctx.dim_p0, "p part has dim p0 elements");
  for (const auto& x : basis.kappa_part) r.expect(in_g0(ctx, x) && theta(ctx, x) == x, "kappa element lies in k0");
  for (const auto& x : basis.p_part) r.expect(in_g0(ctx, x) && theta(ctx, x) == -x, "p element lies in p0");
  std::optional<BasisCoordinates> coords;
  try {
    coords.emplace(all);
  } catch (const std::invalid_argument&) {
    r.expect(false, "basis is linearly independent");
    return r;
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      auto c = coords->coordinates(bracket(all[a], all[b]));
      bool rational = c.has_value();
      if (rational)
        for (const auto& z : *c) rational = rational && z.is_real();
      r.expect(rational, "structure constants of [" + basis.names[a] + ", " + basis.names[b] + "] are rational");
    }
  return r;
}

Report verify_compact_form(const LieContext& ctx) {
  Report r{"compact form"};
  std::vector<ExactMatrix> u = k0_basis(ctx);
  for (auto& x : p0_basis(ctx)) u.push_back(x * GaussianRational::i());
  BasisCoordinates coords(u);
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      auto c = coords.coordinates(bracket(u[a], u[b]));
      bool real = c.has_value();
      if (real)
        for (const auto& z : *c) real = real && z.is_real();
      r.expect(real, "u is closed under brackets");
    }
  // Gram matrix of the trace form on u; negative definite iff every
  // leading principal minor of -Gram is positive.
  const int k = int(u.size());
  ExactMatrix gram(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) gram(a, b) = -trace_form(u[a], u[b]);
  for (int s = 1; s <= k; ++s) {
    ExactMatrix minor(s);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) minor(a, b) = gram(a, b);
    GaussianRational d = determinant(minor);
    r.expect(d.is_real() && sgn(d.re()) > 0, "trace form is negative definite on u (minor " + std::to_string(s) + ")");
  }
  return r;
}

Report verify_lie_structure(const LieContext& ctx, int samples, unsigned seed) {
  Report r{"lie structure"};
  auto basis = g0_basis(ctx);
  const int k = int(basis.size());
  r.expect(k == ctx.dim_g0, "g0 basis has dim g0 elements");
  for (const auto& x : basis) {
    r.expect(in_g0(ctx, x), "basis element lies in g0");
    r.expect(theta(ctx, theta(ctx, x)) == x, "theta squares to the identity");
  }
  int plus = 0, minus = 0;
  for (const auto& x : basis) {
    auto t = theta(ctx, x);
    plus += t == x;
    minus += t == -x;
  }
  r.expect(plus == ctx.dim_k0 && minus == ctx.dim_p0, "theta eigenspace dimensions");

  auto check_triple = [&](const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z) {
    auto jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    r.expect(jac.is_zero(), "Jacobi identity");
  };
  auto check_pair = [&](const ExactMatrix& x, const ExactMatrix& y) {
    r.expect(bracket(x, y) == -bracket(y, x), "bracket is antisymmetric");
    r.expect(theta(ctx, bracket(x, y)) == bracket(theta(ctx, x), theta(ctx, y)), "theta preserves brackets");
    r.expect(trace_form(theta(ctx, x), theta(ctx, y)) == trace_form(x, y), "trace form is theta-invariant");
  };
  if (ctx.m <= 5) {
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) {
        check_pair(basis[a], basis[b]);
        for (int c = b; c < k; ++c) check_triple(basis[a], basis[b], basis[c]);
      }
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_element = [&] {
      ExactMatrix x(ctx.n);
      for (const auto& b : basis)
        if (int c = coeff(rng)) x += b * GaussianRational(c);
      return x;
    };
    for (int s = 0; s < samples; ++s) {
      auto x = random_element(), y = random_element(), z = random_element();
      check_pair(x, y);
      check_triple(x, y, z);
    }
  }
  return r;
}

}  // namespace so2m
