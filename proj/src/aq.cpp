#include "so2m/aq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace so2m {

namespace {

int pair_with(const Root& a, const std::vector<int>& h) {
  int v = 0;
  for (std::size_t k = 0; k < h.size(); ++k) v += a.coords[k] * h[k];
  return v;
}

// Nonincreasing sequences of the given length with entries in [-bound, bound].
void nonincreasing(int length, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  const int top = cur.empty() ? bound : cur.back();
  for (int v = -bound; v <= top; ++v) {
    cur.push_back(v);
    nonincreasing(length, bound, cur, out);
    cur.pop_back();
  }
}

std::map<ParabolicKey, ThetaStableParabolic> classes_at(const RootSystem& rs, int bound) {
  const int l = rs.ctx.l;
  std::vector<std::vector<int>> tails;
  std::vector<int> cur;
  nonincreasing(l - 1, bound, cur, tails);
  auto weight = [](const std::vector<int>& h) {
    int s = 0;
    for (int x : h) s += std::abs(x);
    return std::make_pair(s, h);
  };
  std::map<ParabolicKey, ThetaStableParabolic> out;
  for (int h1 = -bound; h1 <= bound; ++h1)
    for (const auto& tail : tails) {
      std::vector<int> h{h1};
      h.insert(h.end(), tail.begin(), tail.end());
      if (!is_compact_dominant(rs, h)) continue;
      auto q = make_parabolic(rs, h);
      auto [it, fresh] = out.try_emplace(q.key(), q);
      if (!fresh && weight(h) < weight(it->second.defining_vector)) it->second = std::move(q);
    }
  return out;
}

const RootSystem& root_system_for(int m) {
  static std::mutex mu;
  static std::map<int, RootSystem> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_root_system(build_context(m), Variant::T0)).first;
  return it->second;
}

// beta <= gamma: gamma - beta has nonnegative simple coefficients.
bool root_leq(const RootSystem& rs, const Root& beta, const Root& gamma) {
  std::vector<int> d(beta.coords.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = gamma.coords[k] - beta.coords[k];
  for (int c : rs.simple_coefficients(Root(d)))
    if (c < 0) return false;
  return true;
}

}  // namespace

bool is_compact_dominant(const RootSystem& rs, const std::vector<int>& h) {
  for (const auto& a : rs.compact_positives())
    if (pair_with(a, h) < 0) return false;
  return true;
}

ThetaStableParabolic make_parabolic(const RootSystem& rs, std::vector<int> h) {
  if (int(h.size()) != rs.ctx.l) throw std::invalid_argument("defining vector has the wrong length");
  ThetaStableParabolic q;
  q.m = rs.ctx.m;
  q.family = rs.ctx.family;
  for (const auto& a : rs.roots) {
    const int v = pair_with(a, h);
    if (v == 0) {
      q.levi_roots.push_back(a);
    } else if (v > 0) {
      if (a.is_compact) ++q.s_dim;
      else if (a.is_positive()) q.delta_u_p_plus.push_back(a);
      else q.delta_u_p_minus.push_back(a);
    }
  }
  std::sort(q.delta_u_p_plus.begin(), q.delta_u_p_plus.end());
  std::sort(q.delta_u_p_minus.begin(), q.delta_u_p_minus.end());
  std::sort(q.levi_roots.begin(), q.levi_roots.end());
  q.r_plus = int(q.delta_u_p_plus.size());
  q.r_minus = int(q.delta_u_p_minus.size());
  q.defining_vector = std::move(h);
  return q;
}

std::vector<ThetaStableParabolic> enumerate_parabolics(int m, int bound) {
  const auto& rs = root_system_for(m);
  if (bound < rs.ctx.l + 1) throw std::invalid_argument("enumeration bound must be at least l + 1");
  auto found = classes_at(rs, bound);
  auto wider = classes_at(rs, bound + 1);
  if (wider.size() != found.size())
    throw SaturationError("bound " + std::to_string(bound) + " misses " + std::to_string(wider.size() - found.size()) +
                          " parabolic classes");
  std::vector<ThetaStableParabolic> out;
  for (auto& [key, q] : found) {
    if (!wider.count(key)) throw SaturationError("class set changed between bounds");
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<ThetaStableParabolic> enumerate_parabolics(int m) { return enumerate_parabolics(m, build_context(m).l + 1); }

std::string LeviHermitianFactor::to_string() const {
  switch (kind) {
    case Kind::Point: return "point";
    case Kind::Projective: return "P^" + std::to_string(dimension);
    case Kind::QuadricOdd:
    case Kind::QuadricEven: return "Q_" + std::to_string(dimension);
    case Kind::ProductP1P1: return "P^1xP^1";
  }
  return "?";
}

LeviHermitianFactor levi_hermitian_factor(const ThetaStableParabolic& q) {
  const auto& roots = q.levi_roots;
  std::vector<int> parent(roots.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (inner(roots[a], roots[b]) != 0) parent[find(int(a))] = find(int(b));
  std::map<int, std::vector<Root>> comps;
  for (std::size_t a = 0; a < roots.size(); ++a) comps[find(int(a))].push_back(roots[a]);

  using Kind = LeviHermitianFactor::Kind;
  LeviHermitianFactor f;
  std::vector<std::pair<Kind, int>> kinds;
  for (auto& [rep, comp] : comps) {
    int k = 0;
    for (const auto& a : comp) k += !a.is_compact && a.is_positive();
    if (k == 0) continue;
    const int r = int(comp.size());
    // Irreducible Hermitian symmetric pairs in so(2, *): su(1,k) or so(2,k).
    if (r == k * (k + 1)) kinds.emplace_back(Kind::Projective, k);
    else if (k % 2 == 1 && 2 * r == (k + 1) * (k + 1)) kinds.emplace_back(Kind::QuadricOdd, k);
    else if (k % 2 == 0 && 2 * r == k * (k + 2)) kinds.emplace_back(Kind::QuadricEven, k);
    else throw std::logic_error("unrecognized levi component with " + std::to_string(r) + " roots");
    f.components.push_back(comp);
  }
  if (kinds.empty()) return f;
  if (kinds.size() == 1) {
    f.kind = kinds[0].first;
    f.dimension = kinds[0].second;
    return f;
  }
  if (kinds.size() == 2 && kinds[0] == std::make_pair(Kind::Projective, 1) && kinds[1] == kinds[0]) {
    f.kind = Kind::ProductP1P1;
    f.dimension = 2;
    return f;
  }
  throw std::logic_error("levi has an unexpected product of noncompact factors");
}

HodgePolynomial compact_dual_hodge(const LeviHermitianFactor& f) {
  using Kind = LeviHermitianFactor::Kind;
  const int n = f.dimension;
  std::vector<std::int64_t> c(n + 1, 1);
  switch (f.kind) {
    case Kind::Point: return HodgePolynomial::one();
    case Kind::Projective:
    case Kind::QuadricOdd: return HodgePolynomial::in_xt(c);
    case Kind::QuadricEven: c[n / 2] += 1; return HodgePolynomial::in_xt(c);
    case Kind::ProductP1P1: return HodgePolynomial::in_xt({1, 2, 1});
  }
  return {};
}

HodgePolynomial levi_coset_hodge(const ThetaStableParabolic& q) {
  if (q.levi_roots.empty()) return HodgePolynomial::one();
  std::vector<Root> compact;
  for (const auto& a : q.levi_roots)
    if (a.is_compact) compact.push_back(a);
  const int l = int(q.levi_roots.front().coords.size());
  return coset_poincare(simple_roots_of(q.levi_roots), simple_roots_of(compact), l);
}

HodgePolynomial hodge_polynomial(const ThetaStableParabolic& q) {
  return compact_dual_hodge(levi_hermitian_factor(q)).shifted(q.r_plus, q.r_minus);
}

std::string generator_name(const RootSystem& rs, const Root& r) {
  const int l = rs.ctx.l;
  if (r.is_compact || !r.is_positive()) throw std::invalid_argument("generator must be a positive noncompact root");
  int j = 0, s = 0;
  for (int k = 1; k < l; ++k)
    if (r.coords[k] != 0) j = k + 1, s = r.coords[k];
  if (rs.ctx.m == 2) return s < 0 ? "phi1" : "phi2";
  if (j == 0) return "a" + std::to_string(l);  // e_1, family B
  if (rs.ctx.family == Family::D && j == l) return s < 0 ? "xi1" : "xi2";
  return s < 0 ? "a" + std::to_string(j - 1) : "b" + std::to_string(j);
}

namespace {

struct Generators {
  std::vector<std::string> minus, plus;
};

Generators generators_of(const ThetaStableParabolic& q) {
  const auto& rs = root_system_for(q.m);
  std::vector<Root> down;
  for (const auto& a : q.delta_u_p_minus) down.push_back(-a);
  const auto& up = q.delta_u_p_plus;
  const auto nc = rs.noncompact_positives();
  auto in = [](const std::vector<Root>& v, const Root& a) { return std::find(v.begin(), v.end(), a) != v.end(); };
  for (const auto& a : nc)
    for (const auto& b : nc) {
      if (!root_leq(rs, a, b)) continue;
      if (in(up, a) && !in(up, b)) throw UnmatchedPattern("Delta(u cap p_+) is not an up-set");
      if (in(down, b) && !in(down, a)) throw UnmatchedPattern("-Delta(u cap p_-) is not a down-set");
    }
  Generators g;
  for (const auto& a : up) {
    bool minimal = true;
    for (const auto& b : up) minimal = minimal && (a == b || !root_leq(rs, b, a));
    if (minimal) g.plus.push_back(generator_name(rs, a));
  }
  for (const auto& a : down) {
    bool maximal = true;
    for (const auto& b : down) maximal = maximal && (a == b || !root_leq(rs, a, b));
    if (maximal) g.minus.push_back(generator_name(rs, a));
  }
  std::sort(g.plus.begin(), g.plus.end());
  std::sort(g.minus.begin(), g.minus.end());
  return g;
}

// Index of a single generator "<letter><index>", if that is what gens holds.
std::optional<int> single(const std::vector<std::string>& gens, char letter) {
  if (gens.size() != 1 || gens[0].empty() || gens[0][0] != letter || gens[0].rfind("xi", 0) == 0) return std::nullopt;
  return std::stoi(gens[0].substr(1));
}

bool is_xi_pair(const std::vector<std::string>& gens) { return gens == std::vector<std::string>{"xi1", "xi2"}; }

std::optional<int> single_xi(const std::vector<std::string>& gens) {
  if (gens.size() != 1 || gens[0].rfind("xi", 0) != 0) return std::nullopt;
  return gens[0][2] - '0';
}

RowPattern classify_b(int l, const Generators& g) {
  RowPattern p;
  const auto& P = g.plus;
  auto a_minus = single(g.minus, 'a'), b_minus = single(g.minus, 'b');
  auto a_plus = single(P, 'a'), b_plus = single(P, 'b');
  auto row = [&](int block, int r, std::optional<int> i, std::optional<int> j) {
    p.block = block, p.row = r, p.i = i, p.j = j;
    return true;
  };
  bool ok = false;
  if (g.minus.empty()) {
    if (a_plus == 1) ok = row(1, 1, std::nullopt, std::nullopt);
    else if (a_plus && *a_plus >= 2) ok = row(1, 2, *a_plus, std::nullopt);
    else if (P.empty()) ok = row(1, 3, std::nullopt, std::nullopt);
  } else if (a_minus && *a_minus <= l - 1) {
    const int i = *a_minus;
    if (a_plus == i + 1) ok = row(2, 1, i, std::nullopt);
    else if (a_plus && *a_plus >= i + 2) ok = row(2, 2, i, *a_plus);
    else if (b_plus == i + 1) ok = row(2, 3, i, std::nullopt);
  } else if (a_minus == l) {
    if (b_plus == l) ok = row(3, 1, std::nullopt, std::nullopt);
    else if (b_plus && *b_plus <= l - 1) ok = row(3, 2, std::nullopt, *b_plus);
    else if (P.empty()) ok = row(3, 3, std::nullopt, std::nullopt);
  } else if (b_minus && *b_minus >= 3) {
    const int i = *b_minus;
    if (b_plus == i - 1) ok = row(4, 1, i, std::nullopt);
    else if (b_plus && *b_plus <= i - 2) ok = row(4, 2, i, *b_plus);
    else if (P.empty()) ok = row(4, 3, i, std::nullopt);
  } else if (b_minus == 2 && P.empty()) {
    ok = row(5, 1, std::nullopt, std::nullopt);
  }
  if (!ok) throw UnmatchedPattern("class fits no row of the family B table");
  return p;
}

RowPattern classify_d(int l, const Generators& g) {
  RowPattern p;
  const auto& P = g.plus;
  const auto& M = g.minus;
  auto row = [&](int block, int r, std::optional<int> i, std::optional<int> j) {
    p.block = block, p.row = r, p.i = i, p.j = j;
    return true;
  };
  auto a_minus = single(M, 'a'), b_minus = single(M, 'b'), xi_minus = single_xi(M);
  auto a_plus = single(P, 'a'), b_plus = single(P, 'b'), xi_plus = single_xi(P);
  bool ok = false;
  if (l == 2) {
    // Blocks 9-11: the rank-two rows, where the generators are simple roots.
    auto count = [](const std::vector<std::string>& v) { return int(v.size()); };
    auto index = [](const std::vector<std::string>& v) { return v[0][3] - '0'; };
    if (M.empty()) {
      if (P.empty()) ok = row(9, 1, std::nullopt, std::nullopt);
      else if (count(P) == 1) ok = row(9, 2, index(P), std::nullopt);
      else ok = row(9, 3, std::nullopt, std::nullopt);
    } else if (count(M) == 1) {
      if (P.empty()) ok = row(10, 1, index(M), std::nullopt);
      else if (count(P) == 1 && P != M) ok = row(10, 2, index(M), index(P));
    } else if (P.empty()) {
      ok = row(11, 1, std::nullopt, std::nullopt);
    }
  } else if (M.empty()) {
    if (a_plus == 1) ok = row(1, 1, std::nullopt, std::nullopt);
    else if (a_plus && *a_plus >= 2) ok = row(1, 2, *a_plus, std::nullopt);
    else if (xi_plus) ok = row(1, 3, *xi_plus, std::nullopt);
    else if (is_xi_pair(P)) ok = row(1, 4, std::nullopt, std::nullopt);
    else if (P.empty()) ok = row(1, 5, std::nullopt, std::nullopt);
  } else if (a_minus && *a_minus <= l - 3) {
    const int i = *a_minus;
    if (a_plus == i + 1) ok = row(2, 1, i, std::nullopt);
    else if (a_plus && *a_plus >= i + 2) ok = row(2, 2, i, *a_plus);
    else if (xi_plus) ok = row(2, 3, i, *xi_plus);
    else if (is_xi_pair(P)) ok = row(2, 4, i, std::nullopt);
    else if (b_plus == i + 1) ok = row(2, 5, i, std::nullopt);
  } else if (a_minus == l - 2) {
    if (is_xi_pair(P)) ok = row(3, 1, std::nullopt, std::nullopt);
    else if (xi_plus) ok = row(3, 2, std::nullopt, *xi_plus);
    else if (b_plus == l - 1) ok = row(3, 3, std::nullopt, std::nullopt);
  } else if (xi_minus) {
    const int i = *xi_minus;
    if (xi_plus && *xi_plus != i) ok = row(4, 1, i, *xi_plus);
    else if (b_plus == l - 1) ok = row(4, 2, i, std::nullopt);
    else if (b_plus && *b_plus <= l - 2) ok = row(4, 3, i, *b_plus);
    else if (P.empty()) ok = row(4, 4, i, std::nullopt);
  } else if (is_xi_pair(M)) {
    if (b_plus == l - 1) ok = row(5, 1, std::nullopt, std::nullopt);
    else if (b_plus && *b_plus <= l - 2) ok = row(5, 2, std::nullopt, *b_plus);
    else if (P.empty()) ok = row(5, 3, std::nullopt, std::nullopt);
  } else if (b_minus == 2) {
    // Checked before b_{l-1}: at l = 3 they coincide and the table files it here.
    if (P.empty()) ok = row(8, 1, std::nullopt, std::nullopt);
  } else if (b_minus == l - 1) {
    if (b_plus == l - 2) ok = row(6, 1, std::nullopt, std::nullopt);
    else if (b_plus && *b_plus <= l - 3) ok = row(6, 2, std::nullopt, *b_plus);
    else if (P.empty()) ok = row(6, 3, std::nullopt, std::nullopt);
  } else if (b_minus && *b_minus >= 3) {
    const int i = *b_minus;
    if (b_plus == i - 1) ok = row(7, 1, i, std::nullopt);
    else if (b_plus && *b_plus <= i - 2) ok = row(7, 2, i, *b_plus);
    else if (P.empty()) ok = row(7, 3, i, std::nullopt);
  }
  if (!ok) throw UnmatchedPattern("class fits no row of the family D table");
  return p;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

std::string expansion(const RootSystem& rs, const std::string& gen) {
  for (const auto& a : rs.noncompact_positives()) {
    if (generator_name(rs, a) != gen) continue;
    auto c = rs.simple_coefficients(a);
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k]) parts.push_back((c[k] == 1 ? "" : std::to_string(c[k])) + "phi" + std::to_string(k + 1));
    return join(parts, "+");
  }
  throw std::logic_error("unknown generator " + gen);
}

std::string describe(const RootSystem& rs, const std::vector<std::string>& gens, const char* rel) {
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(expansion(rs, g));
  return std::string("{") + rel + " " + join(parts, " or ") + "}";
}

}  // namespace

std::string RowPattern::to_string() const {
  std::string s = "block " + std::to_string(block) + " row " + std::to_string(row);
  if (i) s += " i=" + std::to_string(*i);
  if (j) s += " j=" + std::to_string(*j);
  return s;
}

RowPattern table_row_pattern(const ThetaStableParabolic& q) {
  auto g = generators_of(q);
  const int l = root_system_for(q.m).ctx.l;
  RowPattern p = q.family == Family::B ? classify_b(l, g) : classify_d(l, g);
  p.minus_generators = g.minus;
  p.plus_generators = g.plus;
  return p;
}

std::string describe_minus(const ThetaStableParabolic& q) {
  auto g = generators_of(q);
  if (g.minus.empty()) return "empty";
  return "-" + describe(root_system_for(q.m), g.minus, "<=");
}

std::string describe_plus(const ThetaStableParabolic& q) {
  auto g = generators_of(q);
  if (g.plus.empty()) return "empty";
  return describe(root_system_for(q.m), g.plus, ">=");
}

}  // namespace so2m
