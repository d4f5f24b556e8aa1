#pragma once

// Closed forms transcribed from the published tables, kept independent of
// the library so that the library's computations can be checked against
// them. Nothing here calls into so2m except for the plain value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "so2m/involutions.hpp"

namespace oracle {

// (d(sigma), d(sigma theta)) for theorem-scope involutions; nullopt for tau_p
// in family B, which has no dimension row.
inline std::optional<std::pair<int, int>> table3_dims(const so2m::Involution& s) {
  using K = so2m::InvolutionKind;
  const int m = s.m;
  const int p = s.p;
  const bool odd = m % 2 == 1;
  const int l = odd ? (m + 1) / 2 : (m + 2) / 2;
  if (m == 2) {
    if (s.kind == K::Eta1 || s.kind == K::Eta2) return std::pair{3, 1};
    return std::pair{2, 2};
  }
  switch (s.kind) {
    case K::Sigma:
      return odd ? std::pair{2 * (2 * p - 2), 2 * (2 * l - 2 * p + 1)} : std::pair{2 * (2 * p - 2), 2 * (2 * l - 2 * p)};
    case K::SigmaLm1:
    case K::SigmaL:
    case K::Mu:
      return std::pair{2 * (l - 1), 2 * (l - 1)};
    case K::Tau:
      if (odd) return std::nullopt;
      return std::pair{2 * (l - 1), 2 * (l - 1)};
    case K::TauPrime:
      return std::pair{2 * (2 * p - 1), 2 * (2 * l - 2 * p - 1)};
    case K::Sigma0:
    case K::Sigma0Prime:
      return std::pair{4, 4};
    default:
      return std::nullopt;
  }
}

inline std::string ph(int j) { return "phi" + std::to_string(j); }

// Diagrams drawn in the involution tables, as unordered {sigma, sigma theta}
// pairs in VoganData::describe() form.
inline std::set<std::string> drawn_pair(const so2m::Involution& s, int l) {
  using K = so2m::InvolutionKind;
  const int p = s.p;
  const std::string circle_p = p >= 2 ? " circle(" + ph(p) + ")" : "";
  const std::string ends = "swap(" + ph(l - 1) + "," + ph(l) + ")";
  auto trim = [](std::string x) { return x.empty() ? std::string("id") : (x[0] == ' ' ? x.substr(1) : x); };
  if (s.m == 2) {
    switch (s.kind) {
      case K::Sigma1: return {"circle(phi1) circle(-phi1)", "circle(phi2) circle(-phi2)"};
      case K::Eta1: return {"swap(phi1,-phi1)", "swap(phi1,-phi1) circle(phi2) circle(-phi2)"};
      case K::Eta2: return {"swap(phi2,-phi2)", "swap(phi2,-phi2) circle(phi1) circle(-phi1)"};
      case K::Mu: return {"swap(phi1,-phi1) swap(phi2,-phi2)"};
      case K::TauPrime: return {"swap(phi1,phi2) swap(-phi1,-phi2)"};
      case K::Tau: return {"swap(phi1,-phi2) swap(phi2,-phi1)"};
      default: return {};
    }
  }
  switch (s.kind) {
    case K::Sigma: return {"circle(" + ph(p) + ")", "circle(phi1) circle(" + ph(p) + ") circle(-delta)"};
    case K::Tau: return {"swap(phi1,-delta)" + circle_p};
    case K::Mu: return {"swap(phi1,-delta) " + ends + circle_p};
    case K::TauPrime:
      return {trim(ends + circle_p), trim(ends + " circle(phi1)" + circle_p + " circle(-delta)")};
    case K::SigmaL: return {"circle(phi1) circle(" + ph(l) + ")", "circle(" + ph(l) + ") circle(-delta)"};
    case K::SigmaLm1: return {"circle(phi1) circle(" + ph(l - 1) + ")", "circle(" + ph(l - 1) + ") circle(-delta)"};
    case K::Sigma0: return {"circle(phi2) circle(phi3)", "circle(phi1) circle(phi2) circle(phi3) circle(-delta)"};
    case K::Sigma0Prime: return {"swap(phi1,-delta) circle(phi2) circle(phi3)"};
    default: return {};
  }
}

// Longest element of the compact Weyl group, on defining vectors.
inline std::vector<int> compact_longest(int m, std::vector<int> h) {
  const int l = int(h.size());
  if (m == 2) return h;
  for (int k = 1; k < l; ++k) h[k] = -h[k];
  // W(D_{l-1}) contains -1 only for l-1 even; otherwise the last sign stays.
  if (m % 2 == 0 && (l - 1) % 2 == 1) h[l - 1] = -h[l - 1];
  return h;
}

// Rows of the two parabolic tables. Roots are coordinate vectors in the e_j
// basis; polynomials map (x-degree, t-degree) to coefficients.
using Coords = std::vector<int>;
using Poly = std::map<std::pair<int, int>, std::int64_t>;

struct TableRow {
  int block = 0;
  int row = 0;
  std::optional<int> i, j;
  std::set<Coords> minus;  // Delta(u cap p_-), as negative roots
  std::set<Coords> plus;   // Delta(u cap p_+)
  Poly poly;
  std::set<std::string> no_component;
};

// x^{x0} t^{t0} + x^{x0+1} t^{t0+1} + ... (count terms).
inline Poly run(int x0, int t0, int count) {
  Poly p;
  for (int k = 0; k < count; ++k) p[{x0 + k, t0 + k}] += 1;
  return p;
}

inline Poly with(Poly p, int a, int b, std::int64_t c) {
  p[{a, b}] += c;
  return p;
}

inline Coords unit(int l, int j, int sj, int k = 0, int sk = 0) {
  Coords c(l, 0);
  c[j - 1] = sj;
  if (k) c[k - 1] = sk;
  return c;
}

inline std::set<Coords> negate(const std::set<Coords>& s) {
  std::set<Coords> out;
  for (auto c : s) {
    for (auto& x : c) x = -x;
    out.insert(c);
  }
  return out;
}

// Positive noncompact roots by height level: one root per level except the
// middle level of family D, which holds the incomparable xi_1 and xi_2.
struct Chain {
  std::vector<std::vector<Coords>> levels;
  int level_of(const Coords& c) const {
    for (std::size_t k = 0; k < levels.size(); ++k)
      if (std::find(levels[k].begin(), levels[k].end(), c) != levels[k].end()) return int(k);
    throw std::logic_error("root not in chain");
  }
  // {beta >= any generator}
  std::set<Coords> up(const std::vector<Coords>& gens) const {
    std::set<Coords> out(gens.begin(), gens.end());
    int lo = int(levels.size());
    for (const auto& g : gens) lo = std::min(lo, level_of(g));
    for (std::size_t k = lo + 1; k < levels.size(); ++k) out.insert(levels[k].begin(), levels[k].end());
    return out;
  }
  std::set<Coords> down(const std::vector<Coords>& gens) const {
    std::set<Coords> out(gens.begin(), gens.end());
    int hi = -1;
    for (const auto& g : gens) hi = std::max(hi, level_of(g));
    for (int k = 0; k < hi; ++k) out.insert(levels[k].begin(), levels[k].end());
    return out;
  }
};

inline std::string nm(const std::string& base, int p) { return base + "_" + std::to_string(p); }

// Family B, m = 2l - 1. a_i = phi_1+...+phi_i = e_1 - e_{i+1} (a_l = e_1),
// b_j = phi_1+...+phi_{j-1}+2phi_j+...+2phi_l = e_1 + e_j.
inline std::vector<TableRow> table_b(int l) {
  auto a = [&](int i) { return i == l ? unit(l, 1, 1) : unit(l, 1, 1, i + 1, -1); };
  auto b = [&](int j) { return unit(l, 1, 1, j, 1); };
  Chain ch;
  for (int i = 1; i <= l; ++i) ch.levels.push_back({a(i)});
  for (int j = l; j >= 2; --j) ch.levels.push_back({b(j)});
  auto sigma = [&](std::function<bool(int)> keep) {
    std::set<std::string> out;
    for (int p = 2; p <= l; ++p)
      if (keep(p)) out.insert(nm("sigma", p));
    return out;
  };
  auto all = [](int) { return true; };
  std::vector<TableRow> rows;
  auto add = [&](int block, int row, std::optional<int> i, std::optional<int> j, std::set<Coords> minus,
                 std::set<Coords> plus, Poly poly, std::set<std::string> col) {
    rows.push_back({block, row, i, j, negate(minus), std::move(plus), std::move(poly), std::move(col)});
  };
  const int top = 2 * l - 1;
  add(1, 1, {}, {}, {}, ch.up({a(1)}), run(top, 0, 1), sigma(all));
  for (int i = 2; i <= l; ++i) add(1, 2, i, {}, {}, ch.up({a(i)}), run(2 * l - i, 0, i), sigma(all));
  add(1, 3, {}, {}, {}, {}, run(0, 0, 2 * l), {});
  for (int i = 1; i <= l - 1; ++i) {
    auto minus = ch.down({a(i)});
    add(2, 1, i, {}, minus, ch.up({a(i + 1)}), run(top - i, i, 1), sigma(all));
    for (int j = i + 2; j <= l; ++j) add(2, 2, i, j, minus, ch.up({a(j)}), run(2 * l - j, i, j - i), sigma(all));
    add(2, 3, i, {}, minus, ch.up({b(i + 1)}), run(i, i, 2 * l - 2 * i),
        sigma([&](int p) { return 2 * p < i + 2 || 2 * p > 2 * l - i + 1; }));
  }
  {
    auto minus = ch.down({a(l)});
    add(3, 1, {}, {}, minus, ch.up({b(l)}), run(l - 1, l, 1), sigma(all));
    for (int j = 2; j <= l - 1; ++j) add(3, 2, {}, j, minus, ch.up({b(j)}), run(j - 1, l, l - j + 1), sigma(all));
    add(3, 3, {}, {}, minus, {}, run(0, l, l), sigma(all));
  }
  for (int i = 3; i <= l; ++i) {
    auto minus = ch.down({b(i)});
    add(4, 1, i, {}, minus, ch.up({b(i - 1)}), run(i - 2, 2 * l - i + 1, 1), sigma(all));
    for (int j = 2; j <= i - 2; ++j)
      add(4, 2, i, j, minus, ch.up({b(j)}), run(j - 1, 2 * l - i + 1, i - j), sigma(all));
    add(4, 3, i, {}, minus, {}, run(0, 2 * l - i + 1, i - 1), sigma(all));
  }
  add(5, 1, {}, {}, ch.down({b(2)}), {}, run(0, top, 1), sigma(all));
  return rows;
}

// Family D, m = 2l - 2. a_i = e_1 - e_{i+1} (i <= l-2), xi_1 = e_1 - e_l,
// xi_2 = e_1 + e_l, b_j = e_1 + e_j (b_{l-1} = phi_1+...+phi_l).
inline std::vector<TableRow> table_d(int l) {
  std::vector<TableRow> rows;
  auto add = [&](int block, int row, std::optional<int> i, std::optional<int> j, std::set<Coords> minus,
                 std::set<Coords> plus, Poly poly, std::set<std::string> col) {
    rows.push_back({block, row, i, j, negate(minus), std::move(plus), std::move(poly), std::move(col)});
  };
  if (l == 2) {
    const Coords phi1{1, -1}, phi2{1, 1};
    const std::set<std::string> s_t{"sigma_1", "tau'_1", "tau_1", "mu_1"}, s_e{"sigma_1", "eta_1", "eta_2"},
        e{"eta_1", "eta_2"};
    const Coords phi[3] = {{}, phi1, phi2};
    add(9, 1, {}, {}, {}, {}, with(run(0, 0, 3), 1, 1, 1), {});
    for (int i = 1; i <= 2; ++i) add(9, 2, i, {}, {}, {phi[i]}, run(1, 0, 2), s_t);
    add(9, 3, {}, {}, {}, {phi1, phi2}, run(2, 0, 1), s_e);
    for (int i = 1; i <= 2; ++i) {
      add(10, 1, i, {}, {phi[i]}, {}, run(0, 1, 2), s_t);
      add(10, 2, i, 3 - i, {phi[i]}, {phi[3 - i]}, run(1, 1, 1), e);
    }
    add(11, 1, {}, {}, {phi1, phi2}, {}, run(0, 2, 1), s_e);
    return rows;
  }
  auto a = [&](int i) { return unit(l, 1, 1, i + 1, -1); };
  auto b = [&](int j) { return unit(l, 1, 1, j, 1); };
  const Coords xi[3] = {{}, unit(l, 1, 1, l, -1), unit(l, 1, 1, l, 1)};
  const std::vector<Coords> both{xi[1], xi[2]};
  Chain ch;
  for (int i = 1; i <= l - 2; ++i) ch.levels.push_back({a(i)});
  ch.levels.push_back(both);
  for (int j = l - 1; j >= 2; --j) ch.levels.push_back({b(j)});

  // Column tokens. "sigma_p" unconditioned covers sigma_{l-1} and sigma_l too;
  // a parameter condition ranges over 2 <= p <= l-2 only.
  std::set<std::string> sig, sig0, tp, tm, sig0p;
  for (int p = 2; p <= l - 2; ++p) sig.insert(nm("sigma", p));
  sig.insert(nm("sigma", l - 1));
  sig.insert(nm("sigma", l));
  for (int p = 1; p <= l - 2; ++p) {
    tp.insert(nm("tau'", p));
    tm.insert(nm("tau", p));
    tm.insert(nm("mu", p));
  }
  if (l == 3) sig0 = {"sigma_0"}, sig0p = {"sigma'_0"};
  auto join = [](std::initializer_list<std::set<std::string>> parts) {
    std::set<std::string> out;
    for (const auto& s : parts) out.insert(s.begin(), s.end());
    return out;
  };
  auto when = [](bool c, const std::set<std::string>& s) { return c ? s : std::set<std::string>{}; };
  auto sig_if = [&](std::function<bool(int)> keep) {
    std::set<std::string> out;
    for (int p = 2; p <= l - 2; ++p)
      if (keep(p)) out.insert(nm("sigma", p));
    return out;
  };
  auto tp_if = [&](std::function<bool(int)> keep) {
    std::set<std::string> out;
    for (int p = 1; p <= l - 2; ++p)
      if (keep(p)) out.insert(nm("tau'", p));
    return out;
  };
  const bool l_even = l % 2 == 0, l_odd = !l_even;
  const int top = 2 * l - 2;
  // Quadric-type diagonal: (xt)^from + ... + (xt)^to with the middle doubled.
  auto quad = [&](int from, int to) { return with(run(from, from, to - from + 1), l - 1, l - 1, 1); };

  // Block 1: Delta(u cap p_-) empty.
  add(1, 1, {}, {}, {}, ch.up({a(1)}), run(top, 0, 1), join({sig0, sig, tp}));
  for (int i = 2; i <= l - 2; ++i)
    add(1, 2, i, {}, {}, ch.up({a(i)}), run(2 * l - i - 1, 0, i), join({sig, tp, when(i % 2 == 0, tm)}));
  for (int i = 1; i <= 2; ++i)
    add(1, 3, i, {}, {}, ch.up({xi[i]}), run(l - 1, 0, l), join({sig0, sig, tp, when(l_even, tm)}));
  add(1, 4, {}, {}, {}, ch.up(both), run(l, 0, l - 1), join({sig0, sig, tp, when(l_odd, join({sig0p, tm}))}));
  add(1, 5, {}, {}, {}, {}, quad(0, top), {});

  // Block 2: -{<= a_i}, 1 <= i <= l-3.
  for (int i = 1; i <= l - 3; ++i) {
    auto minus = ch.down({a(i)});
    add(2, 1, i, {}, minus, ch.up({a(i + 1)}), run(top - i, i, 1), join({sig, tp}));
    for (int j = i + 2; j <= l - 2; ++j)
      add(2, 2, i, j, minus, ch.up({a(j)}), run(2 * l - j - 1, i, j - i), join({sig, tp, when((j - i) % 2 == 0, tm)}));
    for (int k = 1; k <= 2; ++k)
      add(2, 3, i, k, minus, ch.up({xi[k]}), run(l - 1, i, l - i), join({sig, tp, when((l - i) % 2 == 0, tm)}));
    add(2, 4, i, {}, minus, ch.up(both), run(l, i, l - 1 - i), join({sig, tp, when((l - i) % 2 == 1, tm)}));
    add(2, 5, i, {}, minus, ch.up({b(i + 1)}), quad(i, 2 * l - i - 2),
        join({sig_if([&](int p) { return 2 * p < i + 2 || 2 * p > 2 * l - i; }),
              tp_if([&](int p) { return 2 * p < i + 1 || 2 * p > 2 * l - i - 1; })}));
  }

  // Block 3: -{<= a_{l-2}}.
  {
    auto minus = ch.down({a(l - 2)});
    add(3, 1, {}, {}, minus, ch.up(both), run(l, l - 2, 1), join({sig0, sig, tp}));
    for (int k = 1; k <= 2; ++k)
      add(3, 2, {}, k, minus, ch.up({xi[k]}), run(l - 1, l - 2, 2), join({sig0, sig, tp, sig0p, tm}));
    add(3, 3, {}, {}, minus, ch.up({b(l - 1)}), quad(l - 2, l),
        join({sig_if([&](int p) { return 2 * p != l && 2 * p != l + 1 && 2 * p != l + 2; }),
              tp_if([&](int p) { return 2 * p != l - 1 && 2 * p != l && 2 * p != l + 1; })}));
  }

  // Block 4: -{<= xi_i}.
  for (int i = 1; i <= 2; ++i) {
    auto minus = ch.down({xi[i]});
    add(4, 1, i, 3 - i, minus, ch.up({xi[3 - i]}), run(l - 1, l - 1, 1),
        join({sig_if([&](int p) { return 2 * p != l + 1; }), tp_if([&](int p) { return 2 * p != l; })}));
    add(4, 2, i, {}, minus, ch.up({b(l - 1)}), run(l - 2, l - 1, 2), join({sig0, sig, tp, sig0p, tm}));
    for (int j = 2; j <= l - 2; ++j)
      add(4, 3, i, j, minus, ch.up({b(j)}), run(j - 1, l - 1, l - j + 1), join({sig, tp, when((l - j) % 2 == 1, tm)}));
    add(4, 4, i, {}, minus, {}, run(0, l - 1, l), join({sig0, sig, tp, when(l_even, tm)}));
  }

  // Block 5: -{<= xi_1 or xi_2}.
  {
    auto minus = ch.down(both);
    add(5, 1, {}, {}, minus, ch.up({b(l - 1)}), run(l - 2, l, 1), join({sig0, sig, tp}));
    for (int j = 2; j <= l - 2; ++j)
      add(5, 2, {}, j, minus, ch.up({b(j)}), run(j - 1, l, l - j), join({sig, tp, when((l - j) % 2 == 0, tm)}));
    add(5, 3, {}, {}, minus, {}, run(0, l, l - 1), join({sig0, sig, tp, when(l_odd, join({sig0p, tm}))}));
  }

  // Block 6: -{<= phi_1+...+phi_l}, l >= 4.
  if (l >= 4) {
    auto minus = ch.down({b(l - 1)});
    add(6, 1, {}, {}, minus, ch.up({b(l - 2)}), run(l - 3, l + 1, 1), join({sig, tp}));
    for (int j = 2; j <= l - 3; ++j)
      add(6, 2, {}, j, minus, ch.up({b(j)}), run(j - 1, l + 1, l - j - 1), join({sig, tp, when((l - j) % 2 == 1, tm)}));
    add(6, 3, {}, {}, minus, {}, run(0, l + 1, l - 2), join({sig, tp, when(l_even, tm)}));
  }

  // Block 7: -{<= b_i}, 3 <= i <= l-2.
  for (int i = 3; i <= l - 2; ++i) {
    auto minus = ch.down({b(i)});
    add(7, 1, i, {}, minus, ch.up({b(i - 1)}), run(i - 2, 2 * l - i, 1), join({sig, tp}));
    for (int j = 2; j <= i - 2; ++j)
      add(7, 2, i, j, minus, ch.up({b(j)}), run(j - 1, 2 * l - i, i - j), join({sig, tp, when((i - j) % 2 == 0, tm)}));
    add(7, 3, i, {}, minus, {}, run(0, 2 * l - i, i - 1), join({sig, tp, when(i % 2 == 1, tm)}));
  }

  // Block 8: everything negative.
  add(8, 1, {}, {}, ch.down({b(2)}), {}, run(0, top, 1), join({sig0, sig, tp}));
  return rows;
}

inline std::vector<TableRow> parabolic_table(int m) {
  return m % 2 ? table_b((m + 1) / 2) : table_d((m + 2) / 2);
}

}  // namespace oracle
