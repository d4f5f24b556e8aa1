#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "so2m/roots.hpp"

using namespace so2m;

namespace {
std::vector<std::vector<int>> coords_of(const std::vector<Root>& rs) {
  std::vector<std::vector<int>> out;
  for (const auto& r : rs) out.push_back(r.coords);
  std::sort(out.begin(), out.end());
  return out;
}

long factorial(int r) {
  long f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  return f;
}
}  // namespace

TEST_CASE("noncompact positive roots") {
  auto rs3 = build_root_system(build_context(3), Variant::T0);
  CHECK(coords_of(rs3.noncompact_positives()) == std::vector<std::vector<int>>{{1, -1}, {1, 0}, {1, 1}});
  // m = 4: xi_1 = phi_1 + phi_2 and xi_2 = phi_1 + phi_3 are noncompact.
  auto rs4 = build_root_system(build_context(4), Variant::T0);
  CHECK(rs4.noncompact_positives().size() == 4);
  Root xi1 = rs4.simples[0] + rs4.simples[1], xi2 = rs4.simples[0] + rs4.simples[2];
  CHECK(xi1.coords == std::vector<int>{1, 0, -1});
  CHECK(xi2.coords == std::vector<int>{1, 0, 1});
  CHECK_FALSE(xi1.is_compact);
  auto rs2 = build_root_system(build_context(2), Variant::T0);
  CHECK(rs2.roots.size() == 4);
  for (const auto& r : rs2.roots) CHECK_FALSE(r.is_compact);
  CHECK_THROWS(build_root_system(build_context(5), Variant::T0Prime));
}

TEST_CASE("root counts and Borel-de Siebenthal property") {
  for (int m = 2; m <= 12; ++m) {
    auto ctx = build_context(m);
    auto rs = build_root_system(ctx, Variant::T0);
    int l = ctx.l;
    CHECK(int(rs.roots.size()) == (ctx.family == Family::B ? 2 * l * l : 2 * l * (l - 1)));
    CHECK(int(rs.noncompact_positives().size()) == m);
    int noncompact_simples = 0;
    for (const auto& s : rs.simples) noncompact_simples += !s.is_compact;
    CHECK(noncompact_simples == (m == 2 ? 2 : 1));
    if (m > 2) CHECK(rs.simple_coefficients(highest_root(rs))[0] == 1);
  }
}

TEST_CASE("highest root") {
  auto b3 = build_root_system(build_context(5), Variant::T0);
  auto delta = highest_root(b3);
  CHECK(delta.coords == std::vector<int>{1, 1, 0});
  CHECK(b3.simple_coefficients(delta) == std::vector<int>{1, 2, 2});
  auto d4 = build_root_system(build_context(6), Variant::T0);
  CHECK(d4.simple_coefficients(highest_root(d4)) == std::vector<int>{1, 2, 1, 1});
  CHECK_THROWS_AS(highest_root(build_root_system(build_context(2), Variant::T0)), std::domain_error);
  // Oracle: the root of maximal height, found by scanning.
  for (int m = 3; m <= 10; ++m) {
    auto rs = build_root_system(build_context(m), Variant::T0);
    auto height = [&](const Root& r) {
      auto c = rs.simple_coefficients(r);
      return std::accumulate(c.begin(), c.end(), 0);
    };
    Root best = *std::max_element(rs.positives.begin(), rs.positives.end(),
                                  [&](const Root& a, const Root& b) { return height(a) < height(b); });
    CHECK(best == highest_root(rs));
    for (const auto& s : rs.simples) CHECK_FALSE(rs.contains(highest_root(rs) + s));
  }
}

TEST_CASE("root sum compactness rule") {
  for (int m = 3; m <= 10; ++m) {
    auto rs = build_root_system(build_context(m), Variant::T0);
    for (const auto& a : rs.roots)
      for (const auto& b : rs.roots) {
        Root s = a + b;
        if (!rs.contains(s)) continue;
        CHECK(s.is_compact == (a.is_compact == b.is_compact));
      }
  }
}

TEST_CASE("coroots pair to Cartan integers") {
  for (int m : {2, 3, 4, 6, 7}) {
    for (auto v : {Variant::T0, Variant::T0Prime}) {
      auto ctx = build_context(m);
      if (v == Variant::T0Prime && (ctx.family != Family::D)) continue;
      auto rs = build_root_system(ctx, v);
      for (const auto& a : rs.roots)
        for (const auto& b : rs.roots) {
          auto val = rs.evaluate(a, rs.coroot(b));
          CHECK(val == GaussianRational(2 * inner(a, b) / b.norm2()));
        }
      for (int i = 0; i < ctx.l; ++i)
        for (int j = 0; j < ctx.l; ++j) {
          // omega_i(H*_{phi_j}) = delta_ij, with omega_i read through the trace form.
          auto hw = rs.fundamental_coweights[i];
          auto val = trace_form(hw, rs.coroot(rs.simples[j]));
          CHECK(val == GaussianRational(i == j ? 1 : 0));
        }
    }
  }
}

TEST_CASE("Weyl group orders") {
  for (int r = 1; r <= 6; ++r) {
    std::vector<Root> a, b, d;
    for (int j = 1; j < r + 1; ++j) a.push_back(unit_root(r + 1, j, 1, j + 1, -1));
    for (int j = 1; j < r; ++j) b.push_back(unit_root(r, j, 1, j + 1, -1));
    auto dd = b;
    b.push_back(unit_root(r, r, 1));
    CHECK(weyl_group(a, r + 1).order() == std::size_t(factorial(r + 1)));
    CHECK(weyl_group(b, r).order() == std::size_t((1L << r) * factorial(r)));
    if (r >= 2) {
      dd.push_back(unit_root(r, r - 1, 1, r, 1));
      CHECK(weyl_group(dd, r).order() == std::size_t((1L << (r - 1)) * factorial(r)));
    }
  }
  std::vector<Root> nine;
  for (int j = 1; j <= 9; ++j) nine.push_back(unit_root(10, j, 1, j + 1, -1));
  CHECK_THROWS_AS(weyl_group(nine, 10), std::length_error);
}

TEST_CASE("coset_poincare") {
  // B_2 with compact B_1 on the second coordinate.
  auto b2 = coset_poincare({unit_root(2, 1, 1, 2, -1), unit_root(2, 2, 1)}, {unit_root(2, 2, 1)}, 2);
  CHECK(b2 == HodgePolynomial::in_xt({1, 1, 1, 1}));
  CHECK(coset_poincare({unit_root(2, 1, 1, 2, -1)}, {}, 2) == HodgePolynomial::in_xt({1, 1}));
  // D_3 over A_1 x A_1: enumerate 24 elements, quotient by 4.
  auto d3 = coset_poincare({unit_root(3, 1, 1, 2, -1), unit_root(3, 2, 1, 3, -1), unit_root(3, 2, 1, 3, 1)},
                           {unit_root(3, 2, 1, 3, -1), unit_root(3, 2, 1, 3, 1)}, 3);
  CHECK(d3 == HodgePolynomial::in_xt({1, 1, 2, 1, 1}));
  CHECK(d3.is_palindromic_in_xt());
  CHECK(d3.eval_at_one() == 6);
  CHECK(coset_poincare({}, {}, 3) == HodgePolynomial::one());
  CHECK_THROWS(coset_poincare({unit_root(2, 1, 1, 2, -1)}, {unit_root(2, 2, 1)}, 2));
}

TEST_CASE("simple roots of a subsystem") {
  auto rs = build_root_system(build_context(5), Variant::T0);
  CHECK(coords_of(simple_roots_of(rs.roots)) == coords_of(rs.simples));
  auto compact = simple_roots_of([&] {
    std::vector<Root> c;
    for (const auto& r : rs.roots)
      if (r.is_compact) c.push_back(r);
    return c;
  }());
  CHECK(coords_of(compact) == std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, -1}});
}
