#include <doctest.h>

#include <map>

#include "so2m/aq.hpp"
#include "table_oracle.hpp"

using namespace so2m;

namespace {

std::set<oracle::Coords> coords_of(const std::vector<Root>& v) {
  std::set<oracle::Coords> out;
  for (const auto& r : v) out.insert(r.coords);
  return out;
}

oracle::Poly poly_of(const HodgePolynomial& p) { return {p.terms().begin(), p.terms().end()}; }

const oracle::TableRow* find_row(const std::vector<oracle::TableRow>& rows, const ThetaStableParabolic& q) {
  const oracle::TableRow* hit = nullptr;
  for (const auto& r : rows)
    if (r.minus == coords_of(q.delta_u_p_minus) && r.plus == coords_of(q.delta_u_p_plus)) {
      REQUIRE(hit == nullptr);
      hit = &r;
    }
  return hit;
}

RootSystem rs_for(int m) { return build_root_system(build_context(m), Variant::T0); }

}  // namespace

TEST_CASE("class counts") {
  // Family B: l^2 + 2l. The m = 3 value 8 also follows from sign patterns of (h1, h2).
  for (int l = 2; l <= 6; ++l) CHECK(enumerate_parabolics(2 * l - 1).size() == std::size_t(l * l + 2 * l));
  const std::map<int, std::size_t> d_counts{{2, 9}, {3, 18}, {4, 29}, {5, 42}, {6, 57}};
  for (auto [l, n] : d_counts) CHECK(enumerate_parabolics(2 * l - 2).size() == n);
  for (int m = 2; m <= 11; ++m) CHECK(enumerate_parabolics(m).size() == oracle::parabolic_table(m).size());
}

TEST_CASE("enumeration bound and saturation") {
  CHECK_THROWS_AS(enumerate_parabolics(5, 3), std::invalid_argument);
  CHECK_NOTHROW(enumerate_parabolics(5, 4));
  // A larger bound gives the same classes with the same representatives.
  auto a = enumerate_parabolics(7, 5), b = enumerate_parabolics(7, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].key() == b[k].key());
    CHECK(a[k].defining_vector == b[k].defining_vector);
  }
}

TEST_CASE("every class matches exactly one table row") {
  for (int m = 2; m <= 11; ++m) {
    auto rows = oracle::parabolic_table(m);
    std::set<const oracle::TableRow*> used;
    for (const auto& q : enumerate_parabolics(m)) {
      INFO("m=" << m << " h=" << to_string(Root(q.defining_vector)));
      auto row = find_row(rows, q);
      REQUIRE(row != nullptr);
      CHECK(used.insert(row).second);
      auto pat = table_row_pattern(q);
      CHECK(pat.block == row->block);
      CHECK(pat.row == row->row);
      CHECK(pat.i == row->i);
      CHECK(pat.j == row->j);
    }
    CHECK(used.size() == rows.size());
  }
}

TEST_CASE("Hodge polynomials equal the table closed forms") {
  for (int m = 2; m <= 11; ++m) {
    auto rows = oracle::parabolic_table(m);
    for (const auto& q : enumerate_parabolics(m)) {
      auto row = find_row(rows, q);
      REQUIRE(row != nullptr);
      INFO("m=" << m << " " << table_row_pattern(q).to_string());
      CHECK(poly_of(hodge_polynomial(q)) == row->poly);
    }
  }
}

TEST_CASE("compact dual agrees with the Weyl coset oracle") {
  for (int m = 2; m <= 10; ++m)
    for (const auto& q : enumerate_parabolics(m)) {
      INFO("m=" << m << " " << levi_hermitian_factor(q).to_string());
      CHECK(compact_dual_hodge(levi_hermitian_factor(q)) == levi_coset_hodge(q));
    }
}

TEST_CASE("trivial class and levi factors") {
  for (int m = 2; m <= 9; ++m) {
    auto rs = rs_for(m);
    auto q = make_parabolic(rs, std::vector<int>(rs.ctx.l, 0));
    CHECK(q.is_trivial());
    CHECK(q.levi_roots.size() == rs.roots.size());
    auto f = levi_hermitian_factor(q);
    if (m == 2) CHECK(f.kind == LeviHermitianFactor::Kind::ProductP1P1);
    else if (m % 2) CHECK(f.kind == LeviHermitianFactor::Kind::QuadricOdd);
    else CHECK(f.kind == LeviHermitianFactor::Kind::QuadricEven);
    CHECK(f.dimension == m);
    CHECK(table_row_pattern(q).plus_generators.empty());
  }
  CHECK(hodge_polynomial(make_parabolic(rs_for(2), {0, 0})).to_string() == "1 + 2xt + x^2t^2");
}

TEST_CASE("compact dual polynomials") {
  using K = LeviHermitianFactor::Kind;
  auto make = [](K k, int d) {
    LeviHermitianFactor f;
    f.kind = k;
    f.dimension = d;
    return f;
  };
  CHECK(compact_dual_hodge(make(K::QuadricOdd, 3)) == HodgePolynomial::in_xt({1, 1, 1, 1}));
  CHECK(compact_dual_hodge(make(K::QuadricEven, 4)) == HodgePolynomial::in_xt({1, 1, 2, 1, 1}));
  CHECK(compact_dual_hodge(make(K::Projective, 2)) == HodgePolynomial::in_xt({1, 1, 1}));
  CHECK(compact_dual_hodge(make(K::ProductP1P1, 2)) == HodgePolynomial::in_xt({1, 2, 1}));
  CHECK(compact_dual_hodge(make(K::Point, 0)) == HodgePolynomial::one());
}

TEST_CASE("spot values") {
  auto rs5 = rs_for(5);
  // Delta(u cap p_+) = all positive noncompact roots.
  CHECK(hodge_polynomial(make_parabolic(rs5, {1, 0, 0})).to_string() == "x^5");
  CHECK(hodge_polynomial(make_parabolic(rs5, {-1, 0, 0})).to_string() == "t^5");
  auto rs2 = rs_for(2);
  // {-phi_1, phi_2}: h_1 - h_2 < 0 < h_1 + h_2.
  auto q = make_parabolic(rs2, {0, 1});
  CHECK(q.r_plus == 1);
  CHECK(q.r_minus == 1);
  CHECK(hodge_polynomial(q).to_string() == "xt");
}

TEST_CASE("structural invariants") {
  for (int m = 2; m <= 11; ++m)
    for (const auto& q : enumerate_parabolics(m)) {
      int levi_noncompact = 0;
      for (const auto& a : q.levi_roots) levi_noncompact += !a.is_compact;
      CHECK(2 * (q.r_plus + q.r_minus) + levi_noncompact == 2 * m);
      CHECK(q.r_total() == int(q.delta_u_p_plus.size() + q.delta_u_p_minus.size()));
      auto y = compact_dual_hodge(levi_hermitian_factor(q));
      CHECK(y.is_palindromic_in_xt());
      const auto pq = hodge_polynomial(q);
      for (const auto& [deg, c] : pq.terms()) CHECK(c > 0);
      CHECK(hodge_polynomial(q).eval_at_one() == y.eval_at_one());
      CHECK(is_compact_dominant(rs_for(m), q.defining_vector));
    }
}

TEST_CASE("negating the defining vector swaps the Hodge variables") {
  for (int m = 2; m <= 10; ++m) {
    auto rs = rs_for(m);
    auto classes = enumerate_parabolics(m);
    std::map<ParabolicKey, const ThetaStableParabolic*> by_key;
    for (const auto& q : classes) by_key[q.key()] = &q;
    for (const auto& q : classes) {
      std::vector<int> neg;
      for (int x : q.defining_vector) neg.push_back(-x);
      auto h = oracle::compact_longest(m, neg);
      REQUIRE(is_compact_dominant(rs, h));
      auto flipped = make_parabolic(rs, h);
      REQUIRE(by_key.count(flipped.key()));
      CHECK(flipped.r_plus == q.r_minus);
      CHECK(flipped.r_minus == q.r_plus);
      CHECK(hodge_polynomial(flipped) == poly_swap_variables(hodge_polynomial(q)));
    }
  }
}

TEST_CASE("row descriptions") {
  auto rs = rs_for(6);
  auto q = make_parabolic(rs, {0, 1, 1, 0});
  CHECK(describe_minus(q) == "-{<= phi1+phi2}");
  CHECK(describe_plus(q) == "{>= phi1+phi2+phi3+phi4}");
  CHECK(table_row_pattern(q).to_string() == "block 3 row 3");
  CHECK(levi_hermitian_factor(q).to_string() == "P^1xP^1");
  auto full = make_parabolic(rs, {1, 0, 0, 0});
  CHECK(describe_minus(full) == "empty");
  CHECK(describe_plus(full) == "{>= phi1}");
  auto xi = make_parabolic(rs, {1, 1, 1, 1});
  CHECK(describe_plus(xi) == "{>= phi1+phi2+phi4}");
  CHECK(table_row_pattern(xi).plus_generators == std::vector<std::string>{"xi2"});
}
