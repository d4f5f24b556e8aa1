#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "so2m/exact.hpp"
#include "so2m/roots.hpp"

namespace so2m {

struct SaturationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnmatchedPattern : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (Delta(u cap p_-), Delta(u cap p_+)), each sorted. Classes are equal iff keys are.
using ParabolicKey = std::pair<std::vector<Root>, std::vector<Root>>;

struct ThetaStableParabolic {
  int m = 0;
  Family family = Family::B;
  // h_j = -i e_j(H); dominant for the compact positive roots.
  std::vector<int> defining_vector;
  std::vector<Root> delta_u_p_plus;   // positive noncompact, positive on H
  std::vector<Root> delta_u_p_minus;  // negative noncompact, positive on H
  std::vector<Root> levi_roots;       // vanish on H
  int r_plus = 0;
  int r_minus = 0;
  int s_dim = 0;  // dim(u cap k)

  int r_total() const { return r_plus + r_minus; }
  ParabolicKey key() const { return {delta_u_p_minus, delta_u_p_plus}; }
  bool is_trivial() const { return delta_u_p_plus.empty() && delta_u_p_minus.empty(); }
};

ThetaStableParabolic make_parabolic(const RootSystem& rs, std::vector<int> h);

// True when h is dominant for the compact positive roots of rs.
bool is_compact_dominant(const RootSystem& rs, const std::vector<int>& h);

// One class per equivalence key, ordered by key. Representatives minimize
// (sum |h_j|, h). Throws std::invalid_argument if bound < l + 1 and
// SaturationError if bound + 1 finds a class that bound misses.
std::vector<ThetaStableParabolic> enumerate_parabolics(int m, int bound);
std::vector<ThetaStableParabolic> enumerate_parabolics(int m);  // bound l + 1

struct LeviHermitianFactor {
  enum class Kind { Point, Projective, QuadricOdd, QuadricEven, ProductP1P1 };
  Kind kind = Kind::Point;
  int dimension = 0;  // complex dimension of the compact dual
  std::vector<std::vector<Root>> components;  // levi components meeting p

  std::string to_string() const;  // "point", "P^2", "Q_3", "Q_4", "P^1xP^1"
};

// Throws std::logic_error for a component of unrecognized type.
LeviHermitianFactor levi_hermitian_factor(const ThetaStableParabolic& q);

HodgePolynomial compact_dual_hodge(const LeviHermitianFactor& f);

// The same polynomial from W(levi)/W(levi cap k) lengths; an independent check.
HodgePolynomial levi_coset_hodge(const ThetaStableParabolic& q);

// x^{R_+} t^{R_-} P(Y_q; x, t).
HodgePolynomial hodge_polynomial(const ThetaStableParabolic& q);

// Generator of an up- or down-set of positive noncompact roots, by its
// simple-root expansion: "a<i>" = phi_1+...+phi_i, "b<j>" = e_1+e_j,
// "xi1" = e_1-e_l and "xi2" = e_1+e_l in family D. For m = 2 the
// generators are "phi1" and "phi2".
std::string generator_name(const RootSystem& rs, const Root& r);

// Position of a class in the layout of the parabolic tables. Blocks are
// numbered by the Delta(u cap p_-) column, rows within a block by the
// Delta(u cap p_+) column; i and j are the block and row parameters.
struct RowPattern {
  int block = 0;
  int row = 0;
  std::optional<int> i;
  std::optional<int> j;
  std::vector<std::string> minus_generators;  // maximal elements of -Delta(u cap p_-)
  std::vector<std::string> plus_generators;   // minimal elements of Delta(u cap p_+)

  std::string to_string() const;  // "block 2 row 3 i=1"
  friend bool operator==(const RowPattern&, const RowPattern&) = default;
};

// Throws UnmatchedPattern if the class fits no row shape.
RowPattern table_row_pattern(const ThetaStableParabolic& q);

// Human-readable sets: "-{<= phi1+phi2}", "{>= xi1 or xi2}", "empty".
std::string describe_minus(const ThetaStableParabolic& q);
std::string describe_plus(const ThetaStableParabolic& q);

}  // namespace so2m
