#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so2m/chevalley.hpp"

namespace so2m {

enum class InvolutionKind {
  Theta,
  Sigma,       // sigma_p
  Tau,         // tau_p
  TauPrime,    // tau'_p
  Mu,          // mu_p
  SigmaLm1,    // sigma_{l-1}, family D
  SigmaL,      // sigma_l, family D
  Sigma0,      // l = 3 only
  Sigma0Prime, // l = 3 only
  Sigma1,      // m = 2
  Eta1,        // m = 2
  Eta2,        // m = 2
};

// X -> g X g^{-1} for an explicit conjugator g.
struct Involution {
  std::string name;  // e.g. "sigma_2", "tau'_1", "sigma'_0", "eta_1"
  InvolutionKind kind = InvolutionKind::Theta;
  int p = 0;
  int m = 0;
  Family family = Family::B;
  Variant variant = Variant::T0;
  ExactMatrix conjugator;
  ExactMatrix conjugator_inverse;
  bool composed_with_theta = false;

  ExactMatrix apply(const ExactMatrix& x) const { return conjugator * x * conjugator_inverse; }
};

Involution make_involution(std::string name, InvolutionKind kind, int p, const LieContext& ctx, Variant variant,
                           ExactMatrix conjugator);
Involution theta_involution(const LieContext& ctx);
// sigma composed with theta; named with a "theta" suffix.
Involution with_theta(const Involution& s);

// Throws UnsupportedRank for m < 2.
std::vector<Involution> catalog(int m);

// sigma^2 = id, sigma theta = theta sigma, sigma(g0) = g0, brackets preserved.
Report verify_involution(const Involution& s, int samples = 200, unsigned seed = 99);

struct FixedSubalgebra {
  int g0_fixed_dim = 0;
  int k0_fixed_dim = 0;
  int p0_fixed_dim = 0;
  std::vector<ExactMatrix> p0_fixed_basis;
};

FixedSubalgebra fixed_subalgebra(const Involution& s);

// Action on the vertices of the extended diagram, read from root vectors.
struct VoganData {
  std::vector<Root> vertices;
  std::vector<std::string> names;
  std::vector<int> marks;
  std::vector<bool> black;
  std::vector<int> action;  // vertex index -> image index
  std::vector<int> signs;   // +-1 on fixed vertices, 0 on moved ones

  bool fixed(int v) const { return action[v] == v; }
  bool circled(int v) const { return fixed(v) && signs[v] == -1; }
  // Compact rendering, e.g. "swap(phi1,-delta) circle(phi2)".
  std::string describe() const;
  friend bool operator==(const VoganData& a, const VoganData& b) {
    return a.action == b.action && a.signs == b.signs;
  }
};

// Throws std::runtime_error if sigma does not permute the vertex root spaces.
VoganData vogan_data(const Involution& s);

struct ParityResult {
  std::vector<int> o_set;  // vertex indices
  int mark_sum = 0;
  bool even = true;
};

// O = circled vertices together with swapped pairs that are joined by an edge.
ParityResult almost_double_parity(const VoganData& vd);

// Vogan diagram of an involution of k0 on the white vertices, together with
// the action on the center (+1 or -1).
struct KZeroDiagram {
  std::vector<int> white_action;  // indexed like the vertex list; black entries ignored
  std::vector<int> circles;       // white vertex indices
  int center = 1;
  std::string describe(const RootSystem& rs) const;
};

// All normalized k0-diagrams: order <= 2 automorphisms of the white diagram
// that keep each vertex's attachment to the black vertices,
// at most one circle per white component on a fixed vertex with c_psi <= 2,
// and both center actions. Empty for m = 2.
std::vector<KZeroDiagram> enumerate_k0_diagrams(const RootSystem& rs);

// True iff some extension to the extended diagram is an almost double Vogan
// diagram with even mark sum over O. Throws std::invalid_argument if the
// diagram is malformed.
bool extendability(const RootSystem& rs, const KZeroDiagram& d);

// exp(t X) with t = quarter_turns * pi / 4, using X^2 = -c^2 P with P a
// projector and X P = X. Throws std::invalid_argument unless c is rational
// and c t is a multiple of pi / 2.
ExactMatrix cayley_exp(const ExactMatrix& x, int quarter_turns);

enum class Holomorphy { Holomorphic, Antiholomorphic, Mixed };
std::string to_string(Holomorphy h);

// By the action on the center of k0: span of F_12, plus F_34 when m = 2.
Holomorphy holomorphy_class(const Involution& s);

struct LatticeMatrix {
  ExactMatrix matrix;  // column j holds the coordinates of sigma(b_j)
  bool integral = true;
};

// Throws std::runtime_error on a non-rational entry.
LatticeMatrix ad_matrix_in_lattice_basis(const Involution& s, const RealBasis& basis);

}  // namespace so2m
