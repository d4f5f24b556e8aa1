#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "so2m/matrix.hpp"

namespace so2m {

enum class Family { B, D };
std::string to_string(Family f);

struct UnsupportedRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// g0 = so(2,m) inside gl(m+2), preserving diag(-1,-1,1,...,1).
struct LieContext {
  int m = 0;
  int n = 0;  // matrix side, m + 2
  int l = 0;  // rank
  Family family = Family::B;
  int dim_g0 = 0;
  int dim_k0 = 0;
  int dim_p0 = 0;
  ExactMatrix theta_conjugator;
};

// Throws UnsupportedRank for m < 2.
LieContext build_context(int m);

// Matrix builders. Indices are 1-based to match the usual E_ij notation.
ExactMatrix elementary(int n, int i, int j);
ExactMatrix skew_unit(int n, int j, int k);  // F_jk = E_jk - E_kj
ExactMatrix cartan_h(int n, int j);          // H_j = F_{2j-1,2j}
ExactMatrix signature_matrix(int p, int q);  // I_{p,q} = diag(-I_p, I_q)
ExactMatrix j_matrix(int p, int q);          // [[0, I_{p,q}], [-I_{p,q}, 0]]
ExactMatrix block_diagonal(const std::vector<ExactMatrix>& blocks);
// diag(s_1 I_{k_1}, s_2 I_{k_2}, ...) from (sign, size) runs; zero sizes are skipped.
ExactMatrix sign_runs(const std::vector<std::pair<int, int>>& runs);

ExactMatrix theta(const LieContext& ctx, const ExactMatrix& x);
bool in_g(const LieContext& ctx, const ExactMatrix& x);
bool in_g0(const LieContext& ctx, const ExactMatrix& x);
// Throws std::invalid_argument when x is not in g.
std::pair<ExactMatrix, ExactMatrix> cartan_decompose(const LieContext& ctx, const ExactMatrix& x);

// so(m+2, C) -> g: the upper-right 2 x m block is multiplied by i and the
// lower-left block by -i. Throws unless z is skew-symmetric.
ExactMatrix f_isomorphism(const ExactMatrix& z);

std::vector<ExactMatrix> k0_basis(const LieContext& ctx);  // F_12, F_ab (3 <= a < b)
std::vector<ExactMatrix> p0_basis(const LieContext& ctx);  // E_ab + E_ba, a in {1,2}, b >= 3
std::vector<ExactMatrix> g0_basis(const LieContext& ctx);  // k0 basis then p0 basis

// Coordinates with respect to a fixed linearly independent family. The
// family is reduced once; each query costs one small matrix-vector product.
class BasisCoordinates {
 public:
  explicit BasisCoordinates(std::vector<ExactMatrix> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<ExactMatrix>& basis() const { return basis_; }
  // nullopt when x is outside the span.
  std::optional<std::vector<GaussianRational>> coordinates(const ExactMatrix& x) const;
  ExactMatrix combine(const std::vector<GaussianRational>& c) const;

 private:
  std::vector<ExactMatrix> basis_;
  std::vector<std::pair<int, int>> probe_;  // entries whose values determine the coordinates
  ExactMatrix solve_;                       // inverse of the probed submatrix
};

// Pass/fail record shared by every verification routine.
struct Report {
  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  std::vector<std::string> failures;
  int checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ok = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
  void merge(const Report& other);
};

enum class RealBasisLabel { B, BPrime };

// Basis built from the Chevalley vectors: the kappa part spans k0 and holds
// i H*_phi for the simple roots plus X_a, Y_a for compact positive a; the p
// part holds i X_a, i Y_a for noncompact positive a.
struct RealBasis {
  RealBasisLabel label = RealBasisLabel::B;
  std::vector<ExactMatrix> kappa_part;
  std::vector<ExactMatrix> p_part;
  std::vector<std::string> names;  // kappa names then p names
  std::vector<ExactMatrix> all() const;
};

// BPrime is only defined for family D (throws std::invalid_argument otherwise).
RealBasis build_real_basis(const LieContext& ctx, RealBasisLabel label);

// Structure constants of the basis: rationality, independence, spanning g0.
Report verify_real_basis(const LieContext& ctx, const RealBasis& basis);

// u = k0 + i p0 is closed under brackets and tr(X^2) < 0 on it.
Report verify_compact_form(const LieContext& ctx);

// Jacobi identity and theta-compatibility on all basis triples (m <= 5) or
// `samples` random triples drawn with `seed`.
Report verify_lie_structure(const LieContext& ctx, int samples = 500, unsigned seed = 12345);

}  // namespace so2m
