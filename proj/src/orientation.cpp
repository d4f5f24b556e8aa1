#include "so2m/orientation.hpp"

#include <optional>

namespace so2m {

namespace {

// diag(I2, -1, I_{2p-3}, -1, I_{m+1-2p}) and its product with Y2.
ExactMatrix tau_y3(int m, int p) { return sign_runs({{1, 2}, {-1, 1}, {1, 2 * p - 3}, {-1, 1}, {1, m + 1 - 2 * p}}); }

}  // namespace

ComponentList k_sigma_components(const Involution& s) {
  auto ctx = build_context(s.m);
  const int n = ctx.n, m = ctx.m;
  ComponentList out;
  out.reps.push_back({"identity", ExactMatrix::identity(n)});
  if (holomorphy_class(s) == Holomorphy::Holomorphic) {
    out.holomorphic_shortcut = true;
    return out;
  }
  const ExactMatrix y2 = sign_runs({{-1, 2}, {1, m}});
  using K = InvolutionKind;
  switch (s.kind) {
    case K::Tau:
      out.reps.push_back({"Y2", y2});
      if (s.p > 1) {
        out.reps.push_back({"Y3", tau_y3(m, s.p)});
        out.reps.push_back({"Y4", y2 * tau_y3(m, s.p)});
      }
      return out;
    case K::Mu:
    case K::Sigma0Prime:
      // sigma'_0 at l = 3 uses the same three representatives as mu_p.
      out.reps.push_back({"Y2", y2});
      out.reps.push_back({"Y3", sign_runs({{1, n - 2}, {-1, 2}})});
      out.reps.push_back({"Y4", sign_runs({{-1, 2}, {1, n - 4}, {-1, 2}})});
      return out;
    case K::Eta1:
    case K::Eta2:
      return out;  // K(eta) is connected
    case K::TauPrime:
      if (m == 2) {
        out.reps.push_back({"Y2", sign_runs({{1, 2}, {-1, 2}})});
        return out;
      }
      break;
    default:
      break;
  }
  throw UnsupportedCase("no component representatives for " + s.name);
}

namespace {

int det_ad(const std::string& name, const std::vector<ExactMatrix>& basis, const BasisCoordinates& coords,
           const ComponentRep& rep) {
  auto inv = inverse(rep.matrix);
  if (!inv) throw std::invalid_argument("component representative is singular");
  const int k = int(basis.size());
  ExactMatrix a(k);
  for (int j = 0; j < k; ++j) {
    auto c = coords.coordinates(rep.matrix * basis[j] * *inv);
    if (!c) throw std::invalid_argument(rep.label + " does not stabilize p0(" + name + ")");
    for (int i = 0; i < k; ++i) a(i, j) = (*c)[i];
  }
  auto d = determinant(a);
  if (d == GaussianRational(1)) return 1;
  if (d == GaussianRational(-1)) return -1;
  throw std::invalid_argument("determinant on p0(" + name + ") is not +-1");
}

}  // namespace

int det_ad_on_p0(const Involution& s, const ComponentRep& rep) {
  auto fs = fixed_subalgebra(s);
  if (fs.p0_fixed_basis.empty()) return 1;
  BasisCoordinates coords(fs.p0_fixed_basis);
  return det_ad(s.name, fs.p0_fixed_basis, coords, rep);
}

bool orientation_preserving(const Involution& s) {
  auto comps = k_sigma_components(s);
  if (comps.holomorphic_shortcut) return true;
  for (const auto& rep : comps.reps)
    if (det_ad_on_p0(s, rep) != 1) return false;
  return true;
}

std::vector<std::pair<ExactMatrix, int>> sign_matrix_probe(const Involution& s) {
  const int n = s.m + 2;
  if (n > 16) throw std::length_error("sign probe is limited to m <= 14");
  auto fs = fixed_subalgebra(s);
  std::optional<BasisCoordinates> coords;
  if (!fs.p0_fixed_basis.empty()) coords.emplace(fs.p0_fixed_basis);
  std::vector<std::pair<ExactMatrix, int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    // det +1 on each block of K = SO(2) x SO(m).
    int first = __builtin_popcount(mask & 3), second = __builtin_popcount(mask >> 2);
    if (first % 2 || second % 2) continue;
    std::vector<long> d(n);
    for (int k = 0; k < n; ++k) d[k] = (mask >> k & 1) ? -1 : 1;
    ExactMatrix y = ExactMatrix::diagonal(d);
    if (!(y * s.conjugator == s.conjugator * y)) continue;
    int det = coords ? det_ad(s.name, fs.p0_fixed_basis, *coords, ComponentRep{"probe", y}) : 1;
    out.emplace_back(y, det);
  }
  return out;
}

std::vector<Involution> theorem_scope(int m) {
  auto all = catalog(m);
  if (m % 2 == 0) return all;
  std::vector<Involution> out;
  for (auto& s : all)
    if (s.kind != InvolutionKind::Tau) out.push_back(std::move(s));
  return out;
}

}  // namespace so2m
