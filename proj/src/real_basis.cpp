#include "so2m/chevalley.hpp"

namespace so2m {

RealBasis build_real_basis(const LieContext& ctx, RealBasisLabel label) {
  if (label == RealBasisLabel::BPrime && ctx.family != Family::D)
    throw std::invalid_argument("B' is only defined for family D");
  auto rs = build_root_system(ctx, label == RealBasisLabel::B ? Variant::T0 : Variant::T0Prime);
  auto cb = build_chevalley(rs);
  const GaussianRational i = GaussianRational::i();
  RealBasis basis;
  basis.label = label;
  std::vector<std::string> pnames;
  for (std::size_t k = 0; k < rs.simples.size(); ++k) {
    basis.kappa_part.push_back(cb.hstar(rs.simples[k]) * i);
    basis.names.push_back("iH*phi" + std::to_string(k + 1));
  }
  for (const auto& a : rs.positives) {
    if (a.is_compact) {
      basis.kappa_part.push_back(cb.x(a));
      basis.kappa_part.push_back(cb.y(a));
      basis.names.push_back("X" + to_string(a));
      basis.names.push_back("Y" + to_string(a));
    } else {
      basis.p_part.push_back(cb.x(a) * i);
      basis.p_part.push_back(cb.y(a) * i);
      pnames.push_back("iX" + to_string(a));
      pnames.push_back("iY" + to_string(a));
    }
  }
  basis.names.insert(basis.names.end(), pnames.begin(), pnames.end());
  return basis;
}

}  // namespace so2m
