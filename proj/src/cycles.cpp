#include "so2m/cycles.hpp"

#include <stdexcept>

namespace so2m {

CycleRecord cycle_record(const Involution& s) {
  CycleRecord rec;
  rec.involution = s;
  rec.d_sigma = fixed_subalgebra(s).p0_fixed_dim;
  rec.d_sigma_theta = fixed_subalgebra(with_theta(s)).p0_fixed_dim;
  rec.holomorphy = holomorphy_class(s);
  if (rec.d_sigma + rec.d_sigma_theta != 2 * s.m)
    throw std::logic_error("fixed dimensions of " + s.name + " do not add up to dim p0");
  return rec;
}

std::vector<CycleRecord> dimension_table(int m) {
  std::vector<CycleRecord> out;
  for (const auto& s : theorem_scope(m)) out.push_back(cycle_record(s));
  return out;
}

bool no_aq_component(const CycleRecord& rec, const ThetaStableParabolic& q) {
  // Trivial representation: never claimed, even when the degree test would pass (eta at m = 2).
  if (q.is_trivial()) return false;
  auto p = hodge_polynomial(q);
  if (rec.holomorphy == Holomorphy::Holomorphic) {
    if (rec.d_sigma % 2 || rec.d_sigma_theta % 2) throw std::logic_error("holomorphic cycle of odd dimension");
    return p.coeff(rec.d_sigma / 2, rec.d_sigma / 2) == 0 && p.coeff(rec.d_sigma_theta / 2, rec.d_sigma_theta / 2) == 0;
  }
  auto degrees = p.total_degree_support();
  return !degrees.count(rec.d_sigma) && !degrees.count(rec.d_sigma_theta);
}

std::vector<ColumnEntry> no_component_column(int m, std::optional<int> bound) {
  auto records = dimension_table(m);
  std::vector<ColumnEntry> out;
  auto classes = bound ? enumerate_parabolics(m, *bound) : enumerate_parabolics(m);
  for (auto& q : classes) {
    ColumnEntry e{q, hodge_polynomial(q), {}};
    for (const auto& rec : records)
      if (no_aq_component(rec, q)) e.no_component.push_back(rec.name());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<AutomorphicCandidate> automorphic_candidates(int m, std::optional<int> bound) {
  if (m < 3) throw std::invalid_argument("automorphic candidates need m >= 3");
  auto records = dimension_table(m);
  auto classes = bound ? enumerate_parabolics(m, *bound) : enumerate_parabolics(m);
  std::vector<AutomorphicCandidate> out;
  for (const auto& rec : records) {
    std::vector<const ThetaStableParabolic*> survivors;
    bool trivial_survives = false;
    for (const auto& q : classes) {
      if (no_aq_component(rec, q)) continue;
      if (q.is_trivial()) trivial_survives = true;
      else survivors.push_back(&q);
    }
    if (trivial_survives && survivors.size() == 1) out.push_back({rec.name(), *survivors[0]});
  }
  return out;
}

}  // namespace so2m
