#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "so2m/aq.hpp"
#include "so2m/orientation.hpp"

namespace so2m {

struct CycleRecord {
  Involution involution;
  int d_sigma = 0;        // dim X(sigma)
  int d_sigma_theta = 0;  // dim X(sigma theta)
  Holomorphy holomorphy = Holomorphy::Mixed;

  const std::string& name() const { return involution.name; }
};

CycleRecord cycle_record(const Involution& s);

// One record per theorem_scope(m) entry, in catalog order.
std::vector<CycleRecord> dimension_table(int m);

// Holomorphic: the (d/2, d/2) and (d_theta/2, d_theta/2) coefficients of P_q
// both vanish. Otherwise neither d nor d_theta is a total degree of P_q.
// Always false for the trivial class.
bool no_aq_component(const CycleRecord& rec, const ThetaStableParabolic& q);

struct ColumnEntry {
  ThetaStableParabolic parabolic;
  HodgePolynomial polynomial;
  std::vector<std::string> no_component;  // catalog order
};

// Every parabolic class in key order (enumeration bound defaults to l + 1) with the involutions that have no
// A_q-component for it.
std::vector<ColumnEntry> no_component_column(int m, std::optional<int> bound = std::nullopt);

struct AutomorphicCandidate {
  std::string witness;
  ThetaStableParabolic parabolic;
};

// Involutions whose surviving classes are exactly the trivial class and one
// other. Throws std::invalid_argument for m < 3.
std::vector<AutomorphicCandidate> automorphic_candidates(int m, std::optional<int> bound = std::nullopt);

}  // namespace so2m
