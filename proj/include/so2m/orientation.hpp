#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "so2m/involutions.hpp"

namespace so2m {

struct UnsupportedCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One element per connected component of K(sigma).
struct ComponentRep {
  std::string label;  // "identity", "Y2", "Y3", "Y4"
  ExactMatrix matrix;
};

struct ComponentList {
  std::vector<ComponentRep> reps;
  // Holomorphic sigma: the orientation question is settled without reps.
  bool holomorphic_shortcut = false;
};

// Hard-coded representatives for the tau_p, mu_p, sigma'_0, eta and m = 2
// tau'_1 cases; holomorphic sigma returns {identity} with the shortcut flag.
// Throws UnsupportedCase for anything else.
ComponentList k_sigma_components(const Involution& s);

// det of Ad(rep) on p0(sigma); throws std::invalid_argument if rep does not
// stabilize p0(sigma) or the determinant is not +-1.
int det_ad_on_p0(const Involution& s, const ComponentRep& rep);

bool orientation_preserving(const Involution& s);

// Diagonal sign matrices in K = SO(2) x SO(m) commuting with the conjugator,
// each paired with det Ad on p0(sigma). A cross-check on the hard-coded
// representatives; it finds only the sign-matrix part of K(sigma).
std::vector<std::pair<ExactMatrix, int>> sign_matrix_probe(const Involution& s);

// The catalog without tau_p when m is odd.
std::vector<Involution> theorem_scope(int m);

}  // namespace so2m
