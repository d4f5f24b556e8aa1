#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "so2m/roots.hpp"

namespace so2m {

struct ChevalleyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Root vectors E_a for every root, normalized so that [E_a, E_-a] is the
// coroot H*_a and theta(E_a) = +-E_a.
struct ChevalleyBasis {
  RootSystem rs;
  std::map<std::vector<int>, ExactMatrix> root_vectors;

  const ExactMatrix& e(const Root& a) const;
  ExactMatrix hstar(const Root& a) const { return rs.coroot(a); }
  ExactMatrix x(const Root& a) const;  // E_a - E_-a
  ExactMatrix y(const Root& a) const;  // i (E_a + E_-a)
};

// Builds and verifies; throws ChevalleyError naming the first violated relation.
ChevalleyBasis build_chevalley(const RootSystem& rs);

// Memoized build_chevalley(build_root_system(build_context(m), v)); thread-safe.
const ChevalleyBasis& cached_chevalley(int m, Variant v);

// The full relation suite, without throwing.
Report verify_chevalley(const ChevalleyBasis& cb);

// N with [E_a, E_b] = N E_{a+b}. Throws std::invalid_argument unless a + b is a root.
int structure_constant(const ChevalleyBasis& cb, const Root& a, const Root& b);

// +1 on compact root vectors, -1 on noncompact ones, read off theta(E_a).
int theta_signature(const ChevalleyBasis& cb, const Root& a);

}  // namespace so2m
