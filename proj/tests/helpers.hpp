#pragma once

#include <random>

#include "siltkit/basis.hpp"
#include "siltkit/constructions.hpp"

namespace tst {

using namespace siltkit;

inline BasisPtr basis_of(const AlgebraPresentation& p) { return AlgebraBasis::build(p); }
inline BasisPtr fix(const std::string& id) { return basis_of(fixture(id)); }

inline AlgElt random_elt(const AlgebraBasis& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> word(0, A.dimension() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> nterms(1, 3);
  AlgElt x;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) x.add(word(rng), coeff(rng));
  return x;
}

/* positional structural comparison: same quiver shape and same reduction
 * system after renaming vertices/arrows by declaration position */
inline bool same_shape_and_rules(const ReductionSystem& ra, const Quiver& qa, const ReductionSystem& rb,
                                 const Quiver& qb) {
  if (qa.num_vertices() != qb.num_vertices() || qa.num_arrows() != qb.num_arrows()) return false;
  for (int i = 0; i < qa.num_arrows(); ++i)
    if (qa.arrows[i].source != qb.arrows[i].source || qa.arrows[i].target != qb.arrows[i].target) return false;
  if (ra.rules.size() != rb.rules.size()) return false;
  auto it = rb.rules.begin();
  for (const auto& [lead, tail] : ra.rules) {
    if (!(lead == it->first) || !(tail == it->second)) return false;
    ++it;
  }
  return true;
}

}  // namespace tst
