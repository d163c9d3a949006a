#pragma once

#include <map>

#include "siltkit/quiver.hpp"

namespace siltkit {

/* Confluent, inter-reduced rewriting system for KQ/I under the length-first
 * monomial order. A rule maps its leading word to a combination of strictly
 * smaller words; the quotient basis is the set of irreducible words. */
struct ReductionSystem {
  const Quiver* quiver = nullptr;
  std::map<PathWord, LinComb, WordOrder> rules;  // lead -> tail
  bool complete = false;
  int word_cap = 64;

  bool word_reducible(const PathWord& w) const;
  /* leftmost-occurrence reduction to normal form */
  LinComb normal_form(const LinComb& x) const;
  LinComb normal_form_word(const PathWord& w) const;

  bool operator==(const ReductionSystem& o) const { return rules == o.rules; }
};

struct NormalizeOptions {
  int word_cap = 64;
};

/* Buchberger-style completion. Terminates for admissible ideals of
 * finite-dimensional algebras; raises dimension_unbounded when leading
 * words exceed the cap, which signals a non-admissible ideal. */
ReductionSystem normalize(const AlgebraPresentation& pres, NormalizeOptions opts = {});

}  // namespace siltkit
