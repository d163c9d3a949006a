#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "siltkit/errors.hpp"
#include "siltkit/rational.hpp"

namespace siltkit {

struct Arrow {
  std::string name;
  int source = 0;  // vertex index
  int target = 0;
  int degree = 0;  // metadata for graded-quiver bookkeeping; no differential is modeled
};

/* Finite quiver with ordered vertices and arrows. The declaration order of
 * arrows fixes the monomial order used by the rewriting machinery. */
struct Quiver {
  std::vector<std::string> vertex_names;
  std::vector<Arrow> arrows;

  int num_vertices() const { return (int)vertex_names.size(); }
  int num_arrows() const { return (int)arrows.size(); }

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  void add_vertex(const std::string& name);
  void add_arrow(const std::string& name, const std::string& src, const std::string& tgt, int degree = 0);
  void add_arrow_idx(const std::string& name, int src, int tgt, int degree = 0);

  bool has_multiple_arrows() const;
  bool is_acyclic() const;          // no oriented cycle
  bool connected_underlying() const;
  void validate() const;
};

/* Path in a quiver; empty arrow list encodes the trivial path e_v. Arrows
 * compose left to right: target(arrows[k]) == source(arrows[k+1]). */
struct PathWord {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  static PathWord vertex(int v) { return PathWord{v, v, {}}; }

  bool operator==(const PathWord& o) const {
    return source == o.source && target == o.target && arrows == o.arrows;
  }
};

/* Length-first, then lexicographic by declared arrow order; trivial paths
 * ordered by vertex index. Total order on all words of one quiver. */
struct WordOrder {
  bool operator()(const PathWord& a, const PathWord& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  }
};

/* Parallel linear combination of paths with exact coefficients.
 * No zero terms stored; empty map is the zero element. */
struct LinComb {
  std::map<PathWord, Rat, WordOrder> terms;

  bool zero() const { return terms.empty(); }
  /* largest word in the monomial order */
  const PathWord& lead() const { return terms.rbegin()->first; }
  const Rat& lead_coeff() const { return terms.rbegin()->second; }

  void add_term(const PathWord& w, const Rat& c);
  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  LinComb operator*(const Rat& c) const;
  bool parallel() const;  // all terms share source and target
  bool operator==(const LinComb& o) const { return terms == o.terms; }
};

LinComb word_comb(const PathWord& w, const Rat& c = 1);

struct AlgebraPresentation {
  Quiver quiver;
  std::vector<LinComb> relations;
  std::string name;

  /* tensor provenance, kept when built by tensor() so the oracle can
   * recognize declared factorizations */
  std::vector<std::shared_ptr<const AlgebraPresentation>> tensor_factors;

  /* Admissibility pre-check: every relation is a nonzero parallel
   * combination of composable paths of length >= 2. */
  void check_admissible() const;
};

/* Walk composability check used by parsers and constructions. */
PathWord make_path(const Quiver& q, const std::vector<int>& arrow_seq);

struct GradabilityResult {
  bool gradable = true;
  /* closed walk witnessing failure: (arrow index, +1 forward / -1 inverse) */
  std::vector<std::pair<int, int>> witness_walk;
  long witness_degree = 0;
};

/* A quiver is gradable when every closed walk of the underlying graph has
 * virtual degree 0 under deg(arrow) = +1, deg(inverse) = -1. */
GradabilityResult is_gradable(const Quiver& q);

}  // namespace siltkit
