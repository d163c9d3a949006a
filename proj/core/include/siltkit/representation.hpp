#pragma once

#include "siltkit/complexes.hpp"
#include "siltkit/linalg.hpp"

namespace siltkit {

/* Finite-dimensional right module as a quiver representation: a space per
 * vertex, a matrix per arrow mapping the source space into the target
 * space (column-vector convention). */
struct Representation {
  BasisPtr A;
  std::vector<int> dims;       // per vertex
  std::vector<RatMat> action;  // per arrow: dims[target] x dims[source]

  int total_dim() const;
  bool valid() const;  // every relation acts by zero

  static Representation zero(BasisPtr A);
  static Representation simple(BasisPtr A, int v);
  static Representation projective(BasisPtr A, int v);
  /* module underlying a direct sum of projectives e_{verts[t]}A; the
   * coordinate at vertex w is indexed by (t, basis word of block(v_t, w)) */
  static Representation free_bundle(BasisPtr A, const std::vector<int>& verts);

  /* action of a whole path word (apply first arrow first) */
  RatMat word_action(const PathWord& w) const;
  RatMat elt_action(int from_vertex, int to_vertex, const AlgElt& x) const;
};

/* coordinate helpers for free_bundle representations */
struct BundleIndex {
  BasisPtr A;
  std::vector<int> verts;
  std::vector<std::vector<int>> offsets;  // offsets[w][t]: start of summand t inside vertex-w space

  explicit BundleIndex(BasisPtr A_, std::vector<int> verts_);
  int dim_at(int w) const;
  int index(int w, int t, int word_pos) const { return offsets[w][t] + word_pos; }
  /* read the component of a vertex-w coordinate vector in summand t as an
   * algebra element of e_{verts[t]} A e_w */
  AlgElt component(int w, int t, const std::vector<Rat>& vec) const;
};

struct ModuleMap {
  Representation src, dst;
  std::vector<RatMat> mats;  // per vertex

  bool is_module_map() const;
};

/* per-vertex dimensions of the radical, top and socle */
std::vector<RowSpace> radical_spaces(const Representation& m);
std::vector<int> top_dims(const Representation& m);
std::vector<int> socle_dims(const Representation& m);
/* lifts of a top basis: pairs (vertex, coordinate vector) */
std::vector<std::pair<int, std::vector<Rat>>> top_lifts(const Representation& m);

struct CoverResult {
  std::vector<int> cover_verts;                 // projective cover summand vertices
  ModuleMap map;                                // free_bundle(cover_verts) -> m
  Representation kernel;                        // ker as a representation
  std::vector<std::vector<std::vector<Rat>>> kernel_emb;  // per vertex: kernel basis inside cover coords
};

CoverResult projective_cover(const Representation& m);

struct ResolutionResult {
  ProjComplex complex;  // degrees [-length, 0]
  bool truncated = false;
};

/* minimal projective resolution, stopping at zero kernel or at cap */
ResolutionResult min_proj_resolution(const Representation& m, int cap = 20);

/* opposite presentation: reversed arrows and reversed relation words */
AlgebraPresentation opposite_presentation(const AlgebraPresentation& pres);

}  // namespace siltkit
