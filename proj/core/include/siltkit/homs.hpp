#pragma once

#include "siltkit/complexes.hpp"
#include "siltkit/linalg.hpp"

namespace siltkit {

/* Hom space in the homotopy category: chain maps X -> Y[shift] modulo
 * homotopy. Representatives are harmonic cocycles (orthogonal to the
 * coboundaries), so coordinates of arbitrary classes come from the small
 * Gram system. */
struct HomSpace {
  int dim = 0;
  std::vector<ChainMap> basis;   // harmonic representatives
  RatMat gram;                   // inner products of the basis vectors
};

int hom_dim(const ProjComplex& X, const ProjComplex& Y, int shift);
HomSpace hom_space(const ProjComplex& X, const ProjComplex& Y, int shift);

/* coordinates of the class of f in the hom-space basis; f must be a chain
 * map with matching shift */
std::vector<Rat> hom_coordinates(const HomSpace& H, const ChainMap& f);

/* shift window outside which Hom(X, Y[s]) vanishes for support reasons */
std::pair<int, int> hom_window(const ProjComplex& X, const ProjComplex& Y);

/* full finite table of dim Hom(X, Y[s]) */
std::map<int, int> hom_table(const ProjComplex& X, const ProjComplex& Y);

struct PresiltingProfile {
  std::map<int, int> table;  // shift -> dim Hom(T, T[shift])
  bool presilting = false;   // all shifts > 0 vanish
  bool pretilting = false;   // all shifts != 0 vanish
};

PresiltingProfile presilting_profile(const ProjComplex& T);

/* T >= U: Hom(T, U[i]) = 0 for every i > 0 */
bool silting_leq(const ProjComplex& T, const ProjComplex& U);

/* composition g o f as maps of complexes (f first); shifts add */
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add_maps(const ChainMap& f, const ChainMap& g, const Rat& cf, const Rat& cg);

/* true when f and g are homotopic */
bool homotopic(const ProjComplex& X, const ProjComplex& Y, int shift, const ChainMap& f, const ChainMap& g);

}  // namespace siltkit
