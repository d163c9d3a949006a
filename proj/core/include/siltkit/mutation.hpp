#pragma once

#include "siltkit/homs.hpp"

namespace siltkit {

struct GMatrix {
  std::vector<std::vector<long>> cols;  // one K0-class per summand

  bool unimodular() const;
  long det_abs() const;
  std::string key() const;
};

/* Basic silting candidate: minimal pairwise-nonisomorphic summands in a
 * canonical order, with the g-matrix fingerprint and hom profile. */
struct SiltingNode {
  BasisPtr A;
  std::vector<ProjComplex> summands;
  std::map<int, int> hom_profile;  // shift -> dim Hom(T, T[shift])
  bool caveat = false;             // some End/rad had dimension > 1 over the rationals
  bool certified = false;          // seed or produced by mutation from the seed

  GMatrix g_matrix() const;
  /* identity key: g-matrix fingerprint extended by the hom profile. The
   * bare g-matrix separates two-term objects but repeats under even
   * shifts in wider intervals; residual collisions still trigger a full
   * isomorphism test and a hard error on mismatch. */
  std::string key() const;
  ProjComplex total() const;
};

/* shared caches keyed by literal complex serializations */
struct MutationContext {
  std::map<std::pair<std::string, std::string>, std::map<int, int>> tables;
  std::map<std::string, int> end_tops;
  const std::map<int, int>& pair_table(const ProjComplex& X, const ProjComplex& Y);
  int end_top(const ProjComplex& X);
};

SiltingNode lambda_node(BasisPtr A);

SiltingNode left_mutation(const SiltingNode& T, int k, MutationContext& ctx);
SiltingNode right_mutation(const SiltingNode& T, int k, MutationContext& ctx);

/* exchange without the certification pass; the result carries no profile
 * and certified = false. Used by the explorer to discard out-of-interval
 * candidates before paying for their certificates. */
SiltingNode left_mutation_uncertified(const SiltingNode& T, int k);
/* presilting re-certification: profile, indecomposability caveats */
void certify_node(SiltingNode& node, MutationContext& ctx);

/* dim End(X)/rad End(X) over the rationals; 1 certifies indecomposability */
int end_top_dim(const ProjComplex& X);

/* complete isomorphism test for indecomposable minimal complexes */
bool complexes_isomorphic(const ProjComplex& X, const ProjComplex& Y);
/* summand-wise matching of two nodes */
bool nodes_isomorphic(const SiltingNode& T, const SiltingNode& U);

struct EndoReport {
  int total_dim = 0;
  int vertices = 0;
  std::vector<std::vector<int>> arrow_counts;  // [u][v] = dim e_u (rad/rad^2) e_v
  bool rad_square_zero = true;
};

/* endomorphism algebra of a presilting object given by its pairwise
 * nonisomorphic indecomposable summands */
EndoReport endo_algebra(const std::vector<ProjComplex>& summands);

struct ExternalAssessment {
  PresiltingProfile profile;
  bool unimodular_g = false;
  bool maybe_silting = false;  // presilting with unimodular g; never certified silting
};

ExternalAssessment assess_external(const std::vector<ProjComplex>& summands);

/* g-matrix of a summand list; the fingerprint is square only when the
 * summand count matches the number of vertices */
GMatrix g_matrix_of(const std::vector<ProjComplex>& summands);

}  // namespace siltkit
