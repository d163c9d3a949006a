#pragma once

#include "siltkit/representation.hpp"

namespace siltkit {

struct TruncationResult {
  AlgebraPresentation pres;
  std::vector<int> vertex_map;      // new vertex index -> parent vertex index
  std::vector<AlgElt> arrow_values; // new arrow -> element of the parent algebra
  ReductionSystem rules;            // reduction system of pres, from the extraction
};

/* presentation of eAe for e = sum of the chosen vertex idempotents */
TruncationResult truncate_full(const AlgebraBasis& A, const std::vector<int>& vertex_set);
AlgebraPresentation truncate_idempotent(const AlgebraBasis& A, const std::vector<int>& vertex_set);

/* presentation of A/AeA, vertices of the set deleted */
AlgebraPresentation quotient_idempotent(const AlgebraBasis& A, const std::vector<int>& vertex_set);
/* dim of the two-sided ideal AeA inside A */
int ideal_dimension(const AlgebraBasis& A, const std::vector<int>& vertex_set);

/* vertex pairs, arrow pairs, lifted relations plus square commutativity */
AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b);

struct OnePointExtensionResult {
  AlgebraPresentation pres;
  bool zero_module = false;  // flagged, not fatal: an isolated vertex was added
  std::string extension_vertex;
};

OnePointExtensionResult one_point_extension(const AlgebraBasis& A, const Representation& M);

/* ---- standard families ---- */

AlgebraPresentation nakayama_cyclic(int n, int r);   // N(n,r): cyclic quiver, x^r = 0
AlgebraPresentation nakayama_linear(int n, int r);   // A(n,r): linear A_n, rad^r = 0
AlgebraPresentation path_an(int n);                  // K A_n
AlgebraPresentation path_algebra(Quiver q, const std::string& name);
AlgebraPresentation rad_square_zero(Quiver q, const std::string& name);
AlgebraPresentation ladder(int r);                   // K A_2 (x) K A_r
AlgebraPresentation atilde_commutative(int p, int q);
AlgebraPresentation atilde_monomial(int p, int q);
AlgebraPresentation extended_canonical_246();

/* registry of the concrete algebras used as worked examples */
struct Fixture {
  std::string id;
  std::string blurb;
  AlgebraPresentation (*build)();
};
const std::vector<Fixture>& fixture_registry();
AlgebraPresentation fixture(const std::string& id);

/* parses specs like nakayama_cyclic(2,3), ladder(4), path_an(5) */
AlgebraPresentation make_standard(const std::string& spec);

}  // namespace siltkit
