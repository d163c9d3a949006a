#pragma once

#include <optional>

#include "siltkit/representation.hpp"

namespace siltkit {

struct CartanData {
  RatMat C;                      // C[i][j] = dim e_i A e_j
  Rat detC;
  std::optional<RatMat> Phi;     // -C^{-T} C when detC != 0
};

CartanData cartan(const AlgebraBasis& A);

/* ascending exact coefficients, monic, degree = number of vertices */
using CoxeterPolynomial = std::vector<Rat>;

CoxeterPolynomial coxeter_polynomial(const CartanData& c);
bool self_reciprocal(const CoxeterPolynomial& p);

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family;
  int rank;
  std::string str() const;
  bool operator==(const DynkinType& o) const { return family == o.family && rank == o.rank; }
};

enum class MatchGrade { Shape, PolynomialEvidence };

struct DynkinMatch {
  DynkinType type;
  MatchGrade grade;
};

/* exact ADE test on the underlying graph; a proof for hereditary algebras */
std::optional<DynkinMatch> recognize_dynkin(const Quiver& q);
/* exact match against Coxeter polynomials built from exponent data;
 * evidence only, never a proof */
std::optional<DynkinMatch> recognize_dynkin(const CoxeterPolynomial& p, int rank_cap = 30);
/* table entry for one type, exact */
CoxeterPolynomial dynkin_coxeter_polynomial(const DynkinType& t);

struct OneCycleData {
  /* arrows on the unique cycle with their direction along the traversal */
  std::vector<std::pair<int, int>> cycle;
};

enum class ClockState { NotApplicable, Satisfied, Violated };

struct StructureFlags {
  bool is_local = false;
  bool is_hereditary = false;
  std::optional<std::pair<int, int>> nakayama_cyclic;  // (n, r)
  std::optional<std::pair<int, int>> nakayama_linear;  // (n, r), r normalized to <= n
  bool is_radical_square_zero = false;
  bool is_gentle = false;
  std::optional<OneCycleData> one_cycle;
  ClockState clock = ClockState::NotApplicable;
  int clock_cw = 0, clock_ccw = 0;
  bool is_weakly_symmetric = false;
  bool topsocle_left_ok = false;   // top of each indecomposable injective is isotypic
  bool topsocle_right_ok = false;  // socle of each indecomposable projective is isotypic
  bool has_multiple_arrows = false;
  bool connected = true;
};

StructureFlags structure_flags(const BasisPtr& A);

struct TorProfile {
  std::map<int, int> dims;          // k >= 0 -> dim Tor_k^{eAe}(Ae, eA)
  int multiplication_kernel_dim = 0;
  int computed_up_to = 0;
  bool complete = false;
};

TorProfile tor_profile(const AlgebraBasis& A, const std::vector<int>& vertex_set, int cap = 20);

/* i <= 0 -> dim H^i of the nonpositive dg algebra attached to the
 * idempotent: H^0 = A/AeA, H^{-1} = Ker(Ae (x) eA -> AeA), lower degrees
 * are Tor groups */
std::map<int, int> ae_cohomology(const AlgebraBasis& A, const std::vector<int>& vertex_set, int cap = 20);

enum class StratifyingState { Yes, No, YesUpToCap };

struct StratifyingResult {
  StratifyingState state;
  std::optional<int> witness_degree;  // first nonvanishing negative degree
  int cap_used = 0;
};

StratifyingResult is_stratifying(const AlgebraBasis& A, const std::vector<int>& vertex_set, int cap = 20);

}  // namespace siltkit
