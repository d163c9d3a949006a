#pragma once

#include "siltkit/invariants.hpp"
#include "siltkit/mutation.hpp"

namespace siltkit {

enum class PosetStatus { Complete, CapExceeded };

/* the interval of silting objects between the seed and its (d-1)-shift,
 * explored by breadth-first irreducible left mutation */
struct IntervalPoset {
  BasisPtr A;
  int d = 2;
  int cap = 0;
  PosetStatus status = PosetStatus::Complete;
  std::vector<SiltingNode> nodes;                 // nodes[0] is the seed
  std::map<std::string, int> index;               // g-matrix key -> node id
  std::vector<std::tuple<int, int, int>> edges;   // (from, mutated summand, to)
};

/* threads = 0 reads SILTKIT_THREADS, defaulting to 1 */
IntervalPoset enumerate_interval(BasisPtr A, int d, int cap, int threads = 0);

struct TwoSiltingResult {
  bool finite = false;
  int count = 0;  // node count when finite; nodes discovered otherwise
};

TwoSiltingResult two_silting_finite(BasisPtr A, int cap);

struct HasseGraph {
  std::vector<GMatrix> nodes;
  std::vector<std::tuple<int, int, int>> edges;  // (from, summand label, to)
};

HasseGraph hasse(const IntervalPoset& poset);

struct TiltingAudit {
  std::vector<bool> is_tilting;  // per node
  bool all_tilting = false;
};

/* requires a weakly-symmetric algebra and a complete poset; checks the
 * all-or-nothing dichotomy on the component of the seed */
TiltingAudit component_tilting_audit(const BasisPtr& A, const IntervalPoset& poset);

}  // namespace siltkit
