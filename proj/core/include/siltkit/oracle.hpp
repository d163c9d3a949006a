#pragma once

#include "siltkit/explorer.hpp"

namespace siltkit {

enum class VerdictStatus { Yes, No, Unknown };

struct CertificateStep {
  std::string rule;       // rule id, e.g. "R3"
  std::string statement;  // self-contained statement of the fact applied
  std::string bound;      // instantiated values
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::vector<CertificateStep> certificate;
  std::vector<std::string> evidence;  // non-proof notes (polynomial matches, caps)

  static Verdict yes(CertificateStep s) { return Verdict{VerdictStatus::Yes, {std::move(s)}, {}}; }
  static Verdict no(CertificateStep s) { return Verdict{VerdictStatus::No, {std::move(s)}, {}}; }
  static Verdict unknown() { return Verdict{}; }
};

/* user-supplied hypotheses the toolkit cannot decide; echoed verbatim
 * into certificates */
struct Assertions {
  std::optional<std::string> piecewise_hereditary_type;  // "A4", "D6", "E8", or a free-form non-Dynkin tag
  bool simply_connected = false;
  bool nonlocal = false;
};

struct OracleBudget {
  int r9_full_subset_limit = 11;  // all vertex subsets up to this many vertices
  bool r9_all_subsets = false;    // search every subset regardless of size
  long r9_max_truncations = 200000;
  int r10_cap = 32;               // two-term enumeration cap for evidence; 0 disables
  int threads = 0;
};

Verdict nakayama_verdict(int n, int r);
Verdict a_nr_verdict(int n, int r);
Verdict graded_kronecker_verdict(int n0, int i, int ni);
Verdict tensor_verdict(const std::vector<AlgebraPresentation>& factors, const Assertions& asserts = {});

Verdict verdict(const AlgebraPresentation& pres, const Assertions& asserts = {}, const OracleBudget& budget = {});

/* single-rule evaluation used by the consistency audits; returns a decided
 * verdict when the rule applies and decides, nothing otherwise */
std::optional<Verdict> evaluate_rule(const std::string& rule_id, const AlgebraPresentation& pres,
                                     const Assertions& asserts = {}, const OracleBudget& budget = {});

/* ids in priority order */
const std::vector<std::string>& oracle_rule_ids();

}  // namespace siltkit
