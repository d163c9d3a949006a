/* Acceptance suite: one check per criterion, one pass/fail line each.
 * Exact arithmetic throughout; every expected value is pinned here. */

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "brute_force.hpp"
#include "siltkit/cli.hpp"
#include "siltkit/constructions.hpp"
#include "siltkit/dsl.hpp"
#include "siltkit/oracle.hpp"

using namespace siltkit;

namespace {

int failures = 0;
std::vector<std::string> notes;

void line(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << idx << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " - " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

CoxeterPolynomial poly(std::vector<long> asc) {
  CoxeterPolynomial p;
  for (long c : asc) p.push_back(Rat(c));
  return p;
}

long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

/* ---- criterion 1: exact Coxeter polynomials of the two subalgebra fixtures ---- */
void criterion1() {
  auto sub5 = coxeter_polynomial(cartan(*AlgebraBasis::build(fixture("gamma-sub5"))));
  auto full = coxeter_polynomial(cartan(*AlgebraBasis::build(fixture("gamma-sec2-5"))));
  bool ok = sub5 == poly({1, 1, 0, 0, 1, 1})            /* (x+1)(x^4+1) */
            && full == poly({1, 1, 0, -1, -1, 0, 1, 1}); /* (x+1)(x^6-x^3+1) */
  line(1, "coxeter exactness", ok,
       "five-vertex subalgebra -> " + poly_str(sub5) + "; seven-vertex algebra -> " + poly_str(full));
}

/* ---- criterion 2: the D12 coincidence stays evidence-only ---- */
void criterion2() {
  auto ec = fixture("extended-canonical-246");
  auto p = coxeter_polynomial(cartan(*AlgebraBasis::build(ec)));
  bool poly_ok = p == dynkin_coxeter_polynomial({DynkinFamily::D, 12});
  auto v = verdict(ec);
  bool unknown_ok = v.status == VerdictStatus::Unknown;
  bool evid = false;
  for (const auto& e : v.evidence) evid = evid || e.find("D12") != std::string::npos;
  line(2, "D12 coincidence without overclaiming", poly_ok && unknown_ok && evid,
       std::string("polynomial equals the D12 table entry: ") + (poly_ok ? "yes" : "NO") +
           "; oracle verdict: " + (unknown_ok ? "Unknown with the polynomial listed as evidence" : "decided"));
}

/* ---- criterion 3: window truncation of N(11,3) is A(9,3) ---- */
void criterion3() {
  auto N = AlgebraBasis::build(nakayama_cyclic(11, 3));
  auto t = truncate_full(*N, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  auto L = nakayama_linear(9, 3);
  auto rsL = normalize(L);
  auto BT = AlgebraBasis::build(t.pres);
  auto BL = AlgebraBasis::build(L);

  bool cartan_ok = cartan(*BT).C == cartan(*BL).C;
  bool shape_ok = t.pres.quiver.num_vertices() == 9 && t.pres.quiver.num_arrows() == 8;
  for (int i = 0; i < t.pres.quiver.num_arrows() && shape_ok; ++i)
    shape_ok = t.pres.quiver.arrows[i].source == L.quiver.arrows[i].source &&
               t.pres.quiver.arrows[i].target == L.quiver.arrows[i].target;
  bool rules_ok = t.rules.rules.size() == rsL.rules.size();
  {
    auto it = rsL.rules.begin();
    for (const auto& [lead, tail] : t.rules.rules) {
      if (!rules_ok) break;
      rules_ok = lead == it->first && tail == it->second;
      ++it;
    }
  }
  bool dim_ok = BT->dimension() == 24 && BL->dimension() == 24;  // 9*3 - 3 paths killed by the window
  line(3, "truncation isomorphism", cartan_ok && shape_ok && rules_ok && dim_ok,
       "identical Cartan matrices, identical reduction systems after positional renaming, dimension 24");
}

/* ---- criterion 4: the cyclic Nakayama grid ---- */
void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  bool table_ok = true, consistency_ok = true;
  std::string detail;
  for (int r = 2; r <= 8 && table_ok; ++r)
    for (int n = 2; n <= 20 && table_ok; ++n) {
      auto v = nakayama_verdict(n, r);
      bool thm_no = ((r == 3 || r == 4) && n >= 11) || ((r == 5 || r == 6) && n >= r + 8) ||
                    (r >= 7 && n >= 2 * r + 1);
      bool sdsn_yes = (r == 2) || (r % n == 1);
      if (thm_no && v.status != VerdictStatus::No) {
        table_ok = false;
        detail = "missing No at (" + std::to_string(n) + "," + std::to_string(r) + ")";
      }
      if (sdsn_yes && v.status != VerdictStatus::Yes) {
        table_ok = false;
        detail = "missing Yes at (" + std::to_string(n) + "," + std::to_string(r) + ")";
      }
    }
  for (int r = 2; r <= 8 && consistency_ok; ++r)
    for (int n = 2; n <= 20 && consistency_ok; ++n) {
      auto direct = nakayama_verdict(n, r);
      auto chain = evaluate_rule("R9", nakayama_cyclic(n, r));
      if (chain && chain->status == VerdictStatus::No && direct.status == VerdictStatus::Yes) {
        consistency_ok = false;
        detail = "R9 chain conflicts with the table at (" + std::to_string(n) + "," + std::to_string(r) + ")";
      }
      if (chain && direct.status != VerdictStatus::Unknown && chain->status != direct.status) {
        consistency_ok = false;
        detail = "rule disagreement at (" + std::to_string(n) + "," + std::to_string(r) + ")";
      }
    }
  long ms = ms_since(t0);
  bool time_ok = ms < 60000;
  line(4, "Nakayama grid with truncation-chain consistency", table_ok && consistency_ok && time_ok,
       detail.empty() ? ("133 cells, zero conflicts, " + std::to_string(ms) + " ms") : detail);
}

/* ---- criterion 5: the linear Nakayama table ---- */
void criterion5() {
  struct Cell {
    int n, r;
    VerdictStatus want;
  };
  std::vector<Cell> cells{{8, 3, VerdictStatus::Yes}, {9, 3, VerdictStatus::No},
                          {7, 4, VerdictStatus::Yes}, {8, 4, VerdictStatus::No},
                          {8, 5, VerdictStatus::Yes}, {9, 5, VerdictStatus::No},
                          {8, 6, VerdictStatus::Yes}, {9, 6, VerdictStatus::No},
                          {8, 7, VerdictStatus::Yes}, {9, 7, VerdictStatus::No}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cells)
    if (a_nr_verdict(c.n, c.r).status != c.want) {
      ok = false;
      detail = "boundary pair (" + std::to_string(c.n) + "," + std::to_string(c.r) + ") off";
    }
  for (int r = 2; r <= 8 && ok; ++r) {
    bool seen_no = false;
    for (int n = 1; n <= 20 && ok; ++n) {
      auto s = a_nr_verdict(n, r).status;
      if (s == VerdictStatus::Unknown) {
        ok = false;
        detail = "undecided linear cell";
      }
      if (seen_no && s != VerdictStatus::No) {
        ok = false;
        detail = "monotonicity broken at (" + std::to_string(n) + "," + std::to_string(r) + ")";
      }
      if (s == VerdictStatus::No) seen_no = true;
    }
  }
  line(5, "A(n,r) boundary table and monotone negativity", ok, detail);
}

/* ---- criterion 6: enumeration against the independent brute force ---- */
void criterion6() {
  struct Case {
    const char* id;
    int pinned;  // -1: agreement only
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : std::vector<Case>{{"point", 2}, {"dual-numbers", 2}, {"a2-path", 5}, {"a3-path", 14},
                                         {"n-2-3", -1}, {"commutative-square", -1}}) {
    auto A = AlgebraBasis::build(fixture(c.id));
    auto poset = enumerate_interval(A, 2, 500);
    auto brute = tst::brute_force_two_term_siltings(A);
    bool match = poset.status == PosetStatus::Complete && poset.nodes.size() == brute.size();
    if (c.pinned > 0) match = match && (int)poset.nodes.size() == c.pinned;
    for (const auto& n : poset.nodes) match = match && brute.count(n.g_matrix().key()) == 1;
    detail += std::string(c.id) + "=" + std::to_string(poset.nodes.size()) + " ";
    ok = ok && match;
  }
  line(6, "enumeration equals brute force", ok, detail);
}

/* ---- criterion 7: the double arrow exceeds every cap ---- */
void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  auto poset = enumerate_interval(AlgebraBasis::build(fixture("kronecker-quiver")), 2, 100);
  bool cap_ok = poset.status == PosetStatus::CapExceeded;
  std::set<std::string> gkeys;
  bool unimodular_ok = true;
  for (const auto& n : poset.nodes) {
    gkeys.insert(n.g_matrix().key());
    unimodular_ok = unimodular_ok && n.g_matrix().unimodular();
  }
  bool count_ok = (int)gkeys.size() >= 100;
  line(7, "Kronecker non-closure at cap 100", cap_ok && count_ok && unimodular_ok,
       std::to_string(gkeys.size()) + " distinct unimodular g-matrices, cap exceeded, " +
           std::to_string(ms_since(t0)) + " ms");
}

/* ---- criterion 8: the six-simple resolution shelf ---- */
void criterion8() {
  auto A = AlgebraBasis::build(fixture("example-y"));
  std::vector<int> shifts{0, 1, 2, 3, 2, 1};
  std::vector<ProjComplex> summands;
  for (int v = 0; v < 6; ++v) {
    auto res = min_proj_resolution(Representation::simple(A, v));
    summands.push_back(res.complex.shifted(shifts[v]));
  }
  ProjComplex T = ProjComplex::zero(A);
  for (const auto& s : summands) T = ProjComplex::direct_sum(T, s);
  bool presilting_ok = presilting_profile(T).presilting;

  auto rep = endo_algebra(summands);
  int arrows = 0;
  for (const auto& row : rep.arrow_counts)
    for (int c : row) arrows += c;
  /* the quiver has five arrows, so its opposite does as well; the stated
   * head-count of six arrows (and with it dimension 12 = 6 + 6) does not
   * match the displayed quiver, whose reversal gives 5 arrows and total
   * dimension 11 = 6 + 5. The frozen values below are the recomputed ones. */
  bool opposite_ok = true;
  for (const auto& ar : A->quiver().arrows)
    opposite_ok = opposite_ok && rep.arrow_counts[ar.target][ar.source] == 1;
  bool ok = presilting_ok && rep.vertices == 6 && arrows == 5 && opposite_ok && rep.rad_square_zero &&
            rep.total_dim == 11;
  line(8, "six-simple shelf endomorphism algebra", ok,
       "presilting; 6 vertices, " + std::to_string(arrows) +
           " arrows forming the opposite quiver, radical square zero, dimension " +
           std::to_string(rep.total_dim) + " (head-count in the task sheet said 6 arrows/dim 12; the "
           "displayed quiver has 5 arrows, so 11 is the recomputed value)");
}

/* ---- criterion 9: involution walks plus the shape of one right mutation ---- */
void criterion9() {
  bool ok = true;
  std::string detail;
  int steps_done = 0;
  for (const char* id : {"n-2-3", "a3-path"}) {
    auto A = AlgebraBasis::build(fixture(id));
    MutationContext ctx;
    SiltingNode cur = lambda_node(A);
    std::mt19937 rng(90210);
    for (int step = 0; step < 25 && ok; ++step) {
      int k = std::uniform_int_distribution<int>(0, (int)cur.summands.size() - 1)(rng);
      SiltingNode down = left_mutation(cur, k, ctx);
      int kp = -1;
      for (int j = 0; j < (int)down.summands.size(); ++j) {
        bool fresh = true;
        for (const auto& s : cur.summands) fresh = fresh && s.key() != down.summands[j].key();
        if (fresh) kp = j;
      }
      SiltingNode back = right_mutation(down, kp, ctx);
      if (!(back.key() == cur.key() && nodes_isomorphic(back, cur) && down.g_matrix().unimodular())) {
        ok = false;
        detail = std::string("involution failed on ") + id + " at step " + std::to_string(step);
      }
      cur = std::move(down);
      ++steps_done;
    }
  }

  /* right mutation of N(2,3) at P_1 has the predicted shape and is tilting */
  auto A = AlgebraBasis::build(fixture("n-2-3"));
  MutationContext ctx;
  auto L = lambda_node(A);
  int idx = L.summands[0].g_vector() == std::vector<long>{1, 0} ? 0 : 1;
  auto T = right_mutation(L, idx, ctx);
  auto pres = min_proj_resolution(Representation::simple(A, 0), 1);
  ProjComplex X;
  X.A = A;
  X.min_deg = -1;
  X.comps = {pres.complex.comp(-1), pres.complex.comp(0)};
  X.diffs = {pres.complex.diffs[pres.complex.num_degrees() - 2]};
  X = X.shifted(-1);
  bool shape_ok = false, rest_ok = false, tilting_ok = true;
  for (const auto& s : T.summands) {
    if (complexes_isomorphic(s, X)) shape_ok = true;
    if (s.num_degrees() == 1 && s.g_vector() == std::vector<long>{0, 1}) rest_ok = true;
  }
  for (const auto& [s, d] : T.hom_profile)
    if (s != 0 && d) tilting_ok = false;
  ok = ok && shape_ok && rest_ok && tilting_ok;
  if (detail.empty())
    detail = std::to_string(steps_done) +
             " involution steps, zero failures; the right mutation splits as the shifted projective "
             "presentation plus the complementary projective and is tilting";
  line(9, "mutation suite", ok, detail);
}

/* ---- criterion 10: stratifying tests ---- */
void criterion10() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 5 && ok; ++n) {
    auto A = AlgebraBasis::build(path_an(n));
    for (int v = 0; v < n && ok; ++v)
      if (is_stratifying(*A, {v}).state != StratifyingState::Yes) {
        ok = false;
        detail = "hereditary idempotent not stratifying";
      }
  }
  auto K = AlgebraBasis::build(fixture("example-kronecker"));
  auto s = is_stratifying(*K, {2});
  auto h = ae_cohomology(*K, {2});
  if (!(s.state == StratifyingState::No && s.witness_degree == -1 && h[-1] == 1)) {
    ok = false;
    detail = "triangle example at vertex 3 should fail with a one-dimensional degree -1 obstruction";
  }

  auto BF = AlgebraBasis::build(fixture("bongartz-fails"));
  auto S = min_proj_resolution(Representation::simple(BF, 0)).complex;
  auto prof = presilting_profile(S);
  bool pretilting_ok = prof.pretilting && prof.table.size() == 1 && prof.table.count(0) == 1;
  auto T = ProjComplex::direct_sum(S, ProjComplex::stalk(BF, {1, 2}, -2));
  bool completion_ok = presilting_profile(T).presilting;
  ok = ok && pretilting_ok && completion_ok;
  if (detail.empty())
    detail = "hereditary idempotents stratify; the obstruction at the triangle vertex is one-dimensional; "
             "the double-arrow simple is pretilting and extends to a presilting object";
  line(10, "stratifying tests", ok, detail);
}

/* ---- criterion 11: property suites ---- */
void criterion11() {
  bool ok = true;
  std::string detail;

  /* Euler form on 200 random two-term pairs over five algebras */
  for (const char* id : {"a2-path", "a3-path", "n-2-3", "example-kronecker", "commutative-square"}) {
    auto A = AlgebraBasis::build(fixture(id));
    auto C = cartan(*A).C;
    std::mt19937 rng(4096);
    for (int trial = 0; trial < 200 && ok; ++trial) {
      auto rand_two_term = [&](std::mt19937& r) {
        int n = A->num_vertices();
        std::uniform_int_distribution<int> mult(0, 2);
        std::vector<int> lo, hi;
        for (int v = 0; v < n; ++v)
          for (int c = mult(r); c > 0; --c) lo.push_back(v);
        for (int v = 0; v < n; ++v)
          for (int c = mult(r); c > 0; --c) hi.push_back(v);
        if (lo.empty() && hi.empty()) hi.push_back(0);
        ProjComplex X;
        X.A = A;
        X.min_deg = -1;
        X.comps = {lo, hi};
        if (!lo.empty() && !hi.empty()) {
          AlgMatrix d(hi, lo);
          std::uniform_int_distribution<int> coeff(-2, 2);
          for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
              for (int w : A->block(hi[i], lo[j]))
                if (A->length_of(w) >= 1) d.at(i, j).add(w, coeff(rng));
          X.diffs = {d};
        }
        X.trim();
        return X;
      };
      ProjComplex X = rand_two_term(rng), Y = rand_two_term(rng);
      auto a = X.g_vector();
      auto b = Y.g_vector();
      Rat expect = 0;
      for (int u = 0; u < A->num_vertices(); ++u)
        for (int v = 0; v < A->num_vertices(); ++v) expect += Rat(a[u]) * C.at(v, u) * Rat(b[v]);
      auto [lo, hi] = hom_window(X, Y);
      Rat euler = 0;
      for (int sh = lo; sh <= hi; ++sh)
        euler += (sh % 2 == 0 ? Rat(hom_dim(X, Y, sh)) : Rat(-hom_dim(X, Y, sh)));
      if (euler != expect) {
        ok = false;
        detail = std::string("euler mismatch over ") + id;
      }
    }
  }

  /* normal-form idempotence */
  {
    auto p = fixture("gamma-sec2-5");
    auto rs = normalize(p);
    auto A = AlgebraBasis::build(p);
    std::mt19937 rng(7);
    for (int t = 0; t < 100 && ok; ++t) {
      AlgElt x;
      std::uniform_int_distribution<int> word(0, A->dimension() - 1), coeff(-3, 3);
      for (int i = 0; i < 3; ++i) x.add(word(rng), coeff(rng));
      LinComb nf1 = rs.normal_form(A->to_lincomb(x));
      if (!(rs.normal_form(nf1) == nf1)) {
        ok = false;
        detail = "normal form is not idempotent";
      }
    }
  }

  /* Coxeter self-reciprocity across the shelf */
  for (const char* id : {"a2-path", "a3-path", "a5-path", "commutative-square", "example-kronecker",
                         "example-y", "gamma-sub4", "gamma-sub5", "gamma-sec2-5", "extended-canonical-246",
                         "bongartz-fails"}) {
    auto c = cartan(*AlgebraBasis::build(fixture(id)));
    if (is_zero(c.detC)) continue;
    if (!self_reciprocal(coxeter_polynomial(c))) {
      ok = false;
      detail = std::string("self-reciprocity failed on ") + id;
    }
  }

  /* deterministic parallel enumeration */
  {
    Command cmd{"enumerate", {{"fixture", "a3-path"}, {"d", "2"}, {"cap", "100"}}};
    Command cmd4{"enumerate", {{"fixture", "a3-path"}, {"d", "2"}, {"cap", "100"}, {"threads", "4"}}};
    auto r1 = run_command(cmd);
    auto r2 = run_command(cmd);
    auto r4 = run_command(cmd4);
    if (!(r1.report.json == r2.report.json && r1.report.json == r4.report.json)) {
      ok = false;
      detail = "reports differ across runs or thread counts";
    }
  }

  line(11, "property suites", ok,
       detail.empty() ? "euler form, normal-form idempotence, self-reciprocity, deterministic enumeration"
                      : detail);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << ms_since(t0) << " ms\n";
  return failures == 0 ? 0 : 1;
}
