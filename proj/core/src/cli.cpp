#include "siltkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <set>

#include <json.hpp>

#include "siltkit/constructions.hpp"
#include "siltkit/dsl.hpp"
#include "siltkit/invariants.hpp"
#include "siltkit/oracle.hpp"

namespace siltkit {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, std::set<std::string>>& verb_options() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"basis", {}},
      {"cartan", {}},
      {"coxeter", {}},
      {"flags", {}},
      {"truncate", {"vertices"}},
      {"quotient", {"vertices"}},
      {"tensor", {"with"}},
      {"stratify", {"vertices", "cap"}},
      {"ae-cohomology", {"vertices", "cap"}},
      {"hom", {"left", "right", "shift"}},
      {"mutate", {"at", "side"}},
      {"enumerate", {"d", "cap", "threads"}},
      {"audit", {"d", "cap", "threads"}},
      {"oracle",
       {"assert-simply-connected", "assert-pw-hereditary", "assert-nonlocal", "tensor-factors",
        "r9-all-subsets", "r9-subset-limit", "r10-cap"}},
      {"fixture-list", {}},
  };
  return table;
}

int env_default(const char* name, int fallback) {
  if (const char* v = std::getenv(name)) {
    int x = std::atoi(v);
    if (x > 0) return x;
  }
  return fallback;
}

AlgebraPresentation resolve_source(const std::string& spec) {
  /* registry id first, then family spec */
  for (const auto& f : fixture_registry())
    if (f.id == spec) return f.build();
  return make_standard(spec);
}

AlgebraPresentation resolve_algebra(const Command& cmd) {
  int sources = cmd.options.count("fixture") + cmd.options.count("standard") + cmd.options.count("algebra-text");
  if (sources == 0) throw input_error("no algebra given; use --fixture, --standard or an input file");
  if (sources > 1) throw input_error("give exactly one algebra source");
  if (cmd.options.count("fixture")) return fixture(cmd.options.at("fixture"));
  if (cmd.options.count("standard")) return make_standard(cmd.options.at("standard"));
  return parse_dsl(cmd.options.at("algebra-text"));
}

std::vector<int> parse_vertices(const AlgebraPresentation& pres, const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(pres.quiver.vertex_index(tok));
  return out;
}

int parse_int(const Command& cmd, const std::string& key, int fallback) {
  auto it = cmd.options.find(key);
  if (it == cmd.options.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (...) {
    throw input_error("option '" + key + "' expects an integer");
  }
}

json gmatrix_json(const GMatrix& g) {
  json rows = json::array();
  int n = g.cols.empty() ? 0 : (int)g.cols[0].size();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (const auto& c : g.cols) row.push_back(c[r]);
    rows.push_back(row);
  }
  return rows;
}

json verdict_json(const Verdict& v) {
  json out;
  out["status"] = v.status == VerdictStatus::Yes ? "Yes" : v.status == VerdictStatus::No ? "No" : "Unknown";
  json cert = json::array();
  for (const auto& step : v.certificate) {
    json s;
    s["rule"] = step.rule;
    s["statement"] = step.statement;
    if (!step.bound.empty()) s["at"] = step.bound;
    cert.push_back(s);
  }
  out["certificate"] = cert;
  out["evidence"] = v.evidence;
  return out;
}

ProjComplex parse_object(BasisPtr A, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw input_error("object spec must look like p:<vertex> or s:<vertex>");
  std::string kind = spec.substr(0, colon);
  int v = A->quiver().vertex_index(spec.substr(colon + 1));
  if (kind == "p") return ProjComplex::stalk(A, {v}, 0);
  if (kind == "s") {
    auto res = min_proj_resolution(Representation::simple(A, v));
    if (res.truncated) throw input_error("the simple at this vertex has no finite resolution");
    return res.complex;
  }
  throw input_error("unknown object kind '" + kind + "'; use p: or s:");
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

const std::vector<std::string>& cli_verbs() {
  static const std::vector<std::string> verbs = [] {
    std::vector<std::string> v;
    for (const auto& [k, o] : verb_options()) v.push_back(k);
    return v;
  }();
  return verbs;
}

RunOutcome run_command(const Command& cmd) {
  RunOutcome out;
  Timer timer;
  try {
    auto vo = verb_options().find(cmd.verb);
    if (vo == verb_options().end()) throw input_error("unknown command '" + cmd.verb + "'");
    static const std::set<std::string> common{"fixture", "standard", "algebra-text", "timing", "format"};
    for (const auto& [k, v] : cmd.options)
      if (!common.count(k) && !vo->second.count(k))
        throw input_error("option '" + k + "' does not apply to '" + cmd.verb + "'");

    json result;
    json warnings = json::array();
    json certificate = json::array();
    std::optional<std::string> dot;
    std::string algebra_name;

    if (cmd.verb == "fixture-list") {
      algebra_name = "-";
      json rows = json::array();
      for (const auto& f : fixture_registry()) {
        json row;
        row["id"] = f.id;
        row["about"] = f.blurb;
        rows.push_back(row);
      }
      result["fixtures"] = rows;
    } else {
      AlgebraPresentation pres = resolve_algebra(cmd);
      algebra_name = pres.name;

      if (cmd.verb == "basis") {
        auto A = AlgebraBasis::build(pres);
        result["dimension"] = A->dimension();
        json words = json::array();
        for (int i = 0; i < A->dimension(); ++i) {
          const PathWord& w = A->word(i);
          std::string s;
          if (w.trivial())
            s = "e_" + pres.quiver.vertex_names[w.source];
          else
            for (size_t k = 0; k < w.arrows.size(); ++k)
              s += (k ? "*" : "") + pres.quiver.arrows[w.arrows[k]].name;
          words.push_back(s);
        }
        result["words"] = words;
        json blocks = json::array();
        for (int i = 0; i < A->num_vertices(); ++i) {
          json row = json::array();
          for (int j = 0; j < A->num_vertices(); ++j) row.push_back(A->block_dim(i, j));
          blocks.push_back(row);
        }
        result["blocks"] = blocks;
      } else if (cmd.verb == "cartan") {
        auto A = AlgebraBasis::build(pres);
        auto c = cartan(*A);
        json m = json::array();
        for (int i = 0; i < c.C.rows(); ++i) {
          json row = json::array();
          for (int j = 0; j < c.C.cols(); ++j) row.push_back(c.C.at(i, j).get_str());
          m.push_back(row);
        }
        result["cartan"] = m;
        result["det"] = c.detC.get_str();
        if (c.Phi) {
          json phi = json::array();
          for (int i = 0; i < c.Phi->rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < c.Phi->cols(); ++j) row.push_back(c.Phi->at(i, j).get_str());
            phi.push_back(row);
          }
          result["coxeter_matrix"] = phi;
        }
      } else if (cmd.verb == "coxeter") {
        auto A = AlgebraBasis::build(pres);
        auto p = coxeter_polynomial(cartan(*A));
        json coeffs = json::array();
        for (const auto& c : p) coeffs.push_back(c.get_str());
        result["coefficients_ascending"] = coeffs;
        result["polynomial"] = poly_str(p);
        result["self_reciprocal"] = self_reciprocal(p);
        if (auto m = recognize_dynkin(p)) {
          result["dynkin_match"] = m->type.str();
          warnings.push_back("the Dynkin polynomial match is evidence only, never a proof");
        }
      } else if (cmd.verb == "flags") {
        auto A = AlgebraBasis::build(pres);
        auto f = structure_flags(A);
        result["connected"] = f.connected;
        result["local"] = f.is_local;
        result["hereditary"] = f.is_hereditary;
        result["radical_square_zero"] = f.is_radical_square_zero;
        result["gentle"] = f.is_gentle;
        result["one_cycle"] = (bool)f.one_cycle;
        result["clock"] = f.clock == ClockState::NotApplicable ? "n/a"
                          : f.clock == ClockState::Satisfied   ? "satisfied"
                                                               : "violated";
        if (f.clock != ClockState::NotApplicable) {
          result["clock_cw"] = f.clock_cw;
          result["clock_ccw"] = f.clock_ccw;
        }
        if (f.nakayama_cyclic) result["nakayama_cyclic"] = {f.nakayama_cyclic->first, f.nakayama_cyclic->second};
        if (f.nakayama_linear) result["nakayama_linear"] = {f.nakayama_linear->first, f.nakayama_linear->second};
        result["weakly_symmetric"] = f.is_weakly_symmetric;
        result["top_of_injectives_isotypic"] = f.topsocle_left_ok;
        result["socle_of_projectives_isotypic"] = f.topsocle_right_ok;
        result["multiple_arrows"] = f.has_multiple_arrows;
      } else if (cmd.verb == "truncate" || cmd.verb == "quotient") {
        if (!cmd.options.count("vertices")) throw input_error("--vertices is required");
        auto A = AlgebraBasis::build(pres);
        auto S = parse_vertices(pres, cmd.options.at("vertices"));
        AlgebraPresentation outp = cmd.verb == "truncate" ? truncate_idempotent(*A, S)
                                                          : quotient_idempotent(*A, S);
        result["dimension"] = AlgebraBasis::build(outp)->dimension();
        result["presentation"] = print_dsl(outp);
        if (cmd.verb == "quotient") result["ideal_dimension"] = ideal_dimension(*A, S);
      } else if (cmd.verb == "tensor") {
        if (!cmd.options.count("with")) throw input_error("--with is required");
        auto other = resolve_source(cmd.options.at("with"));
        auto t = tensor(pres, other);
        result["dimension"] = AlgebraBasis::build(t)->dimension();
        result["presentation"] = print_dsl(t);
      } else if (cmd.verb == "stratify") {
        if (!cmd.options.count("vertices")) throw input_error("--vertices is required");
        auto A = AlgebraBasis::build(pres);
        auto S = parse_vertices(pres, cmd.options.at("vertices"));
        int cap = parse_int(cmd, "cap", env_default("SILTKIT_TOR_CAP", 20));
        auto s = is_stratifying(*A, S, cap);
        result["stratifying"] = s.state == StratifyingState::Yes      ? "yes"
                                : s.state == StratifyingState::No     ? "no"
                                                                      : "yes_up_to_cap";
        if (s.witness_degree) result["witness_degree"] = *s.witness_degree;
        if (s.state == StratifyingState::YesUpToCap)
          warnings.push_back("the resolution did not terminate below the cap; the verdict is capped");
        auto tp = tor_profile(*A, S, cap);
        int last = 1;
        for (const auto& [k, d] : tp.dims)
          if (d != 0) last = std::max(last, k);
        json tor;
        for (const auto& [k, d] : tp.dims)
          if (k <= last) tor[std::to_string(k)] = d;
        result["tor"] = tor;
        result["multiplication_kernel_dim"] = tp.multiplication_kernel_dim;
        result["complete"] = tp.complete;
      } else if (cmd.verb == "ae-cohomology") {
        if (!cmd.options.count("vertices")) throw input_error("--vertices is required");
        auto A = AlgebraBasis::build(pres);
        auto S = parse_vertices(pres, cmd.options.at("vertices"));
        int cap = parse_int(cmd, "cap", env_default("SILTKIT_TOR_CAP", 20));
        auto h = ae_cohomology(*A, S, cap);
        int first = -1;
        for (const auto& [i, d] : h)
          if (d != 0) first = std::min(first, i);
        json hh;
        for (const auto& [i, d] : h)
          if (i >= first) hh[std::to_string(i)] = d;
        result["cohomology"] = hh;
      } else if (cmd.verb == "hom") {
        if (!cmd.options.count("left") || !cmd.options.count("right"))
          throw input_error("--left and --right are required");
        auto A = AlgebraBasis::build(pres);
        auto X = parse_object(A, cmd.options.at("left"));
        auto Y = parse_object(A, cmd.options.at("right"));
        int shift = parse_int(cmd, "shift", 0);
        result["dimension"] = hom_dim(X, Y, shift);
        json table;
        for (const auto& [s, d] : hom_table(X, Y)) table[std::to_string(s)] = d;
        result["table"] = table;
      } else if (cmd.verb == "mutate") {
        if (!cmd.options.count("at")) throw input_error("--at is required");
        auto A = AlgebraBasis::build(pres);
        bool left = true;
        if (cmd.options.count("side")) {
          const auto& s = cmd.options.at("side");
          if (s == "left") left = true;
          else if (s == "right") left = false;
          else throw input_error("--side expects left or right");
        }
        MutationContext ctx;
        SiltingNode node = lambda_node(A);
        std::stringstream ss(cmd.options.at("at"));
        std::string tok;
        json steps = json::array();
        while (std::getline(ss, tok, ',')) {
          int k = std::stoi(tok);
          node = left ? left_mutation(node, k, ctx) : right_mutation(node, k, ctx);
          steps.push_back(k);
        }
        result["applied"] = steps;
        result["side"] = left ? "left" : "right";
        result["g_matrix"] = gmatrix_json(node.g_matrix());
        result["unimodular"] = node.g_matrix().unimodular();
        json prof;
        for (const auto& [s, d] : node.hom_profile) prof[std::to_string(s)] = d;
        result["hom_profile"] = prof;
        bool tilting = true, presilting = true;
        for (const auto& [s, d] : node.hom_profile) {
          if (s != 0 && d) tilting = false;
          if (s > 0 && d) presilting = false;
        }
        result["presilting"] = presilting;
        result["tilting"] = tilting;
        if (node.caveat)
          warnings.push_back("a summand has scalars beyond the rationals in its endomorphism top; "
                             "indecomposability certified over Q only");
      } else if (cmd.verb == "enumerate" || cmd.verb == "audit") {
        int d = parse_int(cmd, "d", 2);
        int cap = parse_int(cmd, "cap", env_default("SILTKIT_ENUM_CAP", 100));
        int threads = parse_int(cmd, "threads", 0);
        auto A = AlgebraBasis::build(pres);
        auto poset = enumerate_interval(A, d, cap, threads);
        result["d"] = d;
        result["cap"] = cap;
        result["status"] = poset.status == PosetStatus::Complete ? "complete" : "cap_exceeded";
        result["nodes"] = (int)poset.nodes.size();
        json gs = json::array();
        for (const auto& n : poset.nodes) gs.push_back(gmatrix_json(n.g_matrix()));
        result["g_matrices"] = gs;
        json edges = json::array();
        for (const auto& [f, k, t] : poset.edges) edges.push_back({f, k, t});
        result["edges"] = edges;
        if (poset.status == PosetStatus::CapExceeded)
          warnings.push_back("the cap was reached; finiteness is unknown, never inferred as infinite");
        if (cmd.verb == "audit") {
          auto audit = component_tilting_audit(A, poset);
          result["all_tilting"] = audit.all_tilting;
          json per = json::array();
          for (bool b : audit.is_tilting) per.push_back(b);
          result["tilting_per_node"] = per;
        } else if (poset.status == PosetStatus::Complete) {
          dot = hasse_to_dot(hasse(poset));
        }
      } else if (cmd.verb == "oracle") {
        Assertions asserts;
        asserts.simply_connected = cmd.options.count("assert-simply-connected") > 0;
        asserts.nonlocal = cmd.options.count("assert-nonlocal") > 0;
        if (cmd.options.count("assert-pw-hereditary"))
          asserts.piecewise_hereditary_type = cmd.options.at("assert-pw-hereditary");
        OracleBudget budget;
        budget.r9_all_subsets = cmd.options.count("r9-all-subsets") > 0;
        budget.r9_full_subset_limit = parse_int(cmd, "r9-subset-limit", budget.r9_full_subset_limit);
        budget.r10_cap = parse_int(cmd, "r10-cap", env_default("SILTKIT_R10_CAP", budget.r10_cap));
        Verdict v;
        if (cmd.options.count("tensor-factors")) {
          std::vector<AlgebraPresentation> factors{pres};
          std::stringstream ss(cmd.options.at("tensor-factors"));
          std::string tok;
          while (std::getline(ss, tok, ','))
            if (!tok.empty()) factors.push_back(resolve_source(tok));
          v = tensor_verdict(factors, asserts);
        } else {
          v = verdict(pres, asserts, budget);
        }
        json vj = verdict_json(v);
        result["status"] = vj["status"];
        certificate = vj["certificate"];
        for (const auto& e : v.evidence) warnings.push_back(e);
      }
    }

    json doc;
    doc["schema"] = "report-v1";
    doc["command"] = cmd.verb;
    doc["algebra"] = algebra_name;
    doc["result"] = result;
    doc["certificate"] = certificate;
    doc["warnings"] = warnings;
    if (cmd.options.count("timing")) doc["timing_ms"] = timer.ms();

    out.report.command = cmd.verb;
    out.report.algebra = algebra_name;
    out.report.json = doc.dump(2) + "\n";
    out.report.dot = dot;
    out.exit_code = 0;
    return out;
  } catch (const consistency_error& e) {
    out.exit_code = 2;
    out.error = e.what();
    return out;
  } catch (const input_error& e) {
    out.exit_code = 1;
    out.error = e.what();
    return out;
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.error = e.what();
    return out;
  }
}

}  // namespace siltkit
