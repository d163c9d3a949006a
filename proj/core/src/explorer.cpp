#include "siltkit/explorer.hpp"

#include <cstdlib>
#include <thread>

namespace siltkit {

namespace {

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SILTKIT_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

/* Hom(T, U[i]) summed over summand pairs through the shared table cache */
bool leq_via_tables(const std::vector<ProjComplex>& T, const std::vector<ProjComplex>& U, MutationContext& ctx) {
  for (const auto& x : T)
    for (const auto& y : U)
      for (const auto& [s, dim] : ctx.pair_table(x, y))
        if (s > 0 && dim != 0) return false;
  return true;
}

bool inside_interval(const SiltingNode& base, const std::vector<ProjComplex>& shifted_base,
                     const SiltingNode& cand, MutationContext& ctx) {
  return leq_via_tables(base.summands, cand.summands, ctx) &&
         leq_via_tables(cand.summands, shifted_base, ctx);
}

}  // namespace

IntervalPoset enumerate_interval(BasisPtr A, int d, int cap, int threads) {
  if (d < 2) throw bad_parameters("interval width d must be at least 2");
  if (cap < 1) throw bad_parameters("node cap must be positive");
  int nthreads = thread_count(threads);

  IntervalPoset poset;
  poset.A = A;
  poset.d = d;
  poset.cap = cap;

  MutationContext ctx;
  SiltingNode base = lambda_node(A);
  std::vector<ProjComplex> shifted_base;
  for (const auto& s : base.summands) shifted_base.push_back(s.shifted(d - 1));

  poset.nodes.push_back(base);
  poset.index[base.key()] = 0;

  std::vector<int> frontier{0};
  bool capped = false;

  while (!frontier.empty() && !capped) {
    /* expand the whole level, then merge in canonical task order */
    struct Task {
      int node;
      int k;
    };
    std::vector<Task> tasks;
    for (int id : frontier)
      for (int k = 0; k < (int)poset.nodes[id].summands.size(); ++k) tasks.push_back({id, k});

    struct Result {
      bool ok = false;
      SiltingNode node;
      bool in_interval = false;
    };
    std::vector<Result> results(tasks.size());

    auto run_task = [&](size_t t, MutationContext& local) {
      const Task& task = tasks[t];
      Result r;
      r.node = left_mutation_uncertified(poset.nodes[task.node], task.k);
      r.in_interval = inside_interval(base, shifted_base, r.node, local);
      if (r.in_interval) certify_node(r.node, local);
      r.ok = true;
      results[t] = std::move(r);
    };

    if (nthreads <= 1) {
      for (size_t t = 0; t < tasks.size(); ++t) run_task(t, ctx);
    } else {
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      for (int w = 0; w < nthreads; ++w)
        pool.emplace_back([&]() {
          MutationContext local;
          for (size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) run_task(t, local);
        });
      for (auto& th : pool) th.join();
    }

    std::vector<int> next_frontier;
    for (size_t t = 0; t < tasks.size(); ++t) {
      if (!results[t].ok || !results[t].in_interval) continue;
      SiltingNode& cand = results[t].node;
      std::string key = cand.key();
      auto it = poset.index.find(key);
      int target;
      if (it != poset.index.end()) {
        target = it->second;
        if (!nodes_isomorphic(poset.nodes[target], cand))
          throw consistency_error("distinct nodes share a g-matrix fingerprint");
      } else {
        if ((int)poset.nodes.size() >= cap) {
          capped = true;
          poset.status = PosetStatus::CapExceeded;
          break;
        }
        target = (int)poset.nodes.size();
        poset.nodes.push_back(cand);
        poset.index[key] = target;
        next_frontier.push_back(target);
      }
      poset.edges.push_back({tasks[t].node, tasks[t].k, target});
    }
    frontier = std::move(next_frontier);
  }

  if (!capped) poset.status = PosetStatus::Complete;
  return poset;
}

TwoSiltingResult two_silting_finite(BasisPtr A, int cap) {
  IntervalPoset p = enumerate_interval(std::move(A), 2, cap);
  TwoSiltingResult r;
  r.finite = p.status == PosetStatus::Complete;
  r.count = (int)p.nodes.size();
  return r;
}

HasseGraph hasse(const IntervalPoset& poset) {
  if (poset.status != PosetStatus::Complete)
    throw incomplete_poset("the interval enumeration hit its cap; no Hasse quiver");
  HasseGraph g;
  for (const auto& n : poset.nodes) g.nodes.push_back(n.g_matrix());
  g.edges = poset.edges;
  return g;
}

TiltingAudit component_tilting_audit(const BasisPtr& A, const IntervalPoset& poset) {
  auto flags = structure_flags(A);
  if (!flags.is_weakly_symmetric)
    throw not_weakly_symmetric("the tilting audit applies to weakly-symmetric algebras");
  if (poset.status != PosetStatus::Complete)
    throw incomplete_poset("the tilting audit needs a complete interval");

  TiltingAudit audit;
  for (const auto& n : poset.nodes) {
    bool tilting = true;
    for (const auto& [s, dim] : n.hom_profile)
      if (s != 0 && dim != 0) tilting = false;
    audit.is_tilting.push_back(tilting);
  }
  audit.all_tilting = std::all_of(audit.is_tilting.begin(), audit.is_tilting.end(), [](bool b) { return b; });
  /* the component of the seed contains the tilting object A itself, so the
   * dichotomy forces every member to be tilting */
  if (!audit.is_tilting.empty() && audit.is_tilting[0] && !audit.all_tilting)
    throw consistency_error("tilting dichotomy failed on the component of the seed");
  return audit;
}

}  // namespace siltkit
