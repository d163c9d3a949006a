#include "siltkit/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "siltkit/constructions.hpp"

namespace siltkit {

CartanData cartan(const AlgebraBasis& A) {
  int n = A.num_vertices();
  CartanData c{RatMat(n, n), 0, std::nullopt};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.C.at(i, j) = A.block_dim(i, j);
  c.detC = c.C.det();
  if (!is_zero(c.detC)) {
    auto inv_t = c.C.transpose().inverse();
    c.Phi = -(*inv_t * c.C);
  }
  return c;
}

CoxeterPolynomial coxeter_polynomial(const CartanData& c) {
  if (!c.Phi) throw singular_cartan("Cartan matrix is singular; no Coxeter matrix");
  return c.Phi->charpoly();
}

bool self_reciprocal(const CoxeterPolynomial& p) {
  int n = (int)p.size() - 1;
  for (int sign : {1, -1}) {
    bool ok = true;
    for (int k = 0; k <= n; ++k)
      if (p[k] != Rat(sign) * p[n - k]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::string DynkinType::str() const {
  const char* fam = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
  return std::string(fam) + std::to_string(rank);
}

namespace {

std::vector<Rat> x_pow_minus_1(int d) {
  std::vector<Rat> p(d + 1, Rat(0));
  p[0] = -1;
  p[d] = 1;
  return p;
}

const std::vector<Rat>& cyclotomic(int d) {
  static std::map<int, std::vector<Rat>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Rat> p = x_pow_minus_1(d);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = poly_div_exact(p, cyclotomic(e));
  return cache.emplace(d, std::move(p)).first->second;
}

std::vector<int> dynkin_exponents(const DynkinType& t, int& coxeter_number) {
  switch (t.family) {
    case DynkinFamily::A: {
      coxeter_number = t.rank + 1;
      std::vector<int> e(t.rank);
      std::iota(e.begin(), e.end(), 1);
      return e;
    }
    case DynkinFamily::D: {
      coxeter_number = 2 * t.rank - 2;
      std::vector<int> e;
      for (int m = 1; m <= 2 * t.rank - 3; m += 2) e.push_back(m);
      e.push_back(t.rank - 1);
      std::sort(e.begin(), e.end());
      return e;
    }
    case DynkinFamily::E:
      if (t.rank == 6) { coxeter_number = 12; return {1, 4, 5, 7, 8, 11}; }
      if (t.rank == 7) { coxeter_number = 18; return {1, 5, 7, 9, 11, 13, 17}; }
      if (t.rank == 8) { coxeter_number = 30; return {1, 7, 11, 13, 17, 19, 23, 29}; }
      break;
  }
  throw bad_parameters("no exponent data for " + t.str());
}

int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

}  // namespace

CoxeterPolynomial dynkin_coxeter_polynomial(const DynkinType& t) {
  int h = 0;
  auto exps = dynkin_exponents(t, h);
  /* the polynomial is the product over exponents m of (x - zeta_h^m);
   * grouping by the order of zeta_h^m gives a cyclotomic factorization */
  std::vector<Rat> p{Rat(1)};
  std::map<int, int> mult;  // order d -> multiplicity
  for (int m : exps) mult[h / gcd_int(m, h)]++;
  for (auto [d, k] : mult) {
    int phi = (int)cyclotomic(d).size() - 1;
    if (k % phi != 0) throw consistency_error("exponent data is inconsistent with cyclotomic degrees");
    for (int i = 0; i < k / phi; ++i) p = poly_mul(p, cyclotomic(d));
  }
  return p;
}

std::optional<DynkinMatch> recognize_dynkin(const Quiver& q) {
  int n = q.num_vertices();
  if (n == 0 || !q.connected_underlying()) return std::nullopt;
  if (q.num_arrows() != n - 1) return std::nullopt;  // not a tree (counts loops/cycles out)
  for (const auto& a : q.arrows)
    if (a.source == a.target) return std::nullopt;
  if (q.has_multiple_arrows()) return std::nullopt;
  std::set<std::pair<int, int>> und;
  for (const auto& a : q.arrows) {
    auto e = std::minmax(a.source, a.target);
    if (!und.insert({e.first, e.second}).second) return std::nullopt;  // 2-cycle
  }
  std::vector<int> deg(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : q.arrows) {
    deg[a.source]++;
    deg[a.target]++;
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 3) return std::nullopt;
    if (deg[v] == 3) {
      if (branch >= 0) return std::nullopt;  // two branch points
      branch = v;
    }
  }
  if (branch < 0) return DynkinMatch{DynkinType{DynkinFamily::A, n}, MatchGrade::Shape};
  /* branch lengths from the unique degree-3 vertex */
  std::vector<int> lens;
  for (int s : adj[branch]) {
    int len = 1, prev = branch, cur = s;
    while (true) {
      int nxt = -1;
      for (int w : adj[cur])
        if (w != prev) nxt = w;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] == 1 && lens[1] == 1) return DynkinMatch{DynkinType{DynkinFamily::D, n}, MatchGrade::Shape};
  if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4)
    return DynkinMatch{DynkinType{DynkinFamily::E, n}, MatchGrade::Shape};
  return std::nullopt;
}

std::optional<DynkinMatch> recognize_dynkin(const CoxeterPolynomial& p, int rank_cap) {
  int n = (int)p.size() - 1;
  if (n < 1 || n > rank_cap) return std::nullopt;
  std::vector<DynkinType> candidates{{DynkinFamily::A, n}};
  if (n >= 4) candidates.push_back({DynkinFamily::D, n});
  if (n >= 6 && n <= 8) candidates.push_back({DynkinFamily::E, n});
  for (const auto& t : candidates)
    if (dynkin_coxeter_polynomial(t) == p) return DynkinMatch{t, MatchGrade::PolynomialEvidence};
  return std::nullopt;
}

namespace {

std::optional<OneCycleData> find_one_cycle(const Quiver& q) {
  int n = q.num_vertices();
  if (!q.connected_underlying() || q.num_arrows() != n) return std::nullopt;
  /* peel leaves of the underlying graph; the remainder is the unique cycle */
  std::vector<char> arrow_alive(q.num_arrows(), 1);
  std::vector<int> deg(n, 0);
  for (const auto& a : q.arrows) {
    deg[a.source]++;
    deg[a.target]++;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
      if (!arrow_alive[ai]) continue;
      const Arrow& a = q.arrows[ai];
      if (a.source != a.target && (deg[a.source] == 1 || deg[a.target] == 1)) {
        arrow_alive[ai] = 0;
        deg[a.source]--;
        deg[a.target]--;
        changed = true;
      }
    }
  }
  std::vector<int> cyc;
  for (int ai = 0; ai < q.num_arrows(); ++ai)
    if (arrow_alive[ai]) cyc.push_back(ai);
  if (cyc.empty()) return std::nullopt;

  OneCycleData data;
  if (cyc.size() == 1) {  // loop
    data.cycle.push_back({cyc[0], +1});
    return data;
  }
  /* walk the cycle edges in order */
  int start = q.arrows[cyc[0]].source;
  int cur = start;
  std::vector<char> used(q.num_arrows(), 0);
  for (size_t step = 0; step < cyc.size(); ++step) {
    bool advanced = false;
    for (int ai : cyc) {
      if (used[ai]) continue;
      const Arrow& a = q.arrows[ai];
      if (a.source == cur) {
        data.cycle.push_back({ai, +1});
        used[ai] = 1;
        cur = a.target;
        advanced = true;
        break;
      }
      if (a.target == cur) {
        data.cycle.push_back({ai, -1});
        used[ai] = 1;
        cur = a.source;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;  // cycle vertices revisited; not a plain cycle
  }
  if (cur != start) return std::nullopt;
  return data;
}

}  // namespace

StructureFlags structure_flags(const BasisPtr& Aptr) {
  const AlgebraBasis& A = *Aptr;
  StructureFlags f;
  const Quiver& q = A.quiver();
  const auto& rules = A.rules().rules;
  int n = A.num_vertices();

  f.connected = q.connected_underlying();
  f.is_local = (n == 1);
  f.is_hereditary = rules.empty();
  f.is_radical_square_zero = (A.max_word_length() <= 1);
  f.has_multiple_arrows = q.has_multiple_arrows();

  /* uniform rad^r rules: all leads of one length with zero tails covering
   * every path of that length */
  auto rad_power = [&]() -> std::optional<int> {
    if (rules.empty()) return std::nullopt;
    size_t r = rules.begin()->first.length();
    size_t count = 0;
    for (const auto& [lead, tail] : rules) {
      if (!tail.zero() || lead.length() != r) return std::nullopt;
      ++count;
    }
    /* count all paths of length r in the quiver */
    std::vector<std::vector<long>> walk(n, std::vector<long>(n, 0));
    for (int v = 0; v < n; ++v) walk[v][v] = 1;
    long total = 0;
    for (size_t step = 0; step < r; ++step) {
      std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
      for (const auto& a : q.arrows)
        for (int v = 0; v < n; ++v) next[v][a.target] += walk[v][a.source];
      walk = std::move(next);
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) total += walk[u][v];
    if ((long)count != total) return std::nullopt;
    return (int)r;
  };

  /* oriented cycle shape: every vertex has in- and out-degree one */
  auto cyclic_shape = [&]() {
    if (q.num_arrows() != n || !f.connected) return false;
    std::vector<int> in(n, 0), out(n, 0);
    for (const auto& a : q.arrows) {
      out[a.source]++;
      in[a.target]++;
    }
    for (int v = 0; v < n; ++v)
      if (in[v] != 1 || out[v] != 1) return false;
    return true;
  };
  /* linear A_n shape */
  auto linear_shape = [&]() {
    if (q.num_arrows() != n - 1 || !f.connected || !q.is_acyclic()) return false;
    std::vector<int> in(n, 0), out(n, 0);
    for (const auto& a : q.arrows) {
      out[a.source]++;
      in[a.target]++;
    }
    for (int v = 0; v < n; ++v)
      if (in[v] > 1 || out[v] > 1) return false;
    return true;
  };

  if (cyclic_shape() && n >= 2) {
    if (auto r = rad_power()) f.nakayama_cyclic = {n, *r};
  }
  if (linear_shape()) {
    if (rules.empty())
      f.nakayama_linear = {n, n};  // rad^r vacuous past the path length
    else if (auto r = rad_power())
      f.nakayama_linear = {n, *r};
  }

  /* gentle: quadratic monomial relations plus the in/out conditions */
  auto is_rule_lead = [&rules](int a, int b, const Quiver& qv) {
    PathWord w{qv.arrows[a].source, qv.arrows[b].target, {a, b}};
    auto it = rules.find(w);
    return it != rules.end() && it->second.zero();
  };
  f.is_gentle = true;
  for (const auto& [lead, tail] : rules)
    if (lead.length() != 2 || !tail.zero()) f.is_gentle = false;
  if (f.is_gentle) {
    std::vector<int> in(n, 0), out(n, 0);
    for (const auto& a : q.arrows) {
      out[a.source]++;
      in[a.target]++;
    }
    for (int v = 0; v < n && f.is_gentle; ++v)
      if (in[v] > 2 || out[v] > 2) f.is_gentle = false;
    for (int x = 0; x < q.num_arrows() && f.is_gentle; ++x) {
      int with_in = 0, without_in = 0, with_out = 0, without_out = 0;
      for (int y = 0; y < q.num_arrows(); ++y) {
        if (q.arrows[y].target == q.arrows[x].source) (is_rule_lead(y, x, q) ? with_in : without_in)++;
        if (q.arrows[y].source == q.arrows[x].target) (is_rule_lead(x, y, q) ? with_out : without_out)++;
      }
      if (with_in > 1 || without_in > 1 || with_out > 1 || without_out > 1) f.is_gentle = false;
    }
  }

  f.one_cycle = find_one_cycle(q);

  if (f.is_gentle && f.one_cycle) {
    std::map<int, int> dir_on_cycle;
    for (const auto& [ai, d] : f.one_cycle->cycle) dir_on_cycle[ai] = d;
    for (const auto& [lead, tail] : rules) {
      auto ita = dir_on_cycle.find(lead.arrows[0]);
      auto itb = dir_on_cycle.find(lead.arrows[1]);
      if (ita == dir_on_cycle.end() || itb == dir_on_cycle.end()) continue;
      if (ita->second > 0 && itb->second > 0) f.clock_cw++;
      if (ita->second < 0 && itb->second < 0) f.clock_ccw++;
    }
    f.clock = (f.clock_cw == f.clock_ccw) ? ClockState::Satisfied : ClockState::Violated;
  }

  /* socle/top isotypy via projectives over the algebra and its opposite */
  f.is_weakly_symmetric = true;
  f.topsocle_right_ok = true;
  for (int v = 0; v < n; ++v) {
    auto soc = socle_dims(Representation::projective(Aptr, v));
    int total = 0;
    for (int w = 0; w < n; ++w) {
      total += soc[w];
      if (w != v && soc[w] > 0) {
        f.topsocle_right_ok = false;
        f.is_weakly_symmetric = false;
      }
    }
    if (soc[v] != 1 || total != 1) f.is_weakly_symmetric = false;
  }
  BasisPtr op = AlgebraBasis::build(opposite_presentation(A.presentation()));
  f.topsocle_left_ok = true;
  for (int v = 0; v < n; ++v) {
    auto soc = socle_dims(Representation::projective(op, v));
    for (int w = 0; w < n; ++w)
      if (w != v && soc[w] > 0) f.topsocle_left_ok = false;
  }
  return f;
}

namespace {

struct TorComputation {
  TorProfile profile;
};

}  // namespace

TorProfile tor_profile(const AlgebraBasis& A, const std::vector<int>& vertex_set, int cap) {
  TruncationResult tr = truncate_full(A, vertex_set);
  BasisPtr E = AlgebraBasis::build(tr.pres);

  /* Ae as a right eAe-module: coordinates at new vertex v are the words of
   * A ending at the parent vertex */
  int nv = E->num_vertices();
  std::vector<std::vector<int>> coords(nv);  // parent word ids
  for (int v = 0; v < nv; ++v) {
    int pv = tr.vertex_map[v];
    for (int id = 0; id < A.dimension(); ++id)
      if (A.target_of(id) == pv) coords[v].push_back(id);
  }
  Representation lam_e;
  lam_e.A = E;
  lam_e.dims.resize(nv);
  for (int v = 0; v < nv; ++v) lam_e.dims[v] = (int)coords[v].size();
  for (int ai = 0; ai < E->quiver().num_arrows(); ++ai) {
    int s = E->quiver().arrows[ai].source, t = E->quiver().arrows[ai].target;
    RatMat act(lam_e.dims[t], lam_e.dims[s]);
    const AlgElt& val = tr.arrow_values[ai];
    for (int j = 0; j < lam_e.dims[s]; ++j) {
      AlgElt img = A.mul(A.of_word(coords[s][j]), val);
      for (const auto& [wid, c] : img.terms) {
        auto pos = std::lower_bound(coords[t].begin(), coords[t].end(), wid);
        if (pos == coords[t].end() || *pos != wid) throw consistency_error("right action left the column space");
        act.at((int)(pos - coords[t].begin()), j) = c;
      }
    }
    lam_e.action.push_back(std::move(act));
  }

  ResolutionResult res = min_proj_resolution(lam_e, cap);

  /* evaluate eAe-basis words into the parent algebra */
  std::vector<AlgElt> word_vals(E->dimension());
  for (int id = 0; id < E->dimension(); ++id) {
    const PathWord& w = E->word(id);
    AlgElt x = A.unit(tr.vertex_map[w.source]);
    for (int ai : w.arrows) x = A.mul(x, tr.arrow_values[ai]);
    word_vals[id] = x;
  }
  auto eval = [&](const AlgElt& x) {
    AlgElt out;
    for (const auto& [wid, c] : x.terms) out += word_vals[wid] * c;
    return out;
  };

  /* tensor the resolution with eA: summand at new vertex v becomes the
   * parent projective at vertex_map[v]; differentials act by left
   * multiplication with the evaluated entries */
  const ProjComplex& C = res.complex;
  int len = C.num_degrees() - 1;  // resolution length index range 0..len
  auto bundle_words = [&](const std::vector<int>& verts) {
    std::vector<std::pair<int, int>> out;  // (summand, parent word starting at parent vertex)
    for (size_t t = 0; t < verts.size(); ++t) {
      int pv = tr.vertex_map[verts[t]];
      for (int id = 0; id < A.dimension(); ++id)
        if (A.source_of(id) == pv) out.push_back({(int)t, id});
    }
    return out;
  };

  std::vector<RatMat> mats;  // mats[k]: degree -(k+1) component -> degree -k component
  std::vector<int> dims;     // dims[k] = dim of tensored degree -k component
  for (int k = 0; k <= len; ++k) {
    const auto& verts = C.comp(-k);
    dims.push_back((int)bundle_words(verts).size());
  }
  for (int k = 0; k < len; ++k) {
    const auto& src_verts = C.comp(-(k + 1));
    const auto& dst_verts = C.comp(-k);
    auto src_words = bundle_words(src_verts);
    auto dst_words = bundle_words(dst_verts);
    const AlgMatrix& d = C.diffs[C.num_degrees() - 2 - k];  // map from degree -(k+1) to -k
    RatMat m((int)dst_words.size(), (int)src_words.size());
    for (size_t j = 0; j < src_words.size(); ++j) {
      auto [t, wid] = src_words[j];
      for (int i = 0; i < d.rows(); ++i) {
        const AlgElt& entry = d.at(i, t);
        if (entry.zero()) continue;
        AlgElt img = A.mul(eval(entry), A.of_word(wid));
        for (const auto& [rw, c] : img.terms) {
          auto pos = std::lower_bound(dst_words.begin(), dst_words.end(), std::make_pair(i, rw));
          if (pos == dst_words.end() || pos->first != i || pos->second != rw)
            throw consistency_error("tensored differential left its block");
          m.at((int)(pos - dst_words.begin()), (int)j) += c;
        }
      }
    }
    mats.push_back(std::move(m));
  }

  TorProfile out;
  out.complete = !res.truncated;
  int usable = res.truncated ? len - 1 : len;  // homology at k needs the incoming map
  out.computed_up_to = std::max(usable, 0);
  std::vector<int> ranks(mats.size());
  for (size_t k = 0; k < mats.size(); ++k) ranks[k] = mats[k].rank();
  for (int k = 0; k <= usable; ++k) {
    int incoming = (k < (int)mats.size()) ? ranks[k] : 0;
    if (k == 0) {
      out.dims[0] = dims[0] - incoming;  // Tor_0 = Ae (x) eA
    } else {
      int outgoing = ranks[k - 1];
      out.dims[k] = (dims[k] - outgoing) - incoming;  // dim ker - rank incoming
    }
  }
  if (out.complete)
    for (int k = usable + 1; k <= cap; ++k) out.dims[k] = 0;

  out.multiplication_kernel_dim = out.dims.count(0) ? out.dims[0] - ideal_dimension(A, vertex_set) : 0;
  return out;
}

std::map<int, int> ae_cohomology(const AlgebraBasis& A, const std::vector<int>& vertex_set, int cap) {
  TorProfile tp = tor_profile(A, vertex_set, cap);
  std::map<int, int> h;
  h[0] = A.dimension() - ideal_dimension(A, vertex_set);
  h[-1] = tp.multiplication_kernel_dim;
  for (const auto& [k, d] : tp.dims)
    if (k >= 1) h[-k - 1] = d;
  return h;
}

StratifyingResult is_stratifying(const AlgebraBasis& A, const std::vector<int>& vertex_set, int cap) {
  TorProfile tp = tor_profile(A, vertex_set, cap);
  StratifyingResult res;
  res.cap_used = cap;
  if (tp.multiplication_kernel_dim != 0) {
    res.state = StratifyingState::No;
    res.witness_degree = -1;
    return res;
  }
  for (const auto& [k, d] : tp.dims)
    if (k >= 1 && d != 0) {
      res.state = StratifyingState::No;
      res.witness_degree = -k - 1;
      return res;
    }
  res.state = tp.complete ? StratifyingState::Yes : StratifyingState::YesUpToCap;
  return res;
}

}  // namespace siltkit
