#include "siltkit/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace siltkit {

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < (int)vertex_names.size(); ++i)
    if (vertex_names[i] == name) return i;
  throw unknown_identifier("unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < (int)arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw unknown_identifier("unknown arrow '" + name + "'");
}

void Quiver::add_vertex(const std::string& name) {
  for (const auto& v : vertex_names)
    if (v == name) throw input_error("duplicate vertex id '" + name + "'");
  vertex_names.push_back(name);
}

void Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& tgt, int degree) {
  add_arrow_idx(name, vertex_index(src), vertex_index(tgt), degree);
}

void Quiver::add_arrow_idx(const std::string& name, int src, int tgt, int degree) {
  for (const auto& a : arrows)
    if (a.name == name) throw input_error("duplicate arrow id '" + name + "'");
  if (src < 0 || src >= num_vertices() || tgt < 0 || tgt >= num_vertices())
    throw input_error("arrow '" + name + "' endpoint is not a declared vertex");
  arrows.push_back(Arrow{name, src, tgt, degree});
}

bool Quiver::has_multiple_arrows() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows)
    if (!seen.insert({a.source, a.target}).second) return true;
  return false;
}

bool Quiver::is_acyclic() const {
  int n = num_vertices();
  std::vector<int> indeg(n, 0);
  for (const auto& a : arrows) indeg[a.target]++;
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push(v);
  int removed = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++removed;
    for (const auto& a : arrows)
      if (a.source == v && --indeg[a.target] == 0) q.push(a.target);
  }
  return removed == n;
}

bool Quiver::connected_underlying() const {
  int n = num_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : arrows) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == n;
}

void Quiver::validate() const {
  std::set<std::string> vn(vertex_names.begin(), vertex_names.end());
  if ((int)vn.size() != num_vertices()) throw input_error("vertex ids are not unique");
  std::set<std::string> an;
  for (const auto& a : arrows) {
    if (!an.insert(a.name).second) throw input_error("arrow ids are not unique");
    if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices())
      throw input_error("arrow endpoint out of range");
  }
}

void LinComb::add_term(const PathWord& w, const Rat& c) {
  if (is_zero(c)) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  for (const auto& [w, c] : o.terms) add_term(w, -c);
  return *this;
}

LinComb LinComb::operator*(const Rat& c) const {
  LinComb r;
  if (is_zero(c)) return r;
  for (const auto& [w, k] : terms) r.terms.emplace(w, k * c);
  return r;
}

bool LinComb::parallel() const {
  if (terms.empty()) return true;
  int s = terms.begin()->first.source, t = terms.begin()->first.target;
  for (const auto& [w, c] : terms)
    if (w.source != s || w.target != t) return false;
  return true;
}

LinComb word_comb(const PathWord& w, const Rat& c) {
  LinComb r;
  r.add_term(w, c);
  return r;
}

PathWord make_path(const Quiver& q, const std::vector<int>& arrow_seq) {
  if (arrow_seq.empty()) throw input_error("empty arrow sequence has no endpoints; use a trivial path");
  PathWord w;
  w.source = q.arrows[arrow_seq[0]].source;
  for (size_t k = 0; k + 1 < arrow_seq.size(); ++k)
    if (q.arrows[arrow_seq[k]].target != q.arrows[arrow_seq[k + 1]].source)
      throw input_error("arrows do not compose: '" + q.arrows[arrow_seq[k]].name + "' then '" +
                        q.arrows[arrow_seq[k + 1]].name + "'");
  w.target = q.arrows[arrow_seq.back()].target;
  w.arrows = arrow_seq;
  return w;
}

void AlgebraPresentation::check_admissible() const {
  quiver.validate();
  for (const auto& r : relations) {
    if (r.zero()) throw non_admissible_relation("zero relation in presentation '" + name + "'");
    if (!r.parallel()) throw non_parallel_relation("relation terms are not parallel in '" + name + "'");
    for (const auto& [w, c] : r.terms)
      if (w.length() < 2)
        throw non_admissible_relation("relation contains a path of length < 2 in '" + name + "'");
  }
}

GradabilityResult is_gradable(const Quiver& q) {
  GradabilityResult res;
  int n = q.num_vertices();
  // potential per vertex; arrow contributes +1 from source to target
  std::vector<long> pot(n, 0);
  std::vector<char> seen(n, 0);
  // parent info to rebuild witness walks: (vertex, arrow, direction)
  std::vector<int> par_vertex(n, -1), par_arrow(n, -1), par_dir(n, 0);

  auto tree_walk_to_root = [&](int v) {
    // walk from v up to its component root; returns list of (arrow, dir) v -> root
    std::vector<std::pair<int, int>> walk;
    while (par_vertex[v] != -1) {
      walk.push_back({par_arrow[v], -par_dir[v]});  // reversed edge: v back to parent
      v = par_vertex[v];
    }
    return walk;
  };

  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int ai = 0; ai < q.num_arrows(); ++ai) {
        const Arrow& a = q.arrows[ai];
        for (int dir : {+1, -1}) {
          int from = dir > 0 ? a.source : a.target;
          int to = dir > 0 ? a.target : a.source;
          if (from != v) continue;
          if (!seen[to]) {
            seen[to] = 1;
            pot[to] = pot[v] + dir;
            par_vertex[to] = v;
            par_arrow[to] = ai;
            par_dir[to] = dir;
            bfs.push(to);
          } else if (pot[to] != pot[v] + dir) {
            // closed walk: root->v (tree), edge v->to, to->root (tree)
            res.gradable = false;
            auto up_v = tree_walk_to_root(v);
            std::reverse(up_v.begin(), up_v.end());
            for (auto& [arr, d] : up_v) d = -d;  // root -> v
            res.witness_walk = up_v;
            res.witness_walk.push_back({ai, dir});
            auto up_to = tree_walk_to_root(to);  // to -> root
            res.witness_walk.insert(res.witness_walk.end(), up_to.begin(), up_to.end());
            res.witness_degree = 0;
            for (auto& [arr, d] : res.witness_walk) res.witness_degree += d;
            return res;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace siltkit
