#include "siltkit/mutation.hpp"

#include <algorithm>
#include <sstream>

namespace siltkit {

bool GMatrix::unimodular() const { return det_abs() == 1; }

long GMatrix::det_abs() const {
  int n = (int)cols.size();
  if (n == 0) return 0;
  if ((int)cols[0].size() != n) return 0;
  RatMat m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = Rat(cols[j][i]);
  Rat d = m.det();
  Rat ad = abs(d);
  return (long)ad.get_num().get_si();
}

std::string GMatrix::key() const {
  std::ostringstream os;
  for (const auto& c : cols) {
    for (long x : c) os << x << ",";
    os << ";";
  }
  return os.str();
}

GMatrix SiltingNode::g_matrix() const {
  GMatrix g;
  for (const auto& s : summands) g.cols.push_back(s.g_vector());
  return g;
}

std::string SiltingNode::key() const {
  std::ostringstream os;
  os << g_matrix().key() << "|";
  for (const auto& [s, d] : hom_profile) os << s << ":" << d << ",";
  /* shape multiset: minimal representatives are degreewise unique up to
   * isomorphism, so shapes are iso-invariant and separate even shifts */
  std::vector<std::string> shapes;
  for (const auto& s : summands) {
    std::ostringstream sh;
    sh << s.min_deg << "@";
    for (const auto& c : s.comps) {
      std::vector<int> sorted = c;
      std::sort(sorted.begin(), sorted.end());
      for (int v : sorted) sh << v << ".";
      sh << "/";
    }
    shapes.push_back(sh.str());
  }
  std::sort(shapes.begin(), shapes.end());
  os << "|";
  for (const auto& s : shapes) os << s << "#";
  return os.str();
}

ProjComplex SiltingNode::total() const {
  ProjComplex t = ProjComplex::zero(A);
  for (const auto& s : summands) t = ProjComplex::direct_sum(t, s);
  return t;
}

const std::map<int, int>& MutationContext::pair_table(const ProjComplex& X, const ProjComplex& Y) {
  auto k = std::make_pair(X.key(), Y.key());
  auto it = tables.find(k);
  if (it != tables.end()) return it->second;
  return tables.emplace(k, hom_table(X, Y)).first->second;
}

int MutationContext::end_top(const ProjComplex& X) {
  std::string k = X.key();
  auto it = end_tops.find(k);
  if (it != end_tops.end()) return it->second;
  return end_tops.emplace(k, end_top_dim(X)).first->second;
}

namespace {

/* canonical summand order: by g-vector, then literal form */
void sort_summands(std::vector<ProjComplex>& ss) {
  std::stable_sort(ss.begin(), ss.end(), [](const ProjComplex& a, const ProjComplex& b) {
    auto ga = a.g_vector(), gb = b.g_vector();
    if (ga != gb) return ga < gb;
    return a.key() < b.key();
  });
}

std::map<int, int> node_profile(const std::vector<ProjComplex>& ss, MutationContext& ctx) {
  std::map<int, int> pr;
  for (const auto& x : ss)
    for (const auto& y : ss)
      for (const auto& [s, d] : ctx.pair_table(x, y)) pr[s] += d;
  return pr;
}



/* linear combination of hom-space basis maps with the given coordinates */
ChainMap combine(const HomSpace& H, const ProjComplex& X, const ProjComplex& Y, const std::vector<Rat>& coords) {
  ChainMap r = ChainMap::zero(X, Y, 0);
  bool first = true;
  for (int t = 0; t < H.dim; ++t) {
    if (is_zero(coords[t])) continue;
    if (first) {
      r = add_maps(H.basis[t], H.basis[t], coords[t], 0);
      first = false;
    } else {
      r = add_maps(r, H.basis[t], 1, coords[t]);
    }
  }
  return r;
}

}  // namespace

void certify_node(SiltingNode& node, MutationContext& ctx) {
  node.hom_profile = node_profile(node.summands, ctx);
  for (const auto& [s, d] : node.hom_profile)
    if (s > 0 && d != 0) throw approximation_failure("mutation result is not presilting");
  for (const auto& s : node.summands)
    if (ctx.end_top(s) > 1) node.caveat = true;
  node.certified = true;
}

SiltingNode lambda_node(BasisPtr A) {
  SiltingNode n;
  n.A = A;
  for (int v = 0; v < A->num_vertices(); ++v) n.summands.push_back(ProjComplex::stalk(A, {v}, 0));
  sort_summands(n.summands);
  MutationContext ctx;
  certify_node(n, ctx);
  return n;
}

namespace {

/* End(X) as a table of structure constants in a hom-space basis */
struct EndAlgebra {
  HomSpace H;
  std::vector<RatMat> left_mult;  // L_{b_s}

  static EndAlgebra of(const ProjComplex& X) {
    EndAlgebra E;
    E.H = hom_space(X, X, 0);
    int d = E.H.dim;
    for (int s = 0; s < d; ++s) {
      RatMat L(d, d);
      for (int t = 0; t < d; ++t) {
        ChainMap prod = compose(E.H.basis[s], E.H.basis[t]);
        auto coords = hom_coordinates(E.H, prod);
        for (int r = 0; r < d; ++r) L.at(r, t) = coords[r];
      }
      E.left_mult.push_back(std::move(L));
    }
    return E;
  }

  /* radical of the trace form tr(L_x L_y); valid in characteristic zero */
  std::vector<std::vector<Rat>> radical() const {
    int d = H.dim;
    RatMat form(d, d);
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) {
        RatMat prod = left_mult[s] * left_mult[t];
        Rat tr = 0;
        for (int i = 0; i < d; ++i) tr += prod.at(i, i);
        form.at(s, t) = tr;
      }
    return form.kernel();
  }
};

}  // namespace

int end_top_dim(const ProjComplex& X) {
  if (X.is_zero_object()) return 0;
  EndAlgebra E = EndAlgebra::of(X);
  return E.H.dim - (int)E.radical().size();
}

bool complexes_isomorphic(const ProjComplex& X, const ProjComplex& Y) {
  if (X.is_zero_object() && Y.is_zero_object()) return true;
  if (X.g_vector() != Y.g_vector()) return false;
  if (X.key() == Y.key()) return true;
  HomSpace F = hom_space(X, Y, 0);
  if (F.dim == 0) return false;
  HomSpace G = hom_space(Y, X, 0);
  if (G.dim == 0) return false;
  EndAlgebra EX = EndAlgebra::of(X);
  /* with local endomorphism rings some basis pair composes to a unit iff
   * the complexes are isomorphic */
  for (int s = 0; s < F.dim; ++s)
    for (int t = 0; t < G.dim; ++t) {
      ChainMap gf = compose(G.basis[t], F.basis[s]);
      auto coords = hom_coordinates(EX.H, gf);
      RatMat L(EX.H.dim, EX.H.dim);
      for (int j = 0; j < EX.H.dim; ++j)
        for (int i = 0; i < EX.H.dim; ++i) {
          Rat acc = 0;
          for (int r = 0; r < EX.H.dim; ++r)
            if (!is_zero(coords[r])) acc += coords[r] * EX.left_mult[r].at(i, j);
          L.at(i, j) = acc;
        }
      if (!is_zero(L.det())) return true;
    }
  return false;
}

bool nodes_isomorphic(const SiltingNode& T, const SiltingNode& U) {
  if (T.summands.size() != U.summands.size()) return false;
  if (T.hom_profile != U.hom_profile) return false;
  std::vector<char> used(U.summands.size(), 0);
  for (const auto& x : T.summands) {
    bool matched = false;
    for (size_t j = 0; j < U.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      if (complexes_isomorphic(x, U.summands[j])) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

struct Approximation {
  ProjComplex E;
  ChainMap map;  // X -> E for left, E -> X for right
};

/* representatives of Hom(X, N_j) (left) or Hom(N_j, X) (right) surviving
 * modulo composites through radical maps of add(N) */
std::vector<std::vector<ChainMap>> approximation_generators(const ProjComplex& X,
                                                            const std::vector<ProjComplex>& N, bool left) {
  std::vector<HomSpace> homs;
  for (const auto& Y : N) homs.push_back(left ? hom_space(X, Y, 0) : hom_space(Y, X, 0));

  std::vector<std::vector<ChainMap>> chosen(N.size());
  for (size_t j = 0; j < N.size(); ++j) {
    if (homs[j].dim == 0) continue;
    RowSpace span(homs[j].dim);
    for (size_t i = 0; i < N.size(); ++i) {
      if (homs[i].dim == 0) continue;
      std::vector<ChainMap> rad_maps;  // radical maps N_i -> N_j (left) or N_j -> N_i (right)
      const ProjComplex& from = left ? N[i] : N[j];
      const ProjComplex& to = left ? N[j] : N[i];
      if (i != j) {
        rad_maps = hom_space(from, to, 0).basis;  // nonisomorphic summands: all radical
      } else {
        EndAlgebra E = EndAlgebra::of(N[j]);
        for (const auto& v : E.radical()) rad_maps.push_back(combine(E.H, N[j], N[j], v));
      }
      for (const auto& r : rad_maps)
        for (const auto& f : homs[i].basis) {
          ChainMap comp = left ? compose(r, f) : compose(f, r);
          span.insert(hom_coordinates(homs[j], comp));
        }
    }
    for (int t = 0; t < homs[j].dim; ++t) {
      std::vector<Rat> e(homs[j].dim, Rat(0));
      e[t] = 1;
      if (span.insert(e)) chosen[j].push_back(homs[j].basis[t]);
    }
  }
  return chosen;
}

Approximation left_approximation(const ProjComplex& X, const std::vector<ProjComplex>& N) {
  auto chosen = approximation_generators(X, N, true);
  Approximation ap;
  ap.E = ProjComplex::zero(X.A);
  std::vector<std::pair<int, int>> layout;
  for (size_t j = 0; j < N.size(); ++j)
    for (size_t c = 0; c < chosen[j].size(); ++c) {
      ap.E = ProjComplex::direct_sum(ap.E, N[j]);
      layout.push_back({(int)j, (int)c});
    }

  ChainMap f = ChainMap::zero(X, ap.E, 0);
  for (int n = X.min_deg; n <= X.max_deg(); ++n) {
    const auto& cols = X.comp(n);
    const auto& rows = ap.E.comp(n);
    if (cols.empty() || rows.empty()) continue;
    AlgMatrix m(rows, cols);
    int roff = 0;
    for (auto [j, c] : layout) {
      const AlgMatrix* pm = chosen[j][c].mat(n);
      int h = (int)N[j].comp(n).size();
      if (pm)
        for (int i = 0; i < pm->rows(); ++i)
          for (int jj = 0; jj < pm->cols(); ++jj) m.at(roff + i, jj) = pm->at(i, jj);
      roff += h;
    }
    if (!m.is_zero()) f.mats.emplace(n, std::move(m));
  }
  ap.map = std::move(f);
  return ap;
}

Approximation right_approximation(const ProjComplex& X, const std::vector<ProjComplex>& N) {
  auto chosen = approximation_generators(X, N, false);
  Approximation ap;
  ap.E = ProjComplex::zero(X.A);
  std::vector<std::pair<int, int>> layout;
  for (size_t j = 0; j < N.size(); ++j)
    for (size_t c = 0; c < chosen[j].size(); ++c) {
      ap.E = ProjComplex::direct_sum(ap.E, N[j]);
      layout.push_back({(int)j, (int)c});
    }

  ChainMap g = ChainMap::zero(ap.E, X, 0);
  for (int n = ap.E.min_deg; n <= ap.E.max_deg(); ++n) {
    const auto& cols = ap.E.comp(n);
    const auto& rows = X.comp(n);
    if (cols.empty() || rows.empty()) continue;
    AlgMatrix m(rows, cols);
    int coff = 0;
    for (auto [j, c] : layout) {
      const AlgMatrix* pm = chosen[j][c].mat(n);
      int wdt = (int)N[j].comp(n).size();
      if (pm)
        for (int i = 0; i < pm->rows(); ++i)
          for (int jj = 0; jj < pm->cols(); ++jj) m.at(i, coff + jj) = pm->at(i, jj);
      coff += wdt;
    }
    if (!m.is_zero()) g.mats.emplace(n, std::move(m));
  }
  ap.map = std::move(g);
  return ap;
}

}  // namespace

SiltingNode left_mutation_uncertified(const SiltingNode& T, int k) {
  if (!T.certified) throw not_certified_silting("left mutation requires a certified node");
  if (k < 0 || k >= (int)T.summands.size()) throw size_mismatch("summand index out of range");
  std::vector<ProjComplex> N;
  for (int j = 0; j < (int)T.summands.size(); ++j)
    if (j != k) N.push_back(T.summands[j]);

  Approximation ap = left_approximation(T.summands[k], N);
  ProjComplex Xp = minimize(cone(ap.map));
  if (!Xp.check_d2()) throw approximation_failure("cone differential does not square to zero");
  if (Xp.is_zero_object()) throw approximation_failure("left mutation produced a zero exchange summand");

  SiltingNode out;
  out.A = T.A;
  out.caveat = T.caveat;
  out.summands = N;
  out.summands.push_back(Xp);
  sort_summands(out.summands);
  return out;
}

SiltingNode left_mutation(const SiltingNode& T, int k, MutationContext& ctx) {
  SiltingNode out = left_mutation_uncertified(T, k);
  certify_node(out, ctx);
  return out;
}

SiltingNode right_mutation(const SiltingNode& T, int k, MutationContext& ctx) {
  if (!T.certified) throw not_certified_silting("right mutation requires a certified node");
  if (k < 0 || k >= (int)T.summands.size()) throw size_mismatch("summand index out of range");
  std::vector<ProjComplex> N;
  for (int j = 0; j < (int)T.summands.size(); ++j)
    if (j != k) N.push_back(T.summands[j]);

  Approximation ap = right_approximation(T.summands[k], N);
  ProjComplex Xp = minimize(cone(ap.map)).shifted(-1);
  if (!Xp.check_d2()) throw approximation_failure("co-cone differential does not square to zero");
  if (Xp.is_zero_object()) throw approximation_failure("right mutation produced a zero exchange summand");

  SiltingNode out;
  out.A = T.A;
  out.caveat = T.caveat;
  out.summands = N;
  out.summands.push_back(Xp);
  sort_summands(out.summands);
  certify_node(out, ctx);
  return out;
}

EndoReport endo_algebra(const std::vector<ProjComplex>& summands) {
  if (summands.empty()) throw input_error("empty summand list");
  for (size_t i = 0; i < summands.size(); ++i)
    for (size_t j = i + 1; j < summands.size(); ++j)
      if (complexes_isomorphic(summands[i], summands[j]))
        throw not_basic("summands " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic");

  int m = (int)summands.size();
  EndoReport rep;
  rep.vertices = m;
  rep.arrow_counts.assign(m, std::vector<int>(m, 0));

  /* block (u, v) of the endomorphism algebra is Hom(X_v, X_u) */
  std::vector<std::vector<HomSpace>> blocks(m, std::vector<HomSpace>(m));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      blocks[u][v] = hom_space(summands[v], summands[u], 0);
      rep.total_dim += blocks[u][v].dim;
    }

  /* radical: all off-diagonal blocks plus the diagonal trace radicals */
  std::vector<std::vector<std::vector<std::vector<Rat>>>> rad(m);
  for (int u = 0; u < m; ++u) {
    rad[u].resize(m);
    for (int v = 0; v < m; ++v) {
      if (u == v) continue;
      for (int t = 0; t < blocks[u][v].dim; ++t) {
        std::vector<Rat> e(blocks[u][v].dim, Rat(0));
        e[t] = 1;
        rad[u][v].push_back(std::move(e));
      }
    }
    EndAlgebra E = EndAlgebra::of(summands[u]);
    for (auto& v : E.radical()) rad[u][u].push_back(std::move(v));
  }

  for (int u = 0; u < m; ++u)
    for (int w = 0; w < m; ++w) {
      if (blocks[u][w].dim == 0) {
        if (!rad[u][w].empty()) throw consistency_error("radical layer wider than its block");
        continue;
      }
      RowSpace r2(blocks[u][w].dim);
      for (int v = 0; v < m; ++v) {
        for (const auto& xc : rad[u][v])
          for (const auto& yc : rad[v][w]) {
            ChainMap x = combine(blocks[u][v], summands[v], summands[u], xc);
            ChainMap y = combine(blocks[v][w], summands[w], summands[v], yc);
            if (x.mats.empty() || y.mats.empty()) continue;
            ChainMap prod = compose(x, y);
            r2.insert(hom_coordinates(blocks[u][w], prod));
          }
      }
      rep.arrow_counts[u][w] = (int)rad[u][w].size() - r2.dim();
      if (r2.dim() > 0) rep.rad_square_zero = false;
    }
  return rep;
}

GMatrix g_matrix_of(const std::vector<ProjComplex>& summands) {
  if (summands.empty()) throw size_mismatch("empty summand list has no fingerprint");
  if ((int)summands.size() != summands[0].A->num_vertices())
    throw size_mismatch("expected " + std::to_string(summands[0].A->num_vertices()) + " summands, got " +
                        std::to_string(summands.size()));
  GMatrix g;
  for (const auto& s : summands) g.cols.push_back(s.g_vector());
  return g;
}

ExternalAssessment assess_external(const std::vector<ProjComplex>& summands) {
  if (summands.empty()) throw input_error("empty summand list");
  ExternalAssessment a;
  ProjComplex total = ProjComplex::zero(summands[0].A);
  for (const auto& s : summands) total = ProjComplex::direct_sum(total, s);
  a.profile = presilting_profile(total);
  GMatrix g;
  for (const auto& s : summands) g.cols.push_back(s.g_vector());
  a.unimodular_g = (int)g.cols.size() == (int)g.cols[0].size() && g.unimodular();
  a.maybe_silting = a.profile.presilting && a.unimodular_g;
  return a;
}

}  // namespace siltkit
