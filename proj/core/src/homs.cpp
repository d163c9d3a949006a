#include "siltkit/homs.hpp"

#include <algorithm>

namespace siltkit {

namespace {

/* coordinates of the degree-k component of the Hom complex */
struct HomIndex {
  struct Entry {
    int n;     // source degree in X
    int i, j;  // row in Y^{n+k}, column in X^n
    int word;  // basis word of block(row vertex, col vertex)
  };
  std::vector<Entry> entries;
  std::map<std::tuple<int, int, int>, int> block_offset;

  static HomIndex build(const AlgebraBasis& A, const ProjComplex& X, const ProjComplex& Y, int k) {
    HomIndex ix;
    for (int n = X.min_deg; n <= X.max_deg(); ++n) {
      const auto& xs = X.comp(n);
      const auto& ys = Y.comp(n + k);
      if (xs.empty() || ys.empty()) continue;
      for (int i = 0; i < (int)ys.size(); ++i)
        for (int j = 0; j < (int)xs.size(); ++j) {
          const auto& blk = A.block(ys[i], xs[j]);
          if (blk.empty()) continue;
          ix.block_offset[{n, i, j}] = (int)ix.entries.size();
          for (int w : blk) ix.entries.push_back({n, i, j, w});
        }
    }
    return ix;
  }

  int size() const { return (int)entries.size(); }

  int find(int n, int i, int j, int word) const {
    auto it = block_offset.find({n, i, j});
    if (it == block_offset.end()) return -1;
    int pos = it->second;
    while (pos < (int)entries.size() && entries[pos].n == n && entries[pos].i == i && entries[pos].j == j) {
      if (entries[pos].word == word) return pos;
      ++pos;
    }
    return -1;
  }
};

/* Scatter the coordinates of delta_k(e_col) into `sink(row, coeff)`, where
 * rows live in the degree-(k+1) index. */
template <typename Sink>
void delta_column(const AlgebraBasis& A, const ProjComplex& X, const ProjComplex& Y, int k,
                  const HomIndex::Entry& e, const HomIndex& dst, Sink&& sink) {
  long sign = (k % 2 == 0) ? 1 : -1;
  const AlgElt w = A.of_word(e.word);
  int ky = e.n + k - Y.min_deg;
  if (ky >= 0 && ky < (int)Y.diffs.size()) {
    const AlgMatrix& dy = Y.diffs[ky];
    for (int r = 0; r < dy.rows(); ++r) {
      const AlgElt& d = dy.at(r, e.i);
      if (d.zero()) continue;
      AlgElt prod = A.mul(d, w);
      for (const auto& [pw, c] : prod.terms) {
        int row = dst.find(e.n, r, e.j, pw);
        if (row < 0) throw consistency_error("hom complex product left its block");
        sink(row, c);
      }
    }
  }
  int kx = e.n - 1 - X.min_deg;
  if (kx >= 0 && kx < (int)X.diffs.size()) {
    const AlgMatrix& dx = X.diffs[kx];
    for (int c2 = 0; c2 < dx.cols(); ++c2) {
      const AlgElt& d = dx.at(e.j, c2);
      if (d.zero()) continue;
      AlgElt prod = A.mul(w, d);
      for (const auto& [pw, c] : prod.terms) {
        int row = dst.find(e.n - 1, e.i, c2, pw);
        if (row < 0) throw consistency_error("hom complex product left its block");
        sink(row, -Rat(sign) * c);
      }
    }
  }
}

SparseMat build_delta(const AlgebraBasis& A, const ProjComplex& X, const ProjComplex& Y, int k,
                      const HomIndex& src, const HomIndex& dst) {
  SparseMat m(dst.size(), src.size());
  for (int col = 0; col < src.size(); ++col)
    delta_column(A, X, Y, k, src.entries[col], dst, [&](int row, const Rat& c) { m.add(row, col, c); });
  for (int r = 0; r < m.rows(); ++r) m.finalize_row(r);
  return m;
}

ChainMap map_from_vector(const AlgebraBasis& A, const ProjComplex& X, const ProjComplex& Y, int shift,
                         const HomIndex& ix, const std::vector<Rat>& v) {
  (void)A;
  ChainMap f;
  f.X = X;
  f.Y = Y;
  f.shift = shift;
  for (int t = 0; t < ix.size(); ++t) {
    if (is_zero(v[t])) continue;
    const auto& e = ix.entries[t];
    auto it = f.mats.find(e.n);
    if (it == f.mats.end()) it = f.mats.emplace(e.n, AlgMatrix(Y.comp(e.n + shift), X.comp(e.n))).first;
    it->second.at(e.i, e.j).add(e.word, v[t]);
  }
  return f;
}

std::vector<Rat> vector_from_map(const HomIndex& ix, const ChainMap& f) {
  std::vector<Rat> v(ix.size(), Rat(0));
  for (int t = 0; t < ix.size(); ++t) {
    const auto& e = ix.entries[t];
    const AlgMatrix* m = f.mat(e.n);
    if (!m) continue;
    for (const auto& [w, c] : m->at(e.i, e.j).terms)
      if (w == e.word) v[t] = c;
  }
  return v;
}

}  // namespace

std::pair<int, int> hom_window(const ProjComplex& X, const ProjComplex& Y) {
  if (X.is_zero_object() || Y.is_zero_object()) return {1, 0};  // empty
  return {Y.min_deg - X.max_deg(), Y.max_deg() - X.min_deg};
}

int hom_dim(const ProjComplex& X, const ProjComplex& Y, int shift) {
  if (X.is_zero_object() || Y.is_zero_object()) return 0;
  const AlgebraBasis& A = *X.A;
  HomIndex cur = HomIndex::build(A, X, Y, shift);
  if (cur.size() == 0) return 0;
  HomIndex up = HomIndex::build(A, X, Y, shift + 1);
  HomIndex down = HomIndex::build(A, X, Y, shift - 1);
  int rank_out = up.size() == 0 ? 0 : build_delta(A, X, Y, shift, cur, up).rank();
  int rank_in = down.size() == 0 ? 0 : build_delta(A, X, Y, shift - 1, down, cur).rank();
  return cur.size() - rank_out - rank_in;
}

HomSpace hom_space(const ProjComplex& X, const ProjComplex& Y, int shift) {
  HomSpace H;
  H.gram = RatMat(0, 0);
  if (X.is_zero_object() || Y.is_zero_object()) return H;
  const AlgebraBasis& A = *X.A;
  HomIndex cur = HomIndex::build(A, X, Y, shift);
  if (cur.size() == 0) return H;
  HomIndex up = HomIndex::build(A, X, Y, shift + 1);
  HomIndex down = HomIndex::build(A, X, Y, shift - 1);

  /* cocycle equations stacked over orthogonality to every coboundary
   * generator; the kernel consists of the harmonic representatives */
  SparseMat sys(up.size() + down.size(), cur.size());
  for (int col = 0; col < cur.size(); ++col)
    delta_column(A, X, Y, shift, cur.entries[col], up, [&](int row, const Rat& c) { sys.add(row, col, c); });
  for (int t = 0; t < down.size(); ++t)
    delta_column(A, X, Y, shift - 1, down.entries[t], cur,
                 [&](int col, const Rat& c) { sys.add(up.size() + t, col, c); });
  for (int r = 0; r < sys.rows(); ++r) sys.finalize_row(r);

  auto kernel = sys.kernel_basis();
  H.dim = (int)kernel.size();
  for (const auto& v : kernel) H.basis.push_back(map_from_vector(A, X, Y, shift, cur, v));
  H.gram = RatMat(H.dim, H.dim);
  for (int s = 0; s < H.dim; ++s)
    for (int t = 0; t <= s; ++t) {
      Rat ip = 0;
      for (int c = 0; c < cur.size(); ++c)
        if (!is_zero(kernel[s][c]) && !is_zero(kernel[t][c])) ip += kernel[s][c] * kernel[t][c];
      H.gram.at(s, t) = ip;
      H.gram.at(t, s) = ip;
    }
  return H;
}

std::vector<Rat> hom_coordinates(const HomSpace& H, const ChainMap& f) {
  if (H.dim == 0) return {};
  const AlgebraBasis& A = *f.X.A;
  (void)A;
  HomIndex cur = HomIndex::build(*f.X.A, f.X, f.Y, f.shift);
  std::vector<Rat> v = vector_from_map(cur, f);
  std::vector<Rat> rhs(H.dim, Rat(0));
  for (int t = 0; t < H.dim; ++t) {
    std::vector<Rat> bt = vector_from_map(cur, H.basis[t]);
    Rat ip = 0;
    for (int c = 0; c < cur.size(); ++c)
      if (!is_zero(v[c]) && !is_zero(bt[c])) ip += v[c] * bt[c];
    rhs[t] = ip;
  }
  auto sol = H.gram.solve(rhs);
  if (!sol) throw consistency_error("gram system is singular");
  return *sol;
}

std::map<int, int> hom_table(const ProjComplex& X, const ProjComplex& Y) {
  std::map<int, int> t;
  auto [lo, hi] = hom_window(X, Y);
  if (lo > hi) return t;
  const AlgebraBasis& A = *X.A;
  /* one index and one rank per degree across the window */
  std::map<int, HomIndex> idx;
  for (int k = lo - 1; k <= hi + 1; ++k) idx.emplace(k, HomIndex::build(A, X, Y, k));
  std::map<int, int> rank;
  for (int k = lo - 1; k <= hi; ++k) {
    if (idx[k].size() == 0 || idx[k + 1].size() == 0) {
      rank[k] = 0;
      continue;
    }
    rank[k] = build_delta(A, X, Y, k, idx[k], idx[k + 1]).rank();
  }
  for (int s = lo; s <= hi; ++s) {
    int d = idx[s].size() - rank[s] - rank[s - 1];
    if (d) t[s] = d;
  }
  return t;
}

PresiltingProfile presilting_profile(const ProjComplex& T) {
  PresiltingProfile p;
  p.table = hom_table(T, T);
  p.presilting = true;
  p.pretilting = true;
  for (const auto& [s, d] : p.table) {
    if (s > 0 && d) p.presilting = false;
    if (s != 0 && d) p.pretilting = false;
  }
  return p;
}

bool silting_leq(const ProjComplex& T, const ProjComplex& U) {
  auto [lo, hi] = hom_window(T, U);
  for (int s = std::max(1, lo); s <= hi; ++s)
    if (hom_dim(T, U, s) != 0) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  const AlgebraBasis& A = *f.X.A;
  ChainMap h;
  h.X = f.X;
  h.Y = g.Y;
  h.shift = f.shift + g.shift;
  for (const auto& [n, fm] : f.mats) {
    const AlgMatrix* gm = g.mat(n + f.shift);
    if (!gm) continue;
    AlgMatrix prod = gm->compose(A, fm);
    if (!prod.is_zero()) h.mats.emplace(n, std::move(prod));
  }
  return h;
}

ChainMap add_maps(const ChainMap& f, const ChainMap& g, const Rat& cf, const Rat& cg) {
  ChainMap h;
  h.X = f.X;
  h.Y = f.Y;
  h.shift = f.shift;
  for (int n = f.X.min_deg; n <= f.X.max_deg(); ++n) {
    const AlgMatrix* fm = f.mat(n);
    const AlgMatrix* gm = g.mat(n);
    if (!fm && !gm) continue;
    const auto& rows = f.Y.comp(n + f.shift);
    const auto& cols = f.X.comp(n);
    if (rows.empty() || cols.empty()) continue;
    AlgMatrix m(rows, cols);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        AlgElt x;
        if (fm) x += fm->at(i, j) * cf;
        if (gm) x += gm->at(i, j) * cg;
        m.at(i, j) = std::move(x);
      }
    if (!m.is_zero()) h.mats.emplace(n, std::move(m));
  }
  return h;
}

bool homotopic(const ProjComplex& X, const ProjComplex& Y, int shift, const ChainMap& f, const ChainMap& g) {
  HomSpace H = hom_space(X, Y, shift);
  ChainMap diff = add_maps(f, g, 1, -1);
  if (H.dim == 0) {
    /* the whole hom space is null-homotopic */
    return true;
  }
  auto coords = hom_coordinates(H, diff);
  for (const auto& c : coords)
    if (!is_zero(c)) return false;
  return true;
}

}  // namespace siltkit
