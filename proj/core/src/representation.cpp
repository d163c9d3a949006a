#include "siltkit/representation.hpp"

namespace siltkit {

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

RatMat Representation::word_action(const PathWord& w) const {
  RatMat m = RatMat::identity(dims[w.source]);
  for (int ai : w.arrows) m = action[ai] * m;
  return m;
}

RatMat Representation::elt_action(int from_vertex, int to_vertex, const AlgElt& x) const {
  RatMat m(dims[to_vertex], dims[from_vertex]);
  for (const auto& [wid, c] : x.terms) {
    const PathWord& w = A->word(wid);
    if (w.source != from_vertex || w.target != to_vertex)
      throw consistency_error("element does not live in the requested block");
    RatMat wa = word_action(w);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) += c * wa.at(i, j);
  }
  return m;
}

bool Representation::valid() const {
  for (const auto& rel : A->presentation().relations) {
    if (rel.zero()) continue;
    int s = rel.terms.begin()->first.source, t = rel.terms.begin()->first.target;
    RatMat acc(dims[t], dims[s]);
    for (const auto& [w, c] : rel.terms) {
      RatMat wa = word_action(w);
      for (int i = 0; i < acc.rows(); ++i)
        for (int j = 0; j < acc.cols(); ++j) acc.at(i, j) += c * wa.at(i, j);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

Representation Representation::zero(BasisPtr A) {
  Representation m;
  m.dims.assign(A->num_vertices(), 0);
  for (const auto& a : A->quiver().arrows) m.action.push_back(RatMat(0, 0));
  m.A = std::move(A);
  return m;
}

Representation Representation::simple(BasisPtr A, int v) {
  Representation m = zero(A);
  m.dims[v] = 1;
  const Quiver& q = A->quiver();
  for (int ai = 0; ai < q.num_arrows(); ++ai)
    m.action[ai] = RatMat(m.dims[q.arrows[ai].target], m.dims[q.arrows[ai].source]);
  return m;
}

Representation Representation::projective(BasisPtr A, int v) { return free_bundle(A, {v}); }

Representation Representation::free_bundle(BasisPtr A, const std::vector<int>& verts) {
  BundleIndex ix(A, verts);
  Representation m;
  m.A = A;
  int n = A->num_vertices();
  m.dims.resize(n);
  for (int w = 0; w < n; ++w) m.dims[w] = ix.dim_at(w);
  const Quiver& q = A->quiver();
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    int s = q.arrows[ai].source, t = q.arrows[ai].target;
    RatMat act(m.dims[t], m.dims[s]);
    AlgElt ae = A->arrow_elt(ai);
    for (size_t ti = 0; ti < verts.size(); ++ti) {
      const auto& blk = A->block(verts[ti], s);
      for (size_t p = 0; p < blk.size(); ++p) {
        AlgElt img = A->mul(A->of_word(blk[p]), ae);
        for (const auto& [wid, c] : img.terms) {
          const auto& tblk = A->block(verts[ti], t);
          auto pos = std::lower_bound(tblk.begin(), tblk.end(), wid);
          if (pos == tblk.end() || *pos != wid) throw consistency_error("free module action left the block");
          act.at(ix.index(t, (int)ti, (int)(pos - tblk.begin())), ix.index(s, (int)ti, (int)p)) = c;
        }
      }
    }
    m.action.push_back(std::move(act));
  }
  return m;
}

BundleIndex::BundleIndex(BasisPtr A_, std::vector<int> verts_) : A(std::move(A_)), verts(std::move(verts_)) {
  int n = A->num_vertices();
  offsets.assign(n, std::vector<int>(verts.size() + 1, 0));
  for (int w = 0; w < n; ++w)
    for (size_t t = 0; t < verts.size(); ++t)
      offsets[w][t + 1] = offsets[w][t] + A->block_dim(verts[t], w);
}

int BundleIndex::dim_at(int w) const { return offsets[w].back(); }

AlgElt BundleIndex::component(int w, int t, const std::vector<Rat>& vec) const {
  AlgElt x;
  const auto& blk = A->block(verts[t], w);
  for (size_t p = 0; p < blk.size(); ++p) x.add(blk[p], vec[offsets[w][t] + p]);
  return x;
}

bool ModuleMap::is_module_map() const {
  const Quiver& q = src.A->quiver();
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    int s = q.arrows[ai].source, t = q.arrows[ai].target;
    RatMat lhs = mats[t] * src.action[ai];
    RatMat rhs = dst.action[ai] * mats[s];
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<RowSpace> radical_spaces(const Representation& m) {
  int n = (int)m.dims.size();
  std::vector<RowSpace> rad;
  rad.reserve(n);
  for (int w = 0; w < n; ++w) rad.emplace_back(m.dims[w]);
  const Quiver& q = m.A->quiver();
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    int t = q.arrows[ai].target;
    for (int col = 0; col < m.action[ai].cols(); ++col) {
      std::vector<Rat> v(m.dims[t]);
      for (int row = 0; row < m.dims[t]; ++row) v[row] = m.action[ai].at(row, col);
      rad[t].insert(std::move(v));
    }
  }
  return rad;
}

std::vector<int> top_dims(const Representation& m) {
  auto rad = radical_spaces(m);
  std::vector<int> t(m.dims.size());
  for (size_t w = 0; w < m.dims.size(); ++w) t[w] = m.dims[w] - rad[w].dim();
  return t;
}

std::vector<int> socle_dims(const Representation& m) {
  const Quiver& q = m.A->quiver();
  std::vector<int> s(m.dims.size());
  for (size_t w = 0; w < m.dims.size(); ++w) {
    /* intersection of kernels of all arrows out of w */
    int rows = 0;
    for (int ai = 0; ai < q.num_arrows(); ++ai)
      if (q.arrows[ai].source == (int)w) rows += m.action[ai].rows();
    RatMat stack(rows, m.dims[w]);
    int off = 0;
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
      if (q.arrows[ai].source != (int)w) continue;
      for (int i = 0; i < m.action[ai].rows(); ++i)
        for (int j = 0; j < m.dims[w]; ++j) stack.at(off + i, j) = m.action[ai].at(i, j);
      off += m.action[ai].rows();
    }
    s[w] = m.dims[w] - stack.rank();
  }
  return s;
}

std::vector<std::pair<int, std::vector<Rat>>> top_lifts(const Representation& m) {
  auto rad = radical_spaces(m);
  std::vector<std::pair<int, std::vector<Rat>>> lifts;
  for (size_t w = 0; w < m.dims.size(); ++w) {
    RowSpace span = rad[w];
    for (int i = 0; i < m.dims[w]; ++i) {
      std::vector<Rat> e(m.dims[w], Rat(0));
      e[i] = 1;
      if (span.insert(e)) lifts.push_back({(int)w, std::move(e)});
    }
  }
  return lifts;
}

CoverResult projective_cover(const Representation& m) {
  BasisPtr A = m.A;
  auto lifts = top_lifts(m);
  CoverResult res;
  for (const auto& [w, vec] : lifts) res.cover_verts.push_back(w);

  Representation cover = Representation::free_bundle(A, res.cover_verts);
  BundleIndex ix(A, res.cover_verts);
  int n = A->num_vertices();

  /* cover map: generator t at vertex v_t |-> lift_t; word u in block(v_t, w)
   * maps to lift_t . u */
  std::vector<RatMat> mats;
  for (int w = 0; w < n; ++w) {
    RatMat f(m.dims[w], cover.dims[w]);
    for (size_t t = 0; t < res.cover_verts.size(); ++t) {
      int vt = res.cover_verts[t];
      const auto& blk = A->block(vt, w);
      for (size_t p = 0; p < blk.size(); ++p) {
        RatMat act = m.word_action(A->word(blk[p]));  // dims[w] x dims[vt]
        const auto& lift = lifts[t].second;
        for (int i = 0; i < m.dims[w]; ++i) {
          Rat s = 0;
          for (int j = 0; j < m.dims[vt]; ++j)
            if (!is_zero(act.at(i, j))) s += act.at(i, j) * lift[j];
          f.at(i, ix.index(w, (int)t, (int)p)) = s;
        }
      }
    }
    mats.push_back(std::move(f));
  }

  res.map.src = cover;
  res.map.dst = m;
  res.map.mats = mats;

  /* kernel representation */
  Representation ker;
  ker.A = A;
  ker.dims.resize(n);
  res.kernel_emb.resize(n);
  for (int w = 0; w < n; ++w) {
    RatMat f(m.dims[w], cover.dims[w]);
    f = mats[w];
    auto kb = f.kernel();
    ker.dims[w] = (int)kb.size();
    res.kernel_emb[w] = std::move(kb);
  }
  const Quiver& q = A->quiver();
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    int s = q.arrows[ai].source, t = q.arrows[ai].target;
    RatMat act(ker.dims[t], ker.dims[s]);
    /* image of each kernel basis vector under the cover action, expressed
     * in the kernel basis at the target */
    RatMat emb_t(cover.dims[t], ker.dims[t]);
    for (int j = 0; j < ker.dims[t]; ++j)
      for (int i = 0; i < cover.dims[t]; ++i) emb_t.at(i, j) = res.kernel_emb[t][j][i];
    for (int j = 0; j < ker.dims[s]; ++j) {
      std::vector<Rat> img(cover.dims[t], Rat(0));
      for (int i = 0; i < cover.dims[t]; ++i) {
        Rat acc = 0;
        for (int k = 0; k < cover.dims[s]; ++k)
          if (!is_zero(cover.action[ai].at(i, k))) acc += cover.action[ai].at(i, k) * res.kernel_emb[s][j][k];
        img[i] = acc;
      }
      auto sol = emb_t.solve(img);
      if (!sol) throw consistency_error("kernel is not closed under the action");
      for (int i = 0; i < ker.dims[t]; ++i) act.at(i, j) = (*sol)[i];
    }
    ker.action.push_back(std::move(act));
  }
  res.kernel = std::move(ker);
  return res;
}

ResolutionResult min_proj_resolution(const Representation& m, int cap) {
  BasisPtr A = m.A;
  ResolutionResult out;
  std::vector<std::vector<int>> comps;       // comps[k] = summands in homological degree k
  std::vector<AlgMatrix> diffs;              // diffs[k] : degree k+1 -> degree k

  Representation cur = m;
  std::vector<std::vector<std::vector<Rat>>> prev_emb;  // kernel of previous step inside prev cover
  bool truncated = false;

  for (int step = 0;; ++step) {
    if (cur.total_dim() == 0) break;
    if (step > cap) {
      truncated = true;
      break;
    }
    CoverResult cov = projective_cover(cur);
    comps.push_back(cov.cover_verts);
    if (step > 0) {
      /* differential: cover_t at vertex u embeds via cur (= previous kernel)
       * into the previous cover bundle */
      BundleIndex prev_ix(A, comps[step - 1]);
      AlgMatrix d(comps[step - 1], comps[step]);
      auto lifts = top_lifts(cur);
      for (size_t t = 0; t < cov.cover_verts.size(); ++t) {
        int u = cov.cover_verts[t];
        /* lift vector in cur coordinates -> previous cover coordinates */
        const auto& lift = lifts[t].second;
        std::vector<Rat> vec(prev_ix.dim_at(u), Rat(0));
        for (size_t j = 0; j < lift.size(); ++j) {
          if (is_zero(lift[j])) continue;
          for (size_t i = 0; i < vec.size(); ++i) vec[i] += lift[j] * prev_emb[u][j][i];
        }
        for (size_t s = 0; s < comps[step - 1].size(); ++s) d.at((int)s, (int)t) = prev_ix.component(u, (int)s, vec);
      }
      diffs.push_back(std::move(d));
    }
    prev_emb = cov.kernel_emb;
    cur = cov.kernel;
  }

  /* assemble cochain complex in degrees [-len, 0] */
  ProjComplex c;
  c.A = A;
  if (comps.empty()) {
    out.complex = ProjComplex::zero(A);
    out.truncated = truncated;
    return out;
  }
  int len = (int)comps.size() - 1;
  c.min_deg = -len;
  for (int k = len; k >= 0; --k) c.comps.push_back(comps[k]);
  for (int k = len - 1; k >= 0; --k) c.diffs.push_back(diffs[k]);
  out.complex = std::move(c);
  out.truncated = truncated;
  return out;
}

AlgebraPresentation opposite_presentation(const AlgebraPresentation& pres) {
  AlgebraPresentation op;
  op.name = pres.name + "^op";
  op.quiver.vertex_names = pres.quiver.vertex_names;
  for (const auto& a : pres.quiver.arrows)
    op.quiver.arrows.push_back(Arrow{a.name, a.target, a.source, a.degree});
  for (const auto& r : pres.relations) {
    LinComb rr;
    for (const auto& [w, c] : r.terms) {
      PathWord rw;
      rw.source = w.target;
      rw.target = w.source;
      rw.arrows.assign(w.arrows.rbegin(), w.arrows.rend());
      rr.add_term(rw, c);
    }
    op.relations.push_back(std::move(rr));
  }
  return op;
}

}  // namespace siltkit
