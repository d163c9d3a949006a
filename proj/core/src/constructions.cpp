#include "siltkit/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace siltkit {

namespace {

std::vector<Rat> elt_coords(const AlgebraBasis& A, const AlgElt& x) {
  std::vector<Rat> v(A.dimension(), Rat(0));
  for (const auto& [w, c] : x.terms) v[w] = c;
  return v;
}

AlgElt coords_elt(const std::vector<Rat>& v) {
  AlgElt x;
  for (int i = 0; i < (int)v.size(); ++i)
    if (!is_zero(v[i])) x.add(i, v[i]);
  return x;
}

/* Shared machinery for truncation and idempotent quotients: given a finite
 * dimensional algebra realized as coordinate vectors with a vertex
 * decomposition, extract a quiver presentation together with its reduction
 * system. Arrow representatives are chosen in the ambient monomial order. */
struct Extraction {
  std::vector<std::string> vertex_names;
  std::vector<std::vector<Rat>> units;
  struct Cand {
    int i, j;
    std::vector<Rat> vec;
    std::string name;
  };
  std::vector<Cand> rad_basis;  // canonical order
  std::function<std::vector<Rat>(const std::vector<Rat>&, const std::vector<Rat>&)> mul;
  int ambient = 0;
  int expected_dim = 0;
  std::string name;

  struct Out {
    AlgebraPresentation pres;
    ReductionSystem rules;
    std::vector<std::vector<Rat>> arrow_vecs;
  };

  Out run() const {
    int n = (int)vertex_names.size();
    Out out;
    out.pres.name = name;
    out.pres.quiver.vertex_names = vertex_names;

    /* rad^2 span */
    RowSpace rad2(ambient);
    for (const auto& a : rad_basis)
      for (const auto& b : rad_basis) {
        if (a.j != b.i) continue;
        auto p = mul(a.vec, b.vec);
        rad2.insert(std::move(p));
      }
    /* arrows: candidates independent modulo rad^2 and earlier choices */
    RowSpace chosen = rad2;
    for (const auto& c : rad_basis) {
      if (!chosen.insert(c.vec)) continue;
      out.pres.quiver.add_arrow_idx(c.name, c.i, c.j, 0);
      out.arrow_vecs.push_back(c.vec);
    }

    /* path enumeration in the graded monomial order of the new quiver */
    struct P {
      PathWord w;
      std::vector<Rat> value;
    };
    RowSpace span(ambient);
    std::vector<P> irreducible;
    std::vector<PathWord> leads;

    auto suffix_reducible = [&leads](const PathWord& w) {
      for (const auto& l : leads) {
        if (l.arrows.size() > w.arrows.size()) continue;
        if (std::equal(l.arrows.begin(), l.arrows.end(), w.arrows.end() - l.arrows.size())) return true;
      }
      return false;
    };

    std::vector<P> level;
    for (int v = 0; v < n; ++v) {
      P p{PathWord::vertex(v), units[v]};
      if (!span.insert(p.value)) throw consistency_error("vertex idempotents are dependent");
      irreducible.push_back(p);
      level.push_back(std::move(p));
    }

    int guard = 0;
    while (!level.empty()) {
      if (++guard > 256) throw consistency_error("presentation extraction did not terminate");
      std::vector<P> next;
      for (const auto& p : level) {
        for (int ai = 0; ai < out.pres.quiver.num_arrows(); ++ai) {
          const Arrow& a = out.pres.quiver.arrows[ai];
          if (a.source != p.w.target) continue;
          P q;
          q.w.source = p.w.source;
          q.w.target = a.target;
          q.w.arrows = p.w.arrows;
          q.w.arrows.push_back(ai);
          if (suffix_reducible(q.w)) continue;
          q.value = mul(p.value, out.arrow_vecs[ai]);
          if (span.insert(q.value)) {
            irreducible.push_back(q);
            next.push_back(std::move(q));
            continue;
          }
          /* dependent: solve for the expression over irreducible paths */
          RatMat B(ambient, (int)irreducible.size());
          for (int col = 0; col < (int)irreducible.size(); ++col)
            for (int row = 0; row < ambient; ++row) B.at(row, col) = irreducible[col].value[row];
          std::vector<Rat> rhs = q.value;
          auto sol = B.solve(rhs);
          if (!sol) throw consistency_error("dependent path has no expression; span bookkeeping broke");
          LinComb rel = word_comb(q.w);
          LinComb tail;
          for (int col = 0; col < (int)irreducible.size(); ++col) {
            if (is_zero((*sol)[col])) continue;
            const PathWord& u = irreducible[col].w;
            if (u.source != q.w.source || u.target != q.w.target)
              throw consistency_error("dependency crosses blocks");
            rel.add_term(u, -(*sol)[col]);
            tail.add_term(u, (*sol)[col]);
          }
          out.pres.relations.push_back(rel);
          out.rules.rules[q.w] = tail;
          leads.push_back(q.w);
        }
      }
      /* deterministic order within the next level */
      std::sort(next.begin(), next.end(), [](const P& x, const P& y) { return WordOrder{}(x.w, y.w); });
      level = std::move(next);
    }

    if ((int)irreducible.size() != expected_dim)
      throw consistency_error("extracted dimension " + std::to_string(irreducible.size()) +
                              " does not match expected " + std::to_string(expected_dim));
    out.rules.complete = true;
    return out;
  }
};

std::string word_name(const AlgebraBasis& A, int word_id) {
  const PathWord& w = A.word(word_id);
  std::string s;
  for (size_t k = 0; k < w.arrows.size(); ++k) {
    if (k) s += ".";
    s += A.quiver().arrows[w.arrows[k]].name;
  }
  return s;
}

}  // namespace

TruncationResult truncate_full(const AlgebraBasis& A, const std::vector<int>& vertex_set) {
  if (vertex_set.empty()) throw empty_vertex_set("truncation needs a nonempty vertex set");
  std::set<int> S(vertex_set.begin(), vertex_set.end());
  for (int v : S)
    if (v < 0 || v >= A.num_vertices()) throw input_error("vertex index out of range");

  Extraction ex;
  ex.ambient = A.dimension();
  ex.name = A.presentation().name + "|e";
  std::vector<int> vmap;
  for (int v : S) {
    vmap.push_back(v);
    ex.vertex_names.push_back(A.quiver().vertex_names[v]);
    ex.units.push_back(elt_coords(A, A.unit(v)));
  }
  int expected = 0;
  std::vector<int> words;  // all block words with endpoints in S, monomial order
  for (int id = 0; id < A.dimension(); ++id) {
    const PathWord& w = A.word(id);
    if (S.count(w.source) && S.count(w.target)) {
      ++expected;
      if (w.length() >= 1) words.push_back(id);
    }
  }
  std::sort(words.begin(), words.end(), [&](int a, int b) { return WordOrder{}(A.word(a), A.word(b)); });
  auto new_index = [&](int v) { return (int)(std::lower_bound(vmap.begin(), vmap.end(), v) - vmap.begin()); };
  for (int id : words) {
    const PathWord& w = A.word(id);
    ex.rad_basis.push_back({new_index(w.source), new_index(w.target), elt_coords(A, A.of_word(id)), word_name(A, id)});
  }
  ex.expected_dim = expected;
  ex.mul = [&A](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    return elt_coords(A, A.mul(coords_elt(x), coords_elt(y)));
  };

  auto out = ex.run();
  TruncationResult res;
  res.pres = std::move(out.pres);
  res.rules = std::move(out.rules);
  res.rules.quiver = nullptr;  // rebound by callers that keep pres alive
  res.vertex_map = vmap;
  for (auto& v : out.arrow_vecs) res.arrow_values.push_back(coords_elt(v));
  return res;
}

AlgebraPresentation truncate_idempotent(const AlgebraBasis& A, const std::vector<int>& vertex_set) {
  return truncate_full(A, vertex_set).pres;
}

int ideal_dimension(const AlgebraBasis& A, const std::vector<int>& vertex_set) {
  std::set<int> S(vertex_set.begin(), vertex_set.end());
  RowSpace span(A.dimension());
  for (int v : S) {
    for (int left = 0; left < A.dimension(); ++left) {
      if (A.target_of(left) != v) continue;
      for (int right = 0; right < A.dimension(); ++right) {
        if (A.source_of(right) != v) continue;
        span.insert(elt_coords(A, A.word_product(left, right)));
      }
    }
  }
  return span.dim();
}

AlgebraPresentation quotient_idempotent(const AlgebraBasis& A, const std::vector<int>& vertex_set) {
  std::set<int> S(vertex_set.begin(), vertex_set.end());
  for (int v : S)
    if (v < 0 || v >= A.num_vertices()) throw input_error("vertex index out of range");
  if ((int)S.size() >= A.num_vertices()) throw empty_complement("the quotient would delete every vertex");

  /* echelon of the two-sided ideal AeA */
  RowSpace ideal(A.dimension());
  for (int v : S) {
    for (int left = 0; left < A.dimension(); ++left) {
      if (A.target_of(left) != v) continue;
      for (int right = 0; right < A.dimension(); ++right) {
        if (A.source_of(right) != v) continue;
        ideal.insert(elt_coords(A, A.word_product(left, right)));
      }
    }
  }

  Extraction ex;
  ex.ambient = A.dimension();
  ex.name = A.presentation().name + "/e";
  ex.expected_dim = A.dimension() - ideal.dim();
  std::vector<int> survivors;
  for (int v = 0; v < A.num_vertices(); ++v)
    if (!S.count(v)) {
      survivors.push_back(v);
      ex.vertex_names.push_back(A.quiver().vertex_names[v]);
      ex.units.push_back(ideal.reduce(elt_coords(A, A.unit(v))));
    }
  for (int id = 0; id < A.dimension(); ++id) {
    const PathWord& w = A.word(id);
    if (w.length() < 1 || S.count(w.source) || S.count(w.target)) continue;
    auto vec = ideal.reduce(elt_coords(A, A.of_word(id)));
    bool zero = true;
    for (const auto& x : vec)
      if (!is_zero(x)) {
        zero = false;
        break;
      }
    if (zero) continue;
    int i = (int)(std::lower_bound(survivors.begin(), survivors.end(), w.source) - survivors.begin());
    int j = (int)(std::lower_bound(survivors.begin(), survivors.end(), w.target) - survivors.begin());
    ex.rad_basis.push_back({i, j, std::move(vec), word_name(A, id)});
  }
  ex.mul = [&A, &ideal](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    return ideal.reduce(elt_coords(A, A.mul(coords_elt(x), coords_elt(y))));
  };
  return ex.run().pres;
}

AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  a.check_admissible();
  b.check_admissible();
  AlgebraPresentation t;
  t.name = a.name + "(x)" + b.name;
  const Quiver& qa = a.quiver;
  const Quiver& qb = b.quiver;
  int nb = qb.num_vertices();
  auto vid = [&](int u, int v) { return u * nb + v; };
  for (int u = 0; u < qa.num_vertices(); ++u)
    for (int v = 0; v < nb; ++v) t.quiver.add_vertex(qa.vertex_names[u] + "." + qb.vertex_names[v]);

  /* arrows (alpha, v) then (u, beta); indices: A-arrows first */
  for (int ai = 0; ai < qa.num_arrows(); ++ai)
    for (int v = 0; v < nb; ++v) {
      const Arrow& ar = qa.arrows[ai];
      t.quiver.add_arrow_idx(ar.name + "." + qb.vertex_names[v], vid(ar.source, v), vid(ar.target, v), ar.degree);
    }
  int boff = qa.num_arrows() * nb;
  for (int u = 0; u < qa.num_vertices(); ++u)
    for (int bi = 0; bi < qb.num_arrows(); ++bi) {
      const Arrow& br = qb.arrows[bi];
      t.quiver.add_arrow_idx(qa.vertex_names[u] + "." + br.name, vid(u, br.source), vid(u, br.target), br.degree);
    }
  auto a_arrow = [&](int ai, int v) { return ai * nb + v; };
  auto b_arrow = [&](int u, int bi) { return boff + u * qb.num_arrows() + bi; };

  /* lifted relations of both factors */
  for (const auto& rel : a.relations)
    for (int v = 0; v < nb; ++v) {
      LinComb r;
      for (const auto& [w, c] : rel.terms) {
        std::vector<int> seq;
        for (int ai : w.arrows) seq.push_back(a_arrow(ai, v));
        r.add_term(make_path(t.quiver, seq), c);
      }
      t.relations.push_back(std::move(r));
    }
  for (const auto& rel : b.relations)
    for (int u = 0; u < qa.num_vertices(); ++u) {
      LinComb r;
      for (const auto& [w, c] : rel.terms) {
        std::vector<int> seq;
        for (int bi : w.arrows) seq.push_back(b_arrow(u, bi));
        r.add_term(make_path(t.quiver, seq), c);
      }
      t.relations.push_back(std::move(r));
    }
  /* square commutativity */
  for (int ai = 0; ai < qa.num_arrows(); ++ai)
    for (int bi = 0; bi < qb.num_arrows(); ++bi) {
      const Arrow& ar = qa.arrows[ai];
      const Arrow& br = qb.arrows[bi];
      LinComb r;
      r.add_term(make_path(t.quiver, {a_arrow(ai, br.source), b_arrow(ar.target, bi)}), 1);
      r.add_term(make_path(t.quiver, {b_arrow(ar.source, bi), a_arrow(ai, br.target)}), -1);
      t.relations.push_back(std::move(r));
    }

  t.tensor_factors.push_back(std::make_shared<AlgebraPresentation>(a));
  t.tensor_factors.push_back(std::make_shared<AlgebraPresentation>(b));
  return t;
}

OnePointExtensionResult one_point_extension(const AlgebraBasis& A, const Representation& M) {
  if (!M.valid()) throw input_error("the module does not satisfy the relations");
  OnePointExtensionResult res;
  res.pres = A.presentation();
  res.pres.tensor_factors.clear();
  res.pres.name = A.presentation().name + "[M]";

  std::string ext = "omega";
  while (std::find(res.pres.quiver.vertex_names.begin(), res.pres.quiver.vertex_names.end(), ext) !=
         res.pres.quiver.vertex_names.end())
    ext += "'";
  res.pres.quiver.add_vertex(ext);
  res.extension_vertex = ext;
  int omega = res.pres.quiver.num_vertices() - 1;

  if (M.total_dim() == 0) {
    res.zero_module = true;
    return res;
  }

  CoverResult cov = projective_cover(M);
  int base_arrows = res.pres.quiver.num_arrows();
  for (size_t t = 0; t < cov.cover_verts.size(); ++t) {
    std::string an = "om" + std::to_string(t);
    res.pres.quiver.add_arrow_idx(an, omega, cov.cover_verts[t], 0);
  }

  /* relations at omega generate the kernel of the projective cover */
  BundleIndex ix(M.A, cov.cover_verts);
  auto gens = top_lifts(cov.kernel);
  for (const auto& [u, lift] : gens) {
    std::vector<Rat> emb(ix.dim_at(u), Rat(0));
    for (size_t j = 0; j < lift.size(); ++j) {
      if (is_zero(lift[j])) continue;
      for (size_t i = 0; i < emb.size(); ++i) emb[i] += lift[j] * cov.kernel_emb[u][j][i];
    }
    LinComb rel;
    for (size_t t = 0; t < cov.cover_verts.size(); ++t) {
      AlgElt comp = ix.component(u, (int)t, emb);
      for (const auto& [wid, c] : comp.terms) {
        std::vector<int> seq{base_arrows + (int)t};
        const PathWord& w = M.A->word(wid);
        seq.insert(seq.end(), w.arrows.begin(), w.arrows.end());
        rel.add_term(make_path(res.pres.quiver, seq), c);
      }
    }
    if (!rel.zero()) res.pres.relations.push_back(std::move(rel));
  }
  return res;
}

AlgebraPresentation nakayama_cyclic(int n, int r) {
  if (n < 2 || r < 2) throw bad_parameters("nakayama_cyclic needs n, r > 1");
  AlgebraPresentation p;
  p.name = "N(" + std::to_string(n) + "," + std::to_string(r) + ")";
  for (int i = 1; i <= n; ++i) p.quiver.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) p.quiver.add_arrow_idx("x" + std::to_string(i + 1), i, (i + 1) % n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> seq;
    for (int k = 0; k < r; ++k) seq.push_back((i + k) % n);
    p.relations.push_back(word_comb(make_path(p.quiver, seq)));
  }
  return p;
}

AlgebraPresentation nakayama_linear(int n, int r) {
  if (n < 1 || r < 2) throw bad_parameters("nakayama_linear needs n >= 1 and r > 1");
  AlgebraPresentation p;
  p.name = "A(" + std::to_string(n) + "," + std::to_string(r) + ")";
  for (int i = 1; i <= n; ++i) p.quiver.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) p.quiver.add_arrow_idx("a" + std::to_string(i + 1), i, i + 1, 0);
  for (int i = 0; i + r < n; ++i) {
    std::vector<int> seq;
    for (int k = 0; k < r; ++k) seq.push_back(i + k);
    p.relations.push_back(word_comb(make_path(p.quiver, seq)));
  }
  return p;
}

AlgebraPresentation path_an(int n) {
  if (n < 1) throw bad_parameters("path_an needs n >= 1");
  AlgebraPresentation p;
  p.name = "A" + std::to_string(n);
  for (int i = 1; i <= n; ++i) p.quiver.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) p.quiver.add_arrow_idx("a" + std::to_string(i + 1), i, i + 1, 0);
  return p;
}

AlgebraPresentation path_algebra(Quiver q, const std::string& name) {
  AlgebraPresentation p;
  p.quiver = std::move(q);
  p.name = name;
  return p;
}

AlgebraPresentation rad_square_zero(Quiver q, const std::string& name) {
  AlgebraPresentation p;
  p.quiver = std::move(q);
  p.name = name;
  for (int a = 0; a < p.quiver.num_arrows(); ++a)
    for (int b = 0; b < p.quiver.num_arrows(); ++b)
      if (p.quiver.arrows[a].target == p.quiver.arrows[b].source)
        p.relations.push_back(word_comb(make_path(p.quiver, {a, b})));
  return p;
}

AlgebraPresentation ladder(int r) {
  if (r < 1) throw bad_parameters("ladder needs r >= 1");
  auto t = tensor(path_an(2), path_an(r));
  t.name = "ladder(" + std::to_string(r) + ")";
  return t;
}

namespace {

/* two directed paths of lengths p and q from a common source to a common
 * sink; branch arrows named a1..ap and b1..bq */
Quiver atilde_quiver(int p, int q) {
  Quiver qv;
  qv.add_vertex("s");
  for (int i = 1; i < p; ++i) qv.add_vertex("u" + std::to_string(i));
  for (int i = 1; i < q; ++i) qv.add_vertex("v" + std::to_string(i));
  qv.add_vertex("t");
  int sink = qv.num_vertices() - 1;
  auto uid = [&](int i) { return i == 0 ? 0 : i == p ? sink : i; };
  auto vid2 = [&, p](int i) { return i == 0 ? 0 : i == q ? sink : (p - 1) + i; };
  for (int i = 0; i < p; ++i) qv.add_arrow_idx("a" + std::to_string(i + 1), uid(i), uid(i + 1), 0);
  for (int i = 0; i < q; ++i) qv.add_arrow_idx("b" + std::to_string(i + 1), vid2(i), vid2(i + 1), 0);
  return qv;
}

}  // namespace

AlgebraPresentation atilde_commutative(int p, int q) {
  if (p < 2 || q < 2) throw bad_parameters("atilde_commutative needs p, q >= 2 for an admissible relation");
  AlgebraPresentation pres;
  pres.quiver = atilde_quiver(p, q);
  pres.name = "Atilde(" + std::to_string(p) + "," + std::to_string(q) + ")c";
  std::vector<int> pa, pb;
  for (int i = 0; i < p; ++i) pa.push_back(i);
  for (int i = 0; i < q; ++i) pb.push_back(p + i);
  LinComb r = word_comb(make_path(pres.quiver, pa));
  r.add_term(make_path(pres.quiver, pb), -1);
  pres.relations.push_back(std::move(r));
  return pres;
}

AlgebraPresentation atilde_monomial(int p, int q) {
  if (p < 2 || q < 2) throw bad_parameters("atilde_monomial needs p, q >= 2 for admissible relations");
  AlgebraPresentation pres;
  pres.quiver = atilde_quiver(p, q);
  pres.name = "Atilde(" + std::to_string(p) + "," + std::to_string(q) + ")m";
  std::vector<int> pa, pb;
  for (int i = 0; i < p; ++i) pa.push_back(i);
  for (int i = 0; i < q; ++i) pb.push_back(p + i);
  pres.relations.push_back(word_comb(make_path(pres.quiver, pa)));
  pres.relations.push_back(word_comb(make_path(pres.quiver, pb)));
  return pres;
}

AlgebraPresentation extended_canonical_246() {
  /* three weighted branches from c0 to t with z^6 = x^2 - y^4, plus one
   * extension arrow t -> w */
  AlgebraPresentation p;
  p.name = "extcanonical<2,4,6>";
  Quiver& q = p.quiver;
  q.add_vertex("c0");
  q.add_vertex("x1");
  for (int i = 1; i <= 3; ++i) q.add_vertex("y" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) q.add_vertex("z" + std::to_string(i));
  q.add_vertex("t");
  q.add_vertex("w");
  int t = q.vertex_index("t");
  q.add_arrow_idx("xa1", 0, 1, 0);
  q.add_arrow_idx("xa2", 1, t, 0);
  q.add_arrow_idx("ya1", 0, q.vertex_index("y1"), 0);
  q.add_arrow_idx("ya2", q.vertex_index("y1"), q.vertex_index("y2"), 0);
  q.add_arrow_idx("ya3", q.vertex_index("y2"), q.vertex_index("y3"), 0);
  q.add_arrow_idx("ya4", q.vertex_index("y3"), t, 0);
  q.add_arrow_idx("za1", 0, q.vertex_index("z1"), 0);
  for (int i = 1; i <= 4; ++i)
    q.add_arrow_idx("za" + std::to_string(i + 1), q.vertex_index("z" + std::to_string(i)),
                    q.vertex_index("z" + std::to_string(i + 1)), 0);
  q.add_arrow_idx("za6", q.vertex_index("z5"), t, 0);
  q.add_arrow_idx("ext", t, q.vertex_index("w"), 0);

  std::vector<int> px{0, 1}, py, pz;
  for (int i = 0; i < 4; ++i) py.push_back(2 + i);
  for (int i = 0; i < 6; ++i) pz.push_back(6 + i);
  LinComb r = word_comb(make_path(q, pz));
  r.add_term(make_path(q, px), -1);
  r.add_term(make_path(q, py), 1);
  p.relations.push_back(std::move(r));
  return p;
}

namespace {

AlgebraPresentation fx_point() {
  AlgebraPresentation p;
  p.name = "K";
  p.quiver.add_vertex("1");
  return p;
}

AlgebraPresentation fx_dual_numbers() {
  AlgebraPresentation p;
  p.name = "K[x]/(x^2)";
  p.quiver.add_vertex("1");
  p.quiver.add_arrow_idx("x", 0, 0, 0);
  p.relations.push_back(word_comb(make_path(p.quiver, {0, 0})));
  return p;
}

AlgebraPresentation fx_kronecker_quiver() {
  AlgebraPresentation p;
  p.name = "kronecker";
  p.quiver.add_vertex("1");
  p.quiver.add_vertex("2");
  p.quiver.add_arrow_idx("x", 0, 1, 0);
  p.quiver.add_arrow_idx("y", 0, 1, 0);
  return p;
}

AlgebraPresentation fx_example_kronecker() {
  /* 1 -> 3 -> 2 around a triangle with the composite killed */
  AlgebraPresentation p;
  p.name = "example-kronecker";
  p.quiver.add_vertex("1");
  p.quiver.add_vertex("2");
  p.quiver.add_vertex("3");
  p.quiver.add_arrow_idx("al", 0, 1, 0);
  p.quiver.add_arrow_idx("be", 0, 2, 0);
  p.quiver.add_arrow_idx("ga", 2, 1, 0);
  p.relations.push_back(word_comb(make_path(p.quiver, {1, 2})));
  return p;
}

AlgebraPresentation fx_example_y() {
  AlgebraPresentation p;
  p.name = "example-y";
  for (int i = 1; i <= 6; ++i) p.quiver.add_vertex(std::to_string(i));
  p.quiver.add_arrow_idx("al", 0, 1, 0);
  p.quiver.add_arrow_idx("be", 1, 2, 0);
  p.quiver.add_arrow_idx("ga", 2, 3, 0);
  p.quiver.add_arrow_idx("de", 1, 4, 0);
  p.quiver.add_arrow_idx("ep", 5, 2, 0);
  p.relations.push_back(word_comb(make_path(p.quiver, {0, 1, 2})));
  return p;
}

AlgebraPresentation fx_bongartz_fails() {
  AlgebraPresentation p;
  p.name = "bongartz-fails";
  p.quiver.add_vertex("1");
  p.quiver.add_vertex("2");
  p.quiver.add_vertex("3");
  p.quiver.add_arrow_idx("al", 0, 1, 0);
  p.quiver.add_arrow_idx("be", 1, 2, 0);
  p.quiver.add_arrow_idx("ga", 1, 2, 0);
  p.quiver.add_arrow_idx("de", 2, 0, 0);
  p.relations.push_back(word_comb(make_path(p.quiver, {0, 1})));  // al be
  p.relations.push_back(word_comb(make_path(p.quiver, {2, 3})));  // ga de
  p.relations.push_back(word_comb(make_path(p.quiver, {3, 0})));  // de al
  return p;
}

AlgebraPresentation fx_gamma() {
  AlgebraPresentation p;
  p.name = "gamma-sec2-5";
  for (int i = 1; i <= 7; ++i) p.quiver.add_vertex(std::to_string(i));
  p.quiver.add_arrow_idx("al", 1, 0, 0);  // 2 -> 1
  p.quiver.add_arrow_idx("be", 2, 1, 0);  // 3 -> 2
  p.quiver.add_arrow_idx("ga", 3, 2, 0);  // 4 -> 3
  p.quiver.add_arrow_idx("de", 4, 1, 0);  // 5 -> 2
  p.quiver.add_arrow_idx("ep", 2, 5, 0);  // 3 -> 6
  p.quiver.add_arrow_idx("x", 6, 1, 0);   // 7 -> 2
  p.quiver.add_arrow_idx("y", 3, 6, 0);   // 4 -> 7
  p.relations.push_back(word_comb(make_path(p.quiver, {1, 0})));  // be al
  p.relations.push_back(word_comb(make_path(p.quiver, {3, 0})));  // de al
  p.relations.push_back(word_comb(make_path(p.quiver, {2, 4})));  // ga ep
  LinComb comm = word_comb(make_path(p.quiver, {2, 1}));          // ga be
  comm.add_term(make_path(p.quiver, {6, 5}), -1);                 // y x
  p.relations.push_back(std::move(comm));
  return p;
}

AlgebraPresentation fx_gamma_sub5() {
  AlgebraPresentation p;
  p.name = "gamma-sub5";
  for (const char* v : {"2", "3", "4", "5", "7"}) p.quiver.add_vertex(v);
  p.quiver.add_arrow_idx("be", 1, 0, 0);  // 3 -> 2
  p.quiver.add_arrow_idx("ga", 2, 1, 0);  // 4 -> 3
  p.quiver.add_arrow_idx("de", 3, 0, 0);  // 5 -> 2
  p.quiver.add_arrow_idx("x", 4, 0, 0);   // 7 -> 2
  p.quiver.add_arrow_idx("y", 2, 4, 0);   // 4 -> 7
  LinComb comm = word_comb(make_path(p.quiver, {1, 0}));  // ga be
  comm.add_term(make_path(p.quiver, {4, 3}), -1);         // y x
  p.relations.push_back(std::move(comm));
  return p;
}

AlgebraPresentation fx_gamma_sub4() {
  AlgebraPresentation p;
  p.name = "gamma-sub4";
  for (const char* v : {"2", "3", "4", "7"}) p.quiver.add_vertex(v);
  p.quiver.add_arrow_idx("be", 1, 0, 0);
  p.quiver.add_arrow_idx("ga", 2, 1, 0);
  p.quiver.add_arrow_idx("x", 3, 0, 0);
  p.quiver.add_arrow_idx("y", 2, 3, 0);
  LinComb comm = word_comb(make_path(p.quiver, {1, 0}));
  comm.add_term(make_path(p.quiver, {3, 2}), -1);
  p.relations.push_back(std::move(comm));
  return p;
}

AlgebraPresentation fx_a2() { auto p = path_an(2); p.name = "a2-path"; return p; }
AlgebraPresentation fx_a3() { auto p = path_an(3); p.name = "a3-path"; return p; }
AlgebraPresentation fx_a5() { auto p = path_an(5); p.name = "a5-path"; return p; }
AlgebraPresentation fx_square() { auto p = ladder(2); p.name = "commutative-square"; return p; }
AlgebraPresentation fx_n23() { return nakayama_cyclic(2, 3); }
AlgebraPresentation fx_at22() { return atilde_monomial(2, 2); }
AlgebraPresentation fx_at23c() { return atilde_commutative(2, 3); }

}  // namespace

const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> reg = {
      {"point", "the ground field as a one-vertex algebra", &fx_point},
      {"dual-numbers", "K[x]/(x^2), local with one loop", &fx_dual_numbers},
      {"a2-path", "path algebra of 1 -> 2", &fx_a2},
      {"a3-path", "path algebra of 1 -> 2 -> 3", &fx_a3},
      {"a5-path", "path algebra of the linear A5 quiver", &fx_a5},
      {"commutative-square", "KA2 (x) KA2 with the square relation", &fx_square},
      {"kronecker-quiver", "two parallel arrows 1 => 2, hereditary", &fx_kronecker_quiver},
      {"example-kronecker", "triangle 1->3->2, 1->2 with the composite 1->3->2 killed; gentle one-cycle", &fx_example_kronecker},
      {"example-y", "six-vertex tree quiver with one length-3 zero relation", &fx_example_y},
      {"bongartz-fails", "three-vertex quiver with a double arrow and three zero relations", &fx_bongartz_fails},
      {"gamma-sec2-5", "seven-vertex algebra with three zero relations and one commutativity relation", &fx_gamma},
      {"gamma-sub5", "five-vertex subalgebra of gamma-sec2-5 on vertices 2,3,4,5,7", &fx_gamma_sub5},
      {"gamma-sub4", "commutative square inside gamma-sec2-5 on vertices 2,3,4,7", &fx_gamma_sub4},
      {"extended-canonical-246", "extended canonical algebra of weight type <2,4,6>", &extended_canonical_246},
      {"atilde-monomial-2-2", "two parallel length-2 paths with both composites killed", &fx_at22},
      {"atilde-comm-2-3", "two parallel paths of lengths 2 and 3 with the commutativity relation", &fx_at23c},
      {"n-2-3", "selfinjective Nakayama algebra N(2,3)", &fx_n23},
  };
  return reg;
}

AlgebraPresentation fixture(const std::string& id) {
  for (const auto& f : fixture_registry())
    if (f.id == id) return f.build();
  throw unknown_identifier("unknown fixture id '" + id + "'");
}

AlgebraPresentation make_standard(const std::string& spec) {
  auto open = spec.find('(');
  std::string head = open == std::string::npos ? spec : spec.substr(0, open);
  std::vector<int> args;
  if (open != std::string::npos) {
    auto close = spec.find(')', open);
    if (close == std::string::npos) throw bad_parameters("malformed standard spec '" + spec + "'");
    std::stringstream ss(spec.substr(open + 1, close - open - 1));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) args.push_back(std::stoi(tok));
  }
  auto want = [&](size_t k) {
    if (args.size() != k) throw bad_parameters("standard '" + head + "' expects " + std::to_string(k) + " parameters");
  };
  if (head == "nakayama_cyclic") { want(2); return nakayama_cyclic(args[0], args[1]); }
  if (head == "nakayama_linear") { want(2); return nakayama_linear(args[0], args[1]); }
  if (head == "path_an") { want(1); return path_an(args[0]); }
  if (head == "ladder") { want(1); return ladder(args[0]); }
  if (head == "atilde_comm") { want(2); return atilde_commutative(args[0], args[1]); }
  if (head == "atilde_monomial") { want(2); return atilde_monomial(args[0], args[1]); }
  if (head == "extended_canonical_246") { want(0); return extended_canonical_246(); }
  throw bad_parameters("unknown standard algebra '" + head + "'");
}

}  // namespace siltkit
