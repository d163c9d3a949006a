#include "siltkit/basis.hpp"

#include <algorithm>

namespace siltkit {

void AlgElt::add(int word, const Rat& c) {
  if (is_zero(c)) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), word,
                             [](const auto& p, int w) { return p.first < w; });
  if (it != terms.end() && it->first == word) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  } else {
    terms.insert(it, {word, c});
  }
}

AlgElt& AlgElt::operator+=(const AlgElt& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

AlgElt AlgElt::operator*(const Rat& c) const {
  AlgElt r;
  if (is_zero(c)) return r;
  r.terms = terms;
  for (auto& [w, k] : r.terms) k *= c;
  return r;
}

std::shared_ptr<const AlgebraBasis> AlgebraBasis::build(const AlgebraPresentation& pres, NormalizeOptions opts) {
  auto basis = std::shared_ptr<AlgebraBasis>(new AlgebraBasis());
  basis->pres_ = pres;
  basis->rs_ = normalize(basis->pres_, opts);
  basis->rs_.quiver = &basis->pres_.quiver;  // rebind after copy

  const Quiver& q = basis->pres_.quiver;
  int n = q.num_vertices();

  /* irreducible words by length; a word dies only via a lead suffix since
   * its prefix is already irreducible */
  std::vector<PathWord> level;
  for (int v = 0; v < n; ++v) level.push_back(PathWord::vertex(v));
  std::vector<PathWord> all = level;
  while (!level.empty()) {
    if ((int)level.front().length() >= basis->rs_.word_cap)
      throw dimension_unbounded("irreducible words persist at the word-length cap; the algebra is not finite dimensional");
    std::vector<PathWord> next;
    for (const auto& w : level) {
      for (int ai = 0; ai < q.num_arrows(); ++ai) {
        if (q.arrows[ai].source != w.target) continue;
        PathWord ext = w;
        ext.arrows.push_back(ai);
        ext.target = q.arrows[ai].target;
        if (ext.trivial()) continue;
        bool reducible = false;
        for (const auto& [lead, tail] : basis->rs_.rules) {
          size_t len = lead.arrows.size();
          if (len == 0 || len > ext.arrows.size()) continue;
          if (std::equal(lead.arrows.begin(), lead.arrows.end(), ext.arrows.end() - len)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(ext);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const PathWord& a, const PathWord& b) { return WordOrder{}(a, b); });
  basis->words_ = std::move(all);
  for (int i = 0; i < (int)basis->words_.size(); ++i) basis->ids_.emplace(basis->words_[i], i);

  basis->blocks_.assign(n * n, {});
  basis->e_ids_.assign(n, -1);
  for (int i = 0; i < (int)basis->words_.size(); ++i) {
    const PathWord& w = basis->words_[i];
    basis->blocks_[w.source * n + w.target].push_back(i);
    if (w.trivial()) basis->e_ids_[w.source] = i;
    basis->max_len_ = std::max(basis->max_len_, (int)w.length());
  }

  /* eager multiplication table over basis words */
  int dim = basis->dimension();
  basis->mult_.assign((size_t)dim * dim, AlgElt{});
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const PathWord& a = basis->words_[i];
      const PathWord& b = basis->words_[j];
      if (a.target != b.source) continue;
      std::vector<int> seq = a.arrows;
      seq.insert(seq.end(), b.arrows.begin(), b.arrows.end());
      PathWord cat = seq.empty() ? PathWord::vertex(a.source) : make_path(q, seq);
      LinComb nf = basis->rs_.normal_form_word(cat);
      AlgElt& out = basis->mult_[(size_t)i * dim + j];
      for (const auto& [w, c] : nf.terms) {
        auto it = basis->ids_.find(w);
        if (it == basis->ids_.end())
          throw consistency_error("normal form left the basis; rewriting system is not confluent");
        out.add(it->second, c);
      }
    }
  }
  return basis;
}

int AlgebraBasis::word_id(const PathWord& w) const {
  auto it = ids_.find(w);
  if (it == ids_.end()) throw consistency_error("word is not a basis word");
  return it->second;
}

AlgElt AlgebraBasis::unit(int v) const { return of_word(e_ids_[v]); }

AlgElt AlgebraBasis::of_word(int word_id) const {
  AlgElt r;
  r.add(word_id, 1);
  return r;
}

AlgElt AlgebraBasis::arrow_elt(int arrow_idx) const {
  const Arrow& a = pres_.quiver.arrows[arrow_idx];
  PathWord w{a.source, a.target, {arrow_idx}};
  return from_lincomb(word_comb(w));
}

AlgElt AlgebraBasis::from_lincomb(const LinComb& x) const {
  LinComb nf = rs_.normal_form(x);
  AlgElt r;
  for (const auto& [w, c] : nf.terms) r.add(word_id(w), c);
  return r;
}

LinComb AlgebraBasis::to_lincomb(const AlgElt& x) const {
  LinComb r;
  for (const auto& [w, c] : x.terms) r.add_term(words_[w], c);
  return r;
}

const AlgElt& AlgebraBasis::word_product(int w1, int w2) const {
  return mult_[(size_t)w1 * dimension() + w2];
}

AlgElt AlgebraBasis::mul(const AlgElt& a, const AlgElt& b) const {
  AlgElt r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      const AlgElt& p = word_product(wa, wb);
      for (const auto& [w, c] : p.terms) r.add(w, ca * cb * c);
    }
  return r;
}

Rat AlgebraBasis::scalar_part(const AlgElt& x, int v) const {
  int ev = e_ids_[v];
  for (const auto& [w, c] : x.terms)
    if (w == ev) return c;
  return 0;
}

bool AlgebraBasis::is_unit_local(const AlgElt& x, int v) const { return !is_zero(scalar_part(x, v)); }

AlgElt AlgebraBasis::invert_local(const AlgElt& x, int v) const {
  Rat c = scalar_part(x, v);
  if (is_zero(c)) throw consistency_error("element is not a unit of the local block");
  /* x = c(e + m) with m nilpotent: inverse = (e - m + m^2 - ...)/c */
  AlgElt m = x * (Rat(1) / c);
  m.add(e_ids_[v], -1);
  AlgElt inv = unit(v);
  AlgElt pow = unit(v);
  Rat sign = -1;
  while (true) {
    pow = mul(pow, m);
    if (pow.zero()) break;
    inv += pow * sign;
    sign = -sign;
  }
  return inv * (Rat(1) / c);
}

}  // namespace siltkit
