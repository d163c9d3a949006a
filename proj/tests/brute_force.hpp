#pragma once

/* Test-only oracle: exhaustive enumeration of two-term silting objects by
 * bounded multiplicity vectors and small integer differentials, independent
 * of the mutation machinery. */

#include <set>

#include "siltkit/mutation.hpp"

namespace tst {

using namespace siltkit;

struct BruteForceOptions {
  int side_total = 2;      // max total multiplicity per degree
  int per_vertex = 2;      // max multiplicity of one projective per degree
  int slot_cap = 10;       // max coefficient slots per differential shape
  int coeff_lo = -1, coeff_hi = 1;
};

inline std::vector<ProjComplex> brute_force_indecomposables(BasisPtr A, const BruteForceOptions& opt = {}) {
  int n = A->num_vertices();
  std::vector<ProjComplex> out;
  auto keep = [&](ProjComplex X) {
    if (hom_dim(X, X, 1) != 0) return;       // not presilting as a summand
    if (end_top_dim(X) != 1) return;         // not (certifiably) indecomposable
    for (const auto& y : out)
      if (complexes_isomorphic(y, X)) return;
    out.push_back(std::move(X));
  };

  for (int v = 0; v < n; ++v) {
    keep(ProjComplex::stalk(A, {v}, 0));
    keep(ProjComplex::stalk(A, {v}, -1));
  }

  /* multiplicity vectors with bounded totals */
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> gen = [&](int v, int left) {
    if (v == n) {
      int tot = 0;
      for (int c : cur) tot += c;
      if (tot > 0) shapes.push_back(cur);
      return;
    }
    for (int c = 0; c <= std::min(left, opt.per_vertex); ++c) {
      cur[v] = c;
      gen(v + 1, left - c);
    }
    cur[v] = 0;
  };
  gen(0, opt.side_total);

  auto expand = [&](const std::vector<int>& mults) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < mults[v]; ++c) verts.push_back(v);
    return verts;
  };

  for (const auto& m1 : shapes)
    for (const auto& m0 : shapes) {
      std::vector<int> lo = expand(m1), hi = expand(m0);
      /* differential slots: radical words per (row, col) */
      std::vector<std::tuple<int, int, int>> slots;
      for (int i = 0; i < (int)hi.size(); ++i)
        for (int j = 0; j < (int)lo.size(); ++j)
          for (int w : A->block(hi[i], lo[j]))
            if (A->length_of(w) >= 1) slots.push_back({i, j, w});
      if (slots.empty() || (int)slots.size() > opt.slot_cap) continue;

      int span = opt.coeff_hi - opt.coeff_lo + 1;
      long total = 1;
      for (size_t s = 0; s < slots.size(); ++s) total *= span;
      for (long code = 0; code < total; ++code) {
        AlgMatrix d(hi, lo);
        long c = code;
        bool any = false;
        for (const auto& [i, j, w] : slots) {
          int coeff = opt.coeff_lo + (int)(c % span);
          c /= span;
          if (coeff != 0) {
            d.at(i, j).add(w, coeff);
            any = true;
          }
        }
        if (!any) continue;
        /* no zero row or column: otherwise a stalk splits off */
        bool degenerate = false;
        for (int i = 0; i < d.rows() && !degenerate; ++i) {
          bool nz = false;
          for (int j = 0; j < d.cols(); ++j) nz = nz || !d.at(i, j).zero();
          degenerate = !nz;
        }
        for (int j = 0; j < d.cols() && !degenerate; ++j) {
          bool nz = false;
          for (int i = 0; i < d.rows(); ++i) nz = nz || !d.at(i, j).zero();
          degenerate = !nz;
        }
        if (degenerate) continue;
        ProjComplex X;
        X.A = A;
        X.min_deg = -1;
        X.comps = {lo, hi};
        X.diffs = {d};
        keep(std::move(X));
      }
    }
  return out;
}

/* all two-term silting objects as sets of pairwise compatible summands of
 * full size; returns the canonical g-matrix keys */
inline std::set<std::string> brute_force_two_term_siltings(BasisPtr A, const BruteForceOptions& opt = {}) {
  int n = A->num_vertices();
  auto cands = brute_force_indecomposables(A, opt);
  int m = (int)cands.size();
  std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      bool ok = hom_dim(cands[i], cands[j], 1) == 0 && hom_dim(cands[j], cands[i], 1) == 0;
      compat[i][j] = compat[j][i] = ok;
    }

  std::set<std::string> keys;
  std::vector<int> pick;
  std::function<void(int)> search = [&](int start) {
    if ((int)pick.size() == n) {
      std::vector<ProjComplex> ss;
      for (int i : pick) ss.push_back(cands[i]);
      std::stable_sort(ss.begin(), ss.end(), [](const ProjComplex& a, const ProjComplex& b) {
        auto ga = a.g_vector(), gb = b.g_vector();
        if (ga != gb) return ga < gb;
        return a.key() < b.key();
      });
      GMatrix g;
      for (const auto& s : ss) g.cols.push_back(s.g_vector());
      keys.insert(g.key());
      return;
    }
    for (int i = start; i < m; ++i) {
      bool ok = true;
      for (int j : pick) ok = ok && compat[i][j];
      if (!ok) continue;
      pick.push_back(i);
      search(i + 1);
      pick.pop_back();
    }
  };
  search(0);
  return keys;
}

}  // namespace tst
