#include "siltkit/complexes.hpp"

#include <sstream>

namespace siltkit {

bool AlgMatrix::is_zero() const {
  for (const auto& x : e)
    if (!x.zero()) return false;
  return true;
}

AlgMatrix AlgMatrix::compose(const AlgebraBasis& A, const AlgMatrix& g) const {
  if (col_verts != g.row_verts) throw consistency_error("algebra matrix composition shape mismatch");
  AlgMatrix out(row_verts, g.col_verts);
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      const AlgElt& a = at(i, k);
      if (a.zero()) continue;
      for (int j = 0; j < g.cols(); ++j) {
        const AlgElt& b = g.at(k, j);
        if (b.zero()) continue;
        out.at(i, j) += A.mul(a, b);
      }
    }
  return out;
}

AlgMatrix AlgMatrix::operator-() const {
  AlgMatrix out = *this;
  for (auto& x : out.e) x = x * Rat(-1);
  return out;
}

AlgMatrix AlgMatrix::identity(const AlgebraBasis& A, const std::vector<int>& verts) {
  AlgMatrix m(verts, verts);
  for (int i = 0; i < (int)verts.size(); ++i) m.at(i, i) = A.unit(verts[i]);
  return m;
}

const std::vector<int>& ProjComplex::comp(int degree) const {
  static const std::vector<int> empty;
  int k = degree - min_deg;
  if (k < 0 || k >= (int)comps.size()) return empty;
  return comps[k];
}

bool ProjComplex::is_zero_object() const {
  for (const auto& c : comps)
    if (!c.empty()) return false;
  return true;
}

int ProjComplex::total_summands() const {
  int t = 0;
  for (const auto& c : comps) t += (int)c.size();
  return t;
}

ProjComplex ProjComplex::stalk(BasisPtr A, std::vector<int> summand_verts, int degree) {
  ProjComplex c;
  c.A = std::move(A);
  c.min_deg = degree;
  c.comps.push_back(std::move(summand_verts));
  return c;
}

ProjComplex ProjComplex::zero(BasisPtr A) {
  ProjComplex c;
  c.A = std::move(A);
  c.min_deg = 0;
  return c;
}

ProjComplex ProjComplex::free_module(BasisPtr A) {
  std::vector<int> verts(A->num_vertices());
  for (int v = 0; v < (int)verts.size(); ++v) verts[v] = v;
  return stalk(std::move(A), verts, 0);
}

ProjComplex ProjComplex::shifted(int s) const {
  ProjComplex c = *this;
  c.min_deg -= s;
  if (s % 2 != 0)
    for (auto& d : c.diffs) d = -d;
  return c;
}

ProjComplex ProjComplex::direct_sum(const ProjComplex& x, const ProjComplex& y) {
  if (x.is_zero_object()) return y;
  if (y.is_zero_object()) return x;
  ProjComplex c;
  c.A = x.A;
  c.min_deg = std::min(x.min_deg, y.min_deg);
  int top = std::max(x.max_deg(), y.max_deg());
  for (int n = c.min_deg; n <= top; ++n) {
    std::vector<int> comp = x.comp(n);
    const auto& yc = y.comp(n);
    comp.insert(comp.end(), yc.begin(), yc.end());
    c.comps.push_back(std::move(comp));
  }
  for (int n = c.min_deg; n < top; ++n) {
    AlgMatrix d(c.comp(n + 1), c.comp(n));
    auto fill = [&](const ProjComplex& z, int roff, int coff) {
      int k = n - z.min_deg;
      if (k < 0 || k + 1 >= (int)z.comps.size()) return;
      const AlgMatrix& dz = z.diffs[k];
      for (int i = 0; i < dz.rows(); ++i)
        for (int j = 0; j < dz.cols(); ++j) d.at(roff + i, coff + j) = dz.at(i, j);
    };
    fill(x, 0, 0);
    fill(y, (int)x.comp(n + 1).size(), (int)x.comp(n).size());
    c.diffs.push_back(std::move(d));
  }
  c.trim();
  return c;
}

void ProjComplex::trim() {
  while (!comps.empty() && comps.front().empty()) {
    comps.erase(comps.begin());
    if (!diffs.empty()) diffs.erase(diffs.begin());
    ++min_deg;
  }
  while (!comps.empty() && comps.back().empty()) {
    comps.pop_back();
    if (!diffs.empty()) diffs.pop_back();
  }
  if (comps.empty()) {
    min_deg = 0;
    diffs.clear();
  }
}

bool ProjComplex::check_d2() const {
  for (size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!diffs[k + 1].compose(*A, diffs[k]).is_zero()) return false;
  return true;
}

bool ProjComplex::is_minimal() const {
  for (size_t k = 0; k < diffs.size(); ++k)
    for (int i = 0; i < diffs[k].rows(); ++i)
      for (int j = 0; j < diffs[k].cols(); ++j) {
        const AlgElt& x = diffs[k].at(i, j);
        if (x.zero()) continue;
        int u = diffs[k].col_verts[j], v = diffs[k].row_verts[i];
        if (u == v && !is_zero(A->scalar_part(x, v))) return false;
      }
  return true;
}

std::vector<long> ProjComplex::g_vector() const {
  std::vector<long> g(A->num_vertices(), 0);
  for (int k = 0; k < (int)comps.size(); ++k) {
    int deg = min_deg + k;
    long sign = (deg % 2 == 0) ? 1 : -1;
    for (int v : comps[k]) g[v] += sign;
  }
  return g;
}

std::string ProjComplex::key() const {
  std::ostringstream os;
  os << min_deg << "|";
  for (const auto& c : comps) {
    for (int v : c) os << v << ",";
    os << ";";
  }
  os << "|";
  for (const auto& d : diffs) {
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j)
        for (const auto& [w, q] : d.at(i, j).terms) os << i << ":" << j << ":" << w << ":" << q.get_str() << " ";
    os << ";";
  }
  return os.str();
}

const AlgMatrix* ChainMap::mat(int n) const {
  auto it = mats.find(n);
  return it == mats.end() ? nullptr : &it->second;
}

bool ChainMap::commutes() const {
  const AlgebraBasis& A = *X.A;
  /* chain map into Y[shift]: (-1)^shift dY o f^n == f^{n+1} o dX^n */
  long sign = (shift % 2 == 0) ? 1 : -1;
  for (int n = X.min_deg - 1; n <= X.max_deg() + 1; ++n) {
    const auto& src = X.comp(n);
    const auto& tgt_next = Y.comp(n + shift + 1);
    if (src.empty() || tgt_next.empty()) continue;
    AlgMatrix lhs(tgt_next, src);
    AlgMatrix rhs(tgt_next, src);
    const AlgMatrix* fn = mat(n);
    if (fn && n + shift - Y.min_deg >= 0 && n + shift - Y.min_deg < (int)Y.diffs.size()) {
      lhs = Y.diffs[n + shift - Y.min_deg].compose(A, *fn);
      if (sign < 0) lhs = -lhs;
    }
    const AlgMatrix* fn1 = mat(n + 1);
    if (fn1 && n - X.min_deg >= 0 && n - X.min_deg < (int)X.diffs.size())
      rhs = fn1->compose(A, X.diffs[n - X.min_deg]);
    for (size_t t = 0; t < lhs.e.size(); ++t) {
      AlgElt diff = lhs.e[t];
      diff -= rhs.e[t];
      if (!diff.zero()) return false;
    }
  }
  return true;
}

ChainMap ChainMap::zero(const ProjComplex& x, const ProjComplex& y, int shift) {
  ChainMap f;
  f.X = x;
  f.Y = y;
  f.shift = shift;
  return f;
}

ChainMap ChainMap::identity(const ProjComplex& x) {
  ChainMap f;
  f.X = x;
  f.Y = x;
  for (int n = x.min_deg; n <= x.max_deg(); ++n)
    if (!x.comp(n).empty()) f.mats.emplace(n, AlgMatrix::identity(*x.A, x.comp(n)));
  return f;
}

ProjComplex cone(const ChainMap& f) {
  if (f.shift != 0) throw consistency_error("cone expects an unshifted chain map");
  const ProjComplex& X = f.X;
  const ProjComplex& Y = f.Y;
  ProjComplex c;
  c.A = X.A;
  int lo = std::min(X.min_deg - 1, Y.min_deg);
  int hi = std::max(X.max_deg() - 1, Y.max_deg());
  c.min_deg = lo;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> comp = X.comp(n + 1);
    const auto& yc = Y.comp(n);
    comp.insert(comp.end(), yc.begin(), yc.end());
    c.comps.push_back(std::move(comp));
  }
  for (int n = lo; n < hi; ++n) {
    AlgMatrix d(c.comp(n + 1), c.comp(n));
    int xr = (int)X.comp(n + 2).size();
    int xc = (int)X.comp(n + 1).size();
    /* -dX block */
    if (n + 1 - X.min_deg >= 0 && n + 1 - X.min_deg < (int)X.diffs.size()) {
      const AlgMatrix& dx = X.diffs[n + 1 - X.min_deg];
      for (int i = 0; i < dx.rows(); ++i)
        for (int j = 0; j < dx.cols(); ++j) d.at(i, j) = dx.at(i, j) * Rat(-1);
    }
    /* f block: X^{n+1} -> Y^{n+1} */
    if (const AlgMatrix* fm = f.mat(n + 1)) {
      for (int i = 0; i < fm->rows(); ++i)
        for (int j = 0; j < fm->cols(); ++j) d.at(xr + i, j) = fm->at(i, j);
    }
    /* dY block */
    if (n - Y.min_deg >= 0 && n - Y.min_deg < (int)Y.diffs.size()) {
      const AlgMatrix& dy = Y.diffs[n - Y.min_deg];
      for (int i = 0; i < dy.rows(); ++i)
        for (int j = 0; j < dy.cols(); ++j) d.at(xr + i, xc + j) = dy.at(i, j);
    }
    c.diffs.push_back(std::move(d));
  }
  c.trim();
  return c;
}

ProjComplex minimize(ProjComplex c) {
  const AlgebraBasis& A = *c.A;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < (int)c.diffs.size() && !changed; ++k) {
      AlgMatrix& d = c.diffs[k];
      for (int i = 0; i < d.rows() && !changed; ++i)
        for (int j = 0; j < d.cols() && !changed; ++j) {
          const AlgElt& a = d.at(i, j);
          if (a.zero()) continue;
          int u = d.col_verts[j], v = d.row_verts[i];
          if (u != v || !A.is_unit_local(a, v)) continue;
          /* split off the contractible pair (row i at degree k+1, col j at k) */
          AlgElt ainv = A.invert_local(a, v);
          for (int i2 = 0; i2 < d.rows(); ++i2) {
            if (i2 == i || d.at(i2, j).zero()) continue;
            AlgElt fac = A.mul(d.at(i2, j), ainv);
            for (int j2 = 0; j2 < d.cols(); ++j2) {
              if (j2 == j || d.at(i, j2).zero()) continue;
              d.at(i2, j2) -= A.mul(fac, d.at(i, j2));
            }
          }
          /* delete col j of d and, if present, row j of the previous differential */
          auto drop_col = [](AlgMatrix& m, int col) {
            AlgMatrix out(m.row_verts, {});
            out.col_verts = m.col_verts;
            out.col_verts.erase(out.col_verts.begin() + col);
            out.e.resize((size_t)out.rows() * out.col_verts.size());
            for (int r = 0, t = 0; r < m.rows(); ++r)
              for (int cc = 0; cc < m.cols(); ++cc)
                if (cc != col) out.e[t++] = m.at(r, cc);
            return out;
          };
          auto drop_row = [](AlgMatrix& m, int row) {
            AlgMatrix out({}, m.col_verts);
            out.row_verts = m.row_verts;
            out.row_verts.erase(out.row_verts.begin() + row);
            out.e.resize(out.row_verts.size() * (size_t)m.cols());
            for (int r = 0, t = 0; r < m.rows(); ++r) {
              if (r == row) continue;
              for (int cc = 0; cc < m.cols(); ++cc) out.e[t++] = m.at(r, cc);
            }
            return out;
          };
          c.diffs[k] = drop_col(c.diffs[k], j);
          c.diffs[k] = drop_row(c.diffs[k], i);
          if (k > 0) c.diffs[k - 1] = drop_row(c.diffs[k - 1], j);
          if (k + 1 < (int)c.diffs.size()) c.diffs[k + 1] = drop_col(c.diffs[k + 1], i);
          c.comps[k].erase(c.comps[k].begin() + j);
          c.comps[k + 1].erase(c.comps[k + 1].begin() + i);
          changed = true;
        }
    }
  }
  c.trim();
  return c;
}

ProjComplex cone_minimize(const ChainMap& f) { return minimize(cone(f)); }

}  // namespace siltkit
