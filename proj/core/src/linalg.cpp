#include "siltkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "siltkit/errors.hpp"

namespace siltkit {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (c_ != o.r_) throw consistency_error("matrix product shape mismatch");
  RatMat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (siltkit::is_zero(at(i, k))) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (siltkit::is_zero(o.at(k, j))) continue;
        p.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return p;
}

RatMat RatMat::operator+(const RatMat& o) const {
  RatMat s(r_, c_);
  for (size_t i = 0; i < d_.size(); ++i) s.d_[i] = d_[i] + o.d_[i];
  return s;
}

RatMat RatMat::operator-() const {
  RatMat s(r_, c_);
  for (size_t i = 0; i < d_.size(); ++i) s.d_[i] = -d_[i];
  return s;
}

bool RatMat::is_zero() const {
  for (const auto& v : d_)
    if (!siltkit::is_zero(v)) return false;
  return true;
}

namespace {

/* Gauss into row echelon; returns (echelon copy, pivot cols, det sign info). */
struct Echelon {
  RatMat m{0, 0};
  std::vector<int> pivot_cols;
  Rat det_factor = 1;  // product of pivots with permutation sign, when square
};

Echelon gauss(const RatMat& a) {
  Echelon e{a, {}, 1};
  int r = a.rows(), c = a.cols();
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (!siltkit::is_zero(e.m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < c; ++j) std::swap(e.m.at(piv, j), e.m.at(row, j));
      e.det_factor = -e.det_factor;
    }
    e.det_factor *= e.m.at(row, col);
    for (int i = row + 1; i < r; ++i) {
      if (siltkit::is_zero(e.m.at(i, col))) continue;
      Rat f = e.m.at(i, col) / e.m.at(row, col);
      for (int j = col; j < c; ++j) e.m.at(i, j) -= f * e.m.at(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

int RatMat::rank() const { return (int)gauss(*this).pivot_cols.size(); }

Rat RatMat::det() const {
  if (r_ != c_) throw consistency_error("determinant of a nonsquare matrix");
  Echelon e = gauss(*this);
  if ((int)e.pivot_cols.size() < r_) return 0;
  return e.det_factor;
}

std::optional<RatMat> RatMat::inverse() const {
  if (r_ != c_) return std::nullopt;
  RatMat aug(r_, 2 * c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = 1;
  }
  // Gauss-Jordan
  int row = 0;
  for (int col = 0; col < c_; ++col) {
    int piv = -1;
    for (int i = row; i < r_; ++i)
      if (!siltkit::is_zero(aug.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != row)
      for (int j = 0; j < 2 * c_; ++j) std::swap(aug.at(piv, j), aug.at(row, j));
    Rat d = aug.at(row, col);
    for (int j = 0; j < 2 * c_; ++j) aug.at(row, j) /= d;
    for (int i = 0; i < r_; ++i) {
      if (i == row || siltkit::is_zero(aug.at(i, col))) continue;
      Rat f = aug.at(i, col);
      for (int j = 0; j < 2 * c_; ++j) aug.at(i, j) -= f * aug.at(row, j);
    }
    ++row;
  }
  RatMat inv(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
  return inv;
}

std::vector<std::vector<Rat>> RatMat::kernel() const {
  Echelon e = gauss(*this);
  std::vector<char> is_piv(c_, 0);
  for (int col : e.pivot_cols) is_piv[col] = 1;
  std::vector<std::vector<Rat>> out;
  for (int free = 0; free < c_; ++free) {
    if (is_piv[free]) continue;
    std::vector<Rat> x(c_, Rat(0));
    x[free] = 1;
    // back substitution over echelon rows
    for (int k = (int)e.pivot_cols.size() - 1; k >= 0; --k) {
      int pc = e.pivot_cols[k];
      Rat s = 0;
      for (int j = pc + 1; j < c_; ++j)
        if (!siltkit::is_zero(e.m.at(k, j)) && !siltkit::is_zero(x[j])) s += e.m.at(k, j) * x[j];
      x[pc] = -s / e.m.at(k, pc);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& b) const {
  RatMat aug(r_, c_ + 1);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_) = b[i];
  }
  Echelon e = gauss(aug);
  for (int col : e.pivot_cols)
    if (col == c_) return std::nullopt;  // inconsistent
  std::vector<Rat> x(c_, Rat(0));
  for (int k = (int)e.pivot_cols.size() - 1; k >= 0; --k) {
    int pc = e.pivot_cols[k];
    Rat s = e.m.at(k, c_);
    for (int j = pc + 1; j < c_; ++j)
      if (!siltkit::is_zero(x[j])) s -= e.m.at(k, j) * x[j];
    x[pc] = s / e.m.at(k, pc);
  }
  return x;
}

std::vector<Rat> RatMat::charpoly() const {
  if (r_ != c_) throw consistency_error("characteristic polynomial of a nonsquare matrix");
  int n = r_;
  /* Faddeev-LeVerrier */
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMat m = RatMat(n, n);
  RatMat id = RatMat::identity(n);
  RatMat mk = *this;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      RatMat adj = mk;
      for (int i = 0; i < n; ++i) adj.at(i, i) += c[n - k + 1];
      mk = (*this) * adj;
    }
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
  for (const auto& [pc, row] : rows_) {
    if (siltkit::is_zero(v[pc])) continue;
    Rat f = v[pc];
    for (int j = 0; j < width_; ++j)
      if (!siltkit::is_zero(row[j])) v[j] -= f * row[j];
  }
  return v;
}

bool RowSpace::insert(std::vector<Rat> v) {
  v = reduce(std::move(v));
  int pc = -1;
  for (int j = 0; j < width_; ++j)
    if (!siltkit::is_zero(v[j])) {
      pc = j;
      break;
    }
  if (pc < 0) return false;
  Rat d = v[pc];
  for (auto& x : v) x /= d;
  rows_.push_back({pc, std::move(v)});
  return true;
}

bool RowSpace::contains(const std::vector<Rat>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (!siltkit::is_zero(x)) return false;
  return true;
}

void SparseMat::add(int i, int j, const Rat& v) {
  if (siltkit::is_zero(v)) return;
  rows_[i].push_back({j, v});
}

void SparseMat::finalize_row(int i) {
  auto& row = rows_[i];
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rat>> out;
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.push_back({c, v});
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return siltkit::is_zero(p.second); }), out.end());
  row = std::move(out);
}

size_t SparseMat::nnz() const {
  size_t t = 0;
  for (const auto& r : rows_) t += r.size();
  return t;
}

SparseMat::ElimResult SparseMat::eliminate(bool keep_pivots) const {
  ElimResult res;
  res.pivot_col.assign(c_, 0);
  std::vector<std::vector<std::pair<int, Rat>>> work = rows_;
  int m = r_;
  std::vector<char> active(m, 1);
  std::vector<int> colcount(c_, 0);
  /* lazy column index: rows are appended, never erased; stale entries are
   * skipped by re-checking membership */
  std::vector<std::vector<int>> colrows(c_);
  for (int i = 0; i < m; ++i)
    for (const auto& [c, v] : work[i]) {
      colcount[c]++;
      colrows[c].push_back(i);
    }

  auto row_entry = [&](int row, int col) -> const Rat* {
    const auto& r = work[row];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it == r.end() || it->first != col) return nullptr;
    return &it->second;
  };

  using QE = std::pair<size_t, int>;  // (nnz, row)
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  for (int i = 0; i < m; ++i)
    if (!work[i].empty()) pq.push({work[i].size(), i});

  auto axpy = [&](int dst, const std::vector<std::pair<int, Rat>>& src, const Rat& f) {
    std::vector<std::pair<int, Rat>> out;
    out.reserve(work[dst].size() + src.size());
    auto a = work[dst].begin(), ae = work[dst].end();
    auto b = src.begin(), be = src.end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == ae || b->first < a->first) {
        Rat v = f * b->second;
        if (!siltkit::is_zero(v)) {
          colcount[b->first]++;
          colrows[b->first].push_back(dst);
          out.push_back({b->first, std::move(v)});
        }
        ++b;
      } else {
        Rat v = a->second + f * b->second;
        if (siltkit::is_zero(v)) {
          colcount[a->first]--;
        } else {
          out.push_back({a->first, std::move(v)});
        }
        ++a;
        ++b;
      }
    }
    work[dst] = std::move(out);
  };

  while (!pq.empty()) {
    auto [nn, ri] = pq.top();
    pq.pop();
    if (!active[ri] || work[ri].empty() || work[ri].size() != nn) continue;  // stale entry

    /* Markowitz-flavoured pivot: in the lightest row pick the rarest column */
    int pcol = -1;
    size_t best = SIZE_MAX;
    Rat pval;
    for (const auto& [c, v] : work[ri]) {
      if ((size_t)colcount[c] < best) {
        best = colcount[c];
        pcol = c;
        pval = v;
      }
    }
    active[ri] = 0;
    res.rank++;
    res.pivot_col[pcol] = 1;

    /* clear the pivot column from every other active row */
    std::vector<int> victims;
    victims.swap(colrows[pcol]);
    std::sort(victims.begin(), victims.end());
    victims.erase(std::unique(victims.begin(), victims.end()), victims.end());
    for (int vi : victims) {
      if (vi == ri || !active[vi]) continue;
      const Rat* coef = row_entry(vi, pcol);
      if (!coef) continue;  // stale index entry
      axpy(vi, work[ri], -(*coef) / pval);
      if (!work[vi].empty()) pq.push({work[vi].size(), vi});
    }

    for (const auto& [c, v] : work[ri]) colcount[c]--;
    if (keep_pivots) res.pivots.push_back({pcol, std::move(work[ri])});
    work[ri].clear();
  }
  return res;
}

int SparseMat::rank() const { return eliminate(false).rank; }

std::vector<std::vector<Rat>> SparseMat::kernel_basis() const {
  ElimResult e = eliminate(true);
  std::vector<std::vector<Rat>> out;
  for (int free = 0; free < c_; ++free) {
    if (e.pivot_col[free]) continue;
    std::vector<Rat> x(c_, Rat(0));
    x[free] = 1;
    for (int k = (int)e.pivots.size() - 1; k >= 0; --k) {
      const auto& [pc, row] = e.pivots[k];
      Rat s = 0;
      Rat pval;
      for (const auto& [c, v] : row) {
        if (c == pc)
          pval = v;
        else if (!siltkit::is_zero(x[c]))
          s += v * x[c];
      }
      x[pc] = -s / pval;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> p(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (siltkit::is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  }
  return p;
}

std::vector<Rat> poly_div_exact(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> rem = a, q;
  if (b.empty() || siltkit::is_zero(b.back())) throw consistency_error("division by zero polynomial");
  if (rem.size() < b.size()) throw consistency_error("inexact polynomial division");
  q.assign(rem.size() - b.size() + 1, Rat(0));
  for (int k = (int)q.size() - 1; k >= 0; --k) {
    Rat f = rem[k + b.size() - 1] / b.back();
    q[k] = f;
    if (siltkit::is_zero(f)) continue;
    for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= f * b[j];
  }
  for (const auto& r : rem)
    if (!siltkit::is_zero(r)) throw consistency_error("inexact polynomial division");
  return q;
}

std::string poly_str(const std::vector<Rat>& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int i = (int)p.size() - 1; i >= 0; --i) {
    if (siltkit::is_zero(p[i])) continue;
    Rat c = p[i];
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rat ab = abs(c);
    if (ab != 1 || i == 0) os << ab.get_str();
    if (i > 0) {
      if (ab != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace siltkit
