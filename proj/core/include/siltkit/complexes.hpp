#pragma once

#include "siltkit/basis.hpp"

namespace siltkit {

/* Matrix with entries in the algebra; the entry mapping summand e_uA
 * (column, vertex u) into e_vA (row, vertex v) lies in e_vAe_u. */
struct AlgMatrix {
  std::vector<int> row_verts;  // target summand vertices
  std::vector<int> col_verts;  // source summand vertices
  std::vector<AlgElt> e;

  AlgMatrix() = default;
  AlgMatrix(std::vector<int> rows, std::vector<int> cols)
      : row_verts(std::move(rows)), col_verts(std::move(cols)), e(row_verts.size() * col_verts.size()) {}

  int rows() const { return (int)row_verts.size(); }
  int cols() const { return (int)col_verts.size(); }
  AlgElt& at(int i, int j) { return e[(size_t)i * col_verts.size() + j]; }
  const AlgElt& at(int i, int j) const { return e[(size_t)i * col_verts.size() + j]; }
  bool is_zero() const;

  /* composition this o g (apply g first) */
  AlgMatrix compose(const AlgebraBasis& A, const AlgMatrix& g) const;
  AlgMatrix operator-() const;
  static AlgMatrix identity(const AlgebraBasis& A, const std::vector<int>& verts);
};

/* Bounded complex of finitely generated projectives, cochain convention:
 * d^n : C^n -> C^{n+1}, d o d = 0. Components are ordered lists of summand
 * vertices (P_v per entry). */
struct ProjComplex {
  BasisPtr A;
  int min_deg = 0;
  std::vector<std::vector<int>> comps;  // comps[k] lives in degree min_deg + k
  std::vector<AlgMatrix> diffs;         // diffs[k] : comps[k] -> comps[k+1]

  int num_degrees() const { return (int)comps.size(); }
  int max_deg() const { return min_deg + num_degrees() - 1; }
  const std::vector<int>& comp(int degree) const;
  bool is_zero_object() const;
  int total_summands() const;

  /* stalk complex of a projective bundle concentrated in one degree */
  static ProjComplex stalk(BasisPtr A, std::vector<int> summand_verts, int degree = 0);
  static ProjComplex zero(BasisPtr A);
  static ProjComplex free_module(BasisPtr A);  // A itself in degree 0

  ProjComplex shifted(int s) const;  // X[s], degrees drop by s, differential gains (-1)^s
  static ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);

  void trim();             // drop empty boundary degrees
  bool check_d2() const;   // d o d == 0 after reduction
  bool is_minimal() const; // all differential entries in the radical

  /* alternating-sum class in K0 against the projective basis */
  std::vector<long> g_vector() const;

  /* literal serialization; equal strings imply equal complexes */
  std::string key() const;
};

/* Degreewise map f^n : X^n -> Y^{n+shift}; commutes with differentials up
 * to the shift sign when it encodes a chain map X -> Y[shift]. */
struct ChainMap {
  ProjComplex X, Y;
  int shift = 0;
  /* maps keyed by source degree n; absent degrees are zero */
  std::map<int, AlgMatrix> mats;

  const AlgMatrix* mat(int n) const;
  bool commutes() const;
  static ChainMap zero(const ProjComplex& x, const ProjComplex& y, int shift = 0);
  static ChainMap identity(const ProjComplex& x);
};

/* mapping cone C(f)^n = X^{n+1} + Y^n with d = [[-dX, 0], [f, dY]] */
ProjComplex cone(const ChainMap& f);

/* split off contractible summands until every differential entry lies in
 * the radical; homotopy equivalent to the input */
ProjComplex minimize(ProjComplex c);

ProjComplex cone_minimize(const ChainMap& f);

}  // namespace siltkit
