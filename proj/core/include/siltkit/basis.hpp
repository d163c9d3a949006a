#pragma once

#include <memory>
#include <unordered_map>

#include "siltkit/rewriting.hpp"

namespace siltkit {

/* Element of the finite-dimensional algebra in basis coordinates:
 * sorted sparse vector of (basis word id, coefficient). */
struct AlgElt {
  std::vector<std::pair<int, Rat>> terms;

  bool zero() const { return terms.empty(); }
  void add(int word, const Rat& c);
  AlgElt& operator+=(const AlgElt& o);
  AlgElt& operator-=(const AlgElt& o);
  AlgElt operator*(const Rat& c) const;
  bool operator==(const AlgElt& o) const { return terms == o.terms; }
};

/* K-basis of KQ/I: all irreducible path words, graded by (source, target),
 * with an eagerly tabulated multiplication. Immutable once built; safe to
 * share across threads. */
class AlgebraBasis {
 public:
  static std::shared_ptr<const AlgebraBasis> build(const AlgebraPresentation& pres, NormalizeOptions opts = {});

  const AlgebraPresentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const ReductionSystem& rules() const { return rs_; }

  int dimension() const { return (int)words_.size(); }
  const std::vector<PathWord>& words() const { return words_; }
  const PathWord& word(int id) const { return words_[id]; }
  int word_id(const PathWord& w) const;

  int num_vertices() const { return quiver().num_vertices(); }
  /* ids of basis words from i to j, ascending in the monomial order */
  const std::vector<int>& block(int i, int j) const { return blocks_[i * num_vertices() + j]; }
  int block_dim(int i, int j) const { return (int)block(i, j).size(); }

  int vertex_word(int v) const { return e_ids_[v]; }  // id of e_v
  int source_of(int word) const { return words_[word].source; }
  int target_of(int word) const { return words_[word].target; }
  int length_of(int word) const { return (int)words_[word].length(); }

  AlgElt unit(int v) const;             // e_v
  AlgElt of_word(int word_id) const;
  AlgElt arrow_elt(int arrow_idx) const;
  AlgElt from_lincomb(const LinComb& x) const;  // reduces first
  LinComb to_lincomb(const AlgElt& x) const;

  /* normal-form product; zero when targets do not match */
  AlgElt mul(const AlgElt& a, const AlgElt& b) const;
  const AlgElt& word_product(int w1, int w2) const;

  /* scalar coefficient of e_v inside a (v,v) block element */
  Rat scalar_part(const AlgElt& x, int v) const;
  /* true when x in e_vAe_v is a unit of that local ring */
  bool is_unit_local(const AlgElt& x, int v) const;
  /* inverse in e_vAe_v via geometric series on the nilpotent part */
  AlgElt invert_local(const AlgElt& x, int v) const;

  int max_word_length() const { return max_len_; }

 private:
  AlgebraPresentation pres_;
  ReductionSystem rs_;
  std::vector<PathWord> words_;
  std::map<PathWord, int, WordOrder> ids_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> e_ids_;
  std::vector<AlgElt> mult_;  // dim x dim table
  int max_len_ = 0;

  AlgebraBasis() = default;
};

using BasisPtr = std::shared_ptr<const AlgebraBasis>;

}  // namespace siltkit
