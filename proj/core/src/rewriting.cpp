#include "siltkit/rewriting.hpp"

#include <deque>

namespace siltkit {

namespace {

/* first position where some rule lead occurs as a subword, or npos */
struct Occurrence {
  size_t pos = std::string::npos;
  const PathWord* lead = nullptr;
  const LinComb* tail = nullptr;
};

Occurrence find_occurrence(const std::map<PathWord, LinComb, WordOrder>& rules, const PathWord& w) {
  Occurrence occ;
  for (size_t pos = 0; pos < w.arrows.size(); ++pos) {
    for (const auto& [lead, tail] : rules) {
      size_t len = lead.arrows.size();
      if (len == 0 || pos + len > w.arrows.size()) continue;
      if (std::equal(lead.arrows.begin(), lead.arrows.end(), w.arrows.begin() + pos)) {
        occ.pos = pos;
        occ.lead = &lead;
        occ.tail = &tail;
        return occ;
      }
    }
  }
  return occ;
}

PathWord splice(const Quiver& q, const PathWord& w, size_t pos, size_t len, const PathWord& repl) {
  std::vector<int> seq;
  seq.insert(seq.end(), w.arrows.begin(), w.arrows.begin() + pos);
  seq.insert(seq.end(), repl.arrows.begin(), repl.arrows.end());
  seq.insert(seq.end(), w.arrows.begin() + pos + len, w.arrows.end());
  if (seq.empty()) return PathWord::vertex(w.source);
  return make_path(q, seq);
}

}  // namespace

bool ReductionSystem::word_reducible(const PathWord& w) const {
  return find_occurrence(rules, w).pos != std::string::npos;
}

LinComb ReductionSystem::normal_form_word(const PathWord& w) const {
  return normal_form(word_comb(w));
}

LinComb ReductionSystem::normal_form(const LinComb& x) const {
  /* Rewriting strictly decreases the multiset of words in the monomial
   * order, so this terminates. */
  LinComb work = x;
  LinComb done;
  while (!work.zero()) {
    auto it = std::prev(work.terms.end());
    PathWord w = it->first;
    Rat c = it->second;
    work.terms.erase(it);
    Occurrence occ = find_occurrence(rules, w);
    if (occ.pos == std::string::npos) {
      done.add_term(w, c);
      continue;
    }
    for (const auto& [tw, tc] : occ.tail->terms)
      work.add_term(splice(*quiver, w, occ.pos, occ.lead->arrows.size(), tw), c * tc);
  }
  return done;
}

namespace {

/* lead -> monic rule (lead |-> lead - element/leadcoeff) */
void insert_rule(ReductionSystem& rs, const LinComb& elem, std::deque<LinComb>& pending) {
  const PathWord lead = elem.lead();
  if ((int)lead.length() > rs.word_cap)
    throw dimension_unbounded("rewriting lead exceeds word-length cap " + std::to_string(rs.word_cap) +
                              "; the ideal does not look admissible");
  Rat lc = elem.lead_coeff();
  LinComb tail;
  for (const auto& [w, c] : elem.terms)
    if (!(w == lead)) tail.add_term(w, -c / lc);

  /* inter-reduction: any existing rule whose lead contains the new lead is
   * withdrawn and re-queued as a raw element */
  std::vector<PathWord> evict;
  for (const auto& [l, t] : rs.rules) {
    if (l.arrows.size() < lead.arrows.size()) continue;
    for (size_t pos = 0; pos + lead.arrows.size() <= l.arrows.size(); ++pos)
      if (std::equal(lead.arrows.begin(), lead.arrows.end(), l.arrows.begin() + pos)) {
        evict.push_back(l);
        break;
      }
  }
  for (const auto& l : evict) {
    LinComb full = word_comb(l);
    full -= rs.rules[l];
    rs.rules.erase(l);
    pending.push_back(full);
  }

  rs.rules[lead] = tail;

  /* overlap ambiguities with every rule (including itself): u = a|s, v = s|b */
  auto overlaps = [&pending, &rs](const PathWord& u, const LinComb& ut, const PathWord& v, const LinComb& vt) {
    size_t lu = u.arrows.size(), lv = v.arrows.size();
    for (size_t k = 1; k < lu && k < lv; ++k) {
      /* suffix of u of length k == prefix of v of length k */
      if (!std::equal(u.arrows.end() - k, u.arrows.end(), v.arrows.begin())) continue;
      /* S-element: tail(u)*b - a*tail(v), where u*b = a*v is the ambiguity */
      std::vector<int> bseq(v.arrows.begin() + k, v.arrows.end());
      std::vector<int> aseq(u.arrows.begin(), u.arrows.end() - k);
      LinComb s;
      for (const auto& [w, c] : ut.terms) {
        std::vector<int> seq = w.arrows;
        seq.insert(seq.end(), bseq.begin(), bseq.end());
        s.add_term(seq.empty() ? PathWord::vertex(u.source) : make_path(*rs.quiver, seq), c);
      }
      for (const auto& [w, c] : vt.terms) {
        std::vector<int> seq = aseq;
        seq.insert(seq.end(), w.arrows.begin(), w.arrows.end());
        s.add_term(seq.empty() ? PathWord::vertex(u.source) : make_path(*rs.quiver, seq), -c);
      }
      if (!s.zero()) pending.push_back(s);
    }
  };
  const LinComb& newtail = rs.rules[lead];
  for (const auto& [l, t] : rs.rules) {
    overlaps(lead, newtail, l, t);
    if (!(l == lead)) overlaps(l, t, lead, newtail);
  }
}

}  // namespace

ReductionSystem normalize(const AlgebraPresentation& pres, NormalizeOptions opts) {
  pres.check_admissible();
  ReductionSystem rs;
  rs.quiver = &pres.quiver;
  rs.word_cap = opts.word_cap;

  std::deque<LinComb> pending(pres.relations.begin(), pres.relations.end());
  while (!pending.empty()) {
    LinComb elem = rs.normal_form(pending.front());
    pending.pop_front();
    if (elem.zero()) continue;  // ambiguity resolved: confluence holds here
    insert_rule(rs, elem, pending);
  }

  /* normalize all tails against the final rule set */
  for (auto& [l, t] : rs.rules) t = rs.normal_form(t);
  rs.complete = true;
  return rs;
}

}  // namespace siltkit
