#include <doctest.h>

#include "helpers.hpp"
#include "siltkit/invariants.hpp"

using namespace siltkit;
using tst::basis_of;
using tst::fix;

namespace {

CoxeterPolynomial poly(std::vector<long> asc) {
  CoxeterPolynomial p;
  for (long c : asc) p.push_back(Rat(c));
  return p;
}

}  // namespace

TEST_CASE("cartan: counting paths per block") {
  auto c2 = cartan(*fix("a2-path"));
  CHECK(c2.C.at(0, 0) == Rat(1));
  CHECK(c2.C.at(0, 1) == Rat(1));
  CHECK(c2.C.at(1, 0) == Rat(0));
  CHECK(c2.C.at(1, 1) == Rat(1));
  REQUIRE(c2.Phi.has_value());
  CHECK(c2.Phi->at(0, 0) == Rat(-1));
  CHECK(c2.Phi->at(0, 1) == Rat(-1));
  CHECK(c2.Phi->at(1, 0) == Rat(1));
  CHECK(c2.Phi->at(1, 1) == Rat(0));

  auto cn = cartan(*basis_of(nakayama_cyclic(2, 3)));
  CHECK(cn.C.at(0, 0) == Rat(2));
  CHECK(cn.C.at(0, 1) == Rat(1));
  CHECK(cn.C.at(1, 0) == Rat(1));
  CHECK(cn.C.at(1, 1) == Rat(2));

  auto ck = cartan(*fix("point"));
  CHECK(ck.C.at(0, 0) == Rat(1));
}

TEST_CASE("coxeter: A2 sanity and the two seven-vertex computations") {
  CHECK(coxeter_polynomial(cartan(*fix("a2-path"))) == poly({1, 1, 1}));
  /* (x+1)(x^4+1) */
  CHECK(coxeter_polynomial(cartan(*fix("gamma-sub5"))) == poly({1, 1, 0, 0, 1, 1}));
  /* (x+1)(x^6-x^3+1) */
  CHECK(coxeter_polynomial(cartan(*fix("gamma-sec2-5"))) == poly({1, 1, 0, -1, -1, 0, 1, 1}));
}

TEST_CASE("coxeter: singular Cartan is reported") {
  /* N(2,2): C = [[1,1],[1,1]] is singular */
  auto c = cartan(*basis_of(nakayama_cyclic(2, 2)));
  CHECK(is_zero(c.detC));
  CHECK_THROWS_AS(coxeter_polynomial(c), singular_cartan);
}

TEST_CASE("coxeter polynomials are self-reciprocal on the fixture shelf") {
  for (const char* id : {"a2-path", "a3-path", "a5-path", "commutative-square", "example-kronecker",
                         "example-y", "gamma-sub4", "gamma-sub5", "gamma-sec2-5", "extended-canonical-246",
                         "bongartz-fails"}) {
    auto c = cartan(*fix(id));
    if (is_zero(c.detC)) continue;
    CHECK(self_reciprocal(coxeter_polynomial(c)));
  }
}

TEST_CASE("dynkin tables from exponent data") {
  CHECK(dynkin_coxeter_polynomial({DynkinFamily::A, 2}) == poly({1, 1, 1}));
  CHECK(dynkin_coxeter_polynomial({DynkinFamily::A, 5}) == poly({1, 1, 1, 1, 1, 1}));
  CHECK(dynkin_coxeter_polynomial({DynkinFamily::D, 5}) == poly({1, 1, 0, 0, 1, 1}));
  /* D12 = (x+1)(x^11+1) */
  CHECK(dynkin_coxeter_polynomial({DynkinFamily::D, 12}) == poly({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}));
  CHECK(dynkin_coxeter_polynomial({DynkinFamily::E, 6}) == poly({1, 1, 0, -1, 0, 1, 1}));
  CHECK(dynkin_coxeter_polynomial({DynkinFamily::E, 7}) == poly({1, 1, 0, -1, -1, 0, 1, 1}));
  CHECK(dynkin_coxeter_polynomial({DynkinFamily::E, 8}) == poly({1, 1, 0, -1, -1, -1, 0, 1, 1}));
}

TEST_CASE("dynkin recognition: quiver shape") {
  auto a5 = recognize_dynkin(path_an(5).quiver);
  REQUIRE(a5.has_value());
  CHECK(a5->type == DynkinType{DynkinFamily::A, 5});
  CHECK(a5->grade == MatchGrade::Shape);

  CHECK(recognize_dynkin(fixture("example-y").quiver) == std::nullopt);  // two branch vertices
  CHECK(recognize_dynkin(fixture("kronecker-quiver").quiver) == std::nullopt);
  CHECK(recognize_dynkin(nakayama_cyclic(3, 2).quiver) == std::nullopt);

  Quiver d5;
  for (int i = 0; i < 5; ++i) d5.add_vertex(std::to_string(i));
  d5.add_arrow_idx("a", 0, 2, 0);
  d5.add_arrow_idx("b", 1, 2, 0);
  d5.add_arrow_idx("c", 2, 3, 0);
  d5.add_arrow_idx("d", 3, 4, 0);
  auto m = recognize_dynkin(d5);
  REQUIRE(m.has_value());
  CHECK(m->type == DynkinType{DynkinFamily::D, 5});
}

TEST_CASE("dynkin recognition: polynomial evidence") {
  auto m = recognize_dynkin(coxeter_polynomial(cartan(*fix("gamma-sub5"))));
  REQUIRE(m.has_value());
  CHECK(m->type == DynkinType{DynkinFamily::D, 5});
  CHECK(m->grade == MatchGrade::PolynomialEvidence);

  auto e7 = recognize_dynkin(coxeter_polynomial(cartan(*fix("gamma-sec2-5"))));
  REQUIRE(e7.has_value());
  CHECK(e7->type == DynkinType{DynkinFamily::E, 7});

  /* extended canonical <2,4,6>: matches the D12 table while the
   * presentation is far from hereditary */
  auto ec = fix("extended-canonical-246");
  auto match = recognize_dynkin(coxeter_polynomial(cartan(*ec)));
  REQUIRE(match.has_value());
  CHECK(match->type == DynkinType{DynkinFamily::D, 12});
  CHECK(match->grade == MatchGrade::PolynomialEvidence);
  CHECK(!ec->rules().rules.empty());
}

TEST_CASE("quiver-mode and polynomial-mode agree on hereditary Dynkin fixtures") {
  std::vector<Quiver> quivers;
  for (int n = 1; n <= 8; ++n) quivers.push_back(path_an(n).quiver);
  for (int n = 4; n <= 8; ++n) {
    Quiver d;
    for (int i = 0; i < n; ++i) d.add_vertex(std::to_string(i));
    d.add_arrow_idx("a", 0, 2, 0);
    d.add_arrow_idx("b", 1, 2, 0);
    for (int i = 2; i + 1 < n; ++i) d.add_arrow_idx("c" + std::to_string(i), i, i + 1, 0);
    quivers.push_back(d);
  }
  for (int n = 6; n <= 8; ++n) {
    /* bullet at position 2 of a path of length n-1 */
    Quiver e;
    for (int i = 0; i < n; ++i) e.add_vertex(std::to_string(i));
    for (int i = 0; i + 2 < n; ++i) e.add_arrow_idx("p" + std::to_string(i), i, i + 1, 0);
    e.add_arrow_idx("q", n - 1, 2, 0);
    quivers.push_back(e);
  }
  for (const auto& q : quivers) {
    auto shape = recognize_dynkin(q);
    REQUIRE(shape.has_value());
    auto B = basis_of(path_algebra(q, "h"));
    auto pm = recognize_dynkin(coxeter_polynomial(cartan(*B)));
    REQUIRE(pm.has_value());
    CHECK(shape->type == pm->type);
  }
}

TEST_CASE("structure flags: the gentle one-cycle example") {
  auto f = structure_flags(fix("example-kronecker"));
  CHECK(f.is_gentle);
  CHECK(f.one_cycle.has_value());
  CHECK(f.clock == ClockState::Violated);
  CHECK(((f.clock_cw == 1 && f.clock_ccw == 0) || (f.clock_cw == 0 && f.clock_ccw == 1)));
  CHECK(!f.is_weakly_symmetric);
  CHECK(!f.has_multiple_arrows);
  CHECK(!f.is_hereditary);
}

TEST_CASE("structure flags: Nakayama detection and weak symmetry") {
  auto f23 = structure_flags(basis_of(nakayama_cyclic(2, 3)));
  REQUIRE(f23.nakayama_cyclic.has_value());
  CHECK(f23.nakayama_cyclic->first == 2);
  CHECK(f23.nakayama_cyclic->second == 3);
  CHECK(f23.is_weakly_symmetric);  // 3 = 1 mod 2
  CHECK(f23.topsocle_right_ok);
  CHECK(f23.topsocle_left_ok);

  auto f34 = structure_flags(basis_of(nakayama_cyclic(3, 4)));
  CHECK(f34.is_weakly_symmetric);  // 4 = 1 mod 3
  auto f35 = structure_flags(basis_of(nakayama_cyclic(3, 5)));
  CHECK(!f35.is_weakly_symmetric);  // socle sits at the wrong vertex
  auto fn2 = structure_flags(basis_of(nakayama_cyclic(5, 2)));
  CHECK(fn2.is_gentle);
  CHECK(fn2.one_cycle.has_value());
  CHECK(fn2.clock == ClockState::Violated);

  auto fa = structure_flags(basis_of(nakayama_linear(6, 3)));
  REQUIRE(fa.nakayama_linear.has_value());
  CHECK(fa.nakayama_linear->first == 6);
  CHECK(fa.nakayama_linear->second == 3);
  auto fh = structure_flags(fix("a3-path"));
  REQUIRE(fh.nakayama_linear.has_value());
  CHECK(fh.nakayama_linear->second == 3);  // hereditary: rad^r vacuous, normalized to n
  CHECK(fh.is_hereditary);

  auto f2 = structure_flags(fix("a2-path"));
  CHECK(!f2.is_weakly_symmetric);
  CHECK(!f2.topsocle_right_ok);
}

TEST_CASE("structure flags: clock counts against an independent cycle walk") {
  std::mt19937 rng(99);
  int done = 0;
  while (done < 20) {
    int n = std::uniform_int_distribution<int>(3, 8)(rng);
    Quiver q;
    for (int v = 0; v < n; ++v) q.add_vertex("v" + std::to_string(v));
    std::vector<int> orient(n);
    for (int i = 0; i < n; ++i) orient[i] = std::uniform_int_distribution<int>(0, 1)(rng);
    for (int i = 0; i < n; ++i) {
      int u = i, w = (i + 1) % n;
      if (orient[i])
        q.add_arrow_idx("a" + std::to_string(i), u, w, 0);
      else
        q.add_arrow_idx("a" + std::to_string(i), w, u, 0);
    }
    /* choose length-2 relations along the cycle */
    AlgebraPresentation p;
    p.quiver = q;
    p.name = "randcycle";
    int added = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || q.arrows[a].target != q.arrows[b].source) continue;
        if (std::uniform_int_distribution<int>(0, 1)(rng)) {
          p.relations.push_back(word_comb(make_path(q, {a, b})));
          ++added;
        }
      }
    bool oriented_cycle = true;
    for (int i = 0; i < n; ++i) oriented_cycle = oriented_cycle && (orient[i] == orient[0]);
    if (oriented_cycle && added == 0) continue;  // infinite dimensional
    auto B = basis_of(p);
    auto f = structure_flags(B);
    REQUIRE(f.is_gentle);
    REQUIRE(f.one_cycle.has_value());
    /* independent recount by walking the stored cycle */
    int cw = 0, ccw = 0;
    const auto& cyc = f.one_cycle->cycle;
    std::map<int, int> dir;
    for (auto [ai, d] : cyc) dir[ai] = d;
    for (const auto& rel : p.relations) {
      int a = rel.terms.begin()->first.arrows[0];
      int b = rel.terms.begin()->first.arrows[1];
      if (dir[a] > 0 && dir[b] > 0) cw++;
      if (dir[a] < 0 && dir[b] < 0) ccw++;
    }
    CHECK(f.clock_cw == cw);
    CHECK(f.clock_ccw == ccw);
    CHECK((f.clock == (cw == ccw ? ClockState::Satisfied : ClockState::Violated)));
    ++done;
  }
}

TEST_CASE("resolutions: lengths on the worked examples") {
  auto A2 = fix("a2-path");
  auto r = min_proj_resolution(Representation::simple(A2, 0));
  CHECK(!r.truncated);
  CHECK(r.complex.num_degrees() <= 2);  // hereditary

  auto BF = fix("bongartz-fails");
  auto rs = min_proj_resolution(Representation::simple(BF, 0));
  CHECK(!rs.truncated);
  CHECK(rs.complex.min_deg == -2);  // projective dimension 2
  CHECK(rs.complex.comp(-2) == std::vector<int>{2});
  CHECK(rs.complex.comp(-1) == std::vector<int>{1});
  CHECK(rs.complex.comp(0) == std::vector<int>{0});
  CHECK(rs.complex.check_d2());
  CHECK(rs.complex.is_minimal());

  auto EY = fix("example-y");
  auto ry = min_proj_resolution(Representation::simple(EY, 3));
  CHECK(!ry.truncated);  // finite global dimension

  /* dual numbers: the simple has an infinite resolution */
  auto DN = fix("dual-numbers");
  auto rd = min_proj_resolution(Representation::simple(DN, 0), 6);
  CHECK(rd.truncated);
}

TEST_CASE("tor and cohomology: the triangle example at vertex 3") {
  auto A = fix("example-kronecker");
  auto tp = tor_profile(*A, {2});
  CHECK(tp.complete);
  CHECK(tp.multiplication_kernel_dim == 1);
  for (const auto& [k, d] : tp.dims)
    if (k >= 1) CHECK(d == 0);

  auto h = ae_cohomology(*A, {2});
  CHECK(h[0] == 3);
  CHECK(h[-1] == 1);

  auto s = is_stratifying(*A, {2});
  CHECK(s.state == StratifyingState::No);
  CHECK(s.witness_degree == -1);
}

TEST_CASE("tor: hereditary algebras have stratifying idempotents") {
  for (int n = 2; n <= 5; ++n) {
    auto A = basis_of(path_an(n));
    for (int v = 0; v < n; ++v) {
      auto s = is_stratifying(*A, {v});
      CHECK(s.state == StratifyingState::Yes);
    }
  }
}

TEST_CASE("tor: source and sink idempotents are stratifying") {
  auto G = fix("gamma-sec2-5");
  auto s_source = is_stratifying(*G, {3});  // vertex 4, a source
  CHECK(s_source.state == StratifyingState::Yes);
  auto s_sink = is_stratifying(*G, {0});  // vertex 1, a sink
  CHECK(s_sink.state == StratifyingState::Yes);
}

TEST_CASE("tor: full vertex set is trivially stratifying") {
  auto A = fix("example-kronecker");
  auto tp = tor_profile(*A, {0, 1, 2});
  CHECK(tp.complete);
  CHECK(tp.multiplication_kernel_dim == 0);
  for (const auto& [k, d] : tp.dims)
    if (k >= 1) CHECK(d == 0);
  CHECK(is_stratifying(*A, {0, 1, 2}).state == StratifyingState::Yes);
}

TEST_CASE("tor: graded Kronecker shadow of the monomial Atilde(2,2)") {
  auto A = fix("atilde-monomial-2-2");
  /* middle vertices of the two branches */
  std::vector<int> mids;
  for (int v = 0; v < A->num_vertices(); ++v) {
    const auto& name = A->quiver().vertex_names[v];
    if (name[0] == 'u' || name[0] == 'v') mids.push_back(v);
  }
  REQUIRE(mids.size() == 2);
  auto h = ae_cohomology(*A, mids);
  CHECK(h[-1] == 2);
  CHECK(h[0] == 2);
}

TEST_CASE("tor: infinite resolution over the truncation is reported honestly") {
  auto A = basis_of(nakayama_cyclic(2, 3));
  auto s = is_stratifying(*A, {0}, 12);
  CHECK(s.state == StratifyingState::No);
  CHECK(s.witness_degree == -2);
}

TEST_CASE("a stratifying idempotent has no negative cohomology") {
  auto G = fix("gamma-sec2-5");
  for (int v : {0, 3}) {
    auto s = is_stratifying(*G, {v});
    REQUIRE(s.state == StratifyingState::Yes);
    auto h = ae_cohomology(*G, {v});
    for (const auto& [i, d] : h)
      if (i < 0) CHECK(d == 0);
  }
}
