#include "doctest.h"
#include "rootdata.hpp"
#include "test_support.hpp"

using namespace satrop;

TEST_CASE("cartan matrices of small types") {
  CHECK(cartan_matrix({Family::A, 1}) == IMat{{2}});
  CHECK(cartan_matrix({Family::A, 2}) == IMat{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix({Family::B, 2}) == IMat{{2, -1}, {-2, 2}});
  CHECK(cartan_matrix({Family::G, 2}) == IMat{{2, -1}, {-3, 2}});
  CHECK_THROWS_AS(cartan_matrix({Family::E, 5}), Error);
}

TEST_CASE("datum pairing reproduces the Cartan matrix") {
  for (auto t : {CartanType{Family::A, 3}, CartanType{Family::B, 2}, CartanType{Family::D, 4},
                 CartanType{Family::G, 2}}) {
    for (auto f : {Form::simply_connected, Form::adjoint}) {
      RootDatum d = build_root_datum(t, f);
      for (int i = 0; i < d.rank_I; ++i)
        for (int j = 0; j < d.rank_I; ++j)
          CHECK(dot(d.simple_coroots[i], d.simple_roots[j]) == cartan_matrix(t)[i][j]);
    }
  }
}

TEST_CASE("gl datum conventions") {
  RootDatum d = build_gl_datum(3);
  CHECK(d.lattice_rank == 3);
  CHECK(d.simple_roots == IMat{{1, -1, 0}, {0, 1, -1}});
  CHECK(d.positive_roots.size() == 3);
}

TEST_CASE("positive root counts") {
  CHECK(build_root_datum({Family::A, 3}, Form::simply_connected).positive_roots.size() == 6);
  CHECK(build_root_datum({Family::B, 2}, Form::simply_connected).positive_roots.size() == 4);
  CHECK(build_root_datum({Family::D, 4}, Form::simply_connected).positive_roots.size() == 12);
  CHECK(build_root_datum({Family::G, 2}, Form::simply_connected).positive_roots.size() == 6);
  CHECK(build_root_datum({Family::F, 4}, Form::simply_connected).positive_roots.size() == 24);
}

TEST_CASE("duality") {
  RootDatum a = build_root_datum({Family::A, 2}, Form::simply_connected);
  RootDatum ad = dual(a);
  CHECK(ad.form == Form::adjoint);
  CHECK(ad.type == CartanType{Family::A, 2});
  RootDatum b = build_root_datum({Family::B, 2}, Form::simply_connected);
  CHECK(dual(b).type == CartanType{Family::C, 2});
  RootDatum gl = build_gl_datum(4);
  CHECK(dual(gl).form == Form::gl);
  // involution, basis-exact
  RootDatum dd = dual(dual(b));
  CHECK(dd.simple_roots == b.simple_roots);
  CHECK(dd.simple_coroots == b.simple_coroots);
  CHECK(dd.form == b.form);
}

TEST_CASE("height and root lattice membership") {
  RootDatum a1 = build_root_datum({Family::A, 1}, Form::simply_connected);
  // lambda = alpha^vee (coroot-basis coordinate 1); <alpha^vee, rho> = 1
  CHECK(height_int(a1, {{1}, {1}, {1}}) == 3);
  CHECK(height_int(a1, {}) == 0);
  RootDatum a2 = build_root_datum({Family::A, 2}, Form::simply_connected);
  CHECK(height_int(a2, {{1, 1}}) == 2);  // rho^vee
  // A1: Sigma lambda = 2 in the coroot basis is in the root lattice of the
  // dual side iff even (characters of A1 sc: alpha = 2 omega).
  RootDatum a1_sc = build_root_datum({Family::A, 1}, Form::simply_connected);
  CHECK(in_root_lattice(a1_sc, {2}));
  CHECK(!in_root_lattice(a1_sc, {1}));
  // A2: omega1 + omega2 = rho = alpha1 + alpha2
  RootDatum a2_sc = build_root_datum({Family::A, 2}, Form::simply_connected);
  CHECK(in_root_lattice(a2_sc, {1, 1}));
  CHECK(!in_root_lattice(a2_sc, {1, 0}));
}

TEST_CASE("automorphism construction and validation") {
  RootDatum a3 = build_root_datum({Family::A, 3}, Form::simply_connected);
  DiagramAutomorphism s = flip_automorphism(a3);
  CHECK(s.order == 2);
  CHECK(s.orbits == std::vector<IVec>{{0, 2}, {1}});
  CHECK(!has_adjacent_orbit(s));
  RootDatum a2 = build_root_datum({Family::A, 2}, Form::simply_connected);
  DiagramAutomorphism s2 = flip_automorphism(a2);
  CHECK(has_adjacent_orbit(s2));
  CHECK(c_sigma(s2) == 4);
  CHECK(c_sigma(s) == 2);
  RootDatum d4 = build_root_datum({Family::D, 4}, Form::simply_connected);
  CHECK(c_sigma(triality_automorphism(d4)) == 3);
  // pairing preservation on random vectors
  for (int it = 0; it < 50; ++it) {
    IVec v = testing::rand_ivec(3, -5, 5), x = testing::rand_ivec(3, -5, 5);
    CHECK(dot(s.apply_cochar(v), s.apply_char(x)) == dot(v, x));
  }
}

TEST_CASE("s_map properties") {
  RootDatum a3 = build_root_datum({Family::A, 3}, Form::simply_connected);
  DiagramAutomorphism s = flip_automorphism(a3);
  for (int it = 0; it < 100; ++it) {
    IVec l = testing::rand_ivec(3, -6, 6);
    IVec sl = s_map(a3, s, l);
    CHECK(s.apply_cochar(sl) == sl);
  }
  // sigma-invariant lambda: S(lambda) = c_sigma * lambda
  IVec inv = {1, 2, 1};
  CHECK(s_map(a3, s, inv) == scale(inv, 2));
  RootDatum a2 = build_root_datum({Family::A, 2}, Form::simply_connected);
  DiagramAutomorphism s2 = flip_automorphism(a2);
  IVec inv2 = {3, 3};
  CHECK(s_map(a2, s2, inv2) == scale(inv2, 4));
  RootDatum d4 = build_root_datum({Family::D, 4}, Form::simply_connected);
  DiagramAutomorphism s3 = triality_automorphism(d4);
  for (int it = 0; it < 50; ++it) {
    IVec l = testing::rand_ivec(4, -4, 4);
    IVec sl = s_map(d4, s3, l);
    CHECK(s3.apply_cochar(sl) == sl);
  }
}

TEST_CASE("folding table") {
  RootDatum a3 = build_root_datum({Family::A, 3}, Form::simply_connected);
  FoldedDatum f = fold(a3, flip_automorphism(a3));
  CHECK(f.folded.type == CartanType{Family::B, 2});
  CHECK(f.orbit_sizes == IVec{2, 1});

  RootDatum d4 = build_root_datum({Family::D, 4}, Form::simply_connected);
  FoldedDatum g2 = fold(d4, triality_automorphism(d4));
  CHECK(g2.folded.type == CartanType{Family::G, 2});

  RootDatum a2 = build_root_datum({Family::A, 2}, Form::simply_connected);
  FoldedDatum c1 = fold(a2, flip_automorphism(a2));
  CHECK(c1.folded.rank_I == 1);
  // adjacent orbit: alpha_eta = 2(alpha_1 + alpha_2) in ambient X coords
  CHECK(c1.alpha_eta[0] == add(scale(a2.simple_roots[0], 2), scale(a2.simple_roots[1], 2)));

  RootDatum a4 = build_root_datum({Family::A, 4}, Form::simply_connected);
  FoldedDatum c2 = fold(a4, flip_automorphism(a4));
  CHECK(c2.folded.type == CartanType{Family::C, 2});

  RootDatum e6 = build_root_datum({Family::E, 6}, Form::simply_connected);
  FoldedDatum f4 = fold(e6, flip_automorphism(e6));
  CHECK(f4.folded.type == CartanType{Family::F, 4});

  RootDatum d5 = build_root_datum({Family::D, 5}, Form::simply_connected);
  FoldedDatum c4 = fold(d5, flip_automorphism(d5));
  CHECK(c4.folded.type == CartanType{Family::C, 4});

  // folding with the identity returns an isomorphic datum
  FoldedDatum idf = fold(a3, identity_automorphism(a3));
  CHECK(idf.folded.type == a3.type);
  CHECK(idf.folded.cartan == a3.cartan);

  // gl folding is not offered
  RootDatum gl3 = build_gl_datum(3);
  CHECK_THROWS_AS(fold(gl3, flip_automorphism(gl3)), Error);
}

TEST_CASE("fold keeps simply connected forms simply connected") {
  RootDatum a3 = build_root_datum({Family::A, 3}, Form::simply_connected);
  CHECK(fold(a3, flip_automorphism(a3)).folded.form == Form::simply_connected);
  RootDatum pgl4 = build_root_datum({Family::A, 3}, Form::adjoint);
  FoldedDatum f = fold(pgl4, flip_automorphism(pgl4));
  CHECK(f.folded.form == Form::adjoint);
  RootDatum pgl3 = build_root_datum({Family::A, 2}, Form::adjoint);
  // the fold of PGL_3 has simply connected type C1 = A1
  CHECK(fold(pgl3, flip_automorphism(pgl3)).folded.form == Form::simply_connected);
}

TEST_CASE("fold_char translates invariant weights") {
  RootDatum pgl4 = build_root_datum({Family::A, 3}, Form::adjoint);
  DiagramAutomorphism s = flip_automorphism(pgl4);
  FoldedDatum f = fold(pgl4, s);
  // theta = alpha1+alpha2+alpha3 is sigma-invariant
  IVec theta = {1, 1, 1};
  IVec folded = fold_char(f, pgl4, s, theta);
  // its pairing with the folded coroots: <theta(a1vee), .>, <theta(a2vee), .>
  CHECK(dot(f.folded.simple_coroots[0], folded) == 1);
  CHECK(dot(f.folded.simple_coroots[1], folded) == 0);
  CHECK_THROWS_AS(fold_char(f, pgl4, s, IVec{1, 0, 0}), Error);
}

TEST_CASE("dominant coweight enumeration") {
  RootDatum a2 = build_root_datum({Family::A, 2}, Form::simply_connected);
  auto list = dominant_coweights_up_to(a2, 4);
  // heights: (0,0)=0, (1,1)=2, (1,2)=3,(2,1)=3, (2,2)=4
  CHECK(list.size() == 5);
  CHECK(list[0] == IVec{0, 0});
  CHECK(list[1] == IVec{1, 1});
  for (const auto& v : list) CHECK(is_dominant_coweight(a2, v));
}

TEST_CASE("w0 action") {
  RootDatum a2 = build_root_datum({Family::A, 2}, Form::simply_connected);
  // w0 on A2 characters: -w0 swaps the fundamental weights
  IVec om1 = {1, 0};
  CHECK(dual_char(a2, om1) == IVec{0, 1});
  RootDatum b2 = build_root_datum({Family::B, 2}, Form::simply_connected);
  // B2: w0 = -1, every weight self-dual
  for (int it = 0; it < 20; ++it) {
    IVec x = testing::rand_ivec(2, -4, 4);
    CHECK(dual_char(b2, x) == x);
  }
}
