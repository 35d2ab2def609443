#include <algorithm>

#include "newtonlab/linalg.hpp"
#include "newtonlab/lp.hpp"
#include "newtonlab/newton.hpp"
#include "newtonlab/polytope.hpp"
#include "newtonlab/system.hpp"
#include "support.hpp"

using namespace nl;
using nltest::pts;

TEST_CASE("arith: fractions and vectors") {
  CHECK(to_string(make_rat(6, -4)) == "-3/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(primitive(ivec({4, -6, 0})) == ivec({2, -3, 0}));
  CHECK(primitive(ivec({0, 0})) == ivec({0, 0}));
  CHECK(primitive(nltest::rv({{1, 2}, {1, 3}})) == ivec({3, 2}));
  CHECK(lcm_denominators(nltest::rv({{3, 7}, {0, 1}, {2, 7}})) == 7);
  CHECK(lex_cmp(ivec({1, 2}), ivec({1, 3})) < 0);
  CHECK(factorial(5) == 120);
  CHECK(to_string(ivec({1, 0, 2})) == "(1,0,2)");
}

TEST_CASE("linalg: rank, determinant, kernels") {
  CHECK(rank(IMat{ivec({1, 2}), ivec({2, 4})}) == 1);
  CHECK(det(IMat{ivec({2, 1}), ivec({1, 3})}) == 5);
  CHECK(affine_dim({}) == -1);
  CHECK(affine_dim(pts({{1, 1}, {2, 2}, {3, 3}})) == 1);
  auto k = integer_kernel(IMat{ivec({2, 4})}, 2);
  REQUIRE(k.size() == 1);
  CHECK(primitive(k[0]) == k[0]);
  CHECK(dot(k[0], ivec({2, 4})) == 0);
}

TEST_CASE("linalg: frame of a sublattice") {
  // points spanning the index-2 lattice {x + y even}
  Frame fr(pts({{0, 0}, {1, 1}, {2, 0}}));
  CHECK(fr.dim() == 2);
  Frame seg(pts({{0, 0, 0}, {2, 2, 0}}));
  CHECK(seg.dim() == 1);
  CHECK(seg.contains(ivec({1, 1, 0})));
  CHECK_FALSE(seg.contains(ivec({1, 0, 0})));
  CHECK(seg.global(seg.local(ivec({3, 3, 0}))) == ivec({3, 3, 0}));
  CHECK_THROWS_AS(seg.local(ivec({1, 2, 0})), InputError);
}

TEST_CASE("linalg: hyperplane through points") {
  auto [a, b] = hyperplane_through(pts({{4, 0, 0}, {0, 4, 0}, {0, 0, 2}}));
  if (a[0] < 0) {
    for (auto& x : a) x = -x;
    b = -b;
  }
  CHECK(a == ivec({1, 1, 2}));
  CHECK(b == 4);
}

TEST_CASE("lp: feasibility") {
  LinearSystem s;
  s.nvars = 2;
  s.add_ge(nltest::rv({{1, 1}, {0, 1}}), 1);
  s.add_ge(nltest::rv({{0, 1}, {1, 1}}), 1);
  s.add_eq(nltest::rv({{1, 1}, {1, 1}}), 3);
  auto x = feasible_point(s);
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] == 3);
  s.add_ge(nltest::rv({{-1, 1}, {0, 1}}), -1);
  s.add_ge(nltest::rv({{0, 1}, {-1, 1}}), -1);
  CHECK_FALSE(feasible_point(s));
}

TEST_CASE("convex hull: unit simplex") {
  Polytope t(pts({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(t.vertices().size() == 3);
  CHECK(t.faces()[1].size() == 3);
  CHECK(t.normalized_volume() == 1);
}

TEST_CASE("convex hull: midpoint elimination") {
  Polytope t(pts({{0, 0}, {2, 0}, {0, 2}, {1, 1}}));
  CHECK(t.vertex_points() == pts({{0, 0}, {0, 2}, {2, 0}}));
  const Face* hyp = t.find_face({t.index_of(ivec({0, 2})), t.index_of(ivec({1, 1})), t.index_of(ivec({2, 0}))});
  REQUIRE(hyp);
  CHECK(hyp->dim == 1);
}

TEST_CASE("convex hull: five points with an edge midpoint") {
  // oracle: LP vertex test; X lies on exactly the facets BCD and CDE
  auto a = ivec({0, 0, 0}), b = ivec({0, 0, 3}), c = ivec({4, 0, 0}), d = ivec({2, 2, 2}),
       e = ivec({0, 6, 0}), x = ivec({3, 1, 1});
  Polytope p({a, b, c, d, e, x});
  auto vs = p.vertex_points();
  CHECK(vs == std::vector<IVec>{a, b, e, d, c});
  CHECK(std::find(vs.begin(), vs.end(), x) == vs.end());
  Index cde{p.index_of(e), p.index_of(d), p.index_of(x), p.index_of(c)};
  std::sort(cde.begin(), cde.end());
  const Face* tri = p.find_face(cde);
  REQUIRE(tri);
  CHECK(tri->dim == 2);
  Index edge{p.index_of(d), p.index_of(x), p.index_of(c)};
  std::sort(edge.begin(), edge.end());
  const Face* f = p.find_face(edge);
  REQUIRE(f);
  CHECK(f->dim == 1);
  CHECK(f->facets.size() == 2);
  CHECK(p.faces()[0].size() == 5);
  CHECK(p.faces()[2].size() == 6);
}

TEST_CASE("support face") {
  Polytope t(pts({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(t.face_points(t.support_face(nltest::rv({{1, 1}, {1, 1}}))) == pts({{0, 0}}));

  NewtonPolyhedron f(pts({{7, 0}, {4, 1}, {2, 2}, {1, 3}, {0, 5}}));
  CHECK(f.support_face(nltest::rv({{2, 1}, {1, 1}})).points == pts({{0, 5}, {1, 3}}));

  NewtonPolyhedron m(pts({{2, 0}, {0, 2}}));
  auto sf = m.support_face(nltest::rv({{1, 1}, {1, 1}}));
  CHECK(sf.points == pts({{0, 2}, {2, 0}}));
  CHECK(sf.bounded());
  CHECK_FALSE(m.support_face(nltest::rv({{1, 1}, {0, 1}})).bounded());
}

TEST_CASE("normalized volume") {
  CHECK(Polytope(pts({{0}, {1}})).normalized_volume() == 1);
  CHECK(Polytope(pts({{2, 2, 0}, {5, 0, 0}, {0, 1, 4}, {0, 0, 6}})).normalized_volume() == 2);
  CHECK(Polytope(pts({{0, 3, 0}, {0, 5, 0}, {5, 0, 0}, {0, 1, 4}})).normalized_volume() == 40);
  // lower-dimensional polytope measured in its own lattice
  Polytope tri(pts({{0, 0, 0}, {2, 2, 0}, {4, 0, 2}}));
  CHECK(tri.dim() == 2);
  CHECK(tri.volume_in_dim(3) == 0);
  CHECK(Polytope(pts({{3, 3}})).normalized_volume() == 1);
}

TEST_CASE("mixed volume: basic values") {
  Polytope q(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(mixed_volume({q, q}) == 2);
  Polytope s(pts({{0, 0}, {1, 0}}));
  CHECK(mixed_volume({s, s}) == 0);
  CHECK(mixed_volume({}) == 1);
  Polytope t(pts({{0, 1}, {1, 0}}));
  CHECK(mixed_volume({s, t}) == 1);
}

TEST_CASE("mixed volume: local polytopes with parallel segments vanish") {
  auto A = ivec({10, 0, 0, 0}), W = ivec({9, 0, 0, 0}), E = ivec({5, 1, 0, 0}), F = ivec({5, 0, 1, 0}),
       G = ivec({5, 0, 0, 1}), H = ivec({0, 1, 1, 0}), I = ivec({0, 0, 1, 1});
  std::vector<Polytope> ps{Polytope({A, W, E, F, G}), Polytope({E, H}), Polytope({F, H, I}), Polytope({G, I})};
  CHECK(mixed_volume(ps) == 0);
}

TEST_CASE("Minkowski sum") {
  Polytope p(pts({{0, 0}, {2, 0}, {0, 1}}));
  CHECK(minkowski_sum(p, Polytope(pts({{3, 1}}))) == translate(p, ivec({3, 1})));
  Polytope sq = minkowski_sum(Polytope(pts({{0, 0}, {1, 0}})), Polytope(pts({{0, 0}, {0, 1}})));
  CHECK(sq.vertex_points() == pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(sq.normalized_volume() == 2);
}

TEST_CASE("Minkowski sum of Newton polyhedra and the allowable directions") {
  auto f = pts({{7, 0}, {4, 1}, {2, 2}, {1, 3}, {0, 5}});
  auto g = f;
  g.push_back(ivec({5, 0}));
  g.push_back(ivec({1, 2}));
  std::vector<IVec> sum;
  for (auto& a : f)
    for (auto& b : g) sum.push_back(add(a, b));
  NewtonPolyhedron np(sum);
  std::vector<IVec> normals;
  for (auto* fc : np.compact_facets()) normals.push_back(fc->normal);
  std::sort(normals.begin(), normals.end(), LexLess{});
  // oracle: floating hull of the clipped sum; (3,1) has equal f- and g-levels
  CHECK(normals == pts({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}));
  std::vector<IVec> allowed;
  for (auto& s : zero_strata(f, g))
    if (s.allowable) allowed.push_back(primitive(s.direction));
  std::sort(allowed.begin(), allowed.end(), LexLess{});
  CHECK(allowed == pts({{1, 1}, {1, 2}, {1, 3}, {2, 1}}));
}

TEST_CASE("lattice projection") {
  Polytope sq(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  auto q = quotient_along(IMat{ivec({1, 0})}, 2);
  Polytope img(q.apply(sq.points()));
  CHECK(img.dim() == 1);
  CHECK(img.normalized_volume() == 2);
  // the quotient is onto: a non-primitive direction changes nothing
  auto q2 = quotient_along(IMat{ivec({2, 0})}, 2);
  CHECK(Polytope(q2.apply(sq.points())).normalized_volume() == 2);
}
