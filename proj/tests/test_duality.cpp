#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "ptk/duality.hpp"
#include "ptk/linalg.hpp"
#include "ptk/polyhedron.hpp"

using namespace ptk;
using namespace ptk::testutil;

namespace {

Q form_value(const Quadric& q, const Vec& x) {
  Q s = 0;
  for (size_t i = 0; i < q.f.size(); ++i)
    for (size_t j = 0; j < q.f.size(); ++j) s += x[i] * q.f[i][j] * x[j];
  return s;
}

// Shift the centroid to the origin; retry until the hull is full-dimensional.
VRep rand_centered(std::mt19937& rng, int d, int n) {
  for (;;) {
    VRep P = rand_vpolytope(rng, d, n);
    if (affine_dimension(P.points) != d) continue;
    Vec c = zero_vec(d);
    for (const Vec& p : P.points) c = add(c, p);
    c = scale(Q(1) / Q(static_cast<long>(P.points.size())), c);
    for (Vec& p : P.points) p = sub(p, c);
    return P;
  }
}

}  // namespace

TEST_CASE("quadric construction validates shape, symmetry, and rank") {
  CHECK_THROWS_AS(Quadric(2, qm({"1 0", "0 1"})), std::runtime_error);
  CHECK_THROWS_AS(Quadric(1, qm({"1 2", "3 1"})), std::runtime_error);
  CHECK_THROWS_AS(Quadric(1, qm({"1 1", "1 1"})), std::runtime_error);
  CHECK_THROWS_AS(paraboloid_quadric(1), std::runtime_error);
  CHECK(sphere_quadric(2).f == qm({"1 0 0", "0 1 0", "0 0 -1"}));
  CHECK(paraboloid_quadric(2).f == qm({"1 0 0", "0 0 -1/2", "0 -1/2 0"}));
}

TEST_CASE("transform_quadric carries the sphere form into the paraboloid form") {
  Quadric s = sphere_quadric(3);
  CHECK(transform_quadric(s, qm({"1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"})).f == s.f);
  Mat m(4, zero_vec(4));
  for (int c = 0; c < 4; ++c) {
    Vec img = theta_map(unit_vec(4, c));
    for (int r = 0; r < 4; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = img[static_cast<size_t>(r)];
  }
  CHECK(transform_quadric(s, m).f == paraboloid_quadric(3).f);
}

TEST_CASE("theta map: pinned values, quadric exchange, and inversion") {
  CHECK(theta_map(qv("0 0 1 1")) == qv("0 0 2 0"));
  Vec z = theta_map(qv("1 0 0 1"));
  CHECK(z == qv("1 0 1 1"));
  CHECK(sign(form_value(paraboloid_quadric(3), z)) == 0);
  std::mt19937 rng(11);
  for (int t = 0; t < 25; ++t) {
    Vec x = rand_point(rng, 4, 9, 4);
    CHECK(theta_map(theta_map(x), true) == x);
    CHECK(theta_map(theta_map(x, true)) == x);
    CHECK(form_value(sphere_quadric(3), x) == form_value(paraboloid_quadric(3), theta_map(x)));
  }
}

TEST_CASE("polar dual exchanges the cube and the cross-polytope") {
  for (int d : {2, 3}) {
    VRep cube = h_to_v(cube_h(d));
    HRep dual_h = polar_dual_v(cube, zero_vec(d));
    CHECK(hrep_equal_canonical(dual_h, v_to_h(cross_v(d))));
    VRep dual_v = polar_dual_h(cube_h(d), zero_vec(d));
    CHECK(same_point_set(dual_v.points, canonicalize_vrep(cross_v(d)).points));
    CHECK(dual_v.rays.empty());
  }
}

TEST_CASE("the simplex is self-dual up to relabeling") {
  VRep S = simplex_v(2);
  VRep D = h_to_v(polar_dual_v(S, zero_vec(2)));
  CHECK(same_point_set(D.points, qm({"1 1", "1 -2", "-2 1"})));
}

TEST_CASE("polar_dual_h rejects bad centers and non-full-dimensional input") {
  CHECK_THROWS_AS(polar_dual_h(cube_h(2), qv("3 0")), std::runtime_error);
  HRep flat;
  flat.dim = 2;
  flat.eqs.push_back(HRow{Q(0), qv("0 1")});
  flat.ineqs.push_back(HRow{Q(1), qv("1 0")});
  CHECK_THROWS_AS(polar_dual_h(flat, qv("0 0")), std::runtime_error);
}

TEST_CASE("double polar dual restores the vertex set") {
  VRep corner;
  corner.dim = 2;
  corner.points = qm({"0 0"});
  corner.rays = qm({"1 0", "0 1"});
  // an interior center works for unbounded sets too
  HRep D = polar_dual_v(corner, qv("1 1"));
  VRep back = polar_dual_h(D, qv("1 1"));
  VRep want = canonicalize_vrep(corner);
  CHECK(same_point_set(back.points, want.points));
  CHECK(same_point_set(back.rays, want.rays));

  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + t % 3;
    VRep P = rand_centered(rng, d, 5 + t % 4);
    VRep bb = polar_dual_h(polar_dual_v(P, zero_vec(d)), zero_vec(d));
    CHECK(same_point_set(bb.points, canonicalize_vrep(P).points));
    CHECK(bb.rays.empty());
  }
}

TEST_CASE("dualizing reverses the f-vector") {
  std::mt19937 rng(29);
  for (int d : {2, 2, 3, 3, 4, 4}) {
    VRep P = canonicalize_vrep(rand_centered(rng, d, d + 3));
    HRep H = make_irredundant(v_to_h(P));
    std::vector<long> f = f_vector_of_lattice(face_lattice(H, P));
    HRep DH = make_irredundant(polar_dual_v(P, zero_vec(d)));
    VRep DV = canonicalize_vrep(h_to_v(DH));
    std::vector<long> g = f_vector_of_lattice(face_lattice(DH, DV));
    REQUIRE(f.size() == g.size());
    for (int k = 0; k < d; ++k)
      CHECK(f[static_cast<size_t>(k)] == g[static_cast<size_t>(d - 1 - k)]);
  }
}

TEST_CASE("quadric_polar_cone applies the form row by row") {
  ConeRep C;
  C.dim = 3;
  C.kind = ConeRep::Kind::VCone;
  C.rows = qm({"1 0 1", "0 1 1"});
  ConeRep D = quadric_polar_cone(C, sphere_quadric(2));
  REQUIRE(D.kind == ConeRep::Kind::HCone);
  CHECK(same_point_set(D.rows, qm({"1 0 -1", "0 1 -1"})));
  CHECK_THROWS_AS(quadric_polar_cone(D, sphere_quadric(2)), std::runtime_error);
  CHECK_THROWS_AS(quadric_polar_cone(C, sphere_quadric(3)), std::runtime_error);
}

TEST_CASE("projective completion is the cone over P at height one") {
  VRep seg;
  seg.dim = 1;
  seg.points = qm({"0", "1"});
  ConeRep C = projective_completion(seg);
  ConeRep want;
  want.dim = 2;
  want.kind = ConeRep::Kind::VCone;
  want.rows = qm({"0 1", "1 1"});
  CHECK(cone_set_equal(C, want));

  HRep ray;
  ray.dim = 1;
  ray.ineqs.push_back(HRow{Q(0), qv("1")});
  want.rows = qm({"0 1", "1 0"});
  CHECK(cone_set_equal(projective_completion(ray), want));

  VRep none;
  none.dim = 1;
  CHECK_THROWS_AS(projective_completion(none), std::runtime_error);
  HRep bad;
  bad.dim = 1;
  bad.ineqs.push_back(HRow{Q(-1), qv("1")});
  bad.ineqs.push_back(HRow{Q(0), qv("-1")});
  CHECK_THROWS_AS(projective_completion(bad), std::runtime_error);
}

TEST_CASE("completion and polar duality commute on sphere-centered input") {
  CHECK(check_completion_duality_commutes(square_v(), sphere_quadric(2)));
  VRep seg;
  seg.dim = 1;
  seg.points = qm({"-1", "1"});
  CHECK(check_completion_duality_commutes(seg, sphere_quadric(1)));
  CHECK(check_completion_duality_commutes(simplex_v(3), sphere_quadric(3)));
  std::mt19937 rng(37);
  for (int t = 0; t < 10; ++t) {
    int d = 2 + t % 2;
    CHECK(check_completion_duality_commutes(rand_centered(rng, d, d + 3), sphere_quadric(d)));
  }
}

TEST_CASE("is_pointed detects lines in either representation") {
  ConeRep oct;
  oct.dim = 2;
  oct.kind = ConeRep::Kind::VCone;
  oct.rows = qm({"1 0", "0 1"});
  CHECK(is_pointed(oct));
  oct.rows.push_back(qv("-1 0"));
  CHECK_FALSE(is_pointed(oct));
  ConeRep half;
  half.dim = 2;
  half.kind = ConeRep::Kind::HCone;
  half.rows = qm({"0 -1"});  // y >= 0
  CHECK_FALSE(is_pointed(half));
  CHECK(is_pointed(projective_completion(square_v())));
}

TEST_CASE("orthogonal_split separates lineality from a pointed part") {
  ConeRep C;
  C.dim = 2;
  C.kind = ConeRep::Kind::VCone;
  C.rows = qm({"1 0", "-1 0", "0 1"});
  ConeSplit s = orthogonal_split(C);
  REQUIRE(s.lineality_basis.size() == 1);
  CHECK(primitive(s.lineality_basis[0]) == qv("1 0"));
  CHECK(s.pointed_generators == qm({"0 1"}));

  ConeRep skew;
  skew.dim = 3;
  skew.kind = ConeRep::Kind::HCone;
  skew.rows = qm({"-1 2 3", "1 1 2"});
  ConeSplit t = orthogonal_split(skew);
  REQUIRE(t.lineality_basis.size() == 1);
  Mat span = t.lineality_basis;
  span.push_back(qv("1 5 -3"));
  CHECK(rank(span) == 1);
  ConeRep rebuilt;
  rebuilt.dim = 3;
  rebuilt.kind = ConeRep::Kind::VCone;
  for (const Vec& g : t.pointed_generators) {
    for (const Vec& b : t.lineality_basis) CHECK(sign(dot(g, b)) == 0);
    rebuilt.rows.push_back(g);
  }
  for (const Vec& b : t.lineality_basis) {
    rebuilt.rows.push_back(b);
    rebuilt.rows.push_back(neg(b));
  }
  CHECK(cone_set_equal(rebuilt, skew));

  ConeRep whole;
  whole.dim = 2;
  whole.kind = ConeRep::Kind::HCone;
  ConeSplit w = orthogonal_split(whole);
  CHECK(w.lineality_basis.size() == 2);
  CHECK(w.pointed_generators.empty());
}
