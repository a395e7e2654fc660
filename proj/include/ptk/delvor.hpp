#pragma once

#include <utility>
#include <vector>

#include "ptk/complexes.hpp"
#include "ptk/polyhedron.hpp"
#include "ptk/rational.hpp"

namespace ptk {

// Closed halfspace of points at least as close to a as to b, bounded by the
// bisector hyperplane (b-a).x = (|b|^2 - |a|^2)/2. Errors when a == b.
HRow bisector(const Vec& a, const Vec& b);

// The same halfspace obtained from the homogeneous tangent-intersection row
// 2 sum (b_i - a_i) x_i - (|b|^2 - |a|^2) x_{d+2} = 0, dehomogenized at
// x_{d+2} = 1.
HRow pimap1_bisector(const Vec& a, const Vec& b);

// Intersection of the bisector halfspaces toward every other site,
// irredundant. A lone site yields the whole space.
HRep voronoi_cell(size_t i, const std::vector<Vec>& sites);

struct VoronoiDiagram {
  int dim = 0;
  std::vector<Vec> sites;
  std::vector<HRep> cells;
};

VoronoiDiagram voronoi_diagram(const std::vector<Vec>& sites);

// (x, |x|^2)
Vec lift_paraboloid(const Vec& x);

// x / (1 - x_{d+1}); errors at the north pole.
Vec stereo_sigma_n(const Vec& z);

// (2x, |x|^2 - 1) / (|x|^2 + 1); lands on the unit sphere, never at N.
Vec stereo_tau_n(const Vec& x);

// Image under sigma_N of the S^d section of the hyperplane a.x + b = 0:
// a sphere |X|^2 + 2 lin.X + c0 = 0 when a_{d+1} + b != 0, else the
// hyperplane lin.X + c0 = 0 (the section passes through N).
struct SphereImage {
  bool is_sphere = false;
  Vec lin;
  Q c0 = 0;
};
SphereImage stereo_sphere_image(const Vec& a, const Q& b);

// Hyperplane (a, b) in dim d+1 whose sphere section maps under sigma_N to
// the sphere |X|^2 + lin.X + c0 = 0 (inverse direction of the bijection).
std::pair<Vec, Q> stereo_plane_of_sphere(const Vec& lin, const Q& c0);

// Cells are the site sets of the lower (respectively non-polar) hull
// facets; in general position each has d+1 sites and `complex` is their
// simplicial closure with site coordinates attached. With allow_degenerate
// the cells may be larger (polyhedral subdivision) and `complex` is only
// their combinatorial closure.
struct DelaunayComplex {
  int dim = 0;
  std::vector<Vec> sites;
  std::vector<std::vector<int>> cells;
  SimplicialComplex complex;
};

// Lifts sites to the paraboloid, hulls together with the vertical recession
// ray, and keeps the facets whose inward normal has positive last
// coordinate. Sites must be distinct and affinely span the ambient space;
// non-general-position inputs are rejected unless allow_degenerate.
DelaunayComplex delaunay_paraboloid(const std::vector<Vec>& sites, bool allow_degenerate = false);

// Lifts sites to the unit sphere by tau_N, hulls together with the north
// pole, and keeps the facets avoiding N; projecting back by sigma_N labels
// the cells by site. Agrees with delaunay_paraboloid.
DelaunayComplex delaunay_sphere(const std::vector<Vec>& sites, bool allow_degenerate = false);

// (circumcenter, squared radius) of d+1 affinely independent points.
std::pair<Vec, Q> circumcenter(const std::vector<Vec>& cell_points);

// Brute-force Delaunay oracle: every cell's circumsphere holds no other
// site strictly inside, and (when strict) no other site on it either.
bool empty_circumsphere_check(const DelaunayComplex& C, const std::vector<Vec>& sites,
                              bool strict = true);

// No d+2 sites on a common (d-1)-sphere, decided by the lifted in-sphere
// determinant; subsets whose determinant vanishes for affine-degeneracy
// reasons also fail (conservative).
bool general_position_check(const std::vector<Vec>& sites);

enum class Surface { Sphere, Paraboloid };

// Tangent hyperplane coefficients at a homogeneous point of the surface:
// sphere (a_1..a_{d+1}, -a_{d+2}); paraboloid (2a_1..2a_d, -a_{d+2},
// -a_{d+1}). Errors when a is not on the surface.
Vec tangent_hyperplane(Surface s, const Vec& a);

struct DualityReport {
  bool cells_agree = true;
  std::vector<int> mismatched_cells;
  bool adjacency_ok = true;
  std::vector<std::pair<int, int>> adjacency_mismatches;
  VoronoiDiagram diagram;        // bisector route
  DelaunayComplex delaunay;      // paraboloid route
};

// Voronoi cells computed twice: directly from bisectors and from the
// Delaunay neighbors' projected tangent-plane rows; also checks that
// Delaunay edges are exactly the pairs of cells sharing a (d-1)-face.
DualityReport voronoi_from_delaunay_duality(const std::vector<Vec>& sites);

}  // namespace ptk
