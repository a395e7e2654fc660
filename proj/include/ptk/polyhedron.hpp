#pragma once

#include <utility>
#include <vector>

#include "ptk/feasibility.hpp"
#include "ptk/rational.hpp"

namespace ptk {

// One inequality b + a.x >= 0 (or equation b + a.x == 0 when held in eqs).
struct HRow {
  Q b;
  Vec a;
};

struct HRep {
  int dim = 0;
  std::vector<HRow> ineqs;
  std::vector<HRow> eqs;
};

// conv(points) + cone(rays); empty iff points is empty.
struct VRep {
  int dim = 0;
  std::vector<Vec> points;
  std::vector<Vec> rays;
  bool empty() const { return points.empty(); }
};

struct ConeRep {
  enum class Kind { VCone, HCone };
  int dim = 0;
  Kind kind = Kind::VCone;
  // VCone: generators. HCone: rows u meaning u.x <= 0.
  Mat rows;
};

struct FaceLattice {
  int dim = 0;  // dimension of the polytope
  std::vector<Vec> vertices;
  std::vector<HRow> facets;
  std::vector<std::vector<int>> incidence;  // facet -> sorted tight vertex ids
  // (face dim, sorted vertex ids); includes the empty face (dim -1) and the
  // whole polytope (dim == dim). Sorted by (dim, ids).
  std::vector<std::pair<int, std::vector<int>>> faces;
};

// Cone over P sliced at x_{d+1} = 1 recovers P. HRep rows (b, a) homogenize
// to h-cone rows (-a, -b) plus (0, -1); stored equations are expanded to
// inequality pairs. VRep homogenizes to generators (y,1) and (v,0).
ConeRep homogenize(const HRep& P);
ConeRep homogenize(const VRep& P);

// Generators with positive last coordinate scale to points at x_{d+1} = 1;
// zero last coordinate gives rays. Negative last coordinate is an error.
VRep dehomogenize(const ConeRep& C);

// Intersection with {x_k = 0} of a v-cone, by eliminating coordinate k
// (1-based): keep the k-free generators and combine opposite-sign pairs.
ConeRep fm_slice(const ConeRep& C, int k);

// Orthogonal projection of an h-cone onto {x_k = 0} (1-based k): combine
// opposite-sign rows, keep the k-free rows, intersect with x_k = 0.
ConeRep fm_project(const ConeRep& C, int k);

// Homogenize, build the explicit v-cone with generators +-(e_i, A'e_i) and
// slack units, slice away every slack coordinate, dehomogenize, and
// canonicalize. An inconsistent system yields the empty VRep.
VRep h_to_v(const HRep& P);

// Present P as the projection of {(x,u,t) | x = Yu + Vt, u >= 0, sum u = 1,
// t >= 0}, eliminate the auxiliary block, and prune to an irredundant HRep.
HRep v_to_h(const VRep& P);

// Same set, implicit equalities moved into eqs (canonical RREF), remaining
// inequalities each supporting a facet. Errors on an empty input set.
HRep make_irredundant(const HRep& P);

// All faces as intersections of facet vertex sets. P must be irredundant and
// V its canonical vertex list; throws when a vertex fails membership in P.
FaceLattice face_lattice(const HRep& P, const VRep& V);

bool membership(const Vec& x, const HRep& P);

// ---- support surface shared by later modules ----

LinSystem to_system(const HRep& P);
bool is_empty(const HRep& P);
// Dimension of the represented set (-1 when empty).
int polyhedron_dim(const HRep& P);

// Keeps a point iff it is not a convex-plus-conic combination of the other
// points and the rays; keeps a ray iff it is not a positive combination of
// the other rays. Deduplicates first. For a polytope the surviving points
// are exactly the vertices.
VRep canonicalize_vrep(const VRep& P);

// f-vector (counts by face dim 0..dim, top face included).
std::vector<long> f_vector_of_lattice(const FaceLattice& L);

// Cone-form conversions built from the same slice machinery.
ConeRep cone_h_to_v(const ConeRep& C);
ConeRep cone_v_to_h(const ConeRep& C);

bool cone_contains(const ConeRep& C, const Vec& x);

// Primitive, deduplicated generators with conic-redundant ones removed; for
// a pointed cone these are exactly the extreme rays.
Mat canonical_generators(const ConeRep& C);

// Canonical extreme-ray comparison (pointed cones).
bool cone_set_equal(const ConeRep& A, const ConeRep& B);

// Same nonempty set: compares irredundant forms (primitive facet rows as a
// set, equation blocks by canonical RREF).
bool hrep_equal_canonical(const HRep& A, const HRep& B);

// Duplicate removal up to positive scaling (cheap per-step filter).
ConeRep cone_filter(const ConeRep& C);

}  // namespace ptk
