#pragma once

#include "ptk/polyhedron.hpp"
#include "ptk/rational.hpp"

namespace ptk {

// Nondegenerate quadric in E^d: {x | (x,1)^T F (x,1) = 0} with F symmetric
// and invertible, stored as the full (d+1)x(d+1) matrix. The same matrix read
// as a bilinear form on R^{d+1} drives the cone-level polarity.
struct Quadric {
  int dim = 0;  // ambient affine dimension d
  Mat f;        // (d+1) x (d+1)
  Quadric(int d, Mat m);
};

// diag(I_d, -1): the unit sphere centered at the origin.
Quadric sphere_quadric(int d);

// x_d = x_1^2 + ... + x_{d-1}^2 as a symmetric form.
Quadric paraboloid_quadric(int d);

// F' = (M^-1)^T F M^-1, the form satisfied by images under x -> Mx.
Quadric transform_quadric(const Quadric& q, const Mat& M);

// Polar dual w.r.t. the unit sphere centered at c: one inequality
// 1 - (y - c).(x - c) >= 0 per point y and -v.(x - c) >= 0 per ray v.
// P must be nonempty.
HRep polar_dual_v(const VRep& P, const Vec& c);

// Polar dual of an H-polyhedron with c in it: each inequality, translated to
// center c, contributes the point c - a/b' (b' > 0) or the ray -a (b' = 0).
// The center itself is always a point of the dual. Canonicalized on return.
// Errors when some row has b' < 0 (c outside) or when equations are present.
VRep polar_dual_h(const HRep& P, const Vec& c);

// Polarity of a v-cone w.r.t. the form F: the h-cone {x | (Fg).x <= 0 for
// every generator g}. C.dim must equal q.dim + 1.
ConeRep quadric_polar_cone(const ConeRep& C, const Quadric& q);

// Affine polar dual w.r.t. an arbitrary nondegenerate quadric: with w = F g^
// (g^ the homogeneous lift (y,1) or (v,0)), each generator contributes the
// inequality w_x . x + w_last <= 0.
HRep quadric_dual_affine(const VRep& P, const Quadric& q);

// The cone over P at height 1 (alias for homogenize with an emptiness guard).
ConeRep projective_completion(const HRep& P);
ConeRep projective_completion(const VRep& P);

// Linear change of homogeneous coordinates exchanging the paraboloid and
// sphere completions: (z_{d+1}, z_{d+2}) = (x_{d+1} + x_{d+2}, x_{d+2} -
// x_{d+1}). Pass inverse = true for the inverse map.
Vec theta_map(const Vec& x, bool inverse = false);

// Does completion commute with polar duality for P and q: compares the
// F-polar of the completion of P against the completion of the affine
// F-dual of P, as canonical generator sets.
bool check_completion_duality_commutes(const VRep& P, const Quadric& q);

// True iff the cone contains no line (no nontrivial nonnegative combination
// of generators vanishes).
bool is_pointed(const ConeRep& C);

// C = lineality + pointed, an orthogonal direct sum. The lineality basis is
// the RREF-derived nullspace basis of the h-form rows; pointed generators
// are the projections of the original generators onto its complement.
struct ConeSplit {
  Mat lineality_basis;
  Mat pointed_generators;
};
ConeSplit orthogonal_split(const ConeRep& C);

}  // namespace ptk
