#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ptk/polyhedron.hpp"
#include "ptk/rational.hpp"

namespace ptk {

// Finite simplicial complex on vertex ids 0..n_vertices-1. `faces` holds the
// nonempty faces, each sorted, closed under taking subsets. `coords` is an
// optional geometric realization (one row per vertex id); when empty the
// complex is purely combinatorial.
struct SimplicialComplex {
  int n_vertices = 0;
  std::set<std::vector<int>> faces;
  Mat coords;

  int dim() const;
  bool has_face(const std::vector<int>& sigma) const;
};

// Builds the closure of the given faces. Validates vertex ids.
SimplicialComplex make_complex(int n_vertices, const std::vector<std::vector<int>>& generators);

// Faces not strictly contained in another face (the cells when pure).
std::vector<std::vector<int>> maximal_faces(const SimplicialComplex& K);

struct ComplexReport {
  bool ok = true;
  std::string detail;  // first violation found
};

// Closure check always; with coordinates attached also checks that every
// face is realized by affinely independent points and that distinct faces
// have disjoint relative interiors (exact feasibility on open simplices).
ComplexReport validate_complex(const SimplicialComplex& K);

// St(sigma): all faces of the cofaces of sigma. Lk(sigma): faces of the star
// disjoint from sigma. sigma must be a face.
std::pair<SimplicialComplex, SimplicialComplex> star_link(const SimplicialComplex& K,
                                                          const std::vector<int>& sigma);

// Subcomplex generated by the (d-1)-faces lying in exactly one cell.
// K must be pure.
SimplicialComplex boundary_complex(const SimplicialComplex& K);

// (f_{-1}=1, f_0, ..., f_{dim}): face counts by dimension.
std::vector<long> f_vector(const SimplicialComplex& K);

// C(n, k); zero outside 0 <= k <= n.
long binomial(int n, int k);

// h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, d-k) f_{i-1} for k = 0..d.
// f must have length d+1 (leading entry f_{-1} = 1).
std::vector<long> h_from_f(const std::vector<long>& f, int d);

// f_{k-1} = sum_{i=0..k} h_i C(d-i, k-i); inverse of h_from_f.
std::vector<long> f_from_h(const std::vector<long>& h, int d);

struct FHVectors {
  std::vector<long> f;
  std::vector<long> h;
};

// Both vectors of a pure complex (d = cell cardinality).
FHVectors fh_vectors(const SimplicialComplex& K);

// Alternating sum of face counts, f_{-1} excluded.
long euler_characteristic(const SimplicialComplex& K);

// Alternating sum over the proper faces of a polytope (its boundary).
long euler_characteristic_boundary(const FaceLattice& L);

// chi(P) = 1 and chi(boundary P) = 1 - (-1)^d.
bool euler_polytope_check(const FaceLattice& L);

struct DSReport {
  bool ok = false;
  std::vector<long> f;  // boundary complex, f_{-1} included
  std::vector<long> h;
};

// h-vector palindromy for a simplicial polytope boundary; for d = 3 also
// 2 f_1 = 3 f_2. Errors when some facet is not a simplex.
DSReport dehn_sommerville_check(const FaceLattice& L);

// A facet order together with its restriction sets R_j = {v in F_j :
// F_j minus v lies in some earlier facet}.
struct Shelling {
  std::vector<std::vector<int>> facet_order;
  std::vector<std::vector<int>> restrictions;
};

struct ShellingReport {
  bool ok = false;
  int fail_index = -1;  // 0-based position of the offending facet
  std::string reason;
  Shelling shelling;  // filled on success
};

// Checks that `order` is a permutation of the cells of pure K and that each
// F_j meets the union of its predecessors in a nonempty union of facets of
// F_j: for every i < j some l < j has F_i cap F_j contained in F_l cap F_j
// with |F_l cap F_j| = |F_j| - 1.
ShellingReport is_shelling(const SimplicialComplex& K, const std::vector<std::vector<int>>& order);

// Counts restriction-set sizes of a verified shelling; throws when the order
// is not a shelling of K.
std::vector<long> h_from_shelling(const SimplicialComplex& K,
                                  const std::vector<std::vector<int>>& order);

// Boundary complex of a simplicial polytope from its facet incidence lists.
// Errors when some facet is not a simplex.
SimplicialComplex complex_from_lattice(const FaceLattice& L);

// Rocket shelling of the boundary of a full-dimensional polytope along the
// line through a perturbed interior point and x: facets ordered by signed
// crossing parameter (positive ascending, then negative ascending), so the
// facets visible from x come first. Non-simplicial facets are triangulated
// by placing their vertices in a global coordinate-lex order; cells inside a
// facet are sequenced so the incremental shelling criterion holds. The
// perturbation scale is searched deterministically from `seed`. The returned
// order always passes is_shelling on the triangulated boundary.
Shelling line_shelling(const HRep& H, const VRep& V, const Vec& x, int seed);

}  // namespace ptk
