#pragma once

#include <vector>

#include "ptk/polyhedron.hpp"
#include "ptk/rational.hpp"

namespace ptk {

// (t, t^2, ..., t^d)
Vec moment_curve(const Q& t, int d);

struct CyclicSpec {
  int d = 2;
  Vec params;  // strictly increasing, more than d of them
};

// Convex hull of the moment-curve points c(t_1), ..., c(t_n); every one is a
// vertex. Validates the spec.
VRep cyclic_polytope(const CyclicSpec& spec);

// Convenience spec with params 1..n.
CyclicSpec integer_cyclic_spec(int d, int n);

// All d-subsets S of {0..n-1} satisfying the evenness condition: for every
// pair i < j outside S, the count of elements of S strictly between them is
// even. These are exactly the facet vertex sets of C_d(n), independent of
// the parameters.
std::vector<std::vector<int>> gale_facets(int d, int n);

// Closed form C(n - floor((d+1)/2), n-d) + C(n - floor((d+2)/2), n-d);
// equals the number of evenness subsets.
long cyclic_facet_count(int d, int n);

// (f_{-1}=1, f_0, ..., f_{d-1}) of C_d(n), built combinatorially from the
// evenness facets.
std::vector<long> cyclic_f_vector(int d, int n);

struct BoundCheck {
  bool ok = true;
  std::vector<long> f;      // boundary counts f_0..f_{d-1} of the input
  std::vector<long> h;      // h-vector of the input
  std::vector<long> bound;  // the compared bound, index-aligned
};

// f_{k-1}(P) <= f_{k-1}(C_d(n)) for all k, and h_k(P) <= C(n-d-1+k, k).
// P must be simplicial; bound holds the cyclic f-vector (f_0..f_{d-1}).
BoundCheck upper_bound_check(const FaceLattice& L);

// f_k >= C(d,k) n - C(d+1,k+1) k for 1 <= k <= d-2 and
// f_{d-1} >= (d-1) n - (d+1)(d-2). P must be simplicial, d >= 2; bound
// holds the right-hand sides for f_1..f_{d-1}.
BoundCheck lower_bound_check(const FaceLattice& L);

}  // namespace ptk
