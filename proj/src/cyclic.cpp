#include "ptk/cyclic.hpp"

#include <stdexcept>

#include "ptk/complexes.hpp"

namespace ptk {

Vec moment_curve(const Q& t, int d) {
  if (d < 1) throw std::runtime_error("moment_curve: d must be >= 1");
  Vec v(static_cast<size_t>(d));
  Q p = 1;
  for (int i = 0; i < d; ++i) {
    p *= t;
    v[static_cast<size_t>(i)] = p;
  }
  return v;
}

VRep cyclic_polytope(const CyclicSpec& spec) {
  if (spec.d < 2) throw std::runtime_error("cyclic_polytope: d must be >= 2");
  if (spec.params.size() <= static_cast<size_t>(spec.d))
    throw std::runtime_error("cyclic_polytope: need more than d parameters");
  for (size_t i = 0; i + 1 < spec.params.size(); ++i)
    if (!(spec.params[i] < spec.params[i + 1]))
      throw std::runtime_error("cyclic_polytope: parameters must be strictly increasing");
  VRep P;
  P.dim = spec.d;
  for (const Q& t : spec.params) P.points.push_back(moment_curve(t, spec.d));
  return P;
}

CyclicSpec integer_cyclic_spec(int d, int n) {
  CyclicSpec spec;
  spec.d = d;
  for (int i = 1; i <= n; ++i) spec.params.push_back(Q(i));
  return spec;
}

std::vector<std::vector<int>> gale_facets(int d, int n) {
  if (d < 2 || n <= d) throw std::runtime_error("gale_facets: need 2 <= d < n");
  std::vector<std::vector<int>> out;
  std::vector<bool> in(static_cast<size_t>(n));
  std::vector<int> S;
  // Enumerate d-subsets in lexicographic order.
  std::vector<int> pick(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) pick[static_cast<size_t>(i)] = i;
  for (;;) {
    std::fill(in.begin(), in.end(), false);
    for (int s : pick) in[static_cast<size_t>(s)] = true;
    bool even = true;
    for (int i = 0; i < n && even; ++i) {
      if (in[static_cast<size_t>(i)]) continue;
      int between = 0;
      for (int k = i + 1; k < n && even; ++k) {
        if (in[static_cast<size_t>(k)]) {
          ++between;
        } else {
          if (between % 2 != 0) even = false;
          between = 0;
        }
      }
    }
    if (even) out.push_back(pick);
    int k = d - 1;
    while (k >= 0 && pick[static_cast<size_t>(k)] == n - (d - k)) --k;
    if (k < 0) break;
    ++pick[static_cast<size_t>(k)];
    for (int j = k + 1; j < d; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

long cyclic_facet_count(int d, int n) {
  if (d < 2 || n <= d) throw std::runtime_error("cyclic_facet_count: need 2 <= d < n");
  return binomial(n - (d + 1) / 2, n - d) + binomial(n - (d + 2) / 2, n - d);
}

std::vector<long> cyclic_f_vector(int d, int n) {
  SimplicialComplex K = make_complex(n, gale_facets(d, n));
  return f_vector(K);
}

BoundCheck upper_bound_check(const FaceLattice& L) {
  int d = L.dim;
  int n = static_cast<int>(L.vertices.size());
  for (const auto& inc : L.incidence)
    if (static_cast<int>(inc.size()) != d)
      throw std::runtime_error("upper_bound_check: polytope is not simplicial");
  BoundCheck rep;
  std::vector<long> fl = f_vector_of_lattice(L);
  std::vector<long> cyc = cyclic_f_vector(d, n);
  std::vector<long> fb{1};
  for (int k = 0; k < d; ++k) {
    rep.f.push_back(fl[static_cast<size_t>(k)]);
    rep.bound.push_back(cyc[static_cast<size_t>(k) + 1]);
    fb.push_back(fl[static_cast<size_t>(k)]);
    if (fl[static_cast<size_t>(k)] > cyc[static_cast<size_t>(k) + 1]) rep.ok = false;
  }
  rep.h = h_from_f(fb, d);
  for (int k = 0; k <= d; ++k)
    if (rep.h[static_cast<size_t>(k)] > binomial(n - d - 1 + k, k)) rep.ok = false;
  return rep;
}

BoundCheck lower_bound_check(const FaceLattice& L) {
  int d = L.dim;
  long n = static_cast<long>(L.vertices.size());
  for (const auto& inc : L.incidence)
    if (static_cast<int>(inc.size()) != d)
      throw std::runtime_error("lower_bound_check: polytope is not simplicial");
  if (d < 2) throw std::runtime_error("lower_bound_check: d must be >= 2");
  BoundCheck rep;
  std::vector<long> fl = f_vector_of_lattice(L);
  for (int k = 1; k < d; ++k) {
    long lhs = fl[static_cast<size_t>(k)];
    long rhs = (k <= d - 2) ? binomial(d, k) * n - binomial(d + 1, k + 1) * k
                            : (d - 1) * n - (d + 1) * (d - 2);
    rep.f.push_back(lhs);
    rep.bound.push_back(rhs);
    if (lhs < rhs) rep.ok = false;
  }
  return rep;
}

}  // namespace ptk
