#include "ptk/complexes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ptk/linalg.hpp"

namespace ptk {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// All nonempty subsets of a sorted face.
void push_subsets(const std::vector<int>& face, std::set<std::vector<int>>& out) {
  size_t k = face.size();
  if (k > 20) throw std::runtime_error("complex: face too large");
  for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
    std::vector<int> s;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) s.push_back(face[i]);
    out.insert(std::move(s));
  }
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Open-simplex intersection: some point with strictly positive barycentric
// weights in both faces.
bool relative_interiors_meet(const Mat& coords, const std::vector<int>& f1,
                             const std::vector<int>& f2) {
  int d = static_cast<int>(coords[0].size());
  int n1 = static_cast<int>(f1.size());
  int n2 = static_cast<int>(f2.size());
  LinSystem sys(n1 + n2);
  for (int i = 0; i < n1 + n2; ++i) sys.add(Q(0), unit_vec(n1 + n2, i), Rel::GT);
  Vec ones1 = zero_vec(n1 + n2);
  Vec ones2 = zero_vec(n1 + n2);
  for (int i = 0; i < n1; ++i) ones1[static_cast<size_t>(i)] = 1;
  for (int i = 0; i < n2; ++i) ones2[static_cast<size_t>(n1 + i)] = 1;
  sys.add(Q(-1), ones1, Rel::EQ);
  sys.add(Q(-1), ones2, Rel::EQ);
  for (int c = 0; c < d; ++c) {
    Vec a = zero_vec(n1 + n2);
    for (int i = 0; i < n1; ++i) a[static_cast<size_t>(i)] = coords[static_cast<size_t>(f1[static_cast<size_t>(i)])][static_cast<size_t>(c)];
    for (int i = 0; i < n2; ++i) a[static_cast<size_t>(n1 + i)] = -coords[static_cast<size_t>(f2[static_cast<size_t>(i)])][static_cast<size_t>(c)];
    sys.add(Q(0), a, Rel::EQ);
  }
  return check_feasible(sys).feasible;
}

}  // namespace

int SimplicialComplex::dim() const {
  size_t m = 0;
  for (const auto& f : faces) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::has_face(const std::vector<int>& sigma) const {
  return faces.count(sorted_unique(sigma)) > 0;
}

SimplicialComplex make_complex(int n_vertices, const std::vector<std::vector<int>>& generators) {
  SimplicialComplex K;
  K.n_vertices = n_vertices;
  for (const auto& g : generators) {
    std::vector<int> f = sorted_unique(g);
    for (int v : f)
      if (v < 0 || v >= n_vertices) throw std::runtime_error("complex: vertex id out of range");
    if (!f.empty()) push_subsets(f, K.faces);
  }
  return K;
}

std::vector<std::vector<int>> maximal_faces(const SimplicialComplex& K) {
  std::vector<std::vector<int>> out;
  for (const auto& f : K.faces) {
    bool maximal = true;
    for (const auto& g : K.faces)
      if (f != g && subset_of(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

ComplexReport validate_complex(const SimplicialComplex& K) {
  ComplexReport rep;
  for (const auto& f : K.faces) {
    if (f.empty() || !std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end()) {
      return {false, "malformed face"};
    }
    for (int v : f)
      if (v < 0 || v >= K.n_vertices) return {false, "vertex id out of range"};
    if (f.size() > 1) {
      for (size_t i = 0; i < f.size(); ++i) {
        std::vector<int> sub = f;
        sub.erase(sub.begin() + static_cast<long>(i));
        if (!K.faces.count(sub)) return {false, "not closed under subsets"};
      }
    }
  }
  if (K.coords.empty()) return rep;
  if (K.coords.size() != static_cast<size_t>(K.n_vertices))
    return {false, "coordinate count does not match vertex count"};
  for (const auto& f : K.faces) {
    std::vector<Vec> pts;
    for (int v : f) pts.push_back(K.coords[static_cast<size_t>(v)]);
    if (affine_dimension(pts) != static_cast<int>(f.size()) - 1)
      return {false, "face realized by affinely dependent points"};
  }
  for (auto it1 = K.faces.begin(); it1 != K.faces.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != K.faces.end(); ++it2) {
      if (relative_interiors_meet(K.coords, *it1, *it2))
        return {false, "relative interiors of distinct faces intersect"};
    }
  }
  return rep;
}

std::pair<SimplicialComplex, SimplicialComplex> star_link(const SimplicialComplex& K,
                                                          const std::vector<int>& sigma) {
  std::vector<int> s = sorted_unique(sigma);
  if (s.empty() || !K.faces.count(s)) throw std::runtime_error("star_link: sigma is not a face");
  SimplicialComplex st, lk;
  st.n_vertices = lk.n_vertices = K.n_vertices;
  st.coords = lk.coords = K.coords;
  for (const auto& f : K.faces) {
    if (!subset_of(s, f)) continue;
    push_subsets(f, st.faces);
  }
  for (const auto& f : st.faces)
    if (intersect(f, s).empty()) lk.faces.insert(f);
  return {st, lk};
}

SimplicialComplex boundary_complex(const SimplicialComplex& K) {
  auto cells = maximal_faces(K);
  size_t card = cells.empty() ? 0 : cells[0].size();
  for (const auto& c : cells)
    if (c.size() != card) throw std::runtime_error("boundary_complex: complex is not pure");
  SimplicialComplex B;
  B.n_vertices = K.n_vertices;
  B.coords = K.coords;
  if (card < 1) return B;
  std::map<std::vector<int>, int> count;
  for (const auto& c : cells) {
    for (size_t i = 0; i < c.size(); ++i) {
      std::vector<int> ridge = c;
      ridge.erase(ridge.begin() + static_cast<long>(i));
      if (!ridge.empty()) ++count[ridge];
    }
  }
  for (const auto& [ridge, n] : count)
    if (n == 1) push_subsets(ridge, B.faces);
  return B;
}

std::vector<long> f_vector(const SimplicialComplex& K) {
  std::vector<long> f(static_cast<size_t>(K.dim()) + 2, 0);
  f[0] = 1;
  for (const auto& face : K.faces) ++f[face.size()];
  return f;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<long> h_from_f(const std::vector<long>& f, int d) {
  if (static_cast<int>(f.size()) != d + 1 || d < 0)
    throw std::runtime_error("h_from_f: f must have length d+1");
  std::vector<long> h(static_cast<size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      long s = ((k - i) % 2 == 0) ? 1 : -1;
      h[static_cast<size_t>(k)] += s * binomial(d - i, d - k) * f[static_cast<size_t>(i)];
    }
  return h;
}

std::vector<long> f_from_h(const std::vector<long>& h, int d) {
  if (static_cast<int>(h.size()) != d + 1 || d < 0)
    throw std::runtime_error("f_from_h: h must have length d+1");
  std::vector<long> f(static_cast<size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i)
      f[static_cast<size_t>(k)] += h[static_cast<size_t>(i)] * binomial(d - i, k - i);
  return f;
}

FHVectors fh_vectors(const SimplicialComplex& K) {
  FHVectors fh;
  fh.f = f_vector(K);
  fh.h = h_from_f(fh.f, K.dim() + 1);
  return fh;
}

long euler_characteristic(const SimplicialComplex& K) {
  std::vector<long> f = f_vector(K);
  long chi = 0;
  for (size_t i = 1; i < f.size(); ++i) chi += (i % 2 ? 1 : -1) * f[i];
  return chi;
}

long euler_characteristic_boundary(const FaceLattice& L) {
  std::vector<long> f = f_vector_of_lattice(L);
  long chi = 0;
  for (size_t k = 0; k + 1 < f.size(); ++k) chi += (k % 2 ? -1 : 1) * f[k];
  return chi;
}

bool euler_polytope_check(const FaceLattice& L) {
  // chi(P) = chi(boundary) + (-1)^d = 1 is the same identity.
  return euler_characteristic_boundary(L) == 1 - (L.dim % 2 ? -1 : 1);
}

DSReport dehn_sommerville_check(const FaceLattice& L) {
  int d = L.dim;
  for (const auto& inc : L.incidence)
    if (static_cast<int>(inc.size()) != d)
      throw std::runtime_error("dehn_sommerville_check: polytope is not simplicial");
  DSReport rep;
  std::vector<long> fl = f_vector_of_lattice(L);
  rep.f.push_back(1);
  for (int k = 0; k < d; ++k) rep.f.push_back(fl[static_cast<size_t>(k)]);
  rep.h = h_from_f(rep.f, d);
  rep.ok = true;
  for (int k = 0; k <= d; ++k)
    if (rep.h[static_cast<size_t>(k)] != rep.h[static_cast<size_t>(d - k)]) rep.ok = false;
  if (d == 3 && 2 * rep.f[2] != 3 * rep.f[3]) rep.ok = false;
  return rep;
}

ShellingReport is_shelling(const SimplicialComplex& K, const std::vector<std::vector<int>>& order) {
  ShellingReport rep;
  auto cells = maximal_faces(K);
  size_t card = cells.empty() ? 0 : cells[0].size();
  for (const auto& c : cells)
    if (c.size() != card) {
      rep.reason = "complex is not pure";
      return rep;
    }
  std::vector<std::vector<int>> got;
  for (const auto& f : order) got.push_back(sorted_unique(f));
  {
    auto a = got;
    auto b = cells;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      rep.reason = "order is not a permutation of the cells";
      return rep;
    }
  }
  int d = static_cast<int>(card);
  for (size_t j = 1; j < got.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      std::vector<int> meet = intersect(got[i], got[j]);
      bool covered = false;
      for (size_t l = 0; l < j && !covered; ++l) {
        std::vector<int> lj = intersect(got[l], got[j]);
        if (static_cast<int>(lj.size()) == d - 1 && subset_of(meet, lj)) covered = true;
      }
      if (!covered) {
        rep.fail_index = static_cast<int>(j);
        rep.reason = "intersection with earlier cells is not a nonempty union of facets";
        return rep;
      }
    }
  }
  rep.ok = true;
  rep.shelling.facet_order = got;
  for (size_t j = 0; j < got.size(); ++j) {
    std::vector<int> r;
    for (int v : got[j]) {
      std::vector<int> sub;
      for (int u : got[j])
        if (u != v) sub.push_back(u);
      for (size_t i = 0; i < j; ++i)
        if (subset_of(sub, got[i])) {
          r.push_back(v);
          break;
        }
    }
    rep.shelling.restrictions.push_back(r);
  }
  return rep;
}

std::vector<long> h_from_shelling(const SimplicialComplex& K,
                                  const std::vector<std::vector<int>>& order) {
  ShellingReport rep = is_shelling(K, order);
  if (!rep.ok) throw std::runtime_error("h_from_shelling: order is not a shelling: " + rep.reason);
  int d = K.dim() + 1;
  std::vector<long> h(static_cast<size_t>(d) + 1, 0);
  for (const auto& r : rep.shelling.restrictions) ++h[r.size()];
  return h;
}

SimplicialComplex complex_from_lattice(const FaceLattice& L) {
  for (const auto& inc : L.incidence)
    if (static_cast<int>(inc.size()) != L.dim)
      throw std::runtime_error("complex_from_lattice: polytope is not simplicial");
  SimplicialComplex K = make_complex(static_cast<int>(L.vertices.size()), L.incidence);
  K.coords = L.vertices;
  return K;
}

}  // namespace ptk
