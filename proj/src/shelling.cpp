#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ptk/complexes.hpp"
#include "ptk/linalg.hpp"
#include "ptk/polyhedron.hpp"

namespace ptk {

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Incremental shelling criterion for appending cell c after hist: every
// earlier intersection with c must lie inside some facet-sized one.
bool extends_shelling(const std::vector<std::vector<int>>& hist, const std::vector<int>& c) {
  if (hist.empty()) return true;
  int d = static_cast<int>(c.size());
  std::vector<std::vector<int>> facet_meets;
  for (const auto& h : hist) {
    std::vector<int> m = intersect(h, c);
    if (static_cast<int>(m.size()) == d - 1) facet_meets.push_back(m);
  }
  if (facet_meets.empty()) return false;
  for (const auto& h : hist) {
    std::vector<int> m = intersect(h, c);
    bool covered = false;
    for (const auto& fm : facet_meets)
      if (subset_of(m, fm)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

// Depth-first search for an order of `cells` in which every prefix extends
// the shelling started by hist.
bool order_cells(const std::vector<std::vector<int>>& fixed_hist,
                 std::vector<std::vector<int>>& hist, std::vector<std::vector<int>> remaining,
                 std::vector<std::vector<int>>& out) {
  if (remaining.empty()) return true;
  for (size_t i = 0; i < remaining.size(); ++i) {
    std::vector<int> c = remaining[i];
    bool ok = hist.empty() && fixed_hist.empty();
    if (!ok) {
      std::vector<std::vector<int>> all = fixed_hist;
      all.insert(all.end(), hist.begin(), hist.end());
      ok = extends_shelling(all, c);
    }
    if (!ok) continue;
    hist.push_back(c);
    out.push_back(c);
    std::vector<std::vector<int>> rest = remaining;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (order_cells(fixed_hist, hist, std::move(rest), out)) return true;
    hist.pop_back();
    out.pop_back();
  }
  return false;
}

// Triangulation of conv({coords[id]}) by inserting the ids in the given
// order: each new point cones over the boundary faces it sees, and a point
// off the current affine hull turns every cell into a pyramid.
std::vector<std::vector<int>> placing_triangulation(const Mat& coords,
                                                    const std::vector<int>& order) {
  if (order.empty()) throw std::runtime_error("placing_triangulation: no points");
  int d = static_cast<int>(coords[0].size());
  std::vector<int> inserted{order[0]};
  std::vector<std::vector<int>> cells{{order[0]}};
  for (size_t k = 1; k < order.size(); ++k) {
    int v = order[k];
    const Vec& xv = coords[static_cast<size_t>(v)];
    std::vector<Vec> pts;
    for (int id : inserted) pts.push_back(coords[static_cast<size_t>(id)]);
    VRep cur;
    cur.dim = d;
    cur.points = pts;
    HRep h = v_to_h(cur);
    bool off_hull = false;
    for (const HRow& r : h.eqs)
      if (sign(r.b + dot(r.a, xv)) != 0) off_hull = true;
    if (off_hull) {
      for (auto& c : cells) {
        c.push_back(v);
        std::sort(c.begin(), c.end());
      }
    } else {
      int cur_dim = affine_dimension(pts);
      std::set<std::vector<int>> fresh;
      for (const HRow& r : h.ineqs) {
        if (sign(r.b + dot(r.a, xv)) >= 0) continue;  // not visible from v
        std::vector<int> tight;
        for (int id : inserted)
          if (sign(r.b + dot(r.a, coords[static_cast<size_t>(id)])) == 0) tight.push_back(id);
        std::sort(tight.begin(), tight.end());
        for (const auto& c : cells) {
          std::vector<int> tau = intersect(c, tight);
          if (static_cast<int>(tau.size()) != cur_dim) continue;
          tau.push_back(v);
          std::sort(tau.begin(), tau.end());
          fresh.insert(tau);
        }
      }
      if (fresh.empty()) throw std::runtime_error("placing_triangulation: point not outside hull");
      cells.insert(cells.end(), fresh.begin(), fresh.end());
    }
    inserted.push_back(v);
  }
  return cells;
}

}  // namespace

Shelling line_shelling(const HRep& H, const VRep& V, const Vec& x, int seed) {
  HRep P = make_irredundant(H);
  VRep W = canonicalize_vrep(V);
  if (!W.rays.empty()) throw std::runtime_error("line_shelling: input must be a polytope");
  int d = P.dim;
  if (x.size() != static_cast<size_t>(d))
    throw std::runtime_error("line_shelling: point dimension mismatch");
  if (affine_dimension(W.points) != d)
    throw std::runtime_error("line_shelling: polytope is not full-dimensional");
  FaceLattice L = face_lattice(P, W);
  for (const HRow& r : L.facets)
    if (sign(r.b + dot(r.a, x)) == 0)
      throw std::runtime_error("line_shelling: x lies on a facet hyperplane");
  if (membership(x, P)) throw std::runtime_error("line_shelling: x must lie outside the polytope");

  size_t n = L.vertices.size();
  size_t m = L.facets.size();
  Vec y = zero_vec(d);
  for (const Vec& p : L.vertices) y = add(y, p);
  y = scale(Q(1) / Q(static_cast<long>(n)), y);

  bool simplicial = true;
  for (const auto& inc : L.incidence)
    if (static_cast<int>(inc.size()) != d) simplicial = false;

  // Insertion order for placing: coordinate-lex, shared by every facet so
  // that adjacent facet triangulations agree on their common ridge.
  std::vector<int> global_order(n);
  for (size_t i = 0; i < n; ++i) global_order[i] = static_cast<int>(i);
  std::sort(global_order.begin(), global_order.end(),
            [&](int a, int b) { return L.vertices[static_cast<size_t>(a)] < L.vertices[static_cast<size_t>(b)]; });

  int t0 = std::max(seed, 0);
  for (int t = t0; t < t0 + 64; ++t) {
    mpz_class den = mpz_class(1) << static_cast<unsigned>(t);
    Q lambda(mpz_class(1), den);
    Vec yp = add(y, perturbation_vector(lambda, d));
    bool good = true;
    for (const HRow& r : L.facets)
      if (sign(r.b + dot(r.a, yp)) <= 0) good = false;  // perturbed point left the interior
    if (!good) continue;
    Vec w = sub(x, yp);
    std::vector<Q> param(m);
    for (size_t i = 0; i < m && good; ++i) {
      Q den = dot(L.facets[i].a, w);
      if (sign(den) == 0) {
        good = false;  // line parallel to a facet hyperplane
        break;
      }
      param[i] = -(L.facets[i].b + dot(L.facets[i].a, yp)) / den;
    }
    if (!good) continue;
    {
      std::vector<Q> s = param;
      std::sort(s.begin(), s.end());
      for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) good = false;  // coincident crossings
      if (!good) continue;
    }

    // Crossing order: out through the positive side first, then the returns.
    std::vector<size_t> facet_order(m);
    for (size_t i = 0; i < m; ++i) facet_order[i] = i;
    std::sort(facet_order.begin(), facet_order.end(), [&](size_t a, size_t b) {
      bool pa = sign(param[a]) > 0, pb = sign(param[b]) > 0;
      if (pa != pb) return pa;
      return param[a] < param[b];
    });

    std::vector<std::vector<int>> placed;
    bool built = true;
    for (size_t fi : facet_order) {
      std::vector<std::vector<int>> facet_cells;
      if (simplicial) {
        facet_cells.push_back(L.incidence[fi]);
      } else {
        std::vector<int> order_in_facet;
        std::set<int> members(L.incidence[fi].begin(), L.incidence[fi].end());
        for (int id : global_order)
          if (members.count(id)) order_in_facet.push_back(id);
        facet_cells = placing_triangulation(L.vertices, order_in_facet);
      }
      std::vector<std::vector<int>> hist, chosen;
      if (!order_cells(placed, hist, facet_cells, chosen)) {
        built = false;
        break;
      }
      placed.insert(placed.end(), chosen.begin(), chosen.end());
    }
    if (!built) continue;

    SimplicialComplex B = make_complex(static_cast<int>(n), placed);
    B.coords = L.vertices;
    ShellingReport rep = is_shelling(B, placed);
    if (!rep.ok) continue;
    return rep.shelling;
  }
  throw std::runtime_error("line_shelling: cannot certify x in general position");
}

}  // namespace ptk
