#include "ptk/delvor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ptk/linalg.hpp"

namespace ptk {

namespace {

void check_sites(const std::vector<Vec>& sites) {
  if (sites.empty()) throw std::runtime_error("sites: empty list");
  size_t d = sites[0].size();
  if (d == 0) throw std::runtime_error("sites: dimension zero");
  for (const Vec& s : sites)
    if (s.size() != d) throw std::runtime_error("sites: mixed dimensions");
  for (size_t i = 0; i < sites.size(); ++i)
    for (size_t j = i + 1; j < sites.size(); ++j)
      if (sites[i] == sites[j]) throw std::runtime_error("sites: duplicate site");
}

void check_pair(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::runtime_error("bisector: dimension mismatch");
  if (a.empty()) throw std::runtime_error("bisector: dimension zero");
  if (a == b) throw std::runtime_error("bisector: coincident sites");
}

DelaunayComplex finish_delaunay(int d, const std::vector<Vec>& sites,
                                std::vector<std::vector<int>> cells) {
  std::sort(cells.begin(), cells.end());
  DelaunayComplex D;
  D.dim = d;
  D.sites = sites;
  D.cells = std::move(cells);
  D.complex = make_complex(static_cast<int>(sites.size()), D.cells);
  bool simplicial = true;
  for (const auto& c : D.cells)
    if (static_cast<int>(c.size()) != d + 1) simplicial = false;
  // Oversized cells are combinatorial only; coordinates would make the
  // closure claim affine independence the cell does not have.
  if (simplicial) D.complex.coords = sites;
  return D;
}

}  // namespace

HRow bisector(const Vec& a, const Vec& b) {
  check_pair(a, b);
  // Slack at a is |a-b|^2 / 2 > 0, so the halfspace strictly contains a.
  HRow r;
  Q diff = norm2(b) - norm2(a);
  r.b = diff / 2;
  r.a = sub(a, b);
  return r;
}

HRow pimap1_bisector(const Vec& a, const Vec& b) {
  check_pair(a, b);
  size_t d = a.size();
  Vec ah = a;
  ah.push_back(norm2(a));
  ah.push_back(1);
  Vec bh = b;
  bh.push_back(norm2(b));
  bh.push_back(1);
  Vec row = sub(tangent_hyperplane(Surface::Paraboloid, ah),
                tangent_hyperplane(Surface::Paraboloid, bh));
  // Both tangent rows have x_{d+1} coefficient -1, so the difference is
  // (2(a-b), 0, |b|^2 - |a|^2): a row in the site space, already oriented
  // toward a (it evaluates to |a-b|^2 there).
  HRow r;
  r.a = Vec(row.begin(), row.begin() + d);
  r.b = row[d + 1];
  return r;
}

HRep voronoi_cell(size_t i, const std::vector<Vec>& sites) {
  check_sites(sites);
  if (i >= sites.size()) throw std::runtime_error("voronoi_cell: site index out of range");
  HRep cell;
  cell.dim = static_cast<int>(sites[0].size());
  for (size_t j = 0; j < sites.size(); ++j)
    if (j != i) cell.ineqs.push_back(bisector(sites[i], sites[j]));
  if (cell.ineqs.empty()) return cell;
  return make_irredundant(cell);
}

VoronoiDiagram voronoi_diagram(const std::vector<Vec>& sites) {
  check_sites(sites);
  VoronoiDiagram V;
  V.dim = static_cast<int>(sites[0].size());
  V.sites = sites;
  for (size_t i = 0; i < sites.size(); ++i) V.cells.push_back(voronoi_cell(i, sites));
  return V;
}

Vec lift_paraboloid(const Vec& x) {
  Vec y = x;
  y.push_back(norm2(x));
  return y;
}

Vec stereo_sigma_n(const Vec& z) {
  if (z.size() < 2) throw std::runtime_error("stereo_sigma_n: need an ambient dimension of at least 2");
  if (z.back() == 1) throw std::runtime_error("stereo_sigma_n: the north pole has no image");
  Q denom = 1 - z.back();
  Vec x(z.begin(), z.end() - 1);
  for (Q& c : x) c /= denom;
  return x;
}

Vec stereo_tau_n(const Vec& x) {
  if (x.empty()) throw std::runtime_error("stereo_tau_n: dimension zero");
  Q s = norm2(x);
  Q denom = s + 1;
  Vec z;
  for (const Q& c : x) {
    Q t = 2 * c;
    z.push_back(t / denom);
  }
  Q last = s - 1;
  z.push_back(last / denom);
  return z;
}

SphereImage stereo_sphere_image(const Vec& a, const Q& b) {
  if (a.size() < 2) throw std::runtime_error("stereo_sphere_image: need an ambient dimension of at least 2");
  if (is_zero_vec(a)) throw std::runtime_error("stereo_sphere_image: zero normal");
  SphereImage im;
  Q denom = a.back() + b;
  im.lin = Vec(a.begin(), a.end() - 1);
  if (sign(denom) != 0) {
    im.is_sphere = true;
    for (Q& c : im.lin) c = 2 * c / denom;
    im.c0 = (b - a.back()) / denom;
  } else {
    // Section through the pole: the image is the flat lin.X + c0 = 0.
    im.is_sphere = false;
    im.c0 = -a.back();
  }
  return im;
}

std::pair<Vec, Q> stereo_plane_of_sphere(const Vec& lin, const Q& c0) {
  Vec a = lin;
  a.push_back(1 - c0);
  Q b = 1 + c0;
  return {a, b};
}

DelaunayComplex delaunay_paraboloid(const std::vector<Vec>& sites, bool allow_degenerate) {
  check_sites(sites);
  int d = static_cast<int>(sites[0].size());
  if (affine_dimension(sites) != d)
    throw std::runtime_error("delaunay: sites do not affinely span the space");
  if (!allow_degenerate && !general_position_check(sites))
    throw std::runtime_error("delaunay: sites not in general position");
  VRep lifted;
  lifted.dim = d + 1;
  for (const Vec& s : sites) lifted.points.push_back(lift_paraboloid(s));
  lifted.rays.push_back(unit_vec(d + 1, d));
  HRep H = v_to_h(lifted);
  std::vector<std::vector<int>> cells;
  for (const HRow& r : H.ineqs) {
    // The vertical ray forces a.back() >= 0 on every row; the lower hull is
    // exactly the rows with a.back() > 0.
    if (sign(r.a.back()) <= 0) continue;
    std::vector<int> cell;
    for (size_t i = 0; i < sites.size(); ++i) {
      Q v = r.b + dot(r.a, lifted.points[i]);
      if (sign(v) == 0) cell.push_back(static_cast<int>(i));
    }
    cells.push_back(std::move(cell));
  }
  return finish_delaunay(d, sites, std::move(cells));
}

DelaunayComplex delaunay_sphere(const std::vector<Vec>& sites, bool allow_degenerate) {
  check_sites(sites);
  int d = static_cast<int>(sites[0].size());
  if (affine_dimension(sites) != d)
    throw std::runtime_error("delaunay: sites do not affinely span the space");
  if (!allow_degenerate && !general_position_check(sites))
    throw std::runtime_error("delaunay: sites not in general position");
  VRep lifted;
  lifted.dim = d + 1;
  for (const Vec& s : sites) lifted.points.push_back(stereo_tau_n(s));
  Vec north = unit_vec(d + 1, d);
  lifted.points.push_back(north);
  HRep H = v_to_h(lifted);
  std::vector<std::vector<int>> cells;
  for (const HRow& r : H.ineqs) {
    Q at_pole = r.b + dot(r.a, north);
    // Facets through the pole project to the hull boundary, not to cells.
    if (sign(at_pole) == 0) continue;
    std::vector<int> cell;
    for (size_t i = 0; i < sites.size(); ++i) {
      Q v = r.b + dot(r.a, lifted.points[i]);
      if (sign(v) == 0) cell.push_back(static_cast<int>(i));
    }
    cells.push_back(std::move(cell));
  }
  return finish_delaunay(d, sites, std::move(cells));
}

std::pair<Vec, Q> circumcenter(const std::vector<Vec>& cell_points) {
  if (cell_points.empty()) throw std::runtime_error("circumcenter: no points");
  int d = static_cast<int>(cell_points[0].size());
  if (static_cast<int>(cell_points.size()) != d + 1)
    throw std::runtime_error("circumcenter: need d+1 points in dimension d");
  if (affine_dimension(cell_points) != d)
    throw std::runtime_error("circumcenter: points are affinely dependent");
  const Vec& p0 = cell_points[0];
  Mat A;
  Vec rhs;
  for (int j = 1; j <= d; ++j) {
    const Vec& pj = cell_points[j];
    A.push_back(scale(2, sub(pj, p0)));
    rhs.push_back(norm2(pj) - norm2(p0));
  }
  // Affine independence makes 2(p_j - p_0).c = |p_j|^2 - |p_0|^2 uniquely
  // solvable.
  Vec center = *solve_linear(A, rhs);
  Q r2 = norm2(sub(p0, center));
  return {center, r2};
}

bool empty_circumsphere_check(const DelaunayComplex& C, const std::vector<Vec>& sites,
                              bool strict) {
  for (const auto& cell : C.cells) {
    if (static_cast<int>(cell.size()) != C.dim + 1)
      throw std::runtime_error("empty_circumsphere_check: cell is not a full-dimensional simplex");
    std::vector<Vec> pts;
    for (int id : cell) {
      if (id < 0 || id >= static_cast<int>(sites.size()))
        throw std::runtime_error("empty_circumsphere_check: cell id out of range");
      pts.push_back(sites[id]);
    }
    auto [center, r2] = circumcenter(pts);
    for (size_t i = 0; i < sites.size(); ++i) {
      if (std::binary_search(cell.begin(), cell.end(), static_cast<int>(i))) continue;
      Q gap = norm2(sub(sites[i], center)) - r2;
      int cmp = sign(gap);
      if (cmp < 0 || (strict && cmp == 0)) return false;
    }
  }
  return true;
}

bool general_position_check(const std::vector<Vec>& sites) {
  check_sites(sites);
  int d = static_cast<int>(sites[0].size());
  int n = static_cast<int>(sites.size());
  int k = d + 2;
  if (n < k) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mat M;
    for (int i : idx) {
      Vec row = sites[i];
      row.push_back(norm2(sites[i]));
      row.push_back(1);
      M.push_back(std::move(row));
    }
    // Zero determinant means the k lifted points share a hyperplane: the
    // sites lie on one sphere or (degenerately) on one flat.
    if (sign(det(M)) == 0) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

Vec tangent_hyperplane(Surface s, const Vec& a) {
  if (a.size() < 3) throw std::runtime_error("tangent_hyperplane: homogeneous point too short");
  if (is_zero_vec(a)) throw std::runtime_error("tangent_hyperplane: zero vector");
  size_t m = a.size();
  Vec w(m, Q(0));
  if (s == Surface::Sphere) {
    Q lhs = 0;
    for (size_t i = 0; i + 1 < m; ++i) lhs += a[i] * a[i];
    Q rhs = a[m - 1] * a[m - 1];
    if (lhs != rhs) throw std::runtime_error("tangent_hyperplane: point not on the sphere");
    for (size_t i = 0; i + 1 < m; ++i) w[i] = a[i];
    w[m - 1] = -a[m - 1];
  } else {
    Q lhs = 0;
    for (size_t i = 0; i + 2 < m; ++i) lhs += a[i] * a[i];
    Q rhs = a[m - 2] * a[m - 1];
    if (lhs != rhs) throw std::runtime_error("tangent_hyperplane: point not on the paraboloid");
    for (size_t i = 0; i + 2 < m; ++i) w[i] = 2 * a[i];
    w[m - 2] = -a[m - 1];
    w[m - 1] = -a[m - 2];
  }
  return w;
}

DualityReport voronoi_from_delaunay_duality(const std::vector<Vec>& sites) {
  check_sites(sites);
  if (!general_position_check(sites))
    throw std::runtime_error("voronoi_from_delaunay_duality: sites not in general position");
  int d = static_cast<int>(sites[0].size());
  int n = static_cast<int>(sites.size());
  DualityReport rep;
  rep.diagram = voronoi_diagram(sites);
  rep.delaunay = delaunay_paraboloid(sites);
  for (int i = 0; i < n; ++i) {
    HRep via_delaunay;
    via_delaunay.dim = d;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<int> edge{std::min(i, j), std::max(i, j)};
      if (!rep.delaunay.complex.has_face(edge)) continue;
      via_delaunay.ineqs.push_back(pimap1_bisector(sites[i], sites[j]));
    }
    if (!hrep_equal_canonical(rep.diagram.cells[i], via_delaunay)) {
      rep.cells_agree = false;
      rep.mismatched_cells.push_back(i);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      HRep both;
      both.dim = d;
      for (const HRep* c : {&rep.diagram.cells[i], &rep.diagram.cells[j]}) {
        both.ineqs.insert(both.ineqs.end(), c->ineqs.begin(), c->ineqs.end());
        both.eqs.insert(both.eqs.end(), c->eqs.begin(), c->eqs.end());
      }
      bool share_facet = polyhedron_dim(both) == d - 1;
      bool edge = rep.delaunay.complex.has_face({i, j});
      if (edge != share_facet) {
        rep.adjacency_ok = false;
        rep.adjacency_mismatches.push_back({i, j});
      }
    }
  }
  return rep;
}

}  // namespace ptk
