#include "ptk/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ptk/linalg.hpp"

namespace ptk {

namespace {

// Stored equations participate in elimination only as inequality pairs.
std::vector<HRow> expanded_rows(const HRep& P) {
  std::vector<HRow> rows = P.ineqs;
  for (const HRow& e : P.eqs) {
    rows.push_back(e);
    rows.push_back(HRow{-e.b, neg(e.a)});
  }
  return rows;
}

Mat slice_generators(const Mat& Y, size_t k) {
  Mat out;
  for (const Vec& y : Y)
    if (sign(y[k]) == 0) out.push_back(y);
  for (const Vec& yi : Y) {
    if (sign(yi[k]) <= 0) continue;
    for (const Vec& yj : Y) {
      if (sign(yj[k]) >= 0) continue;
      out.push_back(sub(scale(yi[k], yj), scale(yj[k], yi)));
    }
  }
  return out;
}

Mat filter_rows_primitive(const Mat& rows) {
  Mat out;
  std::set<Vec> seen;
  for (const Vec& r : rows) {
    Vec p = primitive(r);
    if (is_zero_vec(p)) continue;
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

constexpr size_t kPruneAt = 16;

// Next coordinate to eliminate: fewest sign pairings (deterministic ties).
size_t cheapest_coord(const Mat& rows, const std::vector<size_t>& remaining) {
  size_t best = remaining[0];
  long best_cost = -1;
  for (size_t k : remaining) {
    long pos = 0, negc = 0;
    for (const Vec& r : rows) {
      int s = sign(r[k]);
      if (s > 0)
        ++pos;
      else if (s < 0)
        ++negc;
    }
    long cost = pos * negc;
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best = k;
    }
  }
  return best;
}

// Slack elimination for the explicit cone {(z, s) | s >= Az} with slack r at
// coordinate D + r. The defining rows (-A_r, e_r) stay valid throughout, so a
// generator whose tight rows leave at most one degree of freedom beyond the
// lineality space lies on a minimal face and is kept without a membership
// test; only the rest face the exact test. Each row carries a unit slack
// column, so its rank contribution is a count for live slacks and a width-D
// rank of z-parts for sliced ones.
Mat eliminate_slacks(Mat gens, const Mat& A) {
  size_t m = A.size();
  size_t D = gens.empty() ? 0 : gens[0].size() - m;
  std::vector<size_t> coords;
  for (size_t r = 0; r < m; ++r) coords.push_back(D + r);
  std::vector<bool> live(m, true);
  while (!coords.empty()) {
    size_t k = cheapest_coord(gens, coords);
    gens = filter_rows_primitive(slice_generators(gens, k));
    live[k - D] = false;
    coords.erase(std::find(coords.begin(), coords.end(), k));
    if (gens.size() <= kPruneAt) continue;

    Mat sliced_z;
    for (size_t r = 0; r < m; ++r)
      if (!live[r]) sliced_z.push_back(A[r]);

    // Lineality basis {(z, Az) | A_r z = 0 for sliced r}; reducing every
    // generator against it collapses twins that differ by a lineality shift,
    // which the minimal-face test below cannot tell apart.
    Mat lin;
    for (const Vec& zb : nullspace(sliced_z)) {
      Vec w(D + m, Q(0));
      for (size_t c = 0; c < D; ++c) w[c] = zb[c];
      for (size_t r = 0; r < m; ++r) w[D + r] = dot(A[r], zb);
      lin.push_back(std::move(w));
    }
    if (!lin.empty()) {
      lin = rref(lin);
      std::vector<size_t> piv;
      for (const Vec& b : lin) {
        size_t c = 0;
        while (sign(b[c]) == 0) ++c;
        piv.push_back(c);
      }
      for (Vec& g : gens)
        for (size_t t = 0; t < lin.size(); ++t)
          if (sign(g[piv[t]]) != 0) g = sub(g, scale(g[piv[t]] / lin[t][piv[t]], lin[t]));
      gens = filter_rows_primitive(gens);
      for (const Vec& b : lin) {
        gens.push_back(primitive(b));
        gens.push_back(primitive(neg(b)));
      }
    }

    // tight-live count plus tight-sliced z-rank needed for a minimal face
    long need = static_cast<long>(coords.size()) + rank(sliced_z) - 1;

    Mat cand, extra;
    for (Vec& g : gens) {
      long tl = 0;
      Mat tz;
      for (size_t r = 0; r < m; ++r) {
        Q t = g[D + r];
        for (size_t c = 0; c < D; ++c)
          if (sign(A[r][c]) != 0) t -= A[r][c] * g[c];
        if (sign(t) != 0) continue;
        if (live[r])
          ++tl;
        else
          tz.push_back(A[r]);
      }
      if (tl + rank(tz) >= need)
        extra.push_back(std::move(g));
      else
        cand.push_back(std::move(g));
    }
    std::vector<bool> keep = cone_irredundant_mask(cand, extra);
    gens = std::move(extra);
    for (size_t c = 0; c < cand.size(); ++c)
      if (keep[c]) gens.push_back(std::move(cand[c]));
  }
  return gens;
}

Mat drop_coord(const Mat& rows, size_t k) {
  Mat out;
  out.reserve(rows.size());
  for (const Vec& r : rows) {
    Vec v;
    v.reserve(r.size() - 1);
    for (size_t i = 0; i < r.size(); ++i)
      if (i != k) v.push_back(r[i]);
    out.push_back(std::move(v));
  }
  return out;
}

Mat delete_coords(Mat rows, std::vector<size_t> coords) {
  std::sort(coords.rbegin(), coords.rend());
  for (size_t k : coords) rows = drop_coord(rows, k);
  return rows;
}

Vec row_vec(const HRow& r) {
  Vec v;
  v.reserve(r.a.size() + 1);
  v.push_back(r.b);
  v.insert(v.end(), r.a.begin(), r.a.end());
  return v;
}

// Prune for eliminations that know a V-side witness set of the current
// projection: a row survives iff its tight witnesses span a facet or the
// whole affine hull. Any system defining the projection keeps, for every
// facet, some row tight exactly there, and flat directions only ever appear
// as pairs of hull-tight rows, so the survivors still define the projection.
void facet_prune(Mat& rows, const std::vector<size_t>& live, const Mat& wit_pts,
                 const Mat& wit_rays) {
  auto compress = [&](const Vec& v) {
    Vec out;
    out.reserve(live.size());
    for (size_t c : live) out.push_back(v[c]);
    return out;
  };
  auto span_dim = [&](const std::vector<const Vec*>& pts, const std::vector<const Vec*>& rays) {
    if (pts.empty()) return -1;
    Mat diffs;
    Vec p0 = compress(*pts[0]);
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(compress(*pts[i]), p0));
    for (const Vec* r : rays) diffs.push_back(compress(*r));
    if (diffs.empty()) return 0;
    return rank(diffs);
  };
  std::vector<const Vec*> all_pts, all_rays;
  for (const Vec& w : wit_pts) all_pts.push_back(&w);
  for (const Vec& w : wit_rays) all_rays.push_back(&w);
  int dimq = span_dim(all_pts, all_rays);

  Mat kept;
  for (Vec& r : rows) {
    std::vector<const Vec*> tp, tr;
    for (const Vec& w : wit_pts)
      if (sign(dot(r, w)) == 0) tp.push_back(&w);
    for (const Vec& w : wit_rays)
      if (sign(dot(r, w)) == 0) tr.push_back(&w);
    if (tp.empty()) continue;
    if (span_dim(tp, tr) >= dimq - 1) kept.push_back(std::move(r));
  }
  rows = std::move(kept);
}

// Emptiness as one cone-membership LP: with x = p - q (p, q >= 0) and one
// slack per inequality, the system {b + a.x >= 0, eqs} is solvable iff
// (-b_1, ..., -b_M) lies in the cone of the variable columns.
bool hrep_feasible(const HRep& P) {
  size_t mi = P.ineqs.size(), me = P.eqs.size();
  size_t M = mi + me;
  auto column = [&](size_t c, int s) {
    Vec col(M, Q(0));
    for (size_t i = 0; i < mi; ++i) col[i] = s * P.ineqs[i].a[c];
    for (size_t e = 0; e < me; ++e) col[mi + e] = s * P.eqs[e].a[c];
    return col;
  };
  Mat cols;
  for (size_t c = 0; c < static_cast<size_t>(P.dim); ++c) {
    cols.push_back(column(c, 1));
    cols.push_back(column(c, -1));
  }
  for (size_t i = 0; i < mi; ++i) {
    Vec slack(M, Q(0));
    slack[i] = -1;
    cols.push_back(std::move(slack));
  }
  Vec t(M, Q(0));
  for (size_t i = 0; i < mi; ++i) t[i] = -P.ineqs[i].b;
  for (size_t e = 0; e < me; ++e) t[mi + e] = -P.eqs[e].b;
  return cone_member(cols, t);
}

}  // namespace

ConeRep homogenize(const HRep& P) {
  ConeRep C;
  C.dim = P.dim + 1;
  C.kind = ConeRep::Kind::HCone;
  for (const HRow& r : expanded_rows(P)) {
    Vec u = neg(r.a);
    u.push_back(-r.b);
    C.rows.push_back(std::move(u));
  }
  Vec last = zero_vec(C.dim);
  last[static_cast<size_t>(P.dim)] = -1;
  C.rows.push_back(std::move(last));
  return C;
}

ConeRep homogenize(const VRep& P) {
  ConeRep C;
  C.dim = P.dim + 1;
  C.kind = ConeRep::Kind::VCone;
  for (const Vec& y : P.points) {
    Vec g = y;
    g.push_back(1);
    C.rows.push_back(std::move(g));
  }
  for (const Vec& v : P.rays) {
    Vec g = v;
    g.push_back(0);
    C.rows.push_back(std::move(g));
  }
  return C;
}

VRep dehomogenize(const ConeRep& C) {
  if (C.kind != ConeRep::Kind::VCone)
    throw std::runtime_error("dehomogenize: expects a v-cone");
  VRep P;
  P.dim = C.dim - 1;
  size_t last = static_cast<size_t>(C.dim - 1);
  for (const Vec& g : C.rows) {
    int s = sign(g[last]);
    if (s < 0) throw std::runtime_error("dehomogenize: generator below the slice");
    Vec v(g.begin(), g.end() - 1);
    if (s > 0) {
      P.points.push_back(scale(1 / g[last], v));
    } else if (!is_zero_vec(v)) {
      P.rays.push_back(std::move(v));
    }
  }
  return P;
}

ConeRep fm_slice(const ConeRep& C, int k) {
  if (C.kind != ConeRep::Kind::VCone) throw std::runtime_error("fm_slice: expects a v-cone");
  if (k < 1 || k > C.dim) throw std::runtime_error("fm_slice: coordinate out of range");
  ConeRep out;
  out.dim = C.dim;
  out.kind = ConeRep::Kind::VCone;
  out.rows = slice_generators(C.rows, static_cast<size_t>(k - 1));
  return out;
}

ConeRep fm_project(const ConeRep& C, int k) {
  if (C.kind != ConeRep::Kind::HCone) throw std::runtime_error("fm_project: expects an h-cone");
  if (k < 1 || k > C.dim) throw std::runtime_error("fm_project: coordinate out of range");
  ConeRep out;
  out.dim = C.dim;
  out.kind = ConeRep::Kind::HCone;
  // The row combination is formally identical to the generator combination.
  out.rows = slice_generators(C.rows, static_cast<size_t>(k - 1));
  out.rows.push_back(unit_vec(C.dim, k - 1));
  out.rows.push_back(neg(unit_vec(C.dim, k - 1)));
  return out;
}

ConeRep cone_filter(const ConeRep& C) {
  ConeRep out = C;
  out.rows = filter_rows_primitive(C.rows);
  return out;
}

LinSystem to_system(const HRep& P) {
  LinSystem sys(P.dim);
  for (const HRow& r : P.ineqs) sys.add(r.b, r.a, Rel::GE);
  for (const HRow& r : P.eqs) sys.add(r.b, r.a, Rel::EQ);
  return sys;
}

bool is_empty(const HRep& P) { return !hrep_feasible(P); }

bool membership(const Vec& x, const HRep& P) {
  if (static_cast<int>(x.size()) != P.dim)
    throw std::runtime_error("membership: dimension mismatch");
  for (const HRow& r : P.ineqs)
    if (sign(r.b + dot(r.a, x)) < 0) return false;
  for (const HRow& r : P.eqs)
    if (sign(r.b + dot(r.a, x)) != 0) return false;
  return true;
}

VRep canonicalize_vrep(const VRep& P) {
  VRep out;
  out.dim = P.dim;
  // Deduplicate exactly (points) and up to positive scale (rays).
  std::set<Vec> seen;
  std::vector<Vec> pts, rays;
  for (const Vec& p : P.points)
    if (seen.insert(p).second) pts.push_back(p);
  seen.clear();
  for (const Vec& r : P.rays) {
    Vec pr = primitive(r);
    if (is_zero_vec(pr)) continue;
    if (seen.insert(pr).second) rays.push_back(pr);
  }

  // A point survives iff it is not in conv(other points) + cone(rays), i.e.
  // iff (p, 1) is outside the cone over the other lifted generators.
  for (size_t i = 0; i < pts.size();) {
    Mat gens;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      Vec g = pts[j];
      g.push_back(1);
      gens.push_back(std::move(g));
    }
    for (const Vec& r : rays) {
      Vec g = r;
      g.push_back(0);
      gens.push_back(std::move(g));
    }
    Vec target = pts[i];
    target.push_back(1);
    if (cone_member(gens, target)) {
      pts.erase(pts.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }

  // A ray survives iff it is not a positive combination of the other rays.
  for (size_t i = 0; i < rays.size();) {
    Mat gens;
    for (size_t j = 0; j < rays.size(); ++j)
      if (j != i) gens.push_back(rays[j]);
    if (cone_member(gens, rays[i])) {
      rays.erase(rays.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }

  std::sort(pts.begin(), pts.end());
  std::sort(rays.begin(), rays.end());
  out.points = std::move(pts);
  out.rays = std::move(rays);
  return out;
}

VRep h_to_v(const HRep& P) {
  if (is_empty(P)) return VRep{P.dim, {}, {}};
  ConeRep H = homogenize(P);  // h-cone, rows A' over (x, w)
  size_t D = static_cast<size_t>(H.dim);
  size_t m = H.rows.size();
  // Explicit v-cone for {(z, s) | s >= A'z}: +-(e_i, A'e_i) and slack units.
  Mat gens;
  for (size_t i = 0; i < D; ++i) {
    Vec g = unit_vec(static_cast<int>(D + m), static_cast<int>(i));
    for (size_t r = 0; r < m; ++r) g[D + r] = H.rows[r][i];
    gens.push_back(g);
    gens.push_back(neg(g));
  }
  for (size_t r = 0; r < m; ++r)
    gens.push_back(unit_vec(static_cast<int>(D + m), static_cast<int>(D + r)));

  std::vector<size_t> slacks;
  for (size_t r = 0; r < m; ++r) slacks.push_back(D + r);
  gens = eliminate_slacks(std::move(gens), H.rows);
  gens = delete_coords(std::move(gens), slacks);

  ConeRep C;
  C.dim = static_cast<int>(D);
  C.kind = ConeRep::Kind::VCone;
  C.rows = std::move(gens);
  return canonicalize_vrep(dehomogenize(C));
}

HRep v_to_h(const VRep& P) {
  if (P.empty()) throw std::runtime_error("v_to_h: empty polyhedron");
  size_t d = static_cast<size_t>(P.dim);
  size_t p = P.points.size(), q = P.rays.size();
  size_t D = d + p + q;
  // {(x,u,t) | x = Yu + Vt, u >= 0, sum u = 1, t >= 0} as affine rows.
  std::vector<HRow> eqs;
  for (size_t i = 0; i < d; ++i) {
    // x_i - sum_j Y_j[i] u_j - sum_k V_k[i] t_k = 0
    Vec a = zero_vec(static_cast<int>(D));
    a[i] = 1;
    for (size_t j = 0; j < p; ++j) a[d + j] = -P.points[j][i];
    for (size_t k = 0; k < q; ++k) a[d + p + k] = -P.rays[k][i];
    eqs.push_back(HRow{Q(0), std::move(a)});
  }
  {
    Vec a = zero_vec(static_cast<int>(D));
    for (size_t j = 0; j < p; ++j) a[d + j] = 1;
    eqs.push_back(HRow{Q(-1), std::move(a)});  // sum u = 1
  }
  std::vector<HRow> ineqs;
  for (size_t j = 0; j < p + q; ++j)
    ineqs.push_back(HRow{Q(0), unit_vec(static_cast<int>(D), static_cast<int>(d + j))});

  // Gauss phase: substitute equations for auxiliary variables; each step
  // removes one equation and zeroes one u/t column everywhere.
  while (true) {
    size_t ei = eqs.size(), var = D;
    for (size_t e = 0; e < eqs.size() && ei == eqs.size(); ++e)
      for (size_t k = D; k-- > d;)
        if (sign(eqs[e].a[k]) != 0) {
          ei = e;
          var = k;
          break;
        }
    if (ei == eqs.size()) break;
    HRow piv = eqs[ei];
    eqs.erase(eqs.begin() + static_cast<long>(ei));
    auto substitute = [&](HRow& r) {
      if (sign(r.a[var]) == 0) return;
      Q f = r.a[var] / piv.a[var];
      r.b -= f * piv.b;
      for (size_t k = 0; k < D; ++k) r.a[k] -= f * piv.a[k];
    };
    for (HRow& r : ineqs) substitute(r);
    for (HRow& r : eqs) substitute(r);
  }

  // Surviving equations involve x only; drop trivial ones.
  std::vector<HRow> x_eqs;
  for (HRow& e : eqs)
    if (!is_zero_vec(e.a) || sign(e.b) != 0) x_eqs.push_back(std::move(e));

  // Witnesses of every intermediate projection: the lifted generators
  // (1, y_j, e_j) and (0, v_k, e_k) in the (b, x, u, t) row layout.
  Mat wit_pts, wit_rays;
  for (size_t j = 0; j < p; ++j) {
    Vec w = zero_vec(static_cast<int>(D) + 1);
    w[0] = 1;
    for (size_t i = 0; i < d; ++i) w[1 + i] = P.points[j][i];
    w[1 + d + j] = 1;
    wit_pts.push_back(std::move(w));
  }
  for (size_t k = 0; k < q; ++k) {
    Vec w = zero_vec(static_cast<int>(D) + 1);
    for (size_t i = 0; i < d; ++i) w[1 + i] = P.rays[k][i];
    w[1 + d + p + k] = 1;
    wit_rays.push_back(std::move(w));
  }

  // FM phase over the leftover auxiliary columns, rows as (b, a) vectors.
  Mat rows;
  for (const HRow& r : ineqs) rows.push_back(row_vec(r));
  rows = filter_rows_primitive(rows);
  std::vector<size_t> aux;
  for (size_t j = 0; j < p + q; ++j) aux.push_back(d + 1 + j);  // (b, a) offset
  auto live_cols = [&]() {
    std::vector<size_t> live;
    for (size_t i = 1; i <= d; ++i) live.push_back(i);
    live.insert(live.end(), aux.begin(), aux.end());
    return live;
  };
  facet_prune(rows, live_cols(), wit_pts, wit_rays);
  while (!aux.empty()) {
    size_t k = cheapest_coord(rows, aux);
    rows = filter_rows_primitive(slice_generators(rows, k));
    aux.erase(std::find(aux.begin(), aux.end(), k));
    facet_prune(rows, live_cols(), wit_pts, wit_rays);
  }

  HRep out;
  out.dim = P.dim;
  for (const Vec& r : rows) {
    Vec a(r.begin() + 1, r.begin() + 1 + static_cast<long>(d));
    if (is_zero_vec(a)) {
      if (sign(r[0]) < 0) throw std::logic_error("v_to_h: infeasible projection");
      continue;  // tautology
    }
    out.ineqs.push_back(HRow{r[0], std::move(a)});
  }
  for (const HRow& e : x_eqs)
    out.eqs.push_back(HRow{e.b, Vec(e.a.begin(), e.a.begin() + static_cast<long>(d))});
  return make_irredundant(out);
}

HRep make_irredundant(const HRep& P) {
  if (!hrep_feasible(P))
    throw std::runtime_error("make_irredundant: empty polyhedron");

  // Deduplicate inequality halfspaces up to positive scaling of (b, a).
  std::vector<HRow> rows;
  {
    std::set<Vec> seen;
    for (const HRow& r : P.ineqs) {
      Vec key = r.a;
      key.push_back(r.b);
      key = primitive(key);
      if (is_zero_vec(key)) continue;  // 0 >= 0
      if (seen.insert(key).second)
        rows.push_back(HRow{key.back(), Vec(key.begin(), key.end() - 1)});
    }
  }

  // Valid inequalities of a nonempty system are exactly the nonnegative
  // combinations of its rows, +-equations, and the trivial row 1 >= 0.
  auto valid_gens = [&](const std::vector<HRow>& ineq_rows, const std::vector<HRow>& eq_rows,
                        size_t skip) {
    Mat gens;
    gens.push_back(unit_vec(P.dim + 1, 0));
    for (size_t j = 0; j < ineq_rows.size(); ++j)
      if (j != skip) gens.push_back(row_vec(ineq_rows[j]));
    for (const HRow& e : eq_rows) {
      gens.push_back(row_vec(e));
      gens.push_back(neg(row_vec(e)));
    }
    return gens;
  };

  // Affine hull first: a row everywhere tight on P is an implicit equation,
  // i.e. its negation is also a valid inequality.
  std::vector<HRow> eqs = P.eqs;
  std::vector<HRow> strict_candidates;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (cone_member(valid_gens(rows, P.eqs, rows.size()), neg(row_vec(rows[i]))))
      eqs.push_back(rows[i]);
    else
      strict_candidates.push_back(rows[i]);
  }

  // Canonicalize the equation block by RREF over (a, b).
  std::vector<HRow> eqs_canon;
  if (!eqs.empty()) {
    Mat em;
    for (const HRow& e : eqs) {
      Vec v = e.a;
      v.push_back(e.b);
      em.push_back(std::move(v));
    }
    for (const Vec& v : rref(em))
      eqs_canon.push_back(HRow{v.back(), Vec(v.begin(), v.end() - 1)});
  }

  // Greedy redundancy removal against the surviving system.
  std::vector<HRow> kept = strict_candidates;
  for (size_t i = 0; i < kept.size();) {
    if (cone_member(valid_gens(kept, eqs_canon, i), row_vec(kept[i]))) {
      kept.erase(kept.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }

  HRep out;
  out.dim = P.dim;
  out.ineqs = std::move(kept);
  out.eqs = std::move(eqs_canon);
  return out;
}

int polyhedron_dim(const HRep& P) {
  if (is_empty(P)) return -1;
  HRep irr = make_irredundant(P);
  Mat em;
  for (const HRow& e : irr.eqs) em.push_back(e.a);
  if (em.empty()) return P.dim;
  return P.dim - rank(em);
}

FaceLattice face_lattice(const HRep& P, const VRep& V) {
  if (!V.rays.empty()) throw std::runtime_error("face_lattice: polytopes only");
  if (V.empty()) throw std::runtime_error("face_lattice: empty polytope");
  for (const Vec& v : V.points)
    if (!membership(v, P))
      throw std::runtime_error("face_lattice: representations disagree");

  FaceLattice L;
  L.vertices = V.points;
  L.dim = affine_dimension(V.points);
  L.facets = P.ineqs;
  for (const HRow& r : P.ineqs) {
    std::vector<int> tight;
    for (size_t i = 0; i < V.points.size(); ++i)
      if (r.b + dot(r.a, V.points[i]) == 0) tight.push_back(static_cast<int>(i));
    L.incidence.push_back(std::move(tight));
  }

  std::set<std::vector<int>> closed;
  std::vector<int> full(V.points.size());
  for (size_t i = 0; i < V.points.size(); ++i) full[i] = static_cast<int>(i);
  closed.insert(full);
  std::vector<std::vector<int>> work{full};
  while (!work.empty()) {
    std::vector<int> f = std::move(work.back());
    work.pop_back();
    for (const std::vector<int>& s : L.incidence) {
      std::vector<int> inter;
      std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(inter));
      if (closed.insert(inter).second) work.push_back(std::move(inter));
    }
  }
  closed.insert(std::vector<int>{});  // empty face, dim -1

  for (const std::vector<int>& f : closed) {
    std::vector<Vec> pts;
    for (int i : f) pts.push_back(V.points[static_cast<size_t>(i)]);
    L.faces.emplace_back(affine_dimension(pts), f);
  }
  std::sort(L.faces.begin(), L.faces.end());
  return L;
}

std::vector<long> f_vector_of_lattice(const FaceLattice& L) {
  std::vector<long> f(static_cast<size_t>(L.dim + 1), 0);
  for (const auto& [d, ids] : L.faces)
    if (d >= 0) ++f[static_cast<size_t>(d)];
  return f;
}

ConeRep cone_h_to_v(const ConeRep& C) {
  if (C.kind != ConeRep::Kind::HCone) throw std::runtime_error("cone_h_to_v: expects an h-cone");
  size_t D = static_cast<size_t>(C.dim);
  size_t m = C.rows.size();
  Mat gens;
  for (size_t i = 0; i < D; ++i) {
    Vec g = unit_vec(static_cast<int>(D + m), static_cast<int>(i));
    for (size_t r = 0; r < m; ++r) g[D + r] = C.rows[r][i];
    gens.push_back(g);
    gens.push_back(neg(g));
  }
  for (size_t r = 0; r < m; ++r)
    gens.push_back(unit_vec(static_cast<int>(D + m), static_cast<int>(D + r)));
  std::vector<size_t> slacks;
  for (size_t r = 0; r < m; ++r) slacks.push_back(D + r);
  gens = eliminate_slacks(std::move(gens), C.rows);
  gens = delete_coords(std::move(gens), slacks);
  ConeRep out;
  out.dim = C.dim;
  out.kind = ConeRep::Kind::VCone;
  out.rows = std::move(gens);
  return out;
}

ConeRep cone_v_to_h(const ConeRep& C) {
  if (C.kind != ConeRep::Kind::VCone) throw std::runtime_error("cone_v_to_h: expects a v-cone");
  // Rows of C are the generators of the dual cone; C** = C for closed cones.
  ConeRep dual_h;
  dual_h.dim = C.dim;
  dual_h.kind = ConeRep::Kind::HCone;
  dual_h.rows = C.rows;
  ConeRep dual_v = cone_h_to_v(dual_h);
  ConeRep out;
  out.dim = C.dim;
  out.kind = ConeRep::Kind::HCone;
  out.rows = std::move(dual_v.rows);
  return out;
}

bool cone_contains(const ConeRep& C, const Vec& x) {
  if (static_cast<int>(x.size()) != C.dim)
    throw std::runtime_error("cone_contains: dimension mismatch");
  if (C.kind == ConeRep::Kind::HCone) {
    for (const Vec& u : C.rows)
      if (sign(dot(u, x)) > 0) return false;
    return true;
  }
  return cone_member(C.rows, x);
}

Mat canonical_generators(const ConeRep& C) {
  if (C.kind != ConeRep::Kind::VCone)
    return canonical_generators(cone_h_to_v(C));
  Mat gens = filter_rows_primitive(C.rows);
  // Generators whose negation stays inside span the lineality space. Pointed
  // parts of equal cones can differ by lineality shifts, so reduce every
  // generator against the unique reduced basis before pruning; the reduced
  // cone is pointed and its extreme rays are unique up to scaling.
  Mat lin;
  for (const Vec& g : gens)
    if (cone_member(gens, neg(g))) lin.push_back(g);
  Mat fixed;
  if (!lin.empty()) {
    lin = rref(lin);
    std::vector<size_t> piv(lin.size(), 0);
    for (size_t t = 0; t < lin.size(); ++t)
      while (sign(lin[t][piv[t]]) == 0) ++piv[t];
    for (Vec& g : gens)
      for (size_t t = 0; t < lin.size(); ++t)
        if (sign(g[piv[t]]) != 0) g = sub(g, scale(g[piv[t]] / lin[t][piv[t]], lin[t]));
    gens = filter_rows_primitive(gens);
    for (const Vec& b : lin) {
      fixed.push_back(primitive(b));
      fixed.push_back(primitive(neg(b)));
    }
  }
  for (size_t i = 0; i < gens.size();) {
    Mat others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (cone_member(others, gens[i])) {
      gens.erase(gens.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  for (Vec& b : fixed) gens.push_back(std::move(b));
  std::sort(gens.begin(), gens.end());
  return gens;
}

bool cone_set_equal(const ConeRep& A, const ConeRep& B) {
  return canonical_generators(A) == canonical_generators(B);
}

bool hrep_equal_canonical(const HRep& A, const HRep& B) {
  if (A.dim != B.dim) return false;
  HRep a = make_irredundant(A);
  HRep b = make_irredundant(B);
  auto rows = [](const HRep& h) {
    std::set<Vec> out;
    for (const HRow& r : h.ineqs) {
      Vec row = r.a;
      row.insert(row.begin(), r.b);
      out.insert(primitive(row));
    }
    return out;
  };
  auto eqs = [](const HRep& h) {
    Mat m;
    for (const HRow& r : h.eqs) {
      Vec row = r.a;
      row.push_back(r.b);
      m.push_back(row);
    }
    return rref(m);
  };
  return rows(a) == rows(b) && eqs(a) == eqs(b);
}

}  // namespace ptk
