#include "ptk/classics.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptk/feasibility.hpp"
#include "ptk/linalg.hpp"

namespace ptk {

namespace {

// First nullspace vector of the affine-dependence system (coordinates plus
// an all-ones row); empty when the points are affinely independent.
Vec affine_dependence(const std::vector<Vec>& pts) {
  if (pts.empty()) return {};
  size_t d = pts[0].size();
  Mat M(d + 1, Vec(pts.size()));
  for (size_t j = 0; j < pts.size(); ++j) {
    for (size_t k = 0; k < d; ++k) M[k][j] = pts[j][k];
    M[d][j] = 1;
  }
  Mat basis = nullspace(M);
  if (basis.empty()) return {};
  return basis[0];
}

}  // namespace

Vec ConvexCombination::evaluate() const {
  if (points.size() != weights.size() || points.empty())
    throw std::runtime_error("convex combination: size mismatch");
  Vec v = zero_vec(static_cast<int>(points[0].size()));
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t k = 0; k < v.size(); ++k) v[k] += weights[i] * points[i][k];
  return v;
}

bool ConvexCombination::valid() const {
  if (points.size() != weights.size() || points.empty()) return false;
  Q s = 0;
  for (const Q& w : weights) {
    if (sign(w) < 0) return false;
    s += w;
  }
  return s == 1;
}

ConvexCombination caratheodory_reduce(const Vec& b, const ConvexCombination& cc) {
  if (!cc.valid()) throw std::runtime_error("caratheodory_reduce: invalid combination");
  if (cc.evaluate() != b)
    throw std::runtime_error("caratheodory_reduce: combination does not evaluate to b");
  ConvexCombination cur;
  for (size_t i = 0; i < cc.points.size(); ++i)
    if (sign(cc.weights[i]) > 0) {
      cur.points.push_back(cc.points[i]);
      cur.weights.push_back(cc.weights[i]);
    }
  for (;;) {
    int q = static_cast<int>(cur.points.size());
    if (q <= affine_dimension(cur.points) + 1) return cur;
    Vec mu = affine_dependence(cur.points);
    // q > d_aff + 1 forces a dependence.
    if (mu.empty()) throw std::runtime_error("caratheodory_reduce: dependence not found");
    bool have = false;
    Q alpha = 0;
    for (int i = 0; i < q; ++i) {
      if (sign(mu[static_cast<size_t>(i)]) <= 0) continue;
      Q cand = -cur.weights[static_cast<size_t>(i)] / mu[static_cast<size_t>(i)];
      if (!have || cand > alpha) {
        alpha = cand;
        have = true;
      }
    }
    if (!have) throw std::runtime_error("caratheodory_reduce: dependence has no positive entry");
    ConvexCombination next;
    for (int i = 0; i < q; ++i) {
      Q w = cur.weights[static_cast<size_t>(i)] + alpha * mu[static_cast<size_t>(i)];
      if (sign(w) > 0) {
        next.points.push_back(cur.points[static_cast<size_t>(i)]);
        next.weights.push_back(w);
      }
    }
    cur = std::move(next);
  }
}

RadonPartition radon_partition(const std::vector<Vec>& X) {
  if (X.empty()) throw std::runtime_error("radon_partition: no points");
  size_t d = X[0].size();
  if (X.size() < d + 2) throw std::runtime_error("radon_partition: need at least d+2 points");
  Vec mu = affine_dependence(X);
  if (mu.empty()) throw std::runtime_error("radon_partition: points affinely independent");
  RadonPartition r;
  Q pos_sum = 0;
  for (size_t i = 0; i < X.size(); ++i) {
    if (sign(mu[i]) > 0) {
      r.part1.push_back(static_cast<int>(i));
      pos_sum += mu[i];
    } else {
      r.part2.push_back(static_cast<int>(i));
    }
  }
  for (int i : r.part1) {
    r.comb1.points.push_back(X[static_cast<size_t>(i)]);
    r.comb1.weights.push_back(mu[static_cast<size_t>(i)] / pos_sum);
  }
  for (int j : r.part2) {
    r.comb2.points.push_back(X[static_cast<size_t>(j)]);
    r.comb2.weights.push_back(-mu[static_cast<size_t>(j)] / pos_sum);
  }
  r.witness = r.comb1.evaluate();
  return r;
}

FarkasCertificate farkas_i(const std::vector<Vec>& a, const Vec& z) {
  size_t m = a.size(), d = z.size();
  for (const Vec& p : a)
    if (p.size() != d) throw std::runtime_error("farkas: dimension mismatch");
  LinSystem sys(static_cast<int>(m));
  for (size_t i = 0; i < m; ++i)
    sys.add(Q(0), unit_vec(static_cast<int>(m), static_cast<int>(i)), Rel::GE);
  sys.add(Q(-1), Vec(m, Q(1)), Rel::EQ);
  for (size_t k = 0; k < d; ++k) {
    Vec row(m);
    for (size_t i = 0; i < m; ++i) row[i] = a[i][k];
    sys.add(-z[k], row, Rel::EQ);
  }
  Feasibility fe = check_feasible(sys);
  FarkasCertificate cert;
  cert.version = FarkasVersion::I;
  if (fe.feasible) {
    cert.primal = true;
    cert.x = fe.point;
  } else {
    cert.alpha = fe.cert[m];
    cert.c = zero_vec(static_cast<int>(d));
    for (size_t k = 0; k < d; ++k) cert.c[k] = -fe.cert[m + 1 + k];
  }
  return cert;
}

FarkasCertificate farkas_ii(const std::vector<Vec>& a, const Vec& z) {
  size_t m = a.size(), d = z.size();
  for (const Vec& p : a)
    if (p.size() != d) throw std::runtime_error("farkas: dimension mismatch");
  LinSystem sys(static_cast<int>(m));
  for (size_t i = 0; i < m; ++i)
    sys.add(Q(0), unit_vec(static_cast<int>(m), static_cast<int>(i)), Rel::GE);
  for (size_t k = 0; k < d; ++k) {
    Vec row(m);
    for (size_t i = 0; i < m; ++i) row[i] = a[i][k];
    sys.add(-z[k], row, Rel::EQ);
  }
  Feasibility fe = check_feasible(sys);
  FarkasCertificate cert;
  cert.version = FarkasVersion::II;
  if (fe.feasible) {
    cert.primal = true;
    cert.x = fe.point;
  } else {
    cert.c = zero_vec(static_cast<int>(d));
    for (size_t k = 0; k < d; ++k) cert.c[k] = -fe.cert[m + k];
  }
  return cert;
}

FarkasCertificate farkas_iii(const Mat& A, const Vec& z) {
  size_t m = A.size();
  if (z.size() != m) throw std::runtime_error("farkas: dimension mismatch");
  size_t d = m ? A[0].size() : 0;
  LinSystem sys(static_cast<int>(d));
  for (size_t k = 0; k < m; ++k) {
    if (A[k].size() != d) throw std::runtime_error("farkas: ragged matrix");
    sys.add(z[k], neg(A[k]), Rel::GE);  // z_k - A_k.x >= 0
  }
  Feasibility fe = check_feasible(sys);
  FarkasCertificate cert;
  cert.version = FarkasVersion::III;
  if (fe.feasible) {
    cert.primal = true;
    cert.x = fe.point;
  } else {
    cert.c = fe.cert;
  }
  return cert;
}

FarkasCertificate farkas_iv(const std::vector<Vec>& y, const std::vector<Vec>& v, const Vec& z) {
  size_t p = y.size(), q = v.size(), d = z.size();
  for (const Vec& t : y)
    if (t.size() != d) throw std::runtime_error("farkas: dimension mismatch");
  for (const Vec& t : v)
    if (t.size() != d) throw std::runtime_error("farkas: dimension mismatch");
  size_t nv = p + q;
  LinSystem sys(static_cast<int>(nv));
  for (size_t i = 0; i < nv; ++i)
    sys.add(Q(0), unit_vec(static_cast<int>(nv), static_cast<int>(i)), Rel::GE);
  Vec ones = zero_vec(static_cast<int>(nv));
  for (size_t i = 0; i < p; ++i) ones[i] = 1;
  sys.add(Q(-1), ones, Rel::EQ);
  for (size_t k = 0; k < d; ++k) {
    Vec row(nv);
    for (size_t i = 0; i < p; ++i) row[i] = y[i][k];
    for (size_t j = 0; j < q; ++j) row[p + j] = v[j][k];
    sys.add(-z[k], row, Rel::EQ);
  }
  Feasibility fe = check_feasible(sys);
  FarkasCertificate cert;
  cert.version = FarkasVersion::IV;
  if (fe.feasible) {
    cert.primal = true;
    cert.x = Vec(fe.point.begin(), fe.point.begin() + static_cast<long>(p));
    cert.x_rays = Vec(fe.point.begin() + static_cast<long>(p), fe.point.end());
  } else {
    cert.alpha = fe.cert[nv];
    cert.c = zero_vec(static_cast<int>(d));
    for (size_t k = 0; k < d; ++k) cert.c[k] = -fe.cert[nv + 1 + k];
  }
  return cert;
}

bool farkas_certificate_checks(const FarkasCertificate& cert, const std::vector<Vec>& a_or_y,
                               const std::vector<Vec>& v, const Vec& z) {
  switch (cert.version) {
    case FarkasVersion::I: {
      if (cert.primal) {
        ConvexCombination cc{a_or_y, cert.x};
        return cc.valid() && cc.evaluate() == z;
      }
      for (const Vec& p : a_or_y)
        if (dot(cert.c, p) < cert.alpha) return false;
      return dot(cert.c, z) < cert.alpha;
    }
    case FarkasVersion::II: {
      if (cert.primal) {
        Vec s = zero_vec(static_cast<int>(z.size()));
        for (size_t i = 0; i < a_or_y.size(); ++i) {
          if (sign(cert.x[i]) < 0) return false;
          s = add(s, scale(cert.x[i], a_or_y[i]));
        }
        return s == z;
      }
      for (const Vec& p : a_or_y)
        if (sign(dot(cert.c, p)) < 0) return false;
      return sign(dot(cert.c, z)) < 0;
    }
    case FarkasVersion::III: {
      // a_or_y holds the rows of A.
      if (cert.primal) {
        for (size_t k = 0; k < a_or_y.size(); ++k)
          if (dot(a_or_y[k], cert.x) > z[k]) return false;
        return true;
      }
      Vec comb = zero_vec(a_or_y.empty() ? 0 : static_cast<int>(a_or_y[0].size()));
      for (size_t k = 0; k < a_or_y.size(); ++k) {
        if (sign(cert.c[k]) < 0) return false;
        comb = add(comb, scale(cert.c[k], a_or_y[k]));
      }
      return is_zero_vec(comb) && sign(dot(cert.c, z)) < 0;
    }
    case FarkasVersion::IV: {
      if (cert.primal) {
        ConvexCombination cc{a_or_y, cert.x};
        if (!cc.valid()) return false;
        Vec s = cc.evaluate();
        for (size_t j = 0; j < v.size(); ++j) {
          if (sign(cert.x_rays[j]) < 0) return false;
          s = add(s, scale(cert.x_rays[j], v[j]));
        }
        return s == z;
      }
      for (const Vec& p : a_or_y)
        if (dot(cert.c, p) < cert.alpha) return false;
      for (const Vec& r : v)
        if (sign(dot(cert.c, r)) < 0) return false;
      return dot(cert.c, z) < cert.alpha;
    }
  }
  return false;
}

HellyReport helly_check(const std::vector<HRep>& family, int m) {
  size_t n = family.size();
  if (n < static_cast<size_t>(m) + 2)
    throw std::runtime_error("helly_check: need at least m+2 sets");
  for (const HRep& h : family)
    if (h.dim != m) throw std::runtime_error("helly_check: dimension mismatch");
  auto joint = [&](const std::vector<int>& ids) {
    LinSystem sys(m);
    for (int i : ids) {
      for (const HRow& r : family[static_cast<size_t>(i)].ineqs) sys.add(r.b, r.a, Rel::GE);
      for (const HRow& r : family[static_cast<size_t>(i)].eqs) sys.add(r.b, r.a, Rel::EQ);
    }
    return check_feasible(sys);
  };
  HellyReport rep;
  rep.hypothesis_holds = true;
  std::vector<int> pick(static_cast<size_t>(m) + 1);
  // All (m+1)-subsets in lexicographic order.
  for (size_t i = 0; i <= static_cast<size_t>(m); ++i) pick[i] = static_cast<int>(i);
  for (;;) {
    if (!joint(pick).feasible) {
      rep.hypothesis_holds = false;
      rep.failing_subset = pick;
      break;
    }
    int k = m;
    while (k >= 0 && pick[static_cast<size_t>(k)] == static_cast<int>(n) - (m + 1 - k)) --k;
    if (k < 0) break;
    ++pick[static_cast<size_t>(k)];
    for (int j = k + 1; j <= m; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  std::vector<int> all(n);
  for (size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  Feasibility full = joint(all);
  rep.intersection_nonempty = full.feasible;
  if (full.feasible) rep.witness = full.point;
  if (rep.hypothesis_holds && !full.feasible)
    throw std::logic_error("helly_check: hypothesis holds but intersection came out empty");
  return rep;
}

Vec centerpoint(const std::vector<Vec>& S, size_t max_points) {
  if (S.empty()) throw std::runtime_error("centerpoint: no points");
  size_t n = S.size(), d = S[0].size();
  if (d > 3) throw std::runtime_error("centerpoint: dimension must be <= 3");
  if (n > max_points) throw std::runtime_error("centerpoint: too many points for enumeration");
  for (const Vec& s : S)
    if (s.size() != d) throw std::runtime_error("centerpoint: ragged input");

  LinSystem sys(static_cast<int>(d));
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    size_t cnt = static_cast<size_t>(__builtin_popcountll(mask));
    if ((d + 1) * cnt <= d * n) continue;  // |T| > dn/(d+1) required
    // Strict separability of T from its complement: w.t - beta >= 1 on T,
    // w.s - beta <= -1 off T, unknowns (w, beta).
    LinSystem sep(static_cast<int>(d) + 1);
    for (size_t i = 0; i < n; ++i) {
      Vec row(d + 1);
      for (size_t k = 0; k < d; ++k) row[k] = S[i][k];
      row[d] = -1;
      if (mask & (size_t{1} << i)) {
        sep.add(Q(-1), row, Rel::GE);
      } else {
        sep.add(Q(-1), neg(row), Rel::GE);
      }
    }
    if (!check_feasible(sep).feasible) continue;
    VRep hull;
    hull.dim = static_cast<int>(d);
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) hull.points.push_back(S[i]);
    HRep H = v_to_h(hull);
    for (const HRow& r : H.ineqs) sys.add(r.b, r.a, Rel::GE);
    for (const HRow& r : H.eqs) sys.add(r.b, r.a, Rel::EQ);
  }
  Feasibility fe = check_feasible(sys);
  if (!fe.feasible)
    throw std::logic_error("centerpoint: candidate hull intersection is empty");
  if (!verify_centerpoint(fe.point, S))
    throw std::logic_error("centerpoint: computed point fails verification");
  return fe.point;
}

bool verify_centerpoint(const Vec& c, const std::vector<Vec>& S) {
  if (S.empty()) return true;
  size_t n = S.size(), d = S[0].size();
  if (c.size() != d) throw std::runtime_error("verify_centerpoint: dimension mismatch");
  for (const Vec& s : S)
    if (s.size() != d) throw std::runtime_error("verify_centerpoint: ragged input");
  // c fails the depth bound iff more than dn/(d+1) points fit strictly inside
  // an open halfspace missing c: the complementary closed halfspace, shrunk
  // to pass through c, then holds fewer than n/(d+1) points. Supersets are
  // separable only when the minimal size is, so one subset size suffices.
  size_t k = d * n / (d + 1) + 1;
  if (k > n) return true;
  std::vector<int> pick(k);
  for (size_t i = 0; i < k; ++i) pick[i] = static_cast<int>(i);
  for (;;) {
    LinSystem sep(static_cast<int>(d));
    for (int i : pick) sep.add(Q(-1), sub(c, S[static_cast<size_t>(i)]), Rel::GE);
    if (check_feasible(sep).feasible) return false;
    int t = static_cast<int>(k) - 1;
    while (t >= 0 &&
           pick[static_cast<size_t>(t)] ==
               static_cast<int>(n) - (static_cast<int>(k) - t))
      --t;
    if (t < 0) break;
    ++pick[static_cast<size_t>(t)];
    for (size_t j = static_cast<size_t>(t) + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace ptk
