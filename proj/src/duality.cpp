#include "ptk/duality.hpp"

#include <stdexcept>

#include "ptk/linalg.hpp"

namespace ptk {

namespace {

// F g^ for the homogeneous lift of a point (tail = 1) or ray (tail = 0).
Vec form_times_lift(const Mat& f, const Vec& g, const Q& tail) {
  size_t n = f.size();
  Vec w = zero_vec(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i) {
    Q s = f[i][n - 1] * tail;
    for (size_t j = 0; j + 1 < n; ++j) s += f[i][j] * g[j];
    w[i] = s;
  }
  return w;
}

}  // namespace

Quadric::Quadric(int d, Mat m) : dim(d), f(std::move(m)) {
  size_t n = static_cast<size_t>(d) + 1;
  if (d < 1 || f.size() != n) throw std::runtime_error("quadric: matrix must be (d+1)x(d+1)");
  for (const Vec& row : f)
    if (row.size() != n) throw std::runtime_error("quadric: matrix must be (d+1)x(d+1)");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (f[i][j] != f[j][i]) throw std::runtime_error("quadric: matrix must be symmetric");
  if (det(f) == 0) throw std::runtime_error("quadric: matrix must be invertible");
}

Quadric sphere_quadric(int d) {
  size_t n = static_cast<size_t>(d) + 1;
  Mat m(n, zero_vec(static_cast<int>(n)));
  for (size_t i = 0; i + 1 < n; ++i) m[i][i] = 1;
  m[n - 1][n - 1] = -1;
  return Quadric(d, std::move(m));
}

Quadric paraboloid_quadric(int d) {
  if (d < 2) throw std::runtime_error("paraboloid_quadric: d must be >= 2");
  size_t n = static_cast<size_t>(d) + 1;
  Mat m(n, zero_vec(static_cast<int>(n)));
  for (size_t i = 0; i + 2 < n; ++i) m[i][i] = 1;
  m[n - 2][n - 1] = Q(-1) / 2;
  m[n - 1][n - 2] = Q(-1) / 2;
  return Quadric(d, std::move(m));
}

Quadric transform_quadric(const Quadric& q, const Mat& M) {
  Mat inv = inverse(M);
  size_t n = inv.size();
  if (n != q.f.size()) throw std::runtime_error("transform_quadric: dimension mismatch");
  // (M^-1)^T F M^-1
  Mat fm(n, zero_vec(static_cast<int>(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) fm[i][j] += q.f[i][k] * inv[k][j];
  Mat out(n, zero_vec(static_cast<int>(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) out[i][j] += inv[k][i] * fm[k][j];
  return Quadric(q.dim, std::move(out));
}

HRep polar_dual_v(const VRep& P, const Vec& c) {
  if (P.empty()) throw std::runtime_error("polar_dual_v: empty input");
  if (c.size() != static_cast<size_t>(P.dim))
    throw std::runtime_error("polar_dual_v: center dimension mismatch");
  HRep D;
  D.dim = P.dim;
  for (const Vec& y : P.points) {
    Vec a = sub(c, y);                    // -(y - c)
    D.ineqs.push_back({Q(1) - dot(a, c), a});  // 1 - (y-c).(x-c) >= 0
  }
  for (const Vec& v : P.rays) {
    Vec a = neg(v);
    D.ineqs.push_back({dot(v, c), a});  // -v.(x-c) >= 0
  }
  return D;
}

VRep polar_dual_h(const HRep& P, const Vec& c) {
  if (!P.eqs.empty())
    throw std::runtime_error("polar_dual_h: input must be full-dimensional (no equations)");
  if (c.size() != static_cast<size_t>(P.dim))
    throw std::runtime_error("polar_dual_h: center dimension mismatch");
  VRep D;
  D.dim = P.dim;
  D.points.push_back(c);
  for (const HRow& r : P.ineqs) {
    Q bc = r.b + dot(r.a, c);  // constant term after translating to center c
    if (sign(bc) < 0) throw std::runtime_error("polar_dual_h: center outside the set");
    if (is_zero_vec(r.a)) continue;  // trivial row, no contribution
    if (sign(bc) == 0) {
      D.rays.push_back(neg(r.a));
    } else {
      Vec p = c;
      for (size_t i = 0; i < p.size(); ++i) p[i] -= r.a[i] / bc;
      D.points.push_back(p);
    }
  }
  return canonicalize_vrep(D);
}

ConeRep quadric_polar_cone(const ConeRep& C, const Quadric& q) {
  if (C.kind != ConeRep::Kind::VCone)
    throw std::runtime_error("quadric_polar_cone: expects a v-cone");
  if (C.dim != q.dim + 1) throw std::runtime_error("quadric_polar_cone: dimension mismatch");
  ConeRep D;
  D.dim = C.dim;
  D.kind = ConeRep::Kind::HCone;
  size_t n = q.f.size();
  for (const Vec& g : C.rows) {
    Vec w = zero_vec(static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) w[i] += q.f[i][j] * g[j];
    D.rows.push_back(w);
  }
  return cone_filter(D);
}

HRep quadric_dual_affine(const VRep& P, const Quadric& q) {
  if (P.empty()) throw std::runtime_error("quadric_dual_affine: empty input");
  if (P.dim != q.dim) throw std::runtime_error("quadric_dual_affine: dimension mismatch");
  size_t n = q.f.size();
  HRep D;
  D.dim = P.dim;
  auto push = [&](const Vec& g, const Q& tail) {
    Vec w = form_times_lift(q.f, g, tail);
    // w_x.x + w_last <= 0  ==  -w_last - w_x.x >= 0
    Vec a(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) a[i] = -w[i];
    D.ineqs.push_back({-w[n - 1], a});
  };
  for (const Vec& y : P.points) push(y, 1);
  for (const Vec& v : P.rays) push(v, 0);
  return D;
}

ConeRep projective_completion(const HRep& P) {
  if (is_empty(P)) throw std::runtime_error("projective_completion: empty input");
  return homogenize(P);
}

ConeRep projective_completion(const VRep& P) {
  if (P.empty()) throw std::runtime_error("projective_completion: empty input");
  return homogenize(P);
}

Vec theta_map(const Vec& x, bool inverse) {
  size_t n = x.size();
  if (n < 2) throw std::runtime_error("theta_map: need at least two coordinates");
  Vec z = x;
  if (!inverse) {
    z[n - 2] = x[n - 2] + x[n - 1];
    z[n - 1] = x[n - 1] - x[n - 2];
  } else {
    z[n - 2] = (x[n - 2] - x[n - 1]) / 2;
    z[n - 1] = (x[n - 2] + x[n - 1]) / 2;
  }
  return z;
}

bool check_completion_duality_commutes(const VRep& P, const Quadric& q) {
  ConeRep lhs = quadric_polar_cone(projective_completion(P), q);
  HRep dual = quadric_dual_affine(P, q);
  if (is_empty(dual)) return false;  // dual degenerate, completion undefined
  ConeRep rhs = projective_completion(dual);
  return cone_set_equal(lhs, rhs);
}

bool is_pointed(const ConeRep& C) {
  ConeRep V = C.kind == ConeRep::Kind::VCone ? cone_filter(C) : cone_h_to_v(C);
  if (V.rows.empty()) return true;
  // A line lives in the cone iff 0 is a nontrivial nonnegative combination
  // of the generators.
  size_t m = V.rows.size();
  LinSystem sys(static_cast<int>(m));
  for (size_t i = 0; i < m; ++i) sys.add(Q(0), unit_vec(static_cast<int>(m), static_cast<int>(i)), Rel::GE);
  Vec ones(m, Q(1));
  sys.add(Q(-1), ones, Rel::EQ);  // sum lambda = 1
  for (int c = 0; c < C.dim; ++c) {
    Vec coeff(m);
    for (size_t i = 0; i < m; ++i) coeff[i] = V.rows[i][static_cast<size_t>(c)];
    sys.add(Q(0), coeff, Rel::EQ);
  }
  return !check_feasible(sys).feasible;
}

ConeSplit orthogonal_split(const ConeRep& C) {
  ConeRep V = C.kind == ConeRep::Kind::VCone ? C : cone_h_to_v(C);
  ConeRep H = C.kind == ConeRep::Kind::HCone ? C : cone_v_to_h(C);
  ConeSplit s;
  s.lineality_basis = nullspace(H.rows);
  if (H.rows.empty()) {
    // No constraints: the cone is all of R^d.
    Mat id;
    for (int i = 0; i < C.dim; ++i) id.push_back(unit_vec(C.dim, i));
    s.lineality_basis = id;
  }
  const Mat& B = s.lineality_basis;
  ConeRep proj;
  proj.dim = C.dim;
  proj.kind = ConeRep::Kind::VCone;
  for (const Vec& g : V.rows) {
    Vec p = g;
    if (!B.empty()) {
      // p = g - B^T mu with (B B^T) mu = B g (rows of B span the lineality).
      Mat gram(B.size(), zero_vec(static_cast<int>(B.size())));
      Vec rhs(B.size());
      for (size_t i = 0; i < B.size(); ++i) {
        rhs[i] = dot(B[i], g);
        for (size_t j = 0; j < B.size(); ++j) gram[i][j] = dot(B[i], B[j]);
      }
      auto mu = solve_linear(gram, rhs);
      if (!mu) throw std::runtime_error("orthogonal_split: gram system unsolvable");
      for (size_t i = 0; i < B.size(); ++i)
        for (size_t k = 0; k < p.size(); ++k) p[k] -= (*mu)[i] * B[i][k];
    }
    if (!is_zero_vec(p)) proj.rows.push_back(p);
  }
  s.pointed_generators = canonical_generators(proj);
  return s;
}

}  // namespace ptk
