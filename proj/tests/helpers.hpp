#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptk/polyhedron.hpp"
#include "ptk/rational.hpp"

namespace ptk::testutil {

// "1 -2 3/4" -> Vec
inline Vec qv(const std::string& s) {
  std::istringstream in(s);
  Vec v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  return v;
}

inline Mat qm(const std::vector<std::string>& rows) {
  Mat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(qv(r));
  return m;
}

inline Q frac(long num, long den) { return Q(num) / Q(den); }

inline Vec rand_point(std::mt19937& rng, int d, int lim = 30, int den_max = 7) {
  std::uniform_int_distribution<int> num(-lim, lim), den(1, den_max);
  Vec p(static_cast<size_t>(d));
  for (auto& c : p) c = Q(num(rng)) / Q(den(rng));
  return p;
}

// Hull of n distinct random rational points.
inline VRep rand_vpolytope(std::mt19937& rng, int d, int n, int lim = 30, int den_max = 7) {
  VRep P;
  P.dim = d;
  while (static_cast<int>(P.points.size()) < n) {
    Vec p = rand_point(rng, d, lim, den_max);
    if (std::find(P.points.begin(), P.points.end(), p) == P.points.end())
      P.points.push_back(std::move(p));
  }
  return P;
}

inline bool same_point_set(std::vector<Vec> a, std::vector<Vec> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool same_as_sets(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool satisfies(const Vec& x, const HRep& P) {
  for (const HRow& r : P.ineqs)
    if (sign(r.b + dot(r.a, x)) < 0) return false;
  for (const HRow& r : P.eqs)
    if (sign(r.b + dot(r.a, x)) != 0) return false;
  return true;
}

// [-1,1]^d as an H-polytope.
inline HRep cube_h(int d) {
  HRep P;
  P.dim = d;
  for (int i = 0; i < d; ++i) {
    P.ineqs.push_back(HRow{Q(1), neg(unit_vec(d, i))});
    P.ineqs.push_back(HRow{Q(1), unit_vec(d, i)});
  }
  return P;
}

// conv(+-e_i), the cross-polytope.
inline VRep cross_v(int d) {
  VRep P;
  P.dim = d;
  for (int i = 0; i < d; ++i) {
    P.points.push_back(unit_vec(d, i));
    P.points.push_back(neg(unit_vec(d, i)));
  }
  return P;
}

inline VRep square_v() {
  VRep P;
  P.dim = 2;
  P.points = qm({"1 1", "-1 1", "-1 -1", "1 -1"});
  return P;
}

// Simplex conv(e_1..e_d, -sum e_i) with the origin interior.
inline VRep simplex_v(int d) {
  VRep P;
  P.dim = d;
  Vec s = zero_vec(d);
  for (int i = 0; i < d; ++i) {
    P.points.push_back(unit_vec(d, i));
    s = sub(s, unit_vec(d, i));
  }
  P.points.push_back(std::move(s));
  return P;
}

// Rational icosahedron: cyclic coordinate shifts of (0, +-1, +-q) where
// q = 987/610 approximates the golden ratio well enough to keep the
// combinatorics (12 vertices, 30 edges, 20 triangles).
inline VRep icosahedron_v() {
  VRep P;
  P.dim = 3;
  Q q = frac(987, 610);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      Q a = Q(s1), b = s2 * q;
      P.points.push_back(Vec{Q(0), a, b});
      P.points.push_back(Vec{b, Q(0), a});
      P.points.push_back(Vec{a, b, Q(0)});
    }
  return P;
}

}  // namespace ptk::testutil
