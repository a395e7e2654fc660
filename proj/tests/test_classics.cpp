#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "ptk/classics.hpp"
#include "ptk/linalg.hpp"
#include "ptk/polyhedron.hpp"

using namespace ptk;
using namespace ptk::testutil;

namespace {

bool upper_half(const Vec& v) {
  return sign(v[1]) > 0 || (sign(v[1]) == 0 && sign(v[0]) > 0);
}

bool angle_less(const Vec& u, const Vec& v) {
  bool hu = upper_half(u), hv = upper_half(v);
  if (hu != hv) return hu;
  return sign(u[0] * v[1] - u[1] * v[0]) > 0;
}

// Exact planar depth of c: the fewest points of S in a closed halfplane
// containing c. The minimum is attained with the boundary through c, and the
// count is constant on arcs between directions perpendicular to some s - c,
// so sampling every breakpoint and every open arc (exact midpoint, or a
// quarter turn across an antipodal gap) is exhaustive.
long depth_2d(const Vec& c, const std::vector<Vec>& S) {
  Mat dirs;
  for (const Vec& s : S) {
    Vec u = sub(s, c);
    if (is_zero_vec(u)) continue;
    dirs.push_back(primitive(Vec{-u[1], u[0]}));
    dirs.push_back(primitive(Vec{u[1], -u[0]}));
  }
  long n = static_cast<long>(S.size());
  if (dirs.empty()) return n;
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  Mat cands = dirs;
  size_t k = dirs.size();
  for (size_t i = 0; i < k; ++i) {
    Vec mid = add(dirs[i], dirs[(i + 1) % k]);
    if (is_zero_vec(mid)) mid = Vec{-dirs[i][1], dirs[i][0]};
    cands.push_back(mid);
  }
  long best = n;
  for (const Vec& w : cands) {
    long cnt = 0;
    for (const Vec& s : S)
      if (sign(dot(w, sub(s, c))) >= 0) ++cnt;
    best = std::min(best, cnt);
  }
  return best;
}

std::vector<Vec> hexagon() {
  return qm({"2 0", "1 2", "-1 2", "-2 0", "-1 -2", "1 -2"});
}

ConvexCombination rand_combination(std::mt19937& rng, int d, int q) {
  ConvexCombination cc;
  cc.points = rand_vpolytope(rng, d, q).points;
  std::uniform_int_distribution<int> w(1, 9);
  Q total = 0;
  for (int i = 0; i < q; ++i) {
    cc.weights.push_back(Q(w(rng)));
    total += cc.weights.back();
  }
  for (Q& x : cc.weights) x /= total;
  return cc;
}

}  // namespace

TEST_CASE("caratheodory_reduce shrinks the support to affine dimension + 1") {
  ConvexCombination cc;
  cc.points = qm({"1 0", "-1 0", "0 1", "0 -1"});
  cc.weights = {frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)};
  Vec b = qv("0 0");
  ConvexCombination r = caratheodory_reduce(b, cc);
  CHECK(r.valid());
  CHECK(r.evaluate() == b);
  CHECK(r.points.size() <= 3);

  // support already small enough: returned unchanged
  ConvexCombination small;
  small.points = qm({"0 0", "1 1"});
  small.weights = {frac(1, 3), frac(2, 3)};
  ConvexCombination u = caratheodory_reduce(qv("2/3 2/3"), small);
  CHECK(u.points == small.points);
  CHECK(u.weights == small.weights);

  // collinear input: the affine dimension counts, not the ambient one
  ConvexCombination line;
  line.points = qm({"0 0", "1 1", "2 2", "3 3"});
  line.weights = {frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)};
  ConvexCombination lr = caratheodory_reduce(qv("3/2 3/2"), line);
  CHECK(lr.valid());
  CHECK(lr.evaluate() == qv("3/2 3/2"));
  CHECK(lr.points.size() <= 2);

  CHECK_THROWS_AS(caratheodory_reduce(qv("5 5"), cc), std::runtime_error);
  ConvexCombination bad;
  bad.points = qm({"0 0", "1 0"});
  bad.weights = {frac(3, 2), frac(-1, 2)};
  CHECK_THROWS_AS(caratheodory_reduce(qv("-1/2 0"), bad), std::runtime_error);
}

TEST_CASE("caratheodory_reduce on random combinations") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> qn(5, 9);
  for (int t = 0; t < 25; ++t) {
    int d = 2 + t % 3;
    ConvexCombination cc = rand_combination(rng, d, qn(rng));
    Vec b = cc.evaluate();
    ConvexCombination r = caratheodory_reduce(b, cc);
    CHECK(r.valid());
    CHECK(r.evaluate() == b);
    CHECK(static_cast<int>(r.points.size()) <= affine_dimension(cc.points) + 1);
  }
}

TEST_CASE("radon_partition pinned instances") {
  auto parts_of = [](const RadonPartition& r) {
    std::vector<std::vector<int>> p{r.part1, r.part2};
    std::sort(p[0].begin(), p[0].end());
    std::sort(p[1].begin(), p[1].end());
    std::sort(p.begin(), p.end());
    return p;
  };

  RadonPartition r = radon_partition(qm({"0 0", "4 0", "0 4", "1 1"}));
  CHECK(parts_of(r) == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
  CHECK(r.witness == qv("1 1"));

  RadonPartition s = radon_partition(qm({"0 0", "1 0", "1 1", "0 1"}));
  CHECK(parts_of(s) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(s.witness == qv("1/2 1/2"));

  // three collinear points and one off the line still carry a dependence
  RadonPartition t = radon_partition(qm({"0 0", "1 0", "2 0", "0 5"}));
  CHECK(t.comb1.valid());
  CHECK(t.comb2.valid());
  CHECK(t.comb1.evaluate() == t.witness);
  CHECK(t.comb2.evaluate() == t.witness);

  CHECK_THROWS_AS(radon_partition(qm({"0 0", "1 0", "0 1"})), std::runtime_error);
}

TEST_CASE("radon_partition on random point sets") {
  std::mt19937 rng(83);
  for (int t = 0; t < 25; ++t) {
    int d = 2 + t % 3;
    int n = d + 2 + t % 3;
    std::vector<Vec> X = rand_vpolytope(rng, d, n).points;
    RadonPartition r = radon_partition(X);
    CHECK_FALSE(r.part1.empty());
    CHECK_FALSE(r.part2.empty());
    std::vector<int> all = r.part1;
    all.insert(all.end(), r.part2.begin(), r.part2.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) want[static_cast<size_t>(i)] = i;
    CHECK(all == want);
    CHECK(r.comb1.valid());
    CHECK(r.comb2.valid());
    CHECK(r.comb1.evaluate() == r.witness);
    CHECK(r.comb2.evaluate() == r.witness);
  }
}

TEST_CASE("farkas pinned alternatives") {
  std::vector<Vec> id2 = {qv("1 0"), qv("0 1")};

  FarkasCertificate f2 = farkas_ii(id2, qv("1 1"));
  CHECK(f2.primal);
  CHECK(f2.x == qv("1 1"));
  CHECK(farkas_certificate_checks(f2, id2, {}, qv("1 1")));

  FarkasCertificate f1 = farkas_i(id2, qv("1 1"));
  CHECK_FALSE(f1.primal);
  CHECK(farkas_certificate_checks(f1, id2, {}, qv("1 1")));
  // the textbook separator for this instance also verifies
  FarkasCertificate manual;
  manual.version = FarkasVersion::I;
  manual.c = qv("-1 -1");
  manual.alpha = Q(-1);
  CHECK(farkas_certificate_checks(manual, id2, {}, qv("1 1")));
  manual.alpha = Q(-3);
  CHECK_FALSE(farkas_certificate_checks(manual, id2, {}, qv("1 1")));

  Mat A = qm({"1", "-1"});
  FarkasCertificate f3 = farkas_iii(A, qv("1 -2"));
  CHECK_FALSE(f3.primal);
  CHECK(farkas_certificate_checks(f3, A, {}, qv("1 -2")));
  FarkasCertificate m3;
  m3.version = FarkasVersion::III;
  m3.c = qv("1 1");
  CHECK(farkas_certificate_checks(m3, A, {}, qv("1 -2")));
  FarkasCertificate f3p = farkas_iii(A, qv("3 1"));
  CHECK(f3p.primal);
  CHECK(farkas_certificate_checks(f3p, A, {}, qv("3 1")));

  std::vector<Vec> y = {qv("0 0")};
  std::vector<Vec> v = {qv("1 0")};
  FarkasCertificate f4 = farkas_iv(y, v, qv("3 0"));
  CHECK(f4.primal);
  CHECK(farkas_certificate_checks(f4, y, v, qv("3 0")));
  FarkasCertificate f4d = farkas_iv(y, v, qv("0 1"));
  CHECK_FALSE(f4d.primal);
  CHECK(farkas_certificate_checks(f4d, y, v, qv("0 1")));

  // tampered certificates are rejected by substitution
  f2.x = qv("2 1");
  CHECK_FALSE(farkas_certificate_checks(f2, id2, {}, qv("1 1")));
}

TEST_CASE("farkas II agrees with cone membership") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> ng(1, 4);
  for (int t = 0; t < 40; ++t) {
    int d = 2 + t % 2;
    std::vector<Vec> gens;
    for (int i = 0, m = ng(rng); i < m; ++i) gens.push_back(rand_point(rng, d, 5, 2));
    Vec z = rand_point(rng, d, 5, 2);
    FarkasCertificate cert = farkas_ii(gens, z);
    CHECK(cert.primal == cone_member(gens, z));
    CHECK(farkas_certificate_checks(cert, gens, {}, z));
  }
}

TEST_CASE("each farkas version yields exactly one verifiable alternative") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> nn(2, 5);
  for (int t = 0; t < 30; ++t) {
    int d = 2 + t % 2;
    std::vector<Vec> pts;
    for (int i = 0, m = nn(rng); i < m; ++i) pts.push_back(rand_point(rng, d, 6, 2));
    Vec z = rand_point(rng, d, 6, 2);

    FarkasCertificate c1 = farkas_i(pts, z);
    CHECK(c1.primal == c1.c.empty());
    CHECK(farkas_certificate_checks(c1, pts, {}, z));

    FarkasCertificate c2 = farkas_ii(pts, z);
    CHECK(c2.primal == c2.c.empty());
    CHECK(farkas_certificate_checks(c2, pts, {}, z));

    Mat A;
    Vec zz;
    for (int i = 0, m = nn(rng); i < m; ++i) {
      A.push_back(rand_point(rng, d, 5, 2));
      zz.push_back(rand_point(rng, 1, 5, 2)[0]);
    }
    FarkasCertificate c3 = farkas_iii(A, zz);
    CHECK(c3.primal == c3.c.empty());
    CHECK(farkas_certificate_checks(c3, A, {}, zz));

    std::vector<Vec> rays = {rand_point(rng, d, 4, 1)};
    FarkasCertificate c4 = farkas_iv(pts, rays, z);
    CHECK(c4.primal == c4.c.empty());
    CHECK(farkas_certificate_checks(c4, pts, rays, z));
  }
}

TEST_CASE("helly_check on the square halfplanes") {
  std::vector<HRep> family;
  for (const HRow& r : cube_h(2).ineqs) {
    HRep h;
    h.dim = 2;
    h.ineqs.push_back(r);
    family.push_back(h);
  }
  HellyReport rep = helly_check(family, 2);
  CHECK(rep.hypothesis_holds);
  REQUIRE(rep.intersection_nonempty);
  for (const HRep& h : family) CHECK(satisfies(rep.witness, h));
  CHECK_THROWS_AS(helly_check({family[0], family[1]}, 2), std::runtime_error);
}

TEST_CASE("helly_check reports a failing triple") {
  HRep a, b, c, whole;
  a.dim = b.dim = c.dim = whole.dim = 2;
  a.ineqs.push_back(HRow{Q(0), qv("0 1")});    // y >= 0
  b.ineqs.push_back(HRow{Q(0), qv("1 0")});    // x >= 0
  c.ineqs.push_back(HRow{Q(-1), qv("-1 -1")});  // x + y <= -1
  HellyReport rep = helly_check({a, b, c, whole}, 2);
  CHECK_FALSE(rep.hypothesis_holds);
  CHECK(rep.failing_subset == std::vector<int>{0, 1, 2});
  CHECK_FALSE(rep.intersection_nonempty);
}

TEST_CASE("helly_check finds the hidden common point of random families") {
  std::mt19937 rng(103);
  Vec p = qv("1/3 2/7");
  std::uniform_int_distribution<int> off(1, 5);
  for (int t = 0; t < 10; ++t) {
    std::vector<HRep> family;
    for (int i = 0; i < 5; ++i) {
      HRep h;
      h.dim = 2;
      for (int k = 0; k < 2; ++k) {
        Vec up = unit_vec(2, k), dn = neg(unit_vec(2, k));
        h.ineqs.push_back(HRow{Q(off(rng)) - p[static_cast<size_t>(k)], up});
        h.ineqs.push_back(HRow{Q(off(rng)) + p[static_cast<size_t>(k)], dn});
      }
      family.push_back(h);
    }
    HellyReport rep = helly_check(family, 2);
    CHECK(rep.hypothesis_holds);
    REQUIRE(rep.intersection_nonempty);
    for (const HRep& h : family) CHECK(satisfies(rep.witness, h));
  }
}

TEST_CASE("centerpoint returns verified points on pinned sets") {
  std::vector<Vec> tri = qm({"0 0", "6 0", "0 6"});
  Vec c = centerpoint(tri);
  CHECK(verify_centerpoint(c, tri));
  CHECK(verify_centerpoint(qv("2 2"), tri));  // the centroid

  std::vector<Vec> hex = hexagon();
  Vec hc = centerpoint(hex);
  CHECK(verify_centerpoint(hc, hex));
  CHECK(verify_centerpoint(qv("0 0"), hex));
  CHECK_FALSE(verify_centerpoint(qv("2 0"), hex));   // a vertex is too shallow
  CHECK_FALSE(verify_centerpoint(qv("5 5"), hex));   // outside the hull

  std::vector<Vec> line = qm({"0 0", "1 0", "2 0", "3 0"});
  Vec lc = centerpoint(line);
  CHECK(verify_centerpoint(lc, line));

  // the centerpoint set is convex: midpoints of verified points verify
  Vec mid = scale(frac(1, 2), add(hc, qv("0 0")));
  CHECK(verify_centerpoint(mid, hex));

  CHECK_THROWS_AS(centerpoint(qm({"0 0 0 0"})), std::runtime_error);
  CHECK_THROWS_AS(centerpoint(std::vector<Vec>(13, qv("0 0"))), std::runtime_error);
}

TEST_CASE("verify_centerpoint matches the exact angular sweep") {
  std::vector<Vec> hex = hexagon();
  CHECK(3 * depth_2d(qv("0 0"), hex) >= 6);
  CHECK(3 * depth_2d(qv("2 0"), hex) < 6);
  std::mt19937 rng(107);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec> S = rand_vpolytope(rng, 2, 4 + t % 5, 6, 1).points;
    Vec c;
    switch (t % 3) {
      case 0: c = S[0]; break;
      case 1: c = scale(frac(1, 2), add(S[0], S[1])); break;
      default: c = rand_point(rng, 2, 6, 2); break;
    }
    long n = static_cast<long>(S.size());
    CHECK(verify_centerpoint(c, S) == (3 * depth_2d(c, S) >= n));
  }
}

TEST_CASE("centerpoint output verifies on random planar sets") {
  std::mt19937 rng(109);
  for (int t = 0; t < 5; ++t) {
    std::vector<Vec> S = rand_vpolytope(rng, 2, 5 + t % 3, 8, 1).points;
    CHECK(verify_centerpoint(centerpoint(S), S));
  }
}
