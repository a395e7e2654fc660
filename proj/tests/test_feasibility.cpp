#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ptk/feasibility.hpp"
#include "ptk/polyhedron.hpp"

using namespace ptk;
using namespace ptk::testutil;

namespace {

bool row_holds(const LinRow& r, const Vec& x) {
  int s = sign(r.b + dot(r.a, x));
  switch (r.rel) {
    case Rel::GE: return s >= 0;
    case Rel::GT: return s > 0;
    case Rel::EQ: return s == 0;
  }
  return false;
}

bool witness_ok(const LinSystem& sys, const Feasibility& f) {
  if (!f.feasible) return false;
  for (const LinRow& r : sys.rows)
    if (!row_holds(r, f.point)) return false;
  return true;
}

}  // namespace

TEST_CASE("unit interval is feasible with a valid witness") {
  LinSystem sys(1);
  sys.add(Q(0), qv("1"));   // x >= 0
  sys.add(Q(1), qv("-1"));  // x <= 1
  Feasibility f = check_feasible(sys);
  CHECK(witness_ok(sys, f));
  CHECK(f.cert.empty());
}

TEST_CASE("empty interval yields a checkable certificate") {
  LinSystem sys(1);
  sys.add(Q(-1), qv("1"));  // x >= 1
  sys.add(Q(0), qv("-1"));  // x <= 0
  Feasibility f = check_feasible(sys);
  CHECK_FALSE(f.feasible);
  CHECK(certificate_refutes(sys, f.cert));
}

TEST_CASE("strict rows honored exactly") {
  LinSystem open01(1);
  open01.add(Q(0), qv("1"), Rel::GT);   // x > 0
  open01.add(Q(1), qv("-1"), Rel::GT);  // x < 1
  Feasibility f = check_feasible(open01);
  CHECK(witness_ok(open01, f));

  LinSystem closed_contra(1);
  closed_contra.add(Q(0), qv("1"), Rel::GT);  // x > 0
  closed_contra.add(Q(0), qv("-1"));          // x <= 0
  f = check_feasible(closed_contra);
  CHECK_FALSE(f.feasible);
  CHECK(certificate_refutes(closed_contra, f.cert));

  // zero-sum refutation needs a positive weight on a strict row
  LinSystem zero_sum(1);
  zero_sum.add(Q(0), qv("1"), Rel::GT);
  zero_sum.add(Q(0), qv("-1"), Rel::GT);
  f = check_feasible(zero_sum);
  CHECK_FALSE(f.feasible);
  CHECK(certificate_refutes(zero_sum, f.cert));
}

TEST_CASE("equations combine with inequalities") {
  LinSystem sys(2);
  sys.add(Q(-1), qv("1 1"), Rel::EQ);  // x + y = 1
  sys.add(Q(0), qv("1 0"));            // x >= 0
  sys.add(Q(0), qv("0 1"));            // y >= 0
  Feasibility f = check_feasible(sys);
  CHECK(witness_ok(sys, f));

  sys.add(Q(-3), qv("1 -1"), Rel::EQ);  // x - y = 3 forces y = -1
  f = check_feasible(sys);
  CHECK_FALSE(f.feasible);
  CHECK(certificate_refutes(sys, f.cert));
}

TEST_CASE("no rows means trivially feasible") {
  LinSystem sys(3);
  Feasibility f = check_feasible(sys);
  CHECK(f.feasible);
  CHECK(f.point == zero_vec(3));
}

TEST_CASE("certificate_refutes rejects wrong multipliers") {
  LinSystem sys(1);
  sys.add(Q(-1), qv("1"));
  sys.add(Q(0), qv("-1"));
  CHECK_FALSE(certificate_refutes(sys, {Q(1), Q(0)}));   // combo has x left
  CHECK_FALSE(certificate_refutes(sys, {Q(-1), Q(-1)})); // negative weights
  CHECK(certificate_refutes(sys, {Q(1), Q(1)}));         // 0 <= -1
}

TEST_CASE("random systems: witness or certificate, never both claims") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> nrows(2, 8), coef(-4, 4), relpick(0, 5);
  for (int t = 0; t < 60; ++t) {
    int d = 1 + t % 4;
    LinSystem sys(d);
    int m = nrows(rng);
    for (int i = 0; i < m; ++i) {
      Vec a(static_cast<size_t>(d));
      for (auto& c : a) c = Q(coef(rng));
      Rel rel = Rel::GE;
      int pick = relpick(rng);
      if (pick == 0) rel = Rel::GT;
      if (pick == 1) rel = Rel::EQ;
      sys.add(Q(coef(rng)), std::move(a), rel);
    }
    Feasibility f = check_feasible(sys);
    if (f.feasible) {
      CHECK(witness_ok(sys, f));
      CHECK(f.cert.empty());
    } else {
      CHECK(certificate_refutes(sys, f.cert));
    }
  }
}

TEST_CASE("agrees with the cone-programming emptiness route on closed systems") {
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> nrows(2, 9), coef(-5, 5);
  for (int t = 0; t < 60; ++t) {
    int d = 2 + t % 3;
    HRep P;
    P.dim = d;
    int m = nrows(rng);
    for (int i = 0; i < m; ++i) {
      Vec a(static_cast<size_t>(d));
      for (auto& c : a) c = Q(coef(rng));
      if (is_zero_vec(a)) continue;
      P.ineqs.push_back(HRow{Q(coef(rng)), std::move(a)});
    }
    if (t % 4 == 0) P.eqs.push_back(HRow{Q(coef(rng)), rand_point(rng, d, 3, 1)});
    Feasibility f = check_feasible(to_system(P));
    CHECK(f.feasible == !is_empty(P));
    if (f.feasible) CHECK(satisfies(f.point, P));
  }
}
