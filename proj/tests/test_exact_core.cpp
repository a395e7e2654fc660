#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "ptk/linalg.hpp"
#include "ptk/rational.hpp"

using namespace ptk;
using namespace ptk::testutil;

TEST_CASE("parse_rational accepts integers and fractions, canonicalized") {
  CHECK(parse_rational("3/4") == frac(3, 4));
  CHECK(parse_rational("-3/4") == frac(-3, 4));
  CHECK(parse_rational("0") == Q(0));
  CHECK(parse_rational("7") == Q(7));
  CHECK(parse_rational("-4/2") == Q(-2));
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("22/7")) == "22/7");
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational("1/0"), std::runtime_error);
  CHECK_THROWS_AS(parse_rational("abc"), std::runtime_error);
  CHECK_THROWS_AS(parse_rational("1.5"), std::runtime_error);
  CHECK_THROWS_AS(parse_rational(""), std::runtime_error);
  CHECK_THROWS_AS(parse_rational("1/"), std::runtime_error);
}

TEST_CASE("vector arithmetic basics") {
  Vec a = qv("1 -2 3/2"), b = qv("2 1 1/2");
  CHECK(dot(a, b) == frac(3, 4));
  CHECK(add(a, b) == qv("3 -1 2"));
  CHECK(sub(a, b) == qv("-1 -3 1"));
  CHECK(scale(Q(2), a) == qv("2 -4 3"));
  CHECK(neg(a) == qv("-1 2 -3/2"));
  CHECK(norm2(a) == frac(29, 4));
  CHECK(is_zero_vec(zero_vec(3)));
  CHECK_FALSE(is_zero_vec(a));
  CHECK(unit_vec(3, 1) == qv("0 1 0"));
}

TEST_CASE("primitive scales to coprime integers and keeps direction") {
  CHECK(primitive(qv("2/3 -4/9")) == qv("3 -2"));
  CHECK(primitive(qv("4 6")) == qv("2 3"));
  CHECK(primitive(qv("-4 -6")) == qv("-2 -3"));
  CHECK(primitive(zero_vec(2)) == zero_vec(2));
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Vec v = rand_point(rng, 3);
    if (is_zero_vec(v)) continue;
    Vec p = primitive(v);
    // same ray: p = c v with c > 0
    size_t i = 0;
    while (sign(v[i]) == 0) ++i;
    Q c = p[i] / v[i];
    CHECK(sign(c) > 0);
    CHECK(p == scale(c, v));
    CHECK(primitive(p) == p);
  }
}

TEST_CASE("rank on fixed matrices") {
  CHECK(rank(qm({"1 0", "0 1"})) == 2);
  CHECK(rank(qm({"1 2", "2 4"})) == 1);
  CHECK(rank(qm({"0 0 0", "0 0 0", "0 0 0"})) == 0);
  CHECK(rank(Mat{}) == 0);
  CHECK(rank(qm({"1/2 1/3", "1/4 1/6"})) == 1);
}

TEST_CASE("det fixed values") {
  CHECK(det(qm({"1 1 1", "1 2 4", "1 3 9"})) == Q(2));
  CHECK(det(qm({"1 2", "2 4"})) == Q(0));
  CHECK(det(qm({"1/2 0", "0 1/3"})) == frac(1, 6));
  CHECK_THROWS_AS(det(qm({"1 2 3", "4 5 6"})), std::runtime_error);
}

TEST_CASE("solve_linear unique, underdetermined, inconsistent") {
  auto x = solve_linear(qm({"2 0", "0 4"}), qv("1 1"));
  REQUIRE(x.has_value());
  CHECK(*x == qv("1/2 1/4"));

  auto y = solve_linear(qm({"1 1"}), qv("3"));
  REQUIRE(y.has_value());
  CHECK(dot(qv("1 1"), *y) == Q(3));

  CHECK_FALSE(solve_linear(qm({"1 1", "1 1"}), qv("0 1")).has_value());
}

TEST_CASE("rref and nullspace") {
  Mat r = rref(qm({"2 4 0", "1 2 1"}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == qv("1 2 0"));
  CHECK(r[1] == qv("0 0 1"));

  Mat A = qm({"1 2 3", "2 4 6"});
  Mat ns = nullspace(A);
  CHECK(static_cast<int>(ns.size()) == 3 - rank(A));
  for (const Vec& n : ns)
    for (const Vec& row : A) CHECK(sign(dot(row, n)) == 0);
}

TEST_CASE("inverse round trip and singular error") {
  Mat A = qm({"1 1/2", "0 3"});
  Mat I = qm({"1 0", "0 1"});
  Mat B = inverse(A);
  Mat P(2, zero_vec(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) P[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
          A[static_cast<size_t>(i)][static_cast<size_t>(k)] * B[static_cast<size_t>(k)][static_cast<size_t>(j)];
  CHECK(P == I);
  CHECK_THROWS_AS(inverse(qm({"1 2", "2 4"})), std::runtime_error);
}

TEST_CASE("affine_dimension") {
  CHECK(affine_dimension({}) == -1);
  CHECK(affine_dimension({qv("5 5")}) == 0);
  CHECK(affine_dimension(qm({"0 0", "1 1", "2 2"})) == 1);
  CHECK(affine_dimension(qm({"0 0", "1 0", "0 1"})) == 2);
}

TEST_CASE("perturbation_vector is the power sequence") {
  CHECK(perturbation_vector(Q(0), 3) == qv("0 0 0"));
  CHECK(perturbation_vector(Q(2), 3) == qv("2 4 8"));
  CHECK(perturbation_vector(frac(1, 2), 2) == qv("1/2 1/4"));
}

TEST_CASE("cone_member fixed cases") {
  Mat gens = qm({"1 0", "0 1"});
  CHECK(cone_member(gens, qv("1 1")));
  CHECK(cone_member(gens, qv("0 0")));
  CHECK(cone_member(gens, qv("3 1/2")));
  CHECK_FALSE(cone_member(gens, qv("-1 0")));
  CHECK_FALSE(cone_member(gens, qv("1 -1/9")));
  CHECK(cone_member(Mat{}, zero_vec(2)));
  CHECK_FALSE(cone_member(Mat{}, qv("1 0")));
  // lineality via opposite generators
  CHECK(cone_member(qm({"1 1", "-1 -1"}), qv("-2 -2")));
}

TEST_CASE("cone_member on random nonnegative combinations and separated targets") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> w(0, 5), ngen(2, 6);
  for (int t = 0; t < 100; ++t) {
    int d = 3, n = ngen(rng);
    // generators kept in the halfspace x_2 >= 0 so a target with x_2 < 0
    // is a guaranteed non-member
    Mat gens;
    for (int i = 0; i < n; ++i) {
      Vec g = rand_point(rng, d);
      g[2] = abs(g[2]);
      gens.push_back(std::move(g));
    }
    Vec combo = zero_vec(d);
    for (const Vec& g : gens) combo = add(combo, scale(Q(w(rng)), g));
    CHECK(cone_member(gens, combo));
    Vec outside = combo;
    outside[2] = Q(-1) - abs(outside[2]);
    CHECK_FALSE(cone_member(gens, outside));
  }
}

TEST_CASE("cone_irredundant_mask preserves the cone and strips dependents") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> w(0, 3);
  for (int t = 0; t < 25; ++t) {
    Mat rows;
    for (int i = 0; i < 4; ++i) rows.push_back(rand_point(rng, 3));
    // two deliberate nonnegative combinations
    rows.push_back(add(rows[0], scale(Q(w(rng)), rows[1])));
    rows.push_back(add(scale(Q(2), rows[2]), rows[3]));
    std::vector<bool> keep = cone_irredundant_mask(rows, {});
    REQUIRE(keep.size() == rows.size());
    Mat kept;
    for (size_t i = 0; i < rows.size(); ++i)
      if (keep[i]) kept.push_back(rows[i]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (!keep[i]) CHECK(cone_member(kept, rows[i]));
    // survivors are pairwise irredundant
    for (size_t i = 0; i < kept.size(); ++i) {
      Mat others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      CHECK_FALSE(cone_member(others, kept[i]));
    }
  }
}

TEST_CASE("cone_irredundant_mask respects extra generators") {
  Mat rows = qm({"1 0", "1 1"});
  Mat extra = qm({"0 1"});
  std::vector<bool> keep = cone_irredundant_mask(rows, extra);
  CHECK(keep[0]);
  CHECK_FALSE(keep[1]);  // (1,1) = (1,0) + extra (0,1)
}
