#pragma once

#include <vector>

#include "ptk/polyhedron.hpp"
#include "ptk/rational.hpp"

namespace ptk {

// sum_i weights[i] * points[i] with weights >= 0 summing to 1.
struct ConvexCombination {
  std::vector<Vec> points;
  std::vector<Q> weights;

  Vec evaluate() const;
  bool valid() const;  // sizes match, weights >= 0, sum 1
};

// Shrinks the support of a convex combination for b to at most
// (affine dimension + 1) points by repeatedly cancelling an affine
// dependence: alpha = max over mu_i > 0 of -lambda_i / mu_i zeroes one
// weight and keeps the rest nonnegative. Errors when cc does not
// evaluate to b.
ConvexCombination caratheodory_reduce(const Vec& b, const ConvexCombination& cc);

struct RadonPartition {
  std::vector<int> part1, part2;  // indices into X, disjoint, covering
  Vec witness;                    // common point of both hulls
  ConvexCombination comb1, comb2;
};

// Splits >= d+2 points by the sign of an affine dependence; the witness is
// the common value of the two induced convex combinations.
RadonPartition radon_partition(const std::vector<Vec>& X);

enum class FarkasVersion { I, II, III, IV };

// Exactly one side is populated. Primal: explicit solution of the version's
// system. Dual: separator (c, alpha) refuting it, checkable by substitution.
struct FarkasCertificate {
  FarkasVersion version;
  bool primal = false;
  Vec x;       // I: convex weights; II: conic weights; III: solution; IV: point weights
  Vec x_rays;  // IV only: ray weights
  Vec c;
  Q alpha = 0;  // versions I and IV
};

// I: z in conv(a)?  dual: c.a_i >= alpha for all i, c.z < alpha.
FarkasCertificate farkas_i(const std::vector<Vec>& a, const Vec& z);
// II: z = A x with x >= 0?  dual: c.a_i >= 0 for all i, c.z < 0.
FarkasCertificate farkas_ii(const std::vector<Vec>& a, const Vec& z);
// III: A x <= z solvable?  dual: c >= 0, c^T A = 0, c.z < 0. A given by rows.
FarkasCertificate farkas_iii(const Mat& A, const Vec& z);
// IV: z in conv(y) + cone(v)?  dual: c.y_i >= alpha, c.v_j >= 0, c.z < alpha.
FarkasCertificate farkas_iv(const std::vector<Vec>& y, const std::vector<Vec>& v, const Vec& z);

// Substitution check of a certificate against the version's data (test and
// CLI oracle; independent of how the certificate was produced).
bool farkas_certificate_checks(const FarkasCertificate& cert, const std::vector<Vec>& a_or_y,
                               const std::vector<Vec>& v, const Vec& z);

struct HellyReport {
  bool hypothesis_holds = false;
  std::vector<int> failing_subset;  // some (m+1)-subset with empty intersection
  bool intersection_nonempty = false;
  Vec witness;  // common point when nonempty
};

// Tests every (m+1)-subset of the family for a common point; when all have
// one, produces a point in the intersection of the whole family. Requires
// at least m+2 members.
HellyReport helly_check(const std::vector<HRep>& family, int m);

// A point of depth > n/(d+1): every closed halfspace containing it holds at
// least n/(d+1) points of S. Exact subset enumeration, d <= 3, n small.
Vec centerpoint(const std::vector<Vec>& S, size_t max_points = 12);

// Exact depth check: true iff no floor(dn/(d+1))+1 of the points can be
// strictly cut off from c by a hyperplane, so every closed halfspace
// containing c keeps at least n/(d+1) points of S.
bool verify_centerpoint(const Vec& c, const std::vector<Vec>& S);

}  // namespace ptk
