#include "ptk/linalg.hpp"

#include <stdexcept>

namespace ptk {

namespace {

struct IntEchelon {
  std::vector<std::vector<mpz_class>> m;
  std::vector<int> pivot_cols;  // pivot_cols[r] = column of pivot in row r
  int sign = 1;                 // row-swap parity
  std::vector<mpz_class> row_mult;  // positive multiplier applied per input row
};

// Fraction-free forward elimination. Pivots only over the first `ncols_pivot`
// columns; trailing columns (augmented part) are updated but never pivoted on.
// Every intermediate entry is a minor of the denominator-cleared input, which
// keeps the exact divisions exact.
IntEchelon bareiss(const Mat& A, int ncols_pivot) {
  IntEchelon e;
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  e.m.resize(rows);
  e.row_mult.resize(rows, 1);
  for (size_t i = 0; i < rows; ++i) {
    if (A[i].size() != cols) throw std::runtime_error("bareiss: ragged matrix");
    mpz_class l = 1;
    for (const Q& x : A[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    e.row_mult[i] = l;
    e.m[i].resize(cols);
    for (size_t j = 0; j < cols; ++j) e.m[i][j] = A[i][j].get_num() * (l / A[i][j].get_den());
  }
  mpz_class prev = 1;
  size_t r = 0;
  for (int c = 0; c < ncols_pivot && r < rows; ++c) {
    size_t p = r;
    while (p < rows && e.m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(e.m[p], e.m[r]);
      e.sign = -e.sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        mpz_class t = e.m[r][c] * e.m[i][j] - e.m[i][c] * e.m[r][j];
        mpz_divexact(e.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.m[i][c] = 0;
    }
    prev = e.m[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

int rank(const Mat& A) {
  if (A.empty()) return 0;
  return static_cast<int>(bareiss(A, static_cast<int>(A[0].size())).pivot_cols.size());
}

Q det(const Mat& A) {
  size_t n = A.size();
  for (const Vec& row : A)
    if (row.size() != n) throw std::runtime_error("det: matrix not square");
  if (n == 0) return 1;
  IntEchelon e = bareiss(A, static_cast<int>(n));
  if (e.pivot_cols.size() < n) return 0;
  Q d(e.m[n - 1][n - 1] * e.sign);
  for (const mpz_class& m : e.row_mult) d /= Q(m);
  return d;
}

std::optional<Vec> solve_linear(const Mat& A, const Vec& b) {
  if (A.size() != b.size()) throw std::runtime_error("solve_linear: dimension mismatch");
  if (A.empty()) return Vec{};
  size_t n = A[0].size();
  Mat aug(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != n) throw std::runtime_error("solve_linear: ragged matrix");
    aug[i] = A[i];
    aug[i].push_back(b[i]);
  }
  IntEchelon e = bareiss(aug, static_cast<int>(n));
  size_t nr = e.pivot_cols.size();
  for (size_t i = nr; i < aug.size(); ++i)
    if (e.m[i][n] != 0) return std::nullopt;
  Vec x = zero_vec(static_cast<int>(n));
  for (size_t ri = nr; ri-- > 0;) {
    int c = e.pivot_cols[ri];
    Q s(e.m[ri][n]);
    for (size_t j = c + 1; j < n; ++j) s -= Q(e.m[ri][j]) * x[j];
    x[c] = s / Q(e.m[ri][c]);
  }
  return x;
}

Mat rref(const Mat& A) {
  Mat m = A;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

Mat nullspace(const Mat& A) {
  if (A.empty()) return {};
  size_t cols = A[0].size();
  Mat R = rref(A);
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < R.size(); ++i) {
    size_t c = 0;
    while (c < cols && R[i][c] == 0) ++c;
    if (c < cols) pivot_of_col[c] = static_cast<int>(i);
  }
  Mat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    Vec v = zero_vec(static_cast<int>(cols));
    v[f] = 1;
    for (size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -R[static_cast<size_t>(pivot_of_col[c])][f];
    basis.push_back(v);
  }
  return basis;
}

Mat inverse(const Mat& A) {
  size_t n = A.size();
  Mat aug(n);
  for (size_t i = 0; i < n; ++i) {
    if (A[i].size() != n) throw std::runtime_error("inverse: matrix not square");
    aug[i] = A[i];
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Q(1) : Q(0));
  }
  Mat R = rref(aug);
  if (R.size() < n) throw std::runtime_error("inverse: singular matrix");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (R[i][j] != (i == j ? 1 : 0)) throw std::runtime_error("inverse: singular matrix");
  Mat inv(n);
  for (size_t i = 0; i < n; ++i) inv[i] = Vec(R[i].begin() + static_cast<long>(n), R[i].end());
  return inv;
}

int affine_dimension(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Mat diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return rank(diffs);
}

Vec perturbation_vector(const Q& lambda, int d) {
  if (d < 1) throw std::runtime_error("perturbation_vector: d must be >= 1");
  Vec v(static_cast<size_t>(d));
  Q p = 1;
  for (int i = 0; i < d; ++i) {
    p *= lambda;
    v[static_cast<size_t>(i)] = p;
  }
  return v;
}

bool cone_member(const Mat& gens, const Vec& target) {
  size_t m = target.size();
  size_t n = gens.size();
  if (is_zero_vec(target)) return true;
  if (n == 0) return false;
  // Phase-1 simplex: columns 0..n-1 hold the combination weights, n..n+m-1
  // the artificials; minimize the artificial sum, zero iff representable.
  // Row m is the maintained reduced-cost row; its rhs is minus the objective.
  Mat T(m + 1, Vec(n + m + 1, Q(0)));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    int s = sign(target[i]) >= 0 ? 1 : -1;
    for (size_t j = 0; j < n; ++j) T[i][j] = s * gens[j][i];
    T[i][n + i] = 1;
    T[i][n + m] = s * target[i];
    basis[i] = n + i;
  }
  for (size_t j = 0; j <= n + m; ++j) {
    Q sum = 0;
    for (size_t i = 0; i < m; ++i) sum += T[i][j];
    T[m][j] = (j >= n && j < n + m ? Q(1) : Q(0)) - sum;
  }
  // Dantzig pricing until a degeneracy streak forces Bland's rule, which
  // guarantees termination.
  long degenerate_streak = 0;
  const long bland_after = 4 * static_cast<long>(n + m);
  while (true) {
    if (sign(T[m][n + m]) == 0) return true;  // objective reached zero
    bool bland = degenerate_streak > bland_after;
    size_t enter = n + m;
    for (size_t j = 0; j < n + m; ++j) {
      if (sign(T[m][j]) >= 0) continue;
      if (enter == n + m || (!bland && T[m][j] < T[m][enter])) enter = j;
      if (bland) break;
    }
    if (enter == n + m) return false;  // optimal with positive objective
    size_t leave = m;
    Q best;
    for (size_t i = 0; i < m; ++i) {
      if (sign(T[i][enter]) <= 0) continue;
      Q ratio = T[i][n + m] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("cone_member: phase-1 unbounded");
    degenerate_streak = sign(best) == 0 ? degenerate_streak + 1 : 0;
    Q piv = T[leave][enter];
    for (Q& c : T[leave]) c /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || sign(T[i][enter]) == 0) continue;
      Q f = T[i][enter];
      for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
}

std::vector<bool> cone_irredundant_mask(const Mat& rows, const Mat& extra) {
  std::vector<bool> keep(rows.size(), false);
  if (rows.empty()) return keep;
  // Only coordinates that are nonzero somewhere matter for membership.
  size_t w = rows[0].size();
  std::vector<size_t> live;
  for (size_t c = 0; c < w; ++c) {
    bool nz = false;
    for (const Vec& r : rows)
      if (sign(r[c]) != 0) {
        nz = true;
        break;
      }
    for (size_t e = 0; e < extra.size() && !nz; ++e) nz = sign(extra[e][c]) != 0;
    if (nz) live.push_back(c);
  }
  auto compress = [&](const Vec& v) {
    Vec out;
    out.reserve(live.size());
    for (size_t c : live) out.push_back(v[c]);
    return out;
  };
  Mat base;
  for (const Vec& e : extra) base.push_back(compress(e));

  // Pass 1: grow a core of rows not implied by earlier survivors. Each test
  // runs against the small core, so implied rows go cheaply.
  std::vector<size_t> core;
  for (size_t i = 0; i < rows.size(); ++i) {
    Mat gens = base;
    for (size_t j : core) gens.push_back(compress(rows[j]));
    if (!cone_member(gens, compress(rows[i]))) core.push_back(i);
  }
  // Pass 2: exact greedy prune of the core against itself.
  std::vector<bool> alive(core.size(), true);
  for (size_t i = 0; i < core.size(); ++i) {
    Mat gens = base;
    for (size_t j = 0; j < core.size(); ++j)
      if (j != i && alive[j]) gens.push_back(compress(rows[core[j]]));
    if (cone_member(gens, compress(rows[core[i]]))) alive[i] = false;
  }
  for (size_t i = 0; i < core.size(); ++i)
    if (alive[i]) keep[core[i]] = true;
  return keep;
}

}  // namespace ptk
