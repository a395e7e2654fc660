#pragma once

#include <vector>

#include "ptk/rational.hpp"

namespace ptk {

// Relation of a linear row: b + a.x  {>=, >, ==}  0.
enum class Rel { GE, GT, EQ };

struct LinRow {
  Q b;
  Vec a;
  Rel rel = Rel::GE;
};

struct LinSystem {
  int dim = 0;
  std::vector<LinRow> rows;

  explicit LinSystem(int d = 0) : dim(d) {}
  void add(Q b, Vec a, Rel rel = Rel::GE);
};

struct Feasibility {
  bool feasible = false;
  Vec point;  // witness when feasible

  // When infeasible: one multiplier per input row with
  //   sum_i cert[i] * (b_i + a_i.x)  ==  c   identically in x,
  // cert[i] >= 0 on GE/GT rows (free sign on EQ rows), and either c < 0, or
  // c == 0 with cert[i] > 0 on some GT row. Empty when feasible.
  std::vector<Q> cert;
};

// Exact Fourier-Motzkin feasibility with witness extraction by interval
// back-substitution and infeasibility certificates from the row-combination
// trace. Strict rows are honored exactly. Desk-scale variable counts.
Feasibility check_feasible(const LinSystem& sys);

// True when cert is a valid infeasibility certificate for sys (test oracle).
bool certificate_refutes(const LinSystem& sys, const std::vector<Q>& cert);

}  // namespace ptk
