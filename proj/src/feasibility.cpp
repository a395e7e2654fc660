#include "ptk/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ptk/linalg.hpp"

namespace ptk {

void LinSystem::add(Q b, Vec a, Rel rel) {
  if (static_cast<int>(a.size()) != dim)
    throw std::runtime_error("LinSystem::add: dimension mismatch");
  rows.push_back(LinRow{std::move(b), std::move(a), rel});
}

namespace {

struct WRow {
  Q b;
  Vec a;  // full width; eliminated coordinates are zero
  bool strict = false;
  std::vector<Q> prov;  // multipliers over the input rows
};

struct Level {
  int var = -1;
  std::vector<WRow> rows;  // rows with a[var] != 0 before eliminating var
};

// Scales a row by a positive factor so the coefficient part is primitive,
// drops satisfied constant rows, groups identical directions keeping the
// tightest bound. A violated constant row ends the search: its provenance is
// the certificate. Returns false and fills `cert` in that case.
bool filter_rows(std::vector<WRow>& rows, std::vector<Q>* cert) {
  std::map<std::string, size_t> by_dir;
  std::vector<WRow> kept;
  auto dir_key = [](const Vec& a) {
    std::string k;
    for (const Q& x : a) {
      k += x.get_str();
      k += ',';
    }
    return k;
  };
  for (WRow& r : rows) {
    if (is_zero_vec(r.a)) {
      int s = sign(r.b);
      if (s < 0 || (s == 0 && r.strict)) {
        if (cert) *cert = r.prov;
        return false;
      }
      continue;  // trivially satisfied constant
    }
    Vec p = primitive(r.a);
    size_t j = 0;
    while (r.a[j] == 0) ++j;
    Q c = r.a[j] / p[j];  // positive
    WRow n;
    n.b = r.b / c;
    n.a = p;
    n.strict = r.strict;
    n.prov.reserve(r.prov.size());
    for (const Q& m : r.prov) n.prov.push_back(m / c);
    std::string key = dir_key(p);
    auto it = by_dir.find(key);
    if (it == by_dir.end()) {
      by_dir.emplace(std::move(key), kept.size());
      kept.push_back(std::move(n));
    } else {
      WRow& old = kept[it->second];
      bool stronger = n.b < old.b || (n.b == old.b && n.strict && !old.strict);
      if (stronger) old = std::move(n);
    }
  }
  rows = std::move(kept);
  return true;
}

constexpr size_t kPruneAt = 20;

// Drops non-strict rows that are nonnegative combinations of the remaining
// rows and the trivial row 1 >= 0: such rows are implied, so the solution
// set, the surviving provenances, and any later refutation stay valid.
void prune_implied(std::vector<WRow>& rows) {
  if (rows.size() <= kPruneAt) return;
  auto as_vec = [](const WRow& r) {
    Vec v;
    v.reserve(r.a.size() + 1);
    v.push_back(r.b);
    v.insert(v.end(), r.a.begin(), r.a.end());
    return v;
  };
  Mat cand;
  std::vector<size_t> cand_ix;
  Mat extra;
  extra.push_back(unit_vec(static_cast<int>(rows[0].a.size()) + 1, 0));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].strict)
      extra.push_back(as_vec(rows[i]));  // never dropped, still a generator
    else {
      cand.push_back(as_vec(rows[i]));
      cand_ix.push_back(i);
    }
  }
  std::vector<bool> keep_cand = cone_irredundant_mask(cand, extra);
  std::vector<bool> keep(rows.size(), true);
  for (size_t c = 0; c < cand_ix.size(); ++c) keep[cand_ix[c]] = keep_cand[c];
  std::vector<WRow> kept;
  for (size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) kept.push_back(std::move(rows[i]));
  rows = std::move(kept);
}

}  // namespace

Feasibility check_feasible(const LinSystem& sys) {
  Feasibility out;
  size_t m = sys.rows.size();
  std::vector<WRow> rows;
  for (size_t i = 0; i < m; ++i) {
    const LinRow& r = sys.rows[i];
    if (static_cast<int>(r.a.size()) != sys.dim)
      throw std::runtime_error("check_feasible: row dimension mismatch");
    WRow w;
    w.b = r.b;
    w.a = r.a;
    w.strict = (r.rel == Rel::GT);
    w.prov.assign(m, Q(0));
    w.prov[i] = 1;
    rows.push_back(w);
    if (r.rel == Rel::EQ) {
      WRow v;
      v.b = -r.b;
      v.a = neg(r.a);
      v.strict = false;
      v.prov.assign(m, Q(0));
      v.prov[i] = -1;
      rows.push_back(std::move(v));
    }
  }

  std::vector<Q> cert;
  if (!filter_rows(rows, &cert)) {
    out.feasible = false;
    out.cert = std::move(cert);
    return out;
  }
  prune_implied(rows);

  std::vector<bool> eliminated(static_cast<size_t>(sys.dim), false);
  std::vector<Level> levels;
  for (int step = 0; step < sys.dim; ++step) {
    // Greedy order: fewest positive*negative pairings next.
    int bestv = -1;
    long bestcost = 0;
    for (int v = 0; v < sys.dim; ++v) {
      if (eliminated[static_cast<size_t>(v)]) continue;
      long pos = 0, negc = 0;
      for (const WRow& r : rows) {
        int s = sign(r.a[static_cast<size_t>(v)]);
        if (s > 0) ++pos;
        else if (s < 0) ++negc;
      }
      long cost = pos * negc;
      if (bestv < 0 || cost < bestcost) {
        bestv = v;
        bestcost = cost;
      }
    }
    int v = bestv;
    eliminated[static_cast<size_t>(v)] = true;

    Level lvl;
    lvl.var = v;
    std::vector<WRow> next;
    std::vector<const WRow*> pos, negs;
    for (WRow& r : rows) {
      int s = sign(r.a[static_cast<size_t>(v)]);
      if (s == 0) {
        next.push_back(std::move(r));
        continue;
      }
      WRow snap;
      snap.b = r.b;
      snap.a = r.a;
      snap.strict = r.strict;
      lvl.rows.push_back(std::move(snap));
      if (s > 0) pos.push_back(&r);
      else negs.push_back(&r);
    }
    for (const WRow* p : pos) {
      for (const WRow* n : negs) {
        Q alpha = -n->a[static_cast<size_t>(v)];  // > 0
        Q beta = p->a[static_cast<size_t>(v)];    // > 0
        WRow c;
        c.b = alpha * p->b + beta * n->b;
        c.a = add(scale(alpha, p->a), scale(beta, n->a));
        c.strict = p->strict || n->strict;
        c.prov.resize(m);
        for (size_t i = 0; i < m; ++i) c.prov[i] = alpha * p->prov[i] + beta * n->prov[i];
        next.push_back(std::move(c));
      }
    }
    levels.push_back(std::move(lvl));
    if (!filter_rows(next, &cert)) {
      out.feasible = false;
      out.cert = std::move(cert);
      return out;
    }
    prune_implied(next);
    rows = std::move(next);
  }

  // Feasible: assign variables in reverse elimination order from the exact
  // 1-D interval each level leaves open.
  out.feasible = true;
  out.point = zero_vec(sys.dim);
  for (size_t li = levels.size(); li-- > 0;) {
    const Level& lvl = levels[li];
    size_t v = static_cast<size_t>(lvl.var);
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Q lo, hi;
    for (const WRow& r : lvl.rows) {
      Q rest = r.b;
      for (size_t j = 0; j < r.a.size(); ++j)
        if (j != v) rest += r.a[j] * out.point[j];
      Q bound = -rest / r.a[v];
      if (sign(r.a[v]) > 0) {  // x_v >= bound
        if (!has_lo || bound > lo) {
          lo = bound;
          lo_strict = r.strict;
          has_lo = true;
        } else if (bound == lo && r.strict) {
          lo_strict = true;
        }
      } else {  // x_v <= bound
        if (!has_hi || bound < hi) {
          hi = bound;
          hi_strict = r.strict;
          has_hi = true;
        } else if (bound == hi && r.strict) {
          hi_strict = true;
        }
      }
    }
    Q val = 0;
    if (has_lo && has_hi) {
      if (lo == hi) {
        if (lo_strict || hi_strict)
          throw std::runtime_error("check_feasible: degenerate strict interval");
        val = lo;
      } else {
        val = (lo + hi) / 2;
      }
    } else if (has_lo) {
      val = lo_strict ? lo + 1 : lo;
    } else if (has_hi) {
      val = hi_strict ? hi - 1 : hi;
    }
    out.point[v] = val;
  }
  return out;
}

bool certificate_refutes(const LinSystem& sys, const std::vector<Q>& cert) {
  if (cert.size() != sys.rows.size()) return false;
  Q cb = 0;
  Vec ca = zero_vec(sys.dim);
  bool strict_used = false;
  for (size_t i = 0; i < cert.size(); ++i) {
    const LinRow& r = sys.rows[i];
    if (r.rel != Rel::EQ && sign(cert[i]) < 0) return false;
    if (r.rel == Rel::GT && sign(cert[i]) > 0) strict_used = true;
    cb += cert[i] * r.b;
    ca = add(ca, scale(cert[i], r.a));
  }
  if (!is_zero_vec(ca)) return false;
  return sign(cb) < 0 || (sign(cb) == 0 && strict_used);
}

}  // namespace ptk
