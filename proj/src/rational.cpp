#include "ptk/rational.hpp"

#include <stdexcept>

namespace ptk {

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::runtime_error("empty rational literal");
  // mpq_set_str accepts whitespace and bases we do not want; validate first.
  auto digits_ok = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (den.find('/') != std::string::npos)
      throw std::runtime_error("malformed rational literal '" + s + "'");
  }
  if (!digits_ok(num) || !digits_ok(den))
    throw std::runtime_error("malformed rational literal '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw std::runtime_error("zero denominator in '" + s + "'");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& x) { return x.get_str(); }

int sign(const Q& x) { return sgn(x); }

Q dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::runtime_error("dot: dimension mismatch");
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::runtime_error("add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::runtime_error("sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Q& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vec neg(const Vec& a) { return scale(Q(-1), a); }

bool is_zero_vec(const Vec& a) {
  for (const Q& x : a)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(int d) { return Vec(static_cast<size_t>(d), Q(0)); }

Vec unit_vec(int d, int i) {
  Vec r = zero_vec(d);
  r[static_cast<size_t>(i)] = 1;
  return r;
}

Q norm2(const Vec& a) { return dot(a, a); }

Vec primitive(const Vec& a) {
  mpz_class den_lcm = 1;
  for (const Q& x : a) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    ints[i] = a[i].get_num() * (den_lcm / a[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return zero_vec(static_cast<int>(a.size()));
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Q(ints[i] / g);
  return r;
}

std::string to_string(const Vec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += to_string(a[i]);
  }
  return s + ")";
}

}  // namespace ptk
