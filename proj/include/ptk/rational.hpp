#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ptk {

// Exact rational scalar. mpq_class keeps the canonical form invariant
// (denominator > 0, gcd(|num|, den) = 1) after every arithmetic operation,
// so equality is structural.
using Scalar = mpq_class;
using Q = Scalar;

using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;  // row-major, rectangular

// Parses "p" or "p/q" (optional leading sign). Throws std::runtime_error on
// malformed input or zero denominator. Result is canonicalized.
Q parse_rational(const std::string& s);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Q& x);

int sign(const Q& x);

Q dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Q& c, const Vec& a);
Vec neg(const Vec& a);
bool is_zero_vec(const Vec& a);
Vec zero_vec(int d);
Vec unit_vec(int d, int i);  // e_i, 0-based
Q norm2(const Vec& a);       // squared euclidean norm

// Unique representative of {c.v | c > 0}: integer coordinates with content 1.
// The zero vector maps to itself.
Vec primitive(const Vec& a);

std::string to_string(const Vec& a);  // "(a1, a2, ...)"

}  // namespace ptk
