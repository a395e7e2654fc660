#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptk/complexes.hpp"
#include "ptk/delvor.hpp"
#include "ptk/duality.hpp"
#include "ptk/polyhedron.hpp"
#include "ptk/rational.hpp"

namespace ptk {

// Malformed input file; the message carries path:line:column context.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cdd-style text formats, bit-exact rationals ("p" or "p/q"). Blank lines
// and lines starting with '#' are ignored everywhere.
//
// H-file:  H-representation / [linearity k i1..ik] / begin / m d+1 rational
//          / m rows "b a1..ad" (b + a.x >= 0; linearity rows, 1-based, are
//          equations) / end
// V-file:  V-representation / begin / k d+1 rational / k rows "t w1..wd"
//          (t=1 point, t=0 ray) / end
// Q-file:  Q-matrix / begin / n n rational / n rows / end
// P-file:  P / n d / n rows of d rationals
// SC-file: SC / vertices n / one face per line, strictly increasing ids
HRep read_hrep(const std::string& path);
VRep read_vrep(const std::string& path);
Quadric read_quadric(const std::string& path);
std::vector<Vec> read_points(const std::string& path);
SimplicialComplex read_complex(const std::string& path);

// Peeks at the first significant line: "H", "V", "Q", "P", or "SC".
std::string sniff_format(const std::string& path);

std::string write_hrep(const HRep& P);
std::string write_vrep(const VRep& P);
std::string write_points(const std::vector<Vec>& points);
// Maximal faces only, lexicographic order.
std::string write_complex(const SimplicialComplex& K);

void write_file(const std::string& path, const std::string& content);

// Fixed-point rendering with exactly 12 fractional digits (round half away
// from zero). Figures are presentation only; nothing parses this back.
std::string decimal12(const Q& x);

// Deterministic figure emitters; throw on unsupported dimension.
std::string svg_delaunay(const DelaunayComplex& D);                       // d = 2
std::string svg_voronoi(const VoronoiDiagram& V);                         // d = 2
std::string off_delaunay(const DelaunayComplex& D);                       // d in {2,3}

}  // namespace ptk
