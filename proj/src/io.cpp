#include "ptk/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace ptk {

namespace {

struct Token {
  std::string text;
  int col = 1;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Significant lines of a file: blank lines and '#' comments dropped,
// tokens split on blanks, 1-based line/column positions kept for errors.
struct Cursor {
  std::string path;
  std::vector<Line> lines;
  size_t at = 0;
  int last_line = 0;

  [[noreturn]] void fail(int line, int col, const std::string& msg) const {
    throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
  bool done() const { return at == lines.size(); }
  const Line& next(const std::string& what) {
    if (done()) fail(last_line + 1, 1, "unexpected end of file, expected " + what);
    return lines[at++];
  }
};

Cursor open_cursor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  Cursor cur;
  cur.path = path;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line ln;
    ln.number = number;
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      ln.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (ln.tokens.empty() || ln.tokens[0].text[0] == '#') continue;
    cur.lines.push_back(std::move(ln));
  }
  cur.last_line = number;
  return cur;
}

int parse_int(const Cursor& cur, const Line& ln, const Token& t) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t.text, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos == 0 || pos != t.text.size())
    cur.fail(ln.number, t.col, "expected an integer, got '" + t.text + "'");
  return v;
}

Q parse_rat(const Cursor& cur, const Line& ln, const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const std::exception&) {
    cur.fail(ln.number, t.col, "expected a rational, got '" + t.text + "'");
  }
}

void expect_keyword(Cursor& cur, const std::string& kw) {
  const Line& ln = cur.next("'" + kw + "'");
  if (ln.tokens.size() != 1 || ln.tokens[0].text != kw)
    cur.fail(ln.number, ln.tokens[0].col, "expected '" + kw + "'");
}

void expect_done(Cursor& cur) {
  if (!cur.done()) {
    const Line& ln = cur.lines[cur.at];
    cur.fail(ln.number, ln.tokens[0].col, "unexpected content after 'end'");
  }
}

// "m n rational" size line shared by the cdd-style blocks.
std::pair<int, int> parse_size_line(Cursor& cur) {
  const Line& ln = cur.next("the size line 'm n rational'");
  if (ln.tokens.size() != 3)
    cur.fail(ln.number, ln.tokens[0].col, "expected the size line 'm n rational'");
  int m = parse_int(cur, ln, ln.tokens[0]);
  int n = parse_int(cur, ln, ln.tokens[1]);
  if (ln.tokens[2].text != "rational")
    cur.fail(ln.number, ln.tokens[2].col, "expected the number type 'rational'");
  if (m < 0) cur.fail(ln.number, ln.tokens[0].col, "negative row count");
  if (n < 2) cur.fail(ln.number, ln.tokens[1].col, "need at least 2 columns");
  return {m, n};
}

Vec parse_row(Cursor& cur, int n, const std::string& what) {
  const Line& ln = cur.next(what);
  if (ln.tokens[0].text == "end")
    cur.fail(ln.number, ln.tokens[0].col, "too few rows before 'end'");
  if (static_cast<int>(ln.tokens.size()) != n)
    cur.fail(ln.number, ln.tokens[0].col,
             "row has " + std::to_string(ln.tokens.size()) + " entries, expected " +
                 std::to_string(n));
  Vec row;
  for (const Token& t : ln.tokens) row.push_back(parse_rat(cur, ln, t));
  return row;
}

}  // namespace

HRep read_hrep(const std::string& path) {
  Cursor cur = open_cursor(path);
  expect_keyword(cur, "H-representation");
  std::set<int> linearity;
  {
    if (cur.done()) cur.fail(cur.last_line + 1, 1, "unexpected end of file, expected 'begin'");
    const Line& ln = cur.lines[cur.at];
    if (ln.tokens[0].text == "linearity") {
      ++cur.at;
      if (ln.tokens.size() < 2)
        cur.fail(ln.number, ln.tokens[0].col, "linearity needs a count");
      int k = parse_int(cur, ln, ln.tokens[1]);
      if (static_cast<int>(ln.tokens.size()) != k + 2)
        cur.fail(ln.number, ln.tokens[0].col,
                 "linearity lists " + std::to_string(ln.tokens.size() - 2) +
                     " indices, expected " + std::to_string(k));
      for (int i = 0; i < k; ++i) {
        int idx = parse_int(cur, ln, ln.tokens[2 + i]);
        if (!linearity.insert(idx).second)
          cur.fail(ln.number, ln.tokens[2 + i].col, "duplicate linearity index");
      }
    }
  }
  expect_keyword(cur, "begin");
  auto [m, n] = parse_size_line(cur);
  for (int idx : linearity)
    if (idx < 1 || idx > m)
      throw ParseError(path + ": linearity index " + std::to_string(idx) + " out of range 1.." +
                       std::to_string(m));
  HRep P;
  P.dim = n - 1;
  for (int r = 1; r <= m; ++r) {
    Vec row = parse_row(cur, n, "an inequality row");
    HRow h;
    h.b = row[0];
    h.a = Vec(row.begin() + 1, row.end());
    if (linearity.count(r))
      P.eqs.push_back(std::move(h));
    else
      P.ineqs.push_back(std::move(h));
  }
  expect_keyword(cur, "end");
  expect_done(cur);
  return P;
}

VRep read_vrep(const std::string& path) {
  Cursor cur = open_cursor(path);
  expect_keyword(cur, "V-representation");
  expect_keyword(cur, "begin");
  auto [m, n] = parse_size_line(cur);
  VRep P;
  P.dim = n - 1;
  for (int r = 0; r < m; ++r) {
    if (cur.done()) cur.fail(cur.last_line + 1, 1, "unexpected end of file, expected a generator row");
    const Line& ln = cur.lines[cur.at];  // position for the flag diagnostic
    Vec row = parse_row(cur, n, "a generator row");
    Vec w(row.begin() + 1, row.end());
    if (row[0] == 1)
      P.points.push_back(std::move(w));
    else if (row[0] == 0)
      P.rays.push_back(std::move(w));
    else
      cur.fail(ln.number, ln.tokens[0].col, "point/ray flag must be 0 or 1");
  }
  expect_keyword(cur, "end");
  expect_done(cur);
  return P;
}

Quadric read_quadric(const std::string& path) {
  Cursor cur = open_cursor(path);
  expect_keyword(cur, "Q-matrix");
  expect_keyword(cur, "begin");
  auto [m, n] = parse_size_line(cur);
  if (m != n) throw ParseError(path + ": quadric matrix must be square");
  Mat F;
  for (int r = 0; r < m; ++r) F.push_back(parse_row(cur, n, "a matrix row"));
  expect_keyword(cur, "end");
  expect_done(cur);
  try {
    return Quadric(n - 1, F);
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<Vec> read_points(const std::string& path) {
  Cursor cur = open_cursor(path);
  expect_keyword(cur, "P");
  const Line& sz = cur.next("the size line 'n d'");
  if (sz.tokens.size() != 2)
    cur.fail(sz.number, sz.tokens[0].col, "expected the size line 'n d'");
  int n = parse_int(cur, sz, sz.tokens[0]);
  int d = parse_int(cur, sz, sz.tokens[1]);
  if (n < 0) cur.fail(sz.number, sz.tokens[0].col, "negative point count");
  if (d < 1) cur.fail(sz.number, sz.tokens[1].col, "dimension must be positive");
  std::vector<Vec> pts;
  for (int r = 0; r < n; ++r) pts.push_back(parse_row(cur, d, "a point row"));
  if (!cur.done()) {
    const Line& ln = cur.lines[cur.at];
    cur.fail(ln.number, ln.tokens[0].col, "unexpected content after the point rows");
  }
  return pts;
}

SimplicialComplex read_complex(const std::string& path) {
  Cursor cur = open_cursor(path);
  expect_keyword(cur, "SC");
  const Line& sz = cur.next("'vertices n'");
  if (sz.tokens.size() != 2 || sz.tokens[0].text != "vertices")
    cur.fail(sz.number, sz.tokens[0].col, "expected 'vertices n'");
  int n = parse_int(cur, sz, sz.tokens[1]);
  if (n < 0) cur.fail(sz.number, sz.tokens[1].col, "negative vertex count");
  std::vector<std::vector<int>> faces;
  while (!cur.done()) {
    const Line& ln = cur.lines[cur.at++];
    std::vector<int> face;
    for (const Token& t : ln.tokens) {
      int v = parse_int(cur, ln, t);
      if (v < 0 || v >= n) cur.fail(ln.number, t.col, "vertex id out of range");
      if (!face.empty() && v <= face.back())
        cur.fail(ln.number, t.col, "face ids must be strictly increasing");
      face.push_back(v);
    }
    faces.push_back(std::move(face));
  }
  return make_complex(n, faces);
}

std::string sniff_format(const std::string& path) {
  Cursor cur = open_cursor(path);
  const Line& ln = cur.next("a format header");
  const std::string& h = ln.tokens[0].text;
  if (h == "H-representation") return "H";
  if (h == "V-representation") return "V";
  if (h == "Q-matrix") return "Q";
  if (h == "P") return "P";
  if (h == "SC") return "SC";
  cur.fail(ln.number, ln.tokens[0].col, "unrecognized format header '" + h + "'");
}

namespace {

void append_row(std::string& out, const Q& b, const Vec& a) {
  out += to_string(b);
  for (const Q& c : a) {
    out += ' ';
    out += to_string(c);
  }
  out += '\n';
}

}  // namespace

std::string write_hrep(const HRep& P) {
  std::string out = "H-representation\n";
  size_t k = P.eqs.size();
  if (k > 0) {
    out += "linearity " + std::to_string(k);
    for (size_t i = 1; i <= k; ++i) out += " " + std::to_string(i);
    out += '\n';
  }
  out += "begin\n";
  out += std::to_string(P.eqs.size() + P.ineqs.size()) + " " + std::to_string(P.dim + 1) +
         " rational\n";
  for (const HRow& r : P.eqs) append_row(out, r.b, r.a);
  for (const HRow& r : P.ineqs) append_row(out, r.b, r.a);
  out += "end\n";
  return out;
}

std::string write_vrep(const VRep& P) {
  std::string out = "V-representation\nbegin\n";
  out += std::to_string(P.points.size() + P.rays.size()) + " " + std::to_string(P.dim + 1) +
         " rational\n";
  for (const Vec& y : P.points) append_row(out, 1, y);
  for (const Vec& v : P.rays) append_row(out, 0, v);
  out += "end\n";
  return out;
}

std::string write_points(const std::vector<Vec>& points) {
  int d = points.empty() ? 1 : static_cast<int>(points[0].size());
  std::string out = "P\n" + std::to_string(points.size()) + " " + std::to_string(d) + "\n";
  for (const Vec& p : points) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

std::string write_complex(const SimplicialComplex& K) {
  std::string out = "SC\nvertices " + std::to_string(K.n_vertices) + "\n";
  std::vector<std::vector<int>> cells = maximal_faces(K);
  std::sort(cells.begin(), cells.end());
  for (const auto& f : cells) {
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f[i]);
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::string decimal12(const Q& x) {
  static const mpz_class scale = [] {
    mpz_class s = 1;
    for (int i = 0; i < 12; ++i) s *= 10;
    return s;
  }();
  bool negative = sign(x) < 0;
  mpq_class y = negative ? mpq_class(-x) : mpq_class(x);
  y *= scale;
  y += mpq_class(1, 2);
  mpz_class n = y.get_num() / y.get_den();
  mpz_class ip = n / scale;
  mpz_class fp = n % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), 12 - frac.size(), '0');
  std::string out = ip.get_str() + "." + frac;
  if (negative && n != 0) out = "-" + out;
  return out;
}

namespace {

struct Box {
  Q x0, x1, y0, y1;
};

Box bounding_box(const std::vector<Vec>& pts, const Q& pad) {
  Box b{pts[0][0], pts[0][0], pts[0][1], pts[0][1]};
  for (const Vec& p : pts) {
    if (p[0] < b.x0) b.x0 = p[0];
    if (p[0] > b.x1) b.x1 = p[0];
    if (p[1] < b.y0) b.y0 = p[1];
    if (p[1] > b.y1) b.y1 = p[1];
  }
  b.x0 -= pad;
  b.x1 += pad;
  b.y0 -= pad;
  b.y1 += pad;
  return b;
}

Q box_pad(const std::vector<Vec>& pts) {
  Box raw = bounding_box(pts, 0);
  Q pad = raw.x1 - raw.x0;
  if (raw.y1 - raw.y0 > pad) pad = raw.y1 - raw.y0;
  if (pad < 1) pad = 1;
  return pad;
}

// SVG y-axis points down, so world (x, y) renders as (x, -y).
std::string svg_xy(const Q& x, const Q& y) { return decimal12(x) + "," + decimal12(-y); }

std::string svg_open(const Box& b, const std::string& comment) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!comment.empty()) out += "<!-- " + comment + " -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         decimal12(b.x0) + " " + decimal12(-b.y1) + " " + decimal12(b.x1 - b.x0) + " " +
         decimal12(b.y1 - b.y0) + "\">\n";
  return out;
}

void svg_sites(std::string& out, const std::vector<Vec>& sites, const Q& r) {
  for (const Vec& s : sites)
    out += "  <circle cx=\"" + decimal12(s[0]) + "\" cy=\"" + decimal12(-s[1]) + "\" r=\"" +
           decimal12(r) + "\" fill=\"black\"/>\n";
}

// Vertices of a full-dimensional planar convex polygon in counterclockwise
// order around the centroid: exact angular comparison by half-plane then
// cross product.
std::vector<Vec> polygon_order(std::vector<Vec> pts) {
  Vec c = zero_vec(2);
  for (const Vec& p : pts) c = add(c, p);
  Q inv(1, static_cast<unsigned long>(pts.size()));
  c = scale(inv, c);
  auto half = [](const Vec& u) { return sign(u[1]) < 0 || (sign(u[1]) == 0 && sign(u[0]) < 0); };
  std::sort(pts.begin(), pts.end(), [&](const Vec& p, const Vec& q) {
    Vec u = sub(p, c), v = sub(q, c);
    bool hu = half(u), hv = half(v);
    if (hu != hv) return hv;
    Q cross = u[0] * v[1] - u[1] * v[0];
    int s = sign(cross);
    if (s != 0) return s > 0;
    return norm2(u) < norm2(v);
  });
  return pts;
}

}  // namespace

std::string svg_delaunay(const DelaunayComplex& D) {
  if (D.dim != 2) throw std::runtime_error("svg_delaunay: dimension must be 2");
  Q pad = box_pad(D.sites);
  Box b = bounding_box(D.sites, pad / 10);
  std::string out = svg_open(b, "");
  Q w = pad / 200;
  for (const auto& f : D.complex.faces) {
    if (f.size() != 2) continue;
    const Vec& p = D.sites[f[0]];
    const Vec& q = D.sites[f[1]];
    out += "  <line x1=\"" + decimal12(p[0]) + "\" y1=\"" + decimal12(-p[1]) + "\" x2=\"" +
           decimal12(q[0]) + "\" y2=\"" + decimal12(-q[1]) + "\" stroke=\"black\" stroke-width=\"" +
           decimal12(w) + "\"/>\n";
  }
  svg_sites(out, D.sites, pad / 60);
  out += "</svg>\n";
  return out;
}

std::string svg_voronoi(const VoronoiDiagram& V) {
  if (V.dim != 2) throw std::runtime_error("svg_voronoi: dimension must be 2");
  Q pad = box_pad(V.sites);
  Box b = bounding_box(V.sites, pad);
  std::string comment = "clip box: [" + to_string(b.x0) + ", " + to_string(b.x1) + "] x [" +
                        to_string(b.y0) + ", " + to_string(b.y1) + "]";
  std::string out = svg_open(b, comment);
  Q w = pad / 100;
  for (const HRep& cell : V.cells) {
    HRep clipped = cell;
    clipped.ineqs.push_back({-b.x0, {Q(1), Q(0)}});
    clipped.ineqs.push_back({b.x1, {Q(-1), Q(0)}});
    clipped.ineqs.push_back({-b.y0, {Q(0), Q(1)}});
    clipped.ineqs.push_back({b.y1, {Q(0), Q(-1)}});
    std::vector<Vec> corners = polygon_order(h_to_v(clipped).points);
    out += "  <polygon points=\"";
    for (size_t i = 0; i < corners.size(); ++i) {
      if (i) out += ' ';
      out += svg_xy(corners[i][0], corners[i][1]);
    }
    out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + decimal12(w) + "\"/>\n";
  }
  svg_sites(out, V.sites, pad / 50);
  out += "</svg>\n";
  return out;
}

std::string off_delaunay(const DelaunayComplex& D) {
  if (D.dim != 2 && D.dim != 3) throw std::runtime_error("off_delaunay: dimension must be 2 or 3");
  std::vector<std::vector<int>> tris;
  for (const auto& f : D.complex.faces)
    if (f.size() == 3) tris.push_back(f);
  std::string out = "OFF\n";
  out += std::to_string(D.sites.size()) + " " + std::to_string(tris.size()) + " 0\n";
  for (const Vec& s : D.sites) {
    out += decimal12(s[0]) + " " + decimal12(s[1]) + " ";
    out += (D.dim == 3 ? decimal12(s[2]) : decimal12(0));
    out += '\n';
  }
  for (const auto& t : tris)
    out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
           std::to_string(t[2]) + "\n";
  return out;
}

}  // namespace ptk
