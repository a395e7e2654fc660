#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptk/classics.hpp"
#include "ptk/complexes.hpp"
#include "ptk/cyclic.hpp"
#include "ptk/delvor.hpp"
#include "ptk/duality.hpp"
#include "ptk/io.hpp"
#include "ptk/polyhedron.hpp"

namespace {

using namespace ptk;

std::string join_q(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

std::string join_i(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_l(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

const char* yn(bool b) { return b ? "true" : "false"; }

Vec parse_vec_arg(const std::string& s) {
  std::string cleaned = s;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  Vec v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  if (v.empty()) throw std::runtime_error("empty coordinate list '" + s + "'");
  return v;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

// Both representations, canonical: irredundant H, vertex/extreme-ray V.
struct Poly {
  HRep h;
  VRep v;
};

Poly load_polytope(const std::string& path) {
  std::string kind = sniff_format(path);
  Poly p;
  if (kind == "H") {
    p.h = read_hrep(path);
    p.v = h_to_v(p.h);
    if (p.v.empty()) throw std::runtime_error(path + ": the polyhedron is empty");
    p.h = make_irredundant(p.h);
  } else if (kind == "V") {
    VRep raw = read_vrep(path);
    if (raw.empty()) throw std::runtime_error(path + ": the polyhedron is empty");
    p.v = canonicalize_vrep(raw);
    p.h = v_to_h(p.v);
  } else {
    throw std::runtime_error(path + ": expected an H- or V-file");
  }
  return p;
}

Poly load_bounded(const std::string& path) {
  Poly p = load_polytope(path);
  if (!p.v.rays.empty()) throw std::runtime_error(path + ": input must be a polytope (no rays)");
  return p;
}

Quadric load_quadric(const std::string& which, int d) {
  if (which == "sphere") return sphere_quadric(d);
  if (which == "paraboloid") return paraboloid_quadric(d);
  Quadric q = read_quadric(which);
  if (q.dim != d)
    throw std::runtime_error(which + ": quadric dimension " + std::to_string(q.dim) +
                             " does not match the polytope dimension " + std::to_string(d));
  return q;
}

// Deterministic point strictly outside P and off every facet hyperplane:
// walk from the vertex centroid out through the first facet, nudging the
// step until no hyperplane contains it.
Vec choose_outside_point(const HRep& H, const VRep& V) {
  Vec y = zero_vec(V.dim);
  for (const Vec& p : V.points) y = add(y, p);
  y = scale(Q(1, static_cast<unsigned long>(V.points.size())), y);
  const HRow& r = H.ineqs.front();
  Q slack = r.b + dot(r.a, y);
  Q step = (slack + 1) / norm2(r.a);
  for (int tries = 0; tries < 1000; ++tries) {
    Vec x = sub(y, scale(step, r.a));
    bool on_hyperplane = false;
    for (const HRow& row : H.ineqs)
      if (sign(row.b + dot(row.a, x)) == 0) {
        on_hyperplane = true;
        break;
      }
    if (!on_hyperplane) return x;
    step += Q(1, static_cast<unsigned long>(tries + 2));
  }
  throw std::runtime_error("shell: no viewpoint off every facet hyperplane found");
}

int run_convert(const std::string& in, const std::string& to, const std::string& out) {
  std::string kind = sniff_format(in);
  std::string content;
  if (kind == "H") {
    HRep P = read_hrep(in);
    content = (to == "h") ? write_hrep(make_irredundant(P)) : write_vrep(h_to_v(P));
  } else if (kind == "V") {
    VRep P = read_vrep(in);
    content = (to == "v") ? write_vrep(canonicalize_vrep(P)) : write_hrep(v_to_h(P));
  } else {
    throw std::runtime_error(in + ": expected an H- or V-file");
  }
  emit(out, content);
  return 0;
}

int run_dual(const std::string& in, const std::string& quadric, const std::string& out) {
  Poly p = load_polytope(in);
  Quadric q = load_quadric(quadric, p.v.dim);
  emit(out, write_hrep(quadric_dual_affine(p.v, q)));
  return 0;
}

int run_fvector(const std::string& in) {
  if (sniff_format(in) == "SC") {
    SimplicialComplex K = read_complex(in);
    std::vector<long> f = f_vector(K);
    std::cout << "dim=" << K.dim() << "\n";
    std::cout << "f=" << join_l(std::vector<long>(f.begin() + 1, f.end())) << "\n";
    return 0;
  }
  Poly p = load_bounded(in);
  FaceLattice L = face_lattice(p.h, p.v);
  std::vector<long> f = f_vector_of_lattice(L);
  f.pop_back();  // drop the top face
  std::cout << "dim=" << L.dim << "\n";
  std::cout << "f=" << join_l(f) << "\n";
  return 0;
}

int run_hvector(const std::string& in) {
  SimplicialComplex K;
  if (sniff_format(in) == "SC") {
    K = read_complex(in);
  } else {
    Poly p = load_bounded(in);
    K = complex_from_lattice(face_lattice(p.h, p.v));
  }
  FHVectors fh = fh_vectors(K);
  std::cout << "f=" << join_l(fh.f) << "\n";
  std::cout << "h=" << join_l(fh.h) << "\n";
  return 0;
}

int run_euler(const std::string& in) {
  Poly p = load_bounded(in);
  FaceLattice L = face_lattice(p.h, p.v);
  bool ok = euler_polytope_check(L);
  std::cout << "chi(boundary)=" << euler_characteristic_boundary(L) << (ok ? " OK" : " FAIL")
            << "\n";
  return ok ? 0 : 1;
}

int run_ds_check(const std::string& in) {
  Poly p = load_bounded(in);
  DSReport rep = dehn_sommerville_check(face_lattice(p.h, p.v));
  std::cout << "f=" << join_l(rep.f) << "\n";
  std::cout << "h=" << join_l(rep.h) << "\n";
  std::cout << "ok=" << yn(rep.ok) << "\n";
  return rep.ok ? 0 : 1;
}

int run_shell(const std::string& in, int seed) {
  Poly p = load_bounded(in);
  Vec x = choose_outside_point(p.h, p.v);
  Shelling sh = line_shelling(p.h, p.v, x, seed);
  std::cout << "viewpoint=" << join_q(x) << "\n";
  std::cout << "facets=" << sh.facet_order.size() << "\n";
  for (size_t j = 0; j < sh.facet_order.size(); ++j) {
    std::cout << "F" << (j + 1) << "=" << join_i(sh.facet_order[j]) << "\n";
    std::cout << "R" << (j + 1) << "=" << join_i(sh.restrictions[j]) << "\n";
  }
  SimplicialComplex K =
      make_complex(static_cast<int>(p.v.points.size()), sh.facet_order);
  std::cout << "h=" << join_l(h_from_shelling(K, sh.facet_order)) << "\n";
  return 0;
}

int run_cyclic(int d, int n, bool count_only, bool facets_only, const std::string& out) {
  if (count_only) {
    std::cout << cyclic_facet_count(d, n) << "\n";
    return 0;
  }
  if (facets_only) {
    for (const auto& S : gale_facets(d, n)) std::cout << join_i(S) << "\n";
    return 0;
  }
  emit(out, write_vrep(cyclic_polytope(integer_cyclic_spec(d, n))));
  return 0;
}

int run_bound_check(const std::string& in, bool upper) {
  Poly p = load_bounded(in);
  FaceLattice L = face_lattice(p.h, p.v);
  BoundCheck rep = upper ? upper_bound_check(L) : lower_bound_check(L);
  std::cout << "f=" << join_l(rep.f) << "\n";
  std::cout << "h=" << join_l(rep.h) << "\n";
  std::cout << "bound=" << join_l(rep.bound) << "\n";
  std::cout << "ok=" << yn(rep.ok) << "\n";
  return rep.ok ? 0 : 1;
}

int run_caratheodory(const std::string& in, const std::string& point) {
  std::vector<Vec> pts = read_points(in);
  if (pts.empty()) throw std::runtime_error(in + ": no points");
  Vec z;
  if (point.empty()) {
    z = zero_vec(static_cast<int>(pts[0].size()));
    for (const Vec& p : pts) z = add(z, p);
    z = scale(Q(1, static_cast<unsigned long>(pts.size())), z);
  } else {
    z = parse_vec_arg(point);
  }
  FarkasCertificate cert = farkas_i(pts, z);
  if (!cert.primal) {
    std::cout << "inside=false\n";
    std::cout << "c=" << join_q(cert.c) << "\n";
    std::cout << "alpha=" << to_string(cert.alpha) << "\n";
    return 1;
  }
  ConvexCombination cc{pts, std::vector<Q>(cert.x.begin(), cert.x.end())};
  ConvexCombination reduced = caratheodory_reduce(z, cc);
  std::vector<bool> used(pts.size(), false);
  std::vector<int> support;
  for (const Vec& q : reduced.points)
    for (size_t i = 0; i < pts.size(); ++i)
      if (!used[i] && pts[i] == q) {
        used[i] = true;
        support.push_back(static_cast<int>(i));
        break;
      }
  std::cout << "inside=true\n";
  std::cout << "point=" << join_q(z) << "\n";
  std::cout << "support=" << join_i(support) << "\n";
  std::cout << "weights=" << join_q(reduced.weights) << "\n";
  return 0;
}

int run_radon(const std::string& in) {
  RadonPartition rp = radon_partition(read_points(in));
  std::cout << "part1=" << join_i(rp.part1) << "\n";
  std::cout << "part2=" << join_i(rp.part2) << "\n";
  std::cout << "witness=" << join_q(rp.witness) << "\n";
  return 0;
}

int run_helly(const std::vector<std::string>& files) {
  std::vector<HRep> family;
  for (const std::string& f : files) family.push_back(read_hrep(f));
  int m = family[0].dim;
  for (const HRep& P : family)
    if (P.dim != m) throw std::runtime_error("helly: members have mixed dimensions");
  HellyReport rep = helly_check(family, m);
  std::cout << "hypothesis_holds=" << yn(rep.hypothesis_holds) << "\n";
  if (!rep.hypothesis_holds) {
    std::cout << "failing_subset=" << join_i(rep.failing_subset) << "\n";
    return 1;
  }
  std::cout << "intersection_nonempty=" << yn(rep.intersection_nonempty) << "\n";
  std::cout << "witness=" << join_q(rep.witness) << "\n";
  return 0;
}

int run_farkas(const std::string& version, const std::string& points_file,
               const std::string& rays_file, const std::string& point) {
  std::vector<Vec> pts = read_points(points_file);
  Vec z = parse_vec_arg(point);
  std::vector<Vec> rays;
  if (!rays_file.empty()) rays = read_points(rays_file);
  FarkasCertificate cert;
  if (version == "I")
    cert = farkas_i(pts, z);
  else if (version == "II")
    cert = farkas_ii(pts, z);
  else if (version == "III")
    cert = farkas_iii(pts, z);
  else
    cert = farkas_iv(pts, rays, z);
  std::cout << "version=" << version << "\n";
  std::cout << "primal=" << yn(cert.primal) << "\n";
  if (cert.primal) {
    std::cout << "x=" << join_q(cert.x) << "\n";
    if (version == "IV") std::cout << "x_rays=" << join_q(cert.x_rays) << "\n";
  } else {
    std::cout << "c=" << join_q(cert.c) << "\n";
    if (version == "I" || version == "IV")
      std::cout << "alpha=" << to_string(cert.alpha) << "\n";
  }
  std::cout << "check=" << yn(farkas_certificate_checks(cert, pts, rays, z)) << "\n";
  return 0;
}

int run_centerpoint(const std::string& in, bool verify) {
  std::vector<Vec> S = read_points(in);
  Vec c = centerpoint(S);
  std::cout << "centerpoint=" << join_q(c) << "\n";
  if (verify) {
    bool ok = verify_centerpoint(c, S);
    std::cout << "verified=" << yn(ok) << "\n";
    if (!ok) return 1;
  }
  return 0;
}

int run_delaunay(const std::string& in, const std::string& method, bool allow_degenerate,
                 const std::string& out, const std::string& svg, const std::string& off) {
  std::vector<Vec> sites = read_points(in);
  DelaunayComplex D;
  int rc = 0;
  if (method == "both") {
    DelaunayComplex Dp = delaunay_paraboloid(sites, allow_degenerate);
    DelaunayComplex Ds = delaunay_sphere(sites, allow_degenerate);
    bool agree = Dp.cells == Ds.cells;
    std::cout << "agree=" << yn(agree) << "\n";
    if (!agree) rc = 1;
    D = Dp;
  } else if (method == "sphere") {
    D = delaunay_sphere(sites, allow_degenerate);
  } else {
    D = delaunay_paraboloid(sites, allow_degenerate);
  }
  std::cout << "cells=" << D.cells.size() << "\n";
  for (const auto& cell : D.cells) std::cout << "cell=" << join_i(cell) << "\n";
  if (!out.empty()) write_file(out, write_complex(D.complex));
  if (!svg.empty()) write_file(svg, svg_delaunay(D));
  if (!off.empty()) write_file(off, off_delaunay(D));
  return rc;
}

int run_voronoi(const std::string& in, bool dual_check, const std::string& outdir,
                const std::string& svg) {
  std::vector<Vec> sites = read_points(in);
  VoronoiDiagram V = voronoi_diagram(sites);
  std::cout << "sites=" << V.sites.size() << "\n";
  for (size_t i = 0; i < V.cells.size(); ++i)
    std::cout << "cell" << i << "_ineqs=" << V.cells[i].ineqs.size() << "\n";
  int rc = 0;
  if (dual_check) {
    DualityReport rep = voronoi_from_delaunay_duality(sites);
    std::cout << "cells_agree=" << yn(rep.cells_agree) << "\n";
    std::cout << "adjacency_ok=" << yn(rep.adjacency_ok) << "\n";
    for (int i : rep.mismatched_cells) std::cout << "mismatched_cell=" << i << "\n";
    for (auto [i, j] : rep.adjacency_mismatches)
      std::cout << "adjacency_mismatch=" << i << " " << j << "\n";
    if (!rep.cells_agree || !rep.adjacency_ok) rc = 1;
  }
  if (!outdir.empty()) {
    std::filesystem::create_directories(outdir);
    for (size_t i = 0; i < V.cells.size(); ++i)
      write_file(outdir + "/cell_" + std::to_string(i) + ".ine", write_hrep(V.cells[i]));
  }
  if (!svg.empty()) write_file(svg, svg_voronoi(V));
  return rc;
}

int run_check_commute(const std::string& in, const std::string& quadric) {
  Poly p = load_polytope(in);
  Quadric q = load_quadric(quadric, p.v.dim);
  bool ok = check_completion_duality_commutes(p.v, q);
  std::cout << "commutes=" << yn(ok) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational polytope toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  std::string in, out, to, quadric = "sphere", point, rays_file, version = "I";
  std::string method = "paraboloid", svg, off, outdir;
  std::vector<std::string> files;
  int seed = 0, d = 2, n = 3;
  bool count_only = false, facets_only = false, allow_degenerate = false;
  bool verify = false, dual_check = false;

  auto* convert = app.add_subcommand("convert", "convert between H- and V-representations");
  convert->add_option("input", in)->required();
  convert->add_option("--to", to, "target representation")
      ->required()
      ->check(CLI::IsMember({"h", "v"}));
  convert->add_option("-o,--output", out, "output file (default stdout)");
  convert->callback([&] { rc = run_convert(in, to, out); });

  auto* dual = app.add_subcommand("dual", "polar dual w.r.t. a nondegenerate quadric");
  dual->add_option("input", in)->required();
  dual->add_option("--quadric", quadric, "sphere, paraboloid, or a Q-file");
  dual->add_option("-o,--output", out);
  dual->callback([&] { rc = run_dual(in, quadric, out); });

  auto* fvec = app.add_subcommand("fvector", "face counts of a polytope or complex");
  fvec->add_option("input", in)->required();
  fvec->callback([&] { rc = run_fvector(in); });

  auto* hvec = app.add_subcommand("hvector", "f- and h-vector of a pure simplicial complex");
  hvec->add_option("input", in)->required();
  hvec->callback([&] { rc = run_hvector(in); });

  auto* euler = app.add_subcommand("euler", "Euler characteristic check of a polytope boundary");
  euler->add_option("input", in)->required();
  euler->callback([&] { rc = run_euler(in); });

  auto* ds = app.add_subcommand("ds-check", "Dehn-Sommerville palindromy of a simplicial polytope");
  ds->add_option("input", in)->required();
  ds->callback([&] { rc = run_ds_check(in); });

  auto* shell = app.add_subcommand("shell", "line shelling of a polytope boundary");
  shell->add_option("input", in)->required();
  shell->add_option("--seed", seed, "perturbation search seed");
  shell->callback([&] { rc = run_shell(in, seed); });

  auto* cyclic = app.add_subcommand("cyclic", "cyclic polytope C_d(n) tools");
  cyclic->add_option("-d", d, "dimension")->required();
  cyclic->add_option("-n", n, "number of vertices")->required();
  cyclic->add_flag("--count", count_only, "print the facet count only");
  cyclic->add_flag("--facets", facets_only, "print the evenness facet sets");
  cyclic->add_option("-o,--output", out);
  cyclic->callback([&] { rc = run_cyclic(d, n, count_only, facets_only, out); });

  auto* ubt = app.add_subcommand("ubt-check", "upper bound theorem check");
  ubt->add_option("input", in)->required();
  ubt->callback([&] { rc = run_bound_check(in, true); });

  auto* lbt = app.add_subcommand("lbt-check", "lower bound theorem check");
  lbt->add_option("input", in)->required();
  lbt->callback([&] { rc = run_bound_check(in, false); });

  auto* cara = app.add_subcommand("caratheodory", "reduce a convex combination to small support");
  cara->add_option("points", in)->required();
  cara->add_option("--point", point, "target point (default: centroid)");
  cara->callback([&] { rc = run_caratheodory(in, point); });

  auto* radon = app.add_subcommand("radon", "Radon partition of d+2 or more points");
  radon->add_option("points", in)->required();
  radon->callback([&] { rc = run_radon(in); });

  auto* helly = app.add_subcommand("helly", "Helly intersection check of a family of H-files");
  helly->add_option("files", files, "H-files of the family")->required()->expected(-1);
  helly->callback([&] { rc = run_helly(files); });

  auto* farkas = app.add_subcommand("farkas", "feasibility with certificate, four variants");
  farkas->add_option("points", in)->required();
  farkas->add_option("--version", version)->check(CLI::IsMember({"I", "II", "III", "IV"}));
  farkas->add_option("--rays", rays_file, "ray points file (version IV)");
  farkas->add_option("--point", point, "target vector z")->required();
  farkas->callback([&] { rc = run_farkas(version, in, rays_file, point); });

  auto* center = app.add_subcommand("centerpoint", "exact centerpoint of a planar point set");
  center->add_option("points", in)->required();
  center->add_flag("--verify", verify, "check the depth bound over all spanned halfspaces");
  center->callback([&] { rc = run_centerpoint(in, verify); });

  auto* delaunay = app.add_subcommand("delaunay", "Delaunay complex of a site set");
  delaunay->add_option("points", in)->required();
  delaunay->add_option("--method", method)->check(CLI::IsMember({"paraboloid", "sphere", "both"}));
  delaunay->add_flag("--allow-degenerate", allow_degenerate,
                     "accept cospherical sites (polyhedral cells)");
  delaunay->add_option("-o,--output", out, "write the complex as an SC-file");
  delaunay->add_option("--svg", svg, "write an SVG figure (d = 2)");
  delaunay->add_option("--off", off, "write an OFF file (d <= 3)");
  delaunay->callback([&] { rc = run_delaunay(in, method, allow_degenerate, out, svg, off); });

  auto* voronoi = app.add_subcommand("voronoi", "Voronoi diagram of a site set");
  voronoi->add_option("points", in)->required();
  voronoi->add_flag("--dual-check", dual_check, "compare against the Delaunay tangent route");
  voronoi->add_option("--outdir", outdir, "write one H-file per cell");
  voronoi->add_option("--svg", svg, "write an SVG figure (d = 2)");
  voronoi->callback([&] { rc = run_voronoi(in, dual_check, outdir, svg); });

  auto* commute = app.add_subcommand("check-commute",
                                     "projective completion commutes with quadric duality");
  commute->add_option("input", in)->required();
  commute->add_option("--quadric", quadric, "sphere, paraboloid, or a Q-file");
  commute->callback([&] { rc = run_check_commute(in, quadric); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ptk::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
