#include "cmcstab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace cmcstab {

namespace {

constexpr double kPi = std::numbers::pi;

J2 seed_u(double u) {
  J2 j;
  j.a = J1::seed(u, 0);
  j.d[0] = J1(1.0);
  return j;
}
J2 seed_v(double v) {
  J2 j;
  j.a = J1::seed(v, 1);
  j.d[1] = J1(1.0);
  return j;
}

struct PatchJets {
  Vec3d p;
  Vec3d t[2];
  Vec3d dd[2][2];
};

PatchJets extract(const V3<J2>& r) {
  PatchJets pj;
  for (int i = 0; i < 3; ++i) {
    pj.p[i] = r[i].a.a;
    pj.t[0][i] = r[i].d[0].a;
    pj.t[1][i] = r[i].d[1].a;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) pj.dd[a][b][i] = r[i].d[a].d[b];
  }
  return pj;
}

template <class T>
V3<T> normalize3(const V3<T>& y) {
  T inv = 1.0 / sqrt(y.x * y.x + y.y * y.y + y.z * y.z);
  return {y.x * inv, y.y * inv, y.z * inv};
}

ShapeData shape_from_jets(const AmbientSpace& sp, const PatchJets& pj) {
  if (!in_chart(sp, pj.p)) throw ChartGuardViolation("surface point outside chart guard");

  Mat3d g = metric_t(sp, pj.p);
  ShapeData sd;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) sd.first[a][b] = inner(g, pj.t[a], pj.t[b]);

  double det1 = sd.first[0][0] * sd.first[1][1] - sd.first[0][1] * sd.first[1][0];
  double scale = sd.first[0][0] + sd.first[1][1];
  if (!(det1 > 1e-14 * scale * scale))
    throw DegenerateImmersion("tangent vectors linearly dependent");

  // unit normal: metric vector product of the tangents
  double vol = std::sqrt(g.det());
  Vec3d cov = vol * cross(pj.t[0], pj.t[1]);
  Vec3d n = g.inverse() * cov;
  n = (1.0 / std::sqrt(inner(g, n, n))) * n;
  sd.normal = n;

  auto gamma = christoffel_t(sp, pj.p);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Vec3d cd = pj.dd[a][b];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) cd[i] += gamma[i][j][k] * pj.t[a][j] * pj.t[b][k];
      sd.second[a][b] = inner(g, cd, n);
    }

  double inv_det = 1.0 / det1;
  double i00 = sd.first[1][1] * inv_det, i01 = -sd.first[0][1] * inv_det,
         i11 = sd.first[0][0] * inv_det;
  sd.shape[0][0] = i00 * sd.second[0][0] + i01 * sd.second[1][0];
  sd.shape[0][1] = i00 * sd.second[0][1] + i01 * sd.second[1][1];
  sd.shape[1][0] = i01 * sd.second[0][0] + i11 * sd.second[1][0];
  sd.shape[1][1] = i01 * sd.second[0][1] + i11 * sd.second[1][1];

  sd.H = 0.5 * (sd.shape[0][0] + sd.shape[1][1]);
  sd.A_norm2 = sd.shape[0][0] * sd.shape[0][0] + sd.shape[1][1] * sd.shape[1][1] +
               2.0 * sd.shape[0][1] * sd.shape[1][0];
  sd.phi_norm2 = sd.A_norm2 - 2.0 * sd.H * sd.H;

  double ric, ksigma;
  if (sp.kind == SpaceKind::SpaceForm) {
    sd.nxi = 0.0;
    ric = 2.0 * sp.c;
    ksigma = sp.c;
  } else {
    sd.nxi = inner(g, n, killing_chart_direction());
    double t2 = sp.tau * sp.tau;
    ric = sp.kappa - 2.0 * t2 + sd.nxi * sd.nxi * (4.0 * t2 - sp.kappa);
    ksigma = t2 + sd.nxi * sd.nxi * (sp.kappa - 4.0 * t2);
  }
  sd.K = 2.0 * sd.H * sd.H + ksigma - 0.5 * sd.A_norm2;
  sd.q = sd.A_norm2 + ric;
  return sd;
}

VertexGeometry to_vertex(const ShapeData& sd) {
  return {sd.normal, sd.H, sd.A_norm2, sd.phi_norm2, sd.nxi, sd.K, sd.q};
}

// 4-point Gauss-Legendre on [0,1]
constexpr double kGx[4] = {0.06943184420297371, 0.33000947820757187, 0.66999052179242813,
                           0.93056815579702629};
constexpr double kGw[4] = {0.17392742256872693, 0.32607257743127307, 0.32607257743127307,
                           0.17392742256872693};

double speed_at(const AmbientSpace& sp, const V3<J2>& r) {
  Vec3d p, d;
  for (int i = 0; i < 3; ++i) {
    p[i] = r[i].a.a;
    d[i] = r[i].d[0].a;
  }
  Mat3d g = metric_t(sp, p);
  return std::sqrt(inner(g, d, d));
}

// length of the parameter-line segment (u0,v0) -> (u0+du, v0+dv) on the surface
double edge_length_torus(const Immersion& imm, double u0, double v0, double du, double dv) {
  double len = 0.0;
  for (int q = 0; q < 4; ++q) {
    J2 t;
    t.a = J1::seed(kGx[q], 0);
    t.d[0] = J1(1.0);
    V3<J2> r = imm.eval(J2(u0) + t * du, J2(v0) + t * dv);
    len += kGw[q] * speed_at(imm.space, r);
  }
  return len;
}

// length of the great-circle parameter arc Ya -> Yb on the surface
double edge_length_sphere(const SphereImmersion& imm, const Vec3d& Ya, const Vec3d& Yb) {
  Vec3d d = Yb - Ya;
  double len = 0.0;
  for (int q = 0; q < 4; ++q) {
    J2 t;
    t.a = J1::seed(kGx[q], 0);
    t.d[0] = J1(1.0);
    V3<J2> y{J2(Ya.x) + t * d.x, J2(Ya.y) + t * d.y, J2(Ya.z) + t * d.z};
    len += kGw[q] * speed_at(imm.space, imm.eval(y));
  }
  return len;
}

double heron_area(double a, double b, double c) {
  // Kahan's numerically stable form
  double x[3] = {a, b, c};
  std::sort(x, x + 3);
  double lo = x[0], mid = x[1], hi = x[2];
  double t = (hi + (mid + lo)) * (lo - (hi - mid)) * (lo + (hi - mid)) * (hi + (mid - lo));
  if (!(t > 0.0)) return -1.0;
  return 0.25 * std::sqrt(t);
}

void finalize_mesh(GeometryMesh& mesh) {
  // closedness + consistent orientation: every directed edge once, with its
  // reverse present exactly once
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      auto key = std::make_pair(t[k], t[(k + 1) % 3]);
      if (++directed[key] > 1) throw NonClosedMesh("duplicated directed edge");
    }
  for (const auto& [key, cnt] : directed)
    if (!directed.count({key.second, key.first}))
      throw NonClosedMesh("boundary or orientation-inconsistent edge");

  int V = mesh.vertex_count();
  int F = mesh.triangle_count();
  int E = static_cast<int>(directed.size()) / 2;
  mesh.euler_characteristic = V - E + F;
  if (mesh.euler_characteristic % 2 != 0) throw NonClosedMesh("odd Euler characteristic");
  mesh.genus = 1 - mesh.euler_characteristic / 2;
  if (mesh.genus < 0) throw NonClosedMesh("negative genus");

  mesh.tri_areas.resize(mesh.triangles.size());
  mesh.area = 0.0;
  for (size_t f = 0; f < mesh.triangles.size(); ++f) {
    const auto& l = mesh.edge_lengths[f];
    double a = heron_area(l[0], l[1], l[2]);
    if (a <= 0.0) throw DegenerateImmersion("degenerate triangle in tessellation");
    mesh.tri_areas[f] = a;
    mesh.area += a;
  }
}

}  // namespace

Vec3d Immersion::position(double u, double v) const {
  V3<J2> r = eval(J2(u), J2(v));
  return {r.x.a.a, r.y.a.a, r.z.a.a};
}

Vec3d SphereImmersion::position(const Vec3d& Y) const {
  V3<J2> r = eval({J2(Y.x), J2(Y.y), J2(Y.z)});
  return {r.x.a.a, r.y.a.a, r.z.a.a};
}

ShapeData shape_operator(const Immersion& imm, double u, double v) {
  return shape_from_jets(imm.space, extract(imm.eval(seed_u(u), seed_v(v))));
}

ShapeData shape_operator(const SphereImmersion& imm, const Vec3d& Y) {
  Vec3d yn = normalized(Y);
  // deterministic tangent frame, right-handed with yn
  Vec3d ref = std::abs(yn.x) < 0.8 ? Vec3d{1, 0, 0} : Vec3d{0, 1, 0};
  Vec3d e1 = normalized(cross(yn, ref));
  Vec3d e2 = cross(yn, e1);
  J2 u = seed_u(0.0), v = seed_v(0.0);
  V3<J2> y{J2(yn.x) + u * e1.x + v * e2.x, J2(yn.y) + u * e1.y + v * e2.y,
           J2(yn.z) + u * e1.z + v * e2.z};
  return shape_from_jets(imm.space, extract(imm.eval(y)));
}

double gauss_curvature(const Immersion& imm, double u, double v) {
  return shape_operator(imm, u, v).K;
}

GeometryMesh tessellate(const Immersion& imm, int nu, int nv) {
  if (nu < 8 || nv < 8) throw Error("tessellate: nu, nv must be >= 8");

  GeometryMesh mesh;
  mesh.space = imm.space;
  double du = imm.u_max / nu, dv = imm.v_max / nv;

  mesh.positions.resize(static_cast<size_t>(nu) * nv);
  mesh.uv.resize(mesh.positions.size());
  mesh.vertex.resize(mesh.positions.size());
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      int id = i * nv + j;
      double u = i * du, v = j * dv;
      mesh.uv[id] = {u, v};
      ShapeData sd = shape_from_jets(imm.space, extract(imm.eval(seed_u(u), seed_v(v))));
      Vec3d p = imm.position(u, v);
      mesh.positions[id] = p;
      mesh.vertex[id] = to_vertex(sd);
    }

  auto vid = [&](int i, int j) { return (i % nu) * nv + (j % nv); };
  // unwrapped lattice edge (i,j)->(i+di,j+dj); lengths cached per vertex pair
  std::map<std::pair<int, int>, double> edge_cache;
  auto elen = [&](int i, int j, int di, int dj) {
    int va = vid(i, j), vb = vid(i + di, j + dj);
    std::pair<int, int> key{std::min(va, vb), std::max(va, vb)};
    auto it = edge_cache.find(key);
    if (it != edge_cache.end()) return it->second;
    double len = edge_length_torus(imm, i * du, j * dv, di * du, dj * dv);
    edge_cache.emplace(key, len);
    return len;
  };

  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      // quad split along the (i,j)-(i+1,j+1) diagonal
      double d = elen(i, j, 1, 1);
      double b = elen(i, j, 1, 0), r = elen(i + 1, j, 0, 1);
      double l = elen(i, j, 0, 1), tp = elen(i, j + 1, 1, 0);
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      mesh.edge_lengths.push_back({r, d, b});
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
      mesh.edge_lengths.push_back({tp, l, d});
    }

  finalize_mesh(mesh);
  return mesh;
}

namespace {

struct IcoMesh {
  std::vector<Vec3d> verts;  // unit
  std::vector<std::array<int, 3>> tris;  // outward-oriented
};

IcoMesh icosphere(int level) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  IcoMesh m;
  auto add = [&](double a, double b, double c) { m.verts.push_back(normalized({a, b, c})); };
  add(-1, phi, 0); add(1, phi, 0); add(-1, -phi, 0); add(1, -phi, 0);
  add(0, -1, phi); add(0, 1, phi); add(0, -1, -phi); add(0, 1, -phi);
  add(phi, 0, -1); add(phi, 0, 1); add(-phi, 0, -1); add(-phi, 0, 1);
  m.tris = {{0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
            {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
            {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
            {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      int id = static_cast<int>(m.verts.size());
      m.verts.push_back(normalized(m.verts[a] + m.verts[b]));
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(m.tris.size() * 4);
    for (auto& t : m.tris) {
      int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    m.tris = std::move(next);
  }
  return m;
}

// fixed rotation keeping subdivision vertices away from the parameter-sphere
// direction excluded by the chart (0,0,-1)
Mat3d ico_rotation() {
  double a = 0.4240927, b = 0.7153214;
  double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
  Mat3d rx{}, rz{};
  rx[0][0] = 1; rx[1][1] = ca; rx[1][2] = -sa; rx[2][1] = sa; rx[2][2] = ca;
  rz[0][0] = cb; rz[0][1] = -sb; rz[1][0] = sb; rz[1][1] = cb; rz[2][2] = 1;
  Mat3d r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = 0;
      for (int k = 0; k < 3; ++k) r[i][j] += rx[i][k] * rz[k][j];
    }
  return r;
}

}  // namespace

GeometryMesh tessellate_sphere(const SphereImmersion& imm, int level) {
  if (level < 1 || level > 7) throw Error("tessellate_sphere: level must be in [1,7]");
  IcoMesh ico = icosphere(level);
  Mat3d rot = ico_rotation();
  for (auto& v : ico.verts) v = rot * v;

  GeometryMesh mesh;
  mesh.space = imm.space;
  mesh.directions = ico.verts;
  mesh.triangles = ico.tris;
  mesh.positions.resize(ico.verts.size());
  mesh.vertex.resize(ico.verts.size());

  for (size_t i = 0; i < ico.verts.size(); ++i) {
    mesh.positions[i] = imm.position(ico.verts[i]);
    mesh.vertex[i] = to_vertex(shape_operator(imm, ico.verts[i]));
  }

  std::map<std::pair<int, int>, double> edge_cache;
  auto elen = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = edge_cache.find(key);
    if (it != edge_cache.end()) return it->second;
    double len = edge_length_sphere(imm, ico.verts[a], ico.verts[b]);
    edge_cache.emplace(key, len);
    return len;
  };
  mesh.edge_lengths.resize(mesh.triangles.size());
  for (size_t f = 0; f < mesh.triangles.size(); ++f) {
    auto& t = mesh.triangles[f];
    mesh.edge_lengths[f] = {elen(t[1], t[2]), elen(t[2], t[0]), elen(t[0], t[1])};
  }

  finalize_mesh(mesh);
  return mesh;
}

AreaGenus area_and_genus(const GeometryMesh& mesh) {
  if (mesh.triangles.empty()) throw NonClosedMesh("empty mesh");
  return {mesh.area, mesh.genus};
}

double gauss_bonnet_residual(const GeometryMesh& mesh) {
  std::vector<double> varea(mesh.positions.size(), 0.0);
  for (size_t f = 0; f < mesh.triangles.size(); ++f)
    for (int k = 0; k < 3; ++k) varea[mesh.triangles[f][k]] += mesh.tri_areas[f] / 3.0;
  double total = 0.0;
  for (size_t i = 0; i < varea.size(); ++i) total += varea[i] * mesh.vertex[i].K;
  return std::abs(total - 2.0 * kPi * mesh.euler_characteristic);
}

double mesh_min_angle_deg(const GeometryMesh& mesh) {
  double worst = 180.0;
  for (const auto& l : mesh.edge_lengths)
    for (int k = 0; k < 3; ++k) {
      double a = l[k], b = l[(k + 1) % 3], c = l[(k + 2) % 3];
      double cosv = std::clamp((b * b + c * c - a * a) / (2.0 * b * c), -1.0, 1.0);
      worst = std::min(worst, std::acos(cosv) * 180.0 / kPi);
    }
  return worst;
}

CmcStats cmc_stats(const GeometryMesh& mesh) {
  double mean = 0.0;
  for (const auto& v : mesh.vertex) mean += v.H;
  mean /= mesh.vertex_count();
  double dev = 0.0, var = 0.0;
  for (const auto& v : mesh.vertex) {
    dev = std::max(dev, std::abs(v.H - mean));
    var += (v.H - mean) * (v.H - mean);
  }
  var /= std::max(1, mesh.vertex_count() - 1);
  return {mean, dev, std::sqrt(var)};
}

// --- constructors ---

namespace {

// product torus in S^3(c) through the conformal chart
struct CliffordImmersion final : Immersion {
  double cos_t, sin_t, scale;
  bool swapped;  // orientation fix so H carries the requested sign

  template <class T>
  V3<T> map(const T& u, const T& v) const {
    T x1 = cos_t * cos(u), x2 = cos_t * sin(u);
    T x3 = sin_t * cos(v), x4 = sin_t * sin(v);
    T f = scale / (1.0 + x4);
    return {x1 * f, x2 * f, x3 * f};
  }
  V3<J2> eval(const J2& u, const J2& v) const override {
    return swapped ? map(v, u) : map(u, v);
  }
};

struct HopfImmersion final : Immersion {
  double radius;
  double orient;  // +/-1, fixes sign of H = c_gamma/2

  V3<J2> eval(const J2& u, const J2& v) const override {
    // orient = -1 reverses the angular parameter, flipping the normal
    return {radius * cos(u), orient * radius * sin(u), v};
  }
};

struct SliceImmersion final : SphereImmersion {
  double scale, height;

  V3<J2> eval(const V3<J2>& Y) const override {
    V3<J2> y = normalize3(Y);
    J2 f = scale / (1.0 + y.z);
    return {y.x * f, y.y * f, J2(height)};
  }
};

struct RoundSphereImmersion final : SphereImmersion {
  double radius;
  double eps = 0.0;  // radial perturbation amplitude (stress tests)

  V3<J2> eval(const V3<J2>& Y) const override {
    V3<J2> y = normalize3(Y);
    // swap axes: inward normal orientation comes from reversing the frame
    V3<J2> yr{y.y, y.x, y.z};
    J2 r = J2(radius);
    if (eps != 0.0) r = r * (1.0 + eps * (yr.x * yr.y + 0.5 * yr.z + 0.3 * yr.y * yr.z));
    return {yr.x * r, yr.y * r, yr.z * r};
  }
};

}  // namespace

std::unique_ptr<Immersion> clifford_torus(double c, double H) {
  if (!(c > 0.0)) throw UnsupportedSpace("clifford_torus requires a spherical space form c > 0");
  double h = H / std::sqrt(c);
  double t = std::abs(h) + std::sqrt(h * h + 1.0);  // tan(theta), theta in (0, pi/2)
  double theta = std::atan(t);

  auto imm = std::make_unique<CliffordImmersion>();
  imm->space = AmbientSpace::space_form(c);
  imm->u_max = 2.0 * kPi;
  imm->v_max = 2.0 * kPi;
  imm->cos_t = std::cos(theta);
  imm->sin_t = std::sin(theta);
  imm->scale = 2.0 / std::sqrt(c);
  imm->swapped = false;

  if (H != 0.0 && shape_operator(*imm, 0.3, 0.4).H * H < 0.0) {
    // reversing the parameter order flips the normal, hence the sign of H
    imm->swapped = true;
  }
  return imm;
}

std::unique_ptr<Immersion> hopf_torus(const HopfTorusSpec& spec) {
  const AmbientSpace& sp = spec.space;
  if (sp.kind != SpaceKind::BergerSphere && sp.kind != SpaceKind::ProductS2S1)
    throw UnsupportedSpace("hopf_torus requires BergerSphere or ProductS2S1");
  sp.validate();
  double k = sp.kappa, cg = spec.c_gamma;
  // chart radius of the base circle with geodesic curvature cg: 1/a - k a/4 = cg
  double a = 2.0 * (std::sqrt(cg * cg + k) - cg) / k;

  auto imm = std::make_unique<HopfImmersion>();
  imm->space = sp;
  imm->u_max = 2.0 * kPi;
  imm->v_max = sp.kind == SpaceKind::ProductS2S1 ? sp.circle_length
                                                 : 8.0 * kPi * std::abs(sp.tau) / k;
  imm->radius = a;
  imm->orient = 1.0;
  if (shape_operator(*imm, 0.3, 0.1).H < -1e-12) imm->orient = -1.0;
  return imm;
}

std::unique_ptr<SphereImmersion> slice_sphere(const AmbientSpace& space, double t) {
  if (space.kind != SpaceKind::ProductS2R && space.kind != SpaceKind::ProductS2S1)
    throw UnsupportedSpace("slice_sphere requires ProductS2R or ProductS2S1");
  space.validate();
  auto imm = std::make_unique<SliceImmersion>();
  imm->space = space;
  imm->scale = 2.0 / std::sqrt(space.kappa);
  imm->height = t;
  return imm;
}

std::unique_ptr<SphereImmersion> round_sphere(const AmbientSpace& space, double chart_radius) {
  if (space.kind != SpaceKind::SpaceForm)
    throw UnsupportedSpace("round_sphere requires a space form");
  if (!(chart_radius > 0.0)) throw Error("round_sphere: radius must be positive");
  Vec3d probe{chart_radius, 0.0, 0.0};
  if (!in_chart(space, probe)) throw ChartGuardViolation("round_sphere radius outside chart");
  auto imm = std::make_unique<RoundSphereImmersion>();
  imm->space = space;
  imm->radius = chart_radius;
  return imm;
}

std::unique_ptr<SphereImmersion> perturbed_sphere(const AmbientSpace& space, double chart_radius,
                                                  double eps) {
  if (space.kind != SpaceKind::SpaceForm)
    throw UnsupportedSpace("perturbed_sphere requires a space form");
  Vec3d probe{chart_radius * (1.0 + std::abs(eps) * 2.0), 0.0, 0.0};
  if (!in_chart(space, probe)) throw ChartGuardViolation("perturbed_sphere outside chart");
  auto imm = std::make_unique<RoundSphereImmersion>();
  imm->space = space;
  imm->radius = chart_radius;
  imm->eps = eps;
  return imm;
}

GeometryMesh SurfaceModel::mesh(int resolution) const {
  GeometryMesh m = is_sphere() ? tessellate_sphere(*sphere, resolution)
                               : tessellate(*torus, resolution, resolution);
  if (enforce_cmc) {
    CmcStats st = cmc_stats(m);
    if (st.max_abs_dev > 1e-8 * (1.0 + std::abs(st.mean_H)))
      throw NonConstantH(name + ": mean curvature not constant, max dev " +
                         std::to_string(st.max_abs_dev));
    if (hopf_c_gamma && std::abs(2.0 * st.mean_H - *hopf_c_gamma) > 1e-6)
      throw Error(name + ": Hopf relation 2H = c_gamma violated, 2H = " +
                  std::to_string(2.0 * st.mean_H));
    if (expect_umbilic) {
      for (const auto& v : m.vertex)
        if (std::abs(v.phi_norm2) > 1e-8)
          throw Error(name + ": expected totally umbilic surface");
    }
  }
  return m;
}

SurfaceModel make_clifford_torus(double c, double H) {
  SurfaceModel sm;
  std::ostringstream os;
  os << "clifford_c" << c << "_H" << H;
  sm.name = os.str();
  sm.space = AmbientSpace::space_form(c);
  sm.torus = clifford_torus(c, H);
  return sm;
}

SurfaceModel make_hopf_torus(const HopfTorusSpec& spec) {
  SurfaceModel sm;
  std::ostringstream os;
  os << "hopf_" << to_string(spec.space.kind) << "_cg" << spec.c_gamma;
  sm.name = os.str();
  sm.space = spec.space;
  sm.torus = hopf_torus(spec);
  sm.hopf_c_gamma = spec.c_gamma;
  return sm;
}

SurfaceModel make_slice_sphere(const AmbientSpace& space, double t) {
  SurfaceModel sm;
  sm.name = std::string("slice_") + to_string(space.kind);
  sm.space = space;
  sm.sphere = slice_sphere(space, t);
  sm.expect_umbilic = true;
  return sm;
}

SurfaceModel make_round_sphere(const AmbientSpace& space, double chart_radius) {
  SurfaceModel sm;
  std::ostringstream os;
  os << "sphere_c" << space.c << "_a" << chart_radius;
  sm.name = os.str();
  sm.space = space;
  sm.sphere = round_sphere(space, chart_radius);
  sm.expect_umbilic = true;
  return sm;
}

SurfaceModel make_perturbed_sphere(const AmbientSpace& space, double chart_radius, double eps) {
  SurfaceModel sm;
  sm.name = "perturbed_sphere";
  sm.space = space;
  sm.sphere = perturbed_sphere(space, chart_radius, eps);
  sm.enforce_cmc = false;
  return sm;
}

}  // namespace cmcstab
