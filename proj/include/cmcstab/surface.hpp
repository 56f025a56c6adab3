#pragma once

// CMC model surfaces: parametric immersions with analytic derivatives
// (via nested jets), tessellation into closed oriented triangle meshes, and
// per-vertex extrinsic/intrinsic geometry.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmcstab/ambient.hpp"
#include "cmcstab/jets.hpp"

namespace cmcstab {

using J1 = Jet<double, 2>;
using J2 = Jet<Jet<double, 2>, 2>;

// Doubly periodic immersion over [0,u_max) x [0,v_max).
struct Immersion {
  AmbientSpace space;
  double u_max = 0.0, v_max = 0.0;

  virtual ~Immersion() = default;
  // chart coordinates of psi(u,v) with first/second derivative payload
  virtual V3<J2> eval(const J2& u, const J2& v) const = 0;

  Vec3d position(double u, double v) const;
};

// Closed-sphere immersion: chart coordinates as a degree-0 homogeneous map
// of a direction vector Y (the unit parameter sphere). Tessellated by
// icosahedral subdivision.
struct SphereImmersion {
  AmbientSpace space;

  virtual ~SphereImmersion() = default;
  virtual V3<J2> eval(const V3<J2>& Y) const = 0;

  Vec3d position(const Vec3d& Y) const;
};

struct HopfTorusSpec {
  AmbientSpace space;  // BergerSphere or ProductS2S1
  double c_gamma = 0.0;  // geodesic curvature of the base curve in B^2(kappa)
};

struct ShapeData {
  Vec3d normal;  // unit, chart components
  double first[2][2];
  double second[2][2];
  double shape[2][2];
  double H = 0.0;
  double A_norm2 = 0.0;
  double phi_norm2 = 0.0;
  double nxi = 0.0;
  double K = 0.0;        // Gaussian curvature via the Gauss equation
  double q = 0.0;        // |A|^2 + Ric(N,N)
};

struct VertexGeometry {
  Vec3d normal;
  double H = 0.0, A_norm2 = 0.0, phi_norm2 = 0.0, nxi = 0.0, K = 0.0, q = 0.0;
};

struct GeometryMesh {
  AmbientSpace space;
  std::vector<Vec3d> positions;             // chart coordinates
  std::vector<std::array<double, 2>> uv;    // parameter preimage (tori)
  std::vector<Vec3d> directions;            // parameter-sphere preimage (spheres)
  std::vector<VertexGeometry> vertex;
  std::vector<std::array<int, 3>> triangles;
  // intrinsic (ambient-metric) edge lengths; entry k is the edge opposite
  // triangle corner k
  std::vector<std::array<double, 3>> edge_lengths;
  std::vector<double> tri_areas;
  double area = 0.0;
  int euler_characteristic = 0;
  int genus = 0;

  int vertex_count() const { return static_cast<int>(positions.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }
};

ShapeData shape_operator(const Immersion& imm, double u, double v);
ShapeData shape_operator(const SphereImmersion& imm, const Vec3d& Y);

double gauss_curvature(const Immersion& imm, double u, double v);

GeometryMesh tessellate(const Immersion& imm, int nu, int nv);
GeometryMesh tessellate_sphere(const SphereImmersion& imm, int level);

struct AreaGenus {
  double area;
  int genus;
};
AreaGenus area_and_genus(const GeometryMesh& mesh);

// |int_Sigma K dA - 2 pi chi| with lumped vertex quadrature
double gauss_bonnet_residual(const GeometryMesh& mesh);

double mesh_min_angle_deg(const GeometryMesh& mesh);

struct CmcStats {
  double mean_H;
  double max_abs_dev;
  double stddev;
};
CmcStats cmc_stats(const GeometryMesh& mesh);

// --- constructors ---

std::unique_ptr<Immersion> clifford_torus(double c, double H);
std::unique_ptr<Immersion> hopf_torus(const HopfTorusSpec& spec);
std::unique_ptr<SphereImmersion> slice_sphere(const AmbientSpace& space, double t);
std::unique_ptr<SphereImmersion> round_sphere(const AmbientSpace& space, double chart_radius);
// radial graph over a round sphere; solver stress tests only (not CMC)
std::unique_ptr<SphereImmersion> perturbed_sphere(const AmbientSpace& space, double chart_radius,
                                                  double eps);

// Uniform handle over the model families: meshing plus the constructor
// postcondition checks (CMC tolerance, Hopf 2H = c_gamma, umbilicity).
struct SurfaceModel {
  std::string name;
  AmbientSpace space;
  std::shared_ptr<const Immersion> torus;
  std::shared_ptr<const SphereImmersion> sphere;
  std::optional<double> hopf_c_gamma;
  bool expect_umbilic = false;
  bool enforce_cmc = true;

  bool is_sphere() const { return sphere != nullptr; }
  // tori: resolution x resolution grid; spheres: subdivision level
  GeometryMesh mesh(int resolution) const;
};

SurfaceModel make_clifford_torus(double c, double H);
SurfaceModel make_hopf_torus(const HopfTorusSpec& spec);
SurfaceModel make_slice_sphere(const AmbientSpace& space, double t);
SurfaceModel make_round_sphere(const AmbientSpace& space, double chart_radius);
SurfaceModel make_perturbed_sphere(const AmbientSpace& space, double chart_radius, double eps);

}  // namespace cmcstab
