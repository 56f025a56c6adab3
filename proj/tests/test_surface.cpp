#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cmcstab/errors.hpp"
#include "cmcstab/surface.hpp"

using namespace cmcstab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("tessellation topology: torus grid and icosphere") {
  auto cl = make_clifford_torus(1.0, 0.0);
  GeometryMesh t = cl.mesh(16);
  CHECK(t.vertex_count() == 16 * 16);
  CHECK(t.triangle_count() == 2 * 16 * 16);
  CHECK(t.euler_characteristic == 0);
  CHECK(t.genus == 1);

  auto sph = make_round_sphere(AmbientSpace::space_form(0.0), 1.0);
  for (int L : {2, 3}) {
    GeometryMesh m = sph.mesh(L);
    int quads = 1 << (2 * L);
    CHECK(m.vertex_count() == 10 * quads + 2);
    CHECK(m.triangle_count() == 20 * quads);
    CHECK(m.euler_characteristic == 2);
    CHECK(m.genus == 0);
  }
}

TEST_CASE("round spheres are totally umbilic with the expected H and area") {
  // unit sphere in flat R^3, inward normal: H = +1, |A|^2 = 2, q = 2
  auto unit = make_round_sphere(AmbientSpace::space_form(0.0), 1.0);
  GeometryMesh m = unit.mesh(4);
  CmcStats st = cmc_stats(m);
  CHECK(st.mean_H == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(st.max_abs_dev < 1e-9);
  for (const auto& v : m.vertex) {
    CHECK(std::abs(v.phi_norm2) < 1e-10);
    CHECK(v.A_norm2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(v.q == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(v.K == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(m.area == doctest::Approx(4.0 * kPi).epsilon(1e-3));

  // great sphere in S^3: chart radius 2 is the equator, minimal, q = |A|^2 + 2c = 2
  auto great = make_round_sphere(AmbientSpace::space_form(1.0), 2.0);
  GeometryMesh g = great.mesh(4);
  CHECK(cmc_stats(g).mean_H == doctest::Approx(0.0).epsilon(1e-10));
  for (const auto& v : g.vertex) {
    CHECK(v.A_norm2 < 1e-9);
    CHECK(v.q == doctest::Approx(2.0).epsilon(1e-9));
  }
  CHECK(g.area == doctest::Approx(4.0 * kPi).epsilon(1e-3));

  // geodesic sphere in H^3: chart radius a gives hyperbolic radius
  // r = 2 atanh(a/2), H = coth(r), area = 4 pi sinh^2 r
  double a = 0.5;
  double r = 2.0 * std::atanh(a / 2.0);
  auto hyp = make_round_sphere(AmbientSpace::space_form(-1.0), a);
  GeometryMesh h = hyp.mesh(4);
  CHECK(cmc_stats(h).mean_H == doctest::Approx(1.0 / std::tanh(r)).epsilon(1e-9));
  CHECK(h.area == doctest::Approx(4.0 * kPi * std::sinh(r) * std::sinh(r)).epsilon(1e-3));
  for (const auto& v : h.vertex) CHECK(std::abs(v.phi_norm2) < 1e-10);
}

TEST_CASE("clifford tori: minimal and CMC variants") {
  // minimal Clifford torus in S^3(1): |A|^2 = 2, H = 0, phi^2 = 2, area 2 pi^2
  auto cl0 = make_clifford_torus(1.0, 0.0);
  GeometryMesh m = cl0.mesh(48);
  CmcStats st = cmc_stats(m);
  CHECK(std::abs(st.mean_H) < 1e-10);
  for (const auto& v : m.vertex) {
    CHECK(v.A_norm2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(v.phi_norm2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(std::abs(v.K) < 1e-9);  // intrinsically flat
    CHECK(v.q == doctest::Approx(4.0).epsilon(1e-9));
  }
  CHECK(m.area == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-9));

  // H = 0.5 keeps CMC with the requested sign and q = |A|^2 + 2c
  auto cl5 = make_clifford_torus(1.0, 0.5);
  GeometryMesh m5 = cl5.mesh(32);
  CmcStats st5 = cmc_stats(m5);
  CHECK(st5.mean_H == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(st5.max_abs_dev < 1e-9);
}

TEST_CASE("hopf tori: flat, vertical tangency, 2H = c_gamma") {
  for (double cg : {0.0, 1.0, 2.0}) {
    auto hm = make_hopf_torus({AmbientSpace::product_s2s1(1.0, 2.0), cg});
    GeometryMesh m = hm.mesh(24);
    CmcStats st = cmc_stats(m);
    CHECK(2.0 * st.mean_H == doctest::Approx(cg).epsilon(1e-8));
    CHECK(st.max_abs_dev < 1e-9);
    for (const auto& v : m.vertex) {
      CHECK(std::abs(v.K) < 1e-6);    // flat
      CHECK(std::abs(v.nxi) < 1e-6);  // normal horizontal: the torus is vertical
    }
    CHECK(gauss_bonnet_residual(m) < 1e-6);
  }
  // cg = 0: base great circle of S^2(1) has length 2 pi, fiber length 2
  auto h0 = make_hopf_torus({AmbientSpace::product_s2s1(1.0, 2.0), 0.0});
  CHECK(h0.mesh(24).area == doctest::Approx(4.0 * kPi).epsilon(1e-9));

  // Berger Hopf torus: same structure, fiber period 8 pi |tau| / kappa
  auto hb = make_hopf_torus({AmbientSpace::berger_sphere(4.0, 0.9), 1.0});
  GeometryMesh mb = hb.mesh(24);
  CHECK(2.0 * cmc_stats(mb).mean_H == doctest::Approx(1.0).epsilon(1e-8));
  for (const auto& v : mb.vertex) CHECK(std::abs(v.nxi) < 1e-6);
}

TEST_CASE("slice spheres are totally geodesic with vertical normal and q = 0") {
  for (auto sp : {AmbientSpace::product_s2r(1.0), AmbientSpace::product_s2s1(1.0, 2.0)}) {
    auto sl = make_slice_sphere(sp, 0.3);
    GeometryMesh m = sl.mesh(4);
    for (const auto& v : m.vertex) {
      CHECK(std::abs(v.A_norm2) < 1e-10);
      CHECK(v.nxi * v.nxi == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(v.K == doctest::Approx(sp.kappa).epsilon(1e-9));
      CHECK(std::abs(v.q) < 1e-10);
    }
    CHECK(cmc_stats(m).mean_H == doctest::Approx(0.0));
    CHECK(m.area == doctest::Approx(4.0 * kPi / sp.kappa).epsilon(1e-3));
  }
}

TEST_CASE("pointwise invariants stay in their admissible ranges") {
  std::vector<GeometryMesh> meshes;
  meshes.push_back(make_clifford_torus(1.0, 0.5).mesh(24));
  meshes.push_back(make_hopf_torus({AmbientSpace::berger_sphere(4.0, 1.1), 1.0}).mesh(24));
  meshes.push_back(make_round_sphere(AmbientSpace::space_form(-1.0), 0.8).mesh(3));
  for (const auto& m : meshes) {
    for (const auto& v : m.vertex) {
      CHECK(v.phi_norm2 >= -1e-10);                   // |A - H I|^2 >= 0
      CHECK(v.nxi * v.nxi <= 1.0 + 1e-12);            // <N, xi> for unit vectors
      CHECK(v.A_norm2 >= 2.0 * v.H * v.H - 1e-10);    // phi^2 = |A|^2 - 2H^2
      CHECK(norm(v.normal) > 0.0);
    }
    CHECK(mesh_min_angle_deg(m) > 10.0);
  }
}

TEST_CASE("Gauss-Bonnet closes on exact meshes and converges on spheres") {
  CHECK(gauss_bonnet_residual(make_clifford_torus(1.0, 0.0).mesh(64)) < 1e-3);
  auto sph = make_round_sphere(AmbientSpace::space_form(1.0), 2.0);
  double r3 = gauss_bonnet_residual(sph.mesh(3));
  double r4 = gauss_bonnet_residual(sph.mesh(4));
  CHECK(r4 < 0.05 * 4.0 * kPi);
  CHECK(r4 < r3);  // refinement shrinks the defect
}

TEST_CASE("gauss curvature equals the continuum value on refining spheres") {
  // independent check of the Gauss-equation K: for a round sphere of
  // euclidean radius r the curvature is exactly 1/r^2 at every vertex
  double rr = 0.7;
  auto sph = make_round_sphere(AmbientSpace::space_form(0.0), rr);
  GeometryMesh m = sph.mesh(3);
  for (const auto& v : m.vertex) CHECK(v.K == doctest::Approx(1.0 / (rr * rr)).epsilon(1e-9));
  // area converges to 4 pi r^2 at second order under subdivision
  double e3 = std::abs(sph.mesh(3).area - 4.0 * kPi * rr * rr);
  double e4 = std::abs(sph.mesh(4).area - 4.0 * kPi * rr * rr);
  CHECK(e4 < e3 / 3.0);
}

TEST_CASE("perturbed sphere is a valid mesh but not CMC") {
  auto pert = make_perturbed_sphere(AmbientSpace::space_form(0.0), 1.0, 0.05);
  CHECK_THROWS_AS(
      [] {
        SurfaceModel sm = make_perturbed_sphere(AmbientSpace::space_form(0.0), 1.0, 0.05);
        sm.enforce_cmc = true;
        sm.mesh(3);
      }(),
      NonConstantH);
  pert.enforce_cmc = false;
  GeometryMesh m = pert.mesh(3);
  CHECK(m.genus == 0);
  CHECK(cmc_stats(m).max_abs_dev > 1e-3);
}

TEST_CASE("constructor error paths") {
  CHECK_THROWS_AS(clifford_torus(-1.0, 0.0), UnsupportedSpace);
  CHECK_THROWS_AS(clifford_torus(0.0, 1.0), UnsupportedSpace);
  CHECK_THROWS_AS(hopf_torus({AmbientSpace::product_s2r(1.0), 0.0}), UnsupportedSpace);
  CHECK_THROWS_AS(hopf_torus({AmbientSpace::heisenberg(0.5), 0.0}), UnsupportedSpace);
  CHECK_THROWS_AS(slice_sphere(AmbientSpace::space_form(1.0), 0.0), UnsupportedSpace);
  CHECK_THROWS_AS(slice_sphere(AmbientSpace::product_h2r(-1.0), 0.0), UnsupportedSpace);
  CHECK_THROWS_AS(round_sphere(AmbientSpace::product_s2r(1.0), 1.0), UnsupportedSpace);
  // Poincare ball for c = -1 has chart radius < 2
  CHECK_THROWS_AS(round_sphere(AmbientSpace::space_form(-1.0), 2.5), ChartGuardViolation);
}
