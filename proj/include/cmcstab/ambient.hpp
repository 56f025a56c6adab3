#pragma once

// Homogeneous 3-manifolds E(kappa,tau) and simply connected space forms:
// chart metrics, Levi-Civita connection, curvature, and the unit Killing
// field xi of the fibration.
//
// Chart realizations (one chart per space):
//  - space form of curvature c: conformal chart on R^3 (Poincare ball for
//    c < 0), g = delta / (1 + (c/4)|x|^2)^2;
//  - E(kappa,tau): Cartan model on {(x,y,z) : 1 + (kappa/4)(x^2+y^2) > 0},
//      ds^2 = lam^2 (dx^2 + dy^2) + (tau lam (y dx - x dy) + dz)^2,
//      lam = 1 / (1 + (kappa/4)(x^2+y^2)),
//    with xi = d/dz the unit Killing field. For kappa > 0 the chart misses
//    the fiber over the base antipode (the chart singularity sits at
//    infinity).

#include <array>

#include "cmcstab/errors.hpp"
#include "cmcstab/jets.hpp"

namespace cmcstab {

enum class SpaceKind {
  SpaceForm,
  ProductS2R,
  ProductS2S1,
  ProductH2R,
  BergerSphere,
  Heisenberg,
  Sl2Universal,
};

const char* to_string(SpaceKind k);
SpaceKind space_kind_from_string(const std::string& s);

// Guard distance from chart coordinate singularities, in chart coordinates.
inline constexpr double kChartGuard = 1e-6;

struct AmbientSpace {
  SpaceKind kind = SpaceKind::SpaceForm;
  double c = 0.0;              // space-form curvature (SpaceForm only)
  double kappa = 0.0;          // base curvature
  double tau = 0.0;            // bundle curvature
  double circle_length = 0.0;  // length of the S^1 factor (ProductS2S1 only)

  bool is_ekt() const { return kind != SpaceKind::SpaceForm; }

  // throws InvalidSpace on parameter/kind mismatches
  void validate() const;

  static AmbientSpace space_form(double c);
  static AmbientSpace product_s2r(double kappa);
  static AmbientSpace product_s2s1(double kappa, double circle_length);
  static AmbientSpace product_h2r(double kappa);
  static AmbientSpace berger_sphere(double kappa, double tau);
  static AmbientSpace heisenberg(double tau);
  static AmbientSpace sl2_universal(double kappa, double tau);
};

struct AmbientPoint {
  int chart_id = 0;
  Vec3d coords{};
};

struct AmbientVector {
  AmbientPoint base{};
  Vec3d components{};
};

// Conformal / fibration denominator of the chart at p; the chart domain is
// kChartGuard < denom < 1/kChartGuard.
template <class T>
T chart_denominator(const AmbientSpace& sp, const V3<T>& p) {
  if (sp.kind == SpaceKind::SpaceForm)
    return 1.0 + (sp.c / 4.0) * (p.x * p.x + p.y * p.y + p.z * p.z);
  return 1.0 + (sp.kappa / 4.0) * (p.x * p.x + p.y * p.y);
}

bool in_chart(const AmbientSpace& sp, const Vec3d& p);
void require_in_chart(const AmbientSpace& sp, const Vec3d& p);

template <class T>
M3<T> metric_t(const AmbientSpace& sp, const V3<T>& p) {
  M3<T> g;
  if (sp.kind == SpaceKind::SpaceForm) {
    T f = T(1.0) / chart_denominator(sp, p);
    g[0][0] = f * f;
    g[1][1] = f * f;
    g[2][2] = f * f;
    return g;
  }
  T lam = T(1.0) / chart_denominator(sp, p);
  // one-form dual to xi: w = tau*lam*(y dx - x dy) + dz
  V3<T> w{sp.tau * lam * p.y, -(sp.tau * lam * p.x), T(1.0)};
  g[0][0] = lam * lam;
  g[1][1] = lam * lam;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] += w[i] * w[j];
  return g;
}

template <class T>
using Christoffel3 = std::array<M3<T>, 3>;  // [upper][lower][lower]

// Gamma^a_{bc} from analytic metric derivatives (forward-mode jets).
template <class T>
Christoffel3<T> christoffel_t(const AmbientSpace& sp, const V3<T>& p) {
  using J = Jet<T, 3>;
  V3<J> pj{J::seed(p.x, 0), J::seed(p.y, 1), J::seed(p.z, 2)};
  M3<J> gj = metric_t(sp, pj);

  M3<T> g, dg[3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g[i][j] = gj[i][j].a;
      for (int k = 0; k < 3; ++k) dg[k][i][j] = gj[i][j].d[k];
    }
  M3<T> ginv = g.inverse();

  Christoffel3<T> gam;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        T s{};
        for (int d = 0; d < 3; ++d)
          s += ginv[a][d] * (dg[b][d][c] + dg[c][b][d] - dg[d][b][c]);
        gam[a][b][c] = 0.5 * s;
      }
  return gam;
}

Mat3d metric_at(const AmbientSpace& sp, const AmbientPoint& p);
Christoffel3<double> christoffel_at(const AmbientSpace& sp, const AmbientPoint& p);

// <R(X,Y)Z, W> via the closed-form curvature tensor (constant-curvature
// formula for space forms, the E(kappa,tau) tensor otherwise).
double curvature_4tensor(const AmbientSpace& sp, const AmbientPoint& p, const AmbientVector& X,
                         const AmbientVector& Y, const AmbientVector& Z, const AmbientVector& W);

// Ric(X,X) for |X| = 1.
double ricci_quadratic(const AmbientSpace& sp, const AmbientVector& X);

// Sectional curvature of the plane with unit normal nu.
double sectional(const AmbientSpace& sp, const AmbientVector& nu);

// Unit Killing field xi at p (E(kappa,tau) kinds only).
AmbientVector killing_at(const AmbientSpace& sp, const AmbientPoint& p);

// Metric vector product X ^ Y; {e1, e2, xi} is positively oriented for any
// horizontal orthonormal pair (standard chart orientation).
AmbientVector vector_product(const AmbientSpace& sp, const AmbientVector& X,
                             const AmbientVector& Y);

// Largest constant c with sectional curvature >= c everywhere.
double sectional_lower_bound(const AmbientSpace& sp);

// Chart components of xi (constant in the charts used here).
inline Vec3d killing_chart_direction() { return {0.0, 0.0, 1.0}; }

}  // namespace cmcstab
