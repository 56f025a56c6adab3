#pragma once

// Independent curvature oracle for tests: evaluates <R(X,Y)Z, W> purely from
// the chart Christoffel symbols and their first derivatives (obtained by
// jet-differentiating the metric), with no reference to the closed-form
// curvature tensor under test.

#include "cmcstab/ambient.hpp"

namespace cmcstab::testing {

inline double curvature_from_connection(const AmbientSpace& sp, const Vec3d& p, const Vec3d& X,
                                        const Vec3d& Y, const Vec3d& Z, const Vec3d& W) {
  using J = Jet<double, 3>;
  V3<J> pj{J::seed(p.x, 0), J::seed(p.y, 1), J::seed(p.z, 2)};
  auto gamj = christoffel_t(sp, pj);
  double gam[3][3][3], dgam[3][3][3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        gam[a][b][c] = gamj[a][b][c].a;
        for (int e = 0; e < 3; ++e) dgam[e][a][b][c] = gamj[a][b][c].d[e];
      }
  // R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, in
  // components R^d_{abc} X^a Y^b Z^c with
  // R^d_{abc} = d_a G^d_{bc} - d_b G^d_{ac} + G^d_{ae}G^e_{bc} - G^d_{be}G^e_{ac}
  Vec3d RZ{0, 0, 0};
  for (int d = 0; d < 3; ++d) {
    double comp = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          double r = dgam[a][d][b][c] - dgam[b][d][a][c];
          for (int e = 0; e < 3; ++e)
            r += gam[d][a][e] * gam[e][b][c] - gam[d][b][e] * gam[e][a][c];
          comp += r * X[a] * Y[b] * Z[c];
        }
    RZ[d] = comp;
  }
  Mat3d g = metric_t(sp, p);
  return inner(g, RZ, W);
}

}  // namespace cmcstab::testing
